//! Exhaustive enumeration of `D(n)`, lambda-partitions and marked
//! lambda-partitions, with the counts built on top of them.
//!
//! Generation is recursive with a lower bound on the next part: last part + 1
//! for distinct parts, last part + lambda for lambda-partitions. Results are
//! returned in canonical order (length, then lexicographic).

use crate::partition::{leading_parts_unchecked, Lambda, MarkedPartition, Partition};

fn generate(remaining: u32, min_next: u32, gap: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(acc.clone()));
        return;
    }
    for part in min_next..=remaining {
        // The smallest completion after `part` is `part + gap` itself.
        let rest = remaining - part;
        if rest != 0 && rest < part + gap {
            continue;
        }
        acc.push(part);
        generate(rest, part + gap, gap, acc, out);
        acc.pop();
    }
}

fn partitions_with_gap(n: u32, gap: u32, length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    generate(n, 1, gap, &mut Vec::new(), &mut out);
    if let Some(m) = length {
        out.retain(|p| p.len() == m);
    }
    out.sort();
    out
}

/// `D(n)`, or `D_m(n)` when `length` is given.
pub fn distinct(n: u32, length: Option<usize>) -> Vec<Partition> {
    partitions_with_gap(n, 1, length)
}

pub fn distinct_count(n: u32) -> usize {
    distinct(n, None).len()
}

/// Lambda-partitions of degree `n`, optionally with a fixed number of parts.
pub fn lambda_partitions(lambda: Lambda, n: u32, length: Option<usize>) -> Vec<Partition> {
    partitions_with_gap(n, lambda.get(), length)
}

fn subsets(items: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// `N_lambda(n)`, or `N_{lambda,m}(n)` (total length `l(I) + l(J) = m`).
pub fn marked(lambda: Lambda, n: u32, total_length: Option<usize>) -> Vec<MarkedPartition> {
    let mut out = Vec::new();
    for base in lambda_partitions(lambda, n, None) {
        let leading = leading_parts_unchecked(lambda, base.parts());
        for marks in subsets(&leading) {
            if total_length.is_some_and(|m| base.len() + marks.len() != m) {
                continue;
            }
            let mp = MarkedPartition::new(lambda, base.clone(), marks)
                .expect("subsets of leading parts are valid marks");
            out.push(mp);
        }
    }
    out.sort_by(|a, b| {
        a.total_len()
            .cmp(&b.total_len())
            .then_with(|| a.base().cmp(b.base()))
            .then_with(|| a.marks().cmp(b.marks()))
    });
    out
}

/// `p_lambda(n, alpha)`, or `p_{lambda,q}(n, alpha)` with a length filter.
pub fn count_p(lambda: Lambda, n: u32, alpha: usize, length: Option<usize>) -> u64 {
    lambda_partitions(lambda, n, length)
        .iter()
        .filter(|p| leading_parts_unchecked(lambda, p.parts()).len() == alpha)
        .count() as u64
}

/// `a_{lambda,q,h}(n)`: marked lambda-partitions with `q` parts and `h` marks.
pub fn count_a(lambda: Lambda, q: usize, h: usize, n: u32) -> u64 {
    lambda_partitions(lambda, n, Some(q))
        .iter()
        .map(|p| {
            binomial(
                leading_parts_unchecked(lambda, p.parts()).len() as u64,
                h as u64,
            )
        })
        .sum()
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(lambda: Lambda, parts: &[u32], marks: &[u32]) -> MarkedPartition {
        MarkedPartition::new(lambda, p(parts), marks.to_vec()).unwrap()
    }

    #[test]
    fn distinct_small_cases() {
        assert_eq!(
            distinct(6, None),
            vec![p(&[6]), p(&[1, 5]), p(&[2, 4]), p(&[1, 2, 3])]
        );
        assert_eq!(distinct(1, None), vec![p(&[1])]);
        assert_eq!(distinct(0, None), vec![Partition::empty()]);
        assert_eq!(distinct_count(10), 10);
        assert_eq!(distinct(5, Some(2)), vec![p(&[1, 4]), p(&[2, 3])]);
    }

    #[test]
    fn distinct_counts_match_known_values() {
        // d(n) for n = 3..18.
        let expected = [2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46];
        let got: Vec<usize> = (3..=18).map(distinct_count).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn marked_enumeration_examples() {
        let three = Lambda::Three;
        assert_eq!(
            marked(three, 6, None),
            vec![
                mp(three, &[6], &[]),
                mp(three, &[6], &[6]),
                mp(three, &[1, 5], &[]),
                mp(three, &[1, 5], &[5]),
            ]
        );
        assert_eq!(
            marked(three, 6, Some(2)),
            vec![mp(three, &[6], &[6]), mp(three, &[1, 5], &[])]
        );
        assert_eq!(
            marked(Lambda::Two, 3, Some(1)),
            vec![mp(Lambda::Two, &[3], &[])]
        );
        assert_eq!(
            marked(Lambda::Two, 3, Some(2)),
            vec![mp(Lambda::Two, &[3], &[3])]
        );
    }

    #[test]
    fn p_and_a_counts() {
        assert_eq!(count_p(Lambda::Three, 5, 0, None), 1);
        assert_eq!(count_p(Lambda::Three, 5, 1, None), 1);
        assert_eq!(count_p(Lambda::Two, 3, 0, None), 0);
        assert_eq!(count_p(Lambda::Three, 0, 0, None), 1);
        assert_eq!(count_a(Lambda::Three, 1, 1, 6), 1);
        assert_eq!(count_a(Lambda::Three, 2, 1, 6), 1);
        for n in 0..20 {
            for q in 0..6 {
                assert_eq!(
                    count_a(Lambda::Two, q, 0, n),
                    lambda_partitions(Lambda::Two, n, Some(q)).len() as u64
                );
            }
        }
    }

    #[test]
    fn index_zero_three_partitions_are_pentagonal() {
        for n in 0..=60u32 {
            for q in 1..=7usize {
                let zero: Vec<Partition> = lambda_partitions(Lambda::Three, n, Some(q))
                    .into_iter()
                    .filter(|p| leading_parts_unchecked(Lambda::Three, p.parts()).is_empty())
                    .collect();
                let qq = q as u32;
                let mut expected = Vec::new();
                for a in [1u32, 2] {
                    let dense: Vec<u32> = (0..qq).map(|k| a + 3 * k).collect();
                    if dense.iter().sum::<u32>() == n {
                        expected.push(p(&dense));
                    }
                }
                assert_eq!(zero, expected, "n={n} q={q}");
                for z in &zero {
                    let d = z.degree();
                    assert!(d == (3 * qq * qq - qq) / 2 || d == (3 * qq * qq + qq) / 2);
                }
            }
        }
    }

    #[test]
    fn distinct_count_from_index_weights() {
        for lambda in Lambda::ALL {
            for n in 0..=60u32 {
                let weighted: u64 = lambda_partitions(lambda, n, None)
                    .iter()
                    .map(|p| 1u64 << leading_parts_unchecked(lambda, p.parts()).len())
                    .sum();
                assert_eq!(weighted, distinct_count(n) as u64, "lambda={lambda} n={n}");
            }
        }
    }

    #[test]
    fn marked_length_bookkeeping() {
        for lambda in Lambda::ALL {
            for n in 0..=40u32 {
                for m in 0..=10usize {
                    let direct = marked(lambda, n, Some(m)).len() as u64;
                    let via_a: u64 = (0..=m).map(|q| count_a(lambda, q, m - q, n)).sum();
                    assert_eq!(direct, via_a, "lambda={lambda} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn standard_form_round_trip() {
        use crate::partition::standard_form;
        for lambda in Lambda::ALL {
            for n in 0..=40 {
                for p in lambda_partitions(lambda, n, None) {
                    assert_eq!(standard_form(lambda, &p).unwrap().flatten(), p.parts());
                }
            }
        }
    }
}
