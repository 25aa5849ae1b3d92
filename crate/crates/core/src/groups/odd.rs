//! Partitions into odd parts and the two classical bijections with
//! distinct-part partitions.
//!
//! Glaisher's map splits each part `2^k m` (`m` odd) into `2^k` copies of
//! `m`; its inverse regroups the copies of `m` by the binary digits of their
//! multiplicity.
//!
//! Sylvester's map draws each odd part `2a + 1` as a centred row: one cell on
//! the axis, `a` to each side. The right half including the axis is the
//! diagram `R` with rows `a_i + 1`; the left half is `L` with rows `a_i`.
//! The distinct parts are the diagonal hook lengths of `R` and `L`, taken
//! alternately: `R`'s first hook, `L`'s first hook, `R`'s second, and so on.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{arms_legs, rows_from_arms_legs};
use crate::partition::Partition;
use crate::{Error, Result};

/// Odd parts, kept in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddPartition {
    parts: Vec<u32>,
}

impl OddPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if let Some(&even) = parts.iter().find(|&&p| p % 2 == 0) {
            return Err(if even == 0 {
                Error::ZeroPart
            } else {
                Error::EvenPart(even)
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(OddPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for OddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_parts(&self.parts))
    }
}

/// All odd-part partitions of `n`, parts non-increasing, reverse-lex order.
pub fn enumerate_odd(n: u32) -> Vec<OddPartition> {
    fn go(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<OddPartition>) {
        if rest == 0 {
            out.push(OddPartition { parts: acc.clone() });
            return;
        }
        let mut part = max.min(rest);
        if part.is_multiple_of(2) {
            part -= 1;
        }
        while part >= 1 {
            acc.push(part);
            go(rest - part, part, acc, out);
            acc.pop();
            if part < 2 {
                break;
            }
            part -= 2;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn glaisher(p: &Partition) -> OddPartition {
    let mut parts = Vec::new();
    for &i in p.parts() {
        let k = i.trailing_zeros();
        parts.extend(std::iter::repeat_n(i >> k, 1 << k));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    OddPartition { parts }
}

pub fn glaisher_inverse(o: &OddPartition) -> Partition {
    let mut multiplicity: BTreeMap<u32, u32> = BTreeMap::new();
    for &m in &o.parts {
        *multiplicity.entry(m).or_default() += 1;
    }
    let mut parts: Vec<u32> = multiplicity
        .into_iter()
        .flat_map(|(m, c)| {
            (0..32)
                .filter(move |k| c >> k & 1 == 1)
                .map(move |k| m << k)
        })
        .collect();
    parts.sort_unstable();
    Partition::from_parts_unchecked(parts)
}

pub fn sylvester(o: &OddPartition) -> Partition {
    let right: Vec<u32> = o.parts.iter().map(|p| p / 2 + 1).collect();
    let left: Vec<u32> = o.parts.iter().map(|p| p / 2).filter(|&a| a > 0).collect();
    let (r_arms, r_legs) = arms_legs(&right);
    let (l_arms, l_legs) = arms_legs(&left);
    let mut parts = Vec::with_capacity(r_arms.len() + l_arms.len());
    for j in 0..r_arms.len() {
        parts.push(r_arms[j] + r_legs[j] + 1);
        if j < l_arms.len() {
            parts.push(l_arms[j] + l_legs[j] + 1);
        }
    }
    parts.reverse();
    Partition::from_parts_unchecked(parts)
}

/// Inverse of [`sylvester`].
///
/// Writing `alpha_j`, `beta_j` for the arms and legs of `R`, the hooks are
/// `alpha_j + beta_j + 1` (from `R`) and `alpha_j + beta_{j+1} + 1` (from
/// `L`, whose arms are one shorter and legs one longer), with
/// `beta_{d+1} = -1`. Reading the hooks from the smallest recovers the
/// coordinates one at a time.
pub fn sylvester_inverse(p: &Partition) -> Result<OddPartition> {
    let hooks: Vec<i64> = p.parts().iter().rev().map(|&h| i64::from(h)).collect();
    if hooks.is_empty() {
        return Ok(OddPartition { parts: Vec::new() });
    }
    let d = hooks.len().div_ceil(2);
    let mut arms = vec![0i64; d];
    let mut legs = vec![0i64; d + 1];
    legs[d] = -1;
    for j in (0..d).rev() {
        arms[j] = match hooks.get(2 * j + 1) {
            Some(h) => h - legs[j + 1] - 1,
            None => 0,
        };
        legs[j] = hooks[2 * j] - arms[j] - 1;
    }
    let bad = || Error::Invariant(format!("{:?} has no odd-part preimage", p.parts()));
    let strictly_decreasing = |v: &[i64]| v.windows(2).all(|w| w[0] > w[1]);
    if arms.iter().chain(&legs[..d]).any(|&v| v < 0)
        || !strictly_decreasing(&arms)
        || !strictly_decreasing(&legs[..d])
    {
        return Err(bad());
    }
    let arms: Vec<u32> = arms.iter().map(|&a| a as u32).collect();
    let legs: Vec<u32> = legs[..d].iter().map(|&b| b as u32).collect();
    let right = rows_from_arms_legs(&arms, &legs);
    let odd = OddPartition::new(right.iter().map(|r| 2 * r - 1).collect())?;
    if sylvester(&odd) != *p {
        return Err(bad());
    }
    Ok(odd)
}
