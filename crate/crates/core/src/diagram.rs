//! Ferrers-diagram bookkeeping on rows given in non-increasing order.
//!
//! Arms and legs follow the usual Frobenius convention: for a diagonal cell
//! `(i, i)` (1-based) the arm is `rows[i] - i` and the leg is `cols[i] - i`.

/// Column lengths of the diagram with the given non-increasing rows.
pub fn conjugate(rows: &[u32]) -> Vec<u32> {
    let width = rows.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| rows.iter().take_while(|&&r| r >= j).count() as u32)
        .collect()
}

/// Length of the main diagonal, `max { i : rows[i] >= i }`.
pub fn diagonal_len(rows: &[u32]) -> usize {
    rows.iter()
        .enumerate()
        .take_while(|&(i, &r)| r as usize > i)
        .count()
}

/// Arms and legs along the diagonal, both strictly decreasing.
pub fn arms_legs(rows: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let d = diagonal_len(rows);
    let cols = conjugate(rows);
    let arms = (0..d).map(|i| rows[i] - i as u32 - 1).collect();
    let legs = (0..d).map(|i| cols[i] - i as u32 - 1).collect();
    (arms, legs)
}

/// Inverse of [`arms_legs`]. Both slices must be strictly decreasing and of
/// equal length.
pub fn rows_from_arms_legs(arms: &[u32], legs: &[u32]) -> Vec<u32> {
    debug_assert_eq!(arms.len(), legs.len());
    let d = arms.len();
    let mut rows: Vec<u32> = (0..d).map(|i| arms[i] + i as u32 + 1).collect();
    // Row k below the diagonal meets every column j whose length reaches it.
    for k in d + 1.. {
        let len = (0..d).filter(|&j| legs[j] as usize + j + 1 >= k).count() as u32;
        if len == 0 {
            break;
        }
        rows.push(len);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_and_diagonal() {
        let rows = [9, 8, 6, 5, 3, 2];
        assert_eq!(conjugate(&rows), vec![6, 6, 5, 4, 4, 3, 2, 2, 1]);
        assert_eq!(diagonal_len(&rows), 4);
        assert_eq!(diagonal_len(&[]), 0);
        assert_eq!(diagonal_len(&[1, 1, 1]), 1);
    }

    #[test]
    fn arms_legs_round_trip() {
        for rows in [
            vec![9, 8, 6, 5, 3, 2],
            vec![1],
            vec![4, 4, 1],
            vec![3, 1, 1, 1],
        ] {
            let (arms, legs) = arms_legs(&rows);
            assert_eq!(rows_from_arms_legs(&arms, &legs), rows);
        }
    }
}
