//! Frobenius coordinates of distinct-part partitions and the diagonal
//! bijection `S : D_m(n) -> N_{3,m}(n)`.
//!
//! For a partition with diagonal length `r`, `x[k]` counts the cells of the
//! row through the `k`-th diagonal cell from the bottom (the diagonal cell
//! included) and `y[k]` counts the cells strictly below it in its column.
//! A pair `(x | y)` comes from a distinct-part partition exactly when
//!
//! 1. `x[i+1] - x[i] >= 2`,
//! 2. `y[i+1] - y[i]` is 1 or 2,
//! 3. `y[1]` is 0 or 1,
//! 4. `x[1] = 1` forces `y[1] = 0`.
//!
//! `S` adds the coordinates pairwise and marks the sums where the leg jumps by
//! two (with `y[0] = -1`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{arms_legs, rows_from_arms_legs};
use crate::partition::{Lambda, MarkedPartition, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusSymbol {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl FrobeniusSymbol {
    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Result<Self> {
        let f = FrobeniusSymbol { x, y };
        f.validate()?;
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.x.len()
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().chain(&self.y).sum()
    }

    /// Checks conditions (1)-(4); the error names the first one violated.
    pub fn validate(&self) -> Result<()> {
        let violation = |condition: u8, detail: String| Err(Error::Frobenius { condition, detail });
        if self.x.len() != self.y.len() {
            return Err(Error::Precondition(format!(
                "x has {} entries but y has {}",
                self.x.len(),
                self.y.len()
            )));
        }
        if self.x.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if self.x[0] == 0 {
            return violation(1, "x[1] must be positive".into());
        }
        for (i, w) in self.x.windows(2).enumerate() {
            if w[1] < w[0] + 2 {
                return violation(
                    1,
                    format!("x[{}] = {}, x[{}] = {}", i + 1, w[0], i + 2, w[1]),
                );
            }
        }
        for (i, w) in self.y.windows(2).enumerate() {
            if !(w[0] + 1..=w[0] + 2).contains(&w[1]) {
                return violation(
                    2,
                    format!("y[{}] = {}, y[{}] = {}", i + 1, w[0], i + 2, w[1]),
                );
            }
        }
        if self.y[0] > 1 {
            return violation(3, format!("y[1] = {}", self.y[0]));
        }
        if self.x[0] == 1 && self.y[0] != 0 {
            return violation(4, format!("x[1] = 1 but y[1] = {}", self.y[0]));
        }
        Ok(())
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.x), join(&self.y))
    }
}

pub fn to_frobenius(p: &Partition) -> Result<FrobeniusSymbol> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let rows: Vec<u32> = p.parts().iter().rev().copied().collect();
    let (arms, legs) = arms_legs(&rows);
    Ok(FrobeniusSymbol {
        x: arms.iter().rev().map(|a| a + 1).collect(),
        y: legs.into_iter().rev().collect(),
    })
}

pub fn from_frobenius(f: &FrobeniusSymbol) -> Result<Partition> {
    f.validate()?;
    let arms: Vec<u32> = f.x.iter().rev().map(|x| x - 1).collect();
    let legs: Vec<u32> = f.y.iter().rev().copied().collect();
    let mut parts = rows_from_arms_legs(&arms, &legs);
    parts.reverse();
    Partition::new(parts)
        .map_err(|e| Error::Invariant(format!("{f} does not give distinct parts: {e}")))
}

/// The diagonal map `S`, landing in marked 3-partitions of the same degree
/// and total length.
pub fn s_map(p: &Partition) -> Result<MarkedPartition> {
    let f = to_frobenius(p)?;
    let mut prev_leg: i64 = -1;
    let mut parts = Vec::with_capacity(f.rank());
    let mut marks = Vec::new();
    for (&x, &y) in f.x.iter().zip(&f.y) {
        let part = x + y;
        if i64::from(y) - prev_leg == 2 {
            marks.push(part);
        }
        prev_leg = i64::from(y);
        parts.push(part);
    }
    let base = Partition::new(parts).map_err(|e| Error::Invariant(format!("S({p:?}): {e}")))?;
    MarkedPartition::new(Lambda::Three, base, marks)
        .map_err(|e| Error::Invariant(format!("S({p:?}): {e}")))
}

/// Inverse of [`s_map`]: legs grow by 1 past an unmarked part and by 2 past a
/// marked one, starting from -1; arms are the remainders.
pub fn s_inverse(mp: &MarkedPartition) -> Result<Partition> {
    if mp.lambda() != Lambda::Three {
        return Err(Error::DiagonalMapNeedsThree);
    }
    let mut leg: i64 = -1;
    let mut x = Vec::with_capacity(mp.base().len());
    let mut y = Vec::with_capacity(mp.base().len());
    for (part, marked) in mp.flagged_parts() {
        leg += if marked { 2 } else { 1 };
        let arm = i64::from(part) - leg;
        if arm < 1 {
            return Err(Error::Frobenius {
                condition: 1,
                detail: format!("part {part} leaves arm {arm}"),
            });
        }
        x.push(arm as u32);
        y.push(leg as u32);
    }
    from_frobenius(&FrobeniusSymbol { x, y })
}
