//! Partitions with distinct parts, lambda-partitions and their marked variants.
//!
//! A partition is stored as its strictly increasing sequence of parts. A
//! lambda-partition is one whose consecutive parts differ by at least lambda;
//! it splits uniquely into maximal arithmetic runs of step lambda (its
//! standard form). The first part of a run may be a *leading part*, and a
//! marked lambda-partition flags some subset of those.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Gap parameter of a lambda-partition. Only 2 and 3 are supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lambda {
    Two,
    Three,
}

impl Lambda {
    pub const ALL: [Lambda; 2] = [Lambda::Two, Lambda::Three];

    pub fn get(self) -> u32 {
        match self {
            Lambda::Two => 2,
            Lambda::Three => 3,
        }
    }
}

impl TryFrom<u32> for Lambda {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self> {
        match value {
            2 => Ok(Lambda::Two),
            3 => Ok(Lambda::Three),
            other => Err(Error::InvalidLambda(other)),
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.get())
    }
}

/// A partition into distinct parts, held as a strictly increasing sequence.
///
/// The derived ordering is the canonical order of `D(n)`: shorter partitions
/// first, then lexicographic on the parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        check_increasing(&parts)?;
        Ok(Partition { parts })
    }

    /// Sorts `parts` before validating; repeated values are still rejected.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable();
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(check_increasing(&parts).is_ok(), "{parts:?}");
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, value: u32) -> bool {
        self.parts.binary_search(&value).is_ok()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts
            .len()
            .cmp(&other.parts.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn check_increasing(parts: &[u32]) -> Result<()> {
    if parts.first() == Some(&0) {
        return Err(Error::ZeroPart);
    }
    for w in parts.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::NotIncreasing(w[0], w[1]));
        }
    }
    Ok(())
}

pub fn is_lambda_partition(lambda: Lambda, p: &Partition) -> bool {
    first_small_gap(lambda, p.parts()).is_none()
}

fn first_small_gap(lambda: Lambda, parts: &[u32]) -> Option<(u32, u32)> {
    parts
        .windows(2)
        .find(|w| w[1] - w[0] < lambda.get())
        .map(|w| (w[0], w[1]))
}

fn require_lambda_partition(lambda: Lambda, p: &Partition) -> Result<()> {
    match first_small_gap(lambda, p.parts()) {
        None => Ok(()),
        Some((lo, hi)) => Err(Error::GapTooSmall {
            lambda: lambda.get(),
            lo,
            hi,
        }),
    }
}

/// The dense run `(start, start + lambda, ..., start + lambda * (len - 1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseBlock {
    pub start: u32,
    pub len: u32,
}

impl DenseBlock {
    pub fn parts(&self, lambda: Lambda) -> impl Iterator<Item = u32> {
        let step = lambda.get();
        let start = self.start;
        (0..self.len).map(move |k| start + step * k)
    }

    pub fn last(&self, lambda: Lambda) -> u32 {
        self.start + lambda.get() * (self.len - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub lambda: Lambda,
    pub blocks: Vec<DenseBlock>,
}

impl StandardForm {
    /// Concatenation of the blocks.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| b.parts(self.lambda))
            .collect()
    }
}

/// Splits a lambda-partition into maximal dense blocks. A new block starts
/// exactly where the gap exceeds lambda.
pub fn standard_form(lambda: Lambda, p: &Partition) -> Result<StandardForm> {
    require_lambda_partition(lambda, p)?;
    Ok(standard_form_unchecked(lambda, p.parts()))
}

fn standard_form_unchecked(lambda: Lambda, parts: &[u32]) -> StandardForm {
    let mut blocks: Vec<DenseBlock> = Vec::new();
    for &part in parts {
        match blocks.last_mut() {
            Some(b) if part - b.last(lambda) == lambda.get() => b.len += 1,
            _ => blocks.push(DenseBlock {
                start: part,
                len: 1,
            }),
        }
    }
    StandardForm { lambda, blocks }
}

/// Index of the dense block starting at `start`; it does not depend on the
/// block's length.
pub fn dense_index(lambda: Lambda, start: u32) -> u32 {
    let zero = match lambda {
        Lambda::Two => start == 1 || start.is_multiple_of(2),
        Lambda::Three => start <= 2,
    };
    u32::from(!zero)
}

/// Leading parts `M_lambda(p)`: first parts of the blocks with index 1.
pub fn leading_parts(lambda: Lambda, p: &Partition) -> Result<Vec<u32>> {
    require_lambda_partition(lambda, p)?;
    Ok(leading_parts_unchecked(lambda, p.parts()))
}

pub(crate) fn leading_parts_unchecked(lambda: Lambda, parts: &[u32]) -> Vec<u32> {
    standard_form_unchecked(lambda, parts)
        .blocks
        .iter()
        .filter(|b| dense_index(lambda, b.start) == 1)
        .map(|b| b.start)
        .collect()
}

/// `ind_lambda(p)`, the number of leading parts.
pub fn index(lambda: Lambda, p: &Partition) -> Result<usize> {
    leading_parts(lambda, p).map(|m| m.len())
}

/// A lambda-partition together with a subset of its leading parts.
///
/// Marks are stored by value, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedPartition {
    lambda: Lambda,
    base: Partition,
    marks: Vec<u32>,
}

impl MarkedPartition {
    pub fn new(lambda: Lambda, base: Partition, mut marks: Vec<u32>) -> Result<Self> {
        require_lambda_partition(lambda, &base)?;
        marks.sort_unstable();
        marks.dedup();
        let leading = leading_parts_unchecked(lambda, base.parts());
        for &m in &marks {
            if !base.contains(m) {
                return Err(Error::MarkNotPart(m));
            }
            if !leading.contains(&m) {
                return Err(Error::MarkNotLeading(m));
            }
        }
        Ok(MarkedPartition {
            lambda,
            base,
            marks,
        })
    }

    pub fn unmarked(lambda: Lambda, base: Partition) -> Result<Self> {
        Self::new(lambda, base, Vec::new())
    }

    pub fn lambda(&self) -> Lambda {
        self.lambda
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn is_marked(&self, value: u32) -> bool {
        self.marks.binary_search(&value).is_ok()
    }

    pub fn degree(&self) -> u32 {
        self.base.degree()
    }

    /// `l(I) + l(J)`.
    pub fn total_len(&self) -> usize {
        self.base.len() + self.marks.len()
    }

    /// Index of the underlying lambda-partition.
    pub fn index(&self) -> usize {
        leading_parts_unchecked(self.lambda, self.base.parts()).len()
    }

    /// Parts in increasing order, each paired with its mark flag.
    pub fn flagged_parts(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.base.parts().iter().map(|&p| (p, self.is_marked(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lambda_partition_predicate() {
        assert!(is_lambda_partition(Lambda::Three, &p(&[1, 4, 7])));
        assert!(!is_lambda_partition(Lambda::Three, &p(&[2, 4])));
        assert!(!is_lambda_partition(Lambda::Two, &p(&[1, 2, 4, 5, 6, 8])));
        assert!(is_lambda_partition(Lambda::Two, &Partition::empty()));
    }

    #[test]
    fn rejects_bad_parts() {
        assert_eq!(Partition::new(vec![0, 2]), Err(Error::ZeroPart));
        assert_eq!(Partition::new(vec![3, 3]), Err(Error::NotIncreasing(3, 3)));
        assert_eq!(
            Partition::from_unsorted(vec![5, 1, 3]).unwrap(),
            p(&[1, 3, 5])
        );
        assert_eq!(Lambda::try_from(4), Err(Error::InvalidLambda(4)));
    }

    #[test]
    fn standard_form_examples() {
        let sf = standard_form(Lambda::Three, &p(&[1, 4, 7, 12, 15, 20])).unwrap();
        assert_eq!(
            sf.blocks,
            vec![
                DenseBlock { start: 1, len: 3 },
                DenseBlock { start: 12, len: 2 },
                DenseBlock { start: 20, len: 1 },
            ]
        );
        let sf = standard_form(Lambda::Two, &p(&[5])).unwrap();
        assert_eq!(sf.blocks, vec![DenseBlock { start: 5, len: 1 }]);
        let sf = standard_form(Lambda::Three, &p(&[2, 5, 8])).unwrap();
        assert_eq!(sf.blocks, vec![DenseBlock { start: 2, len: 3 }]);
        assert!(standard_form(Lambda::Three, &p(&[2, 4])).is_err());
    }

    #[test]
    fn dense_index_rules() {
        assert_eq!(dense_index(Lambda::Two, 1), 0);
        assert_eq!(dense_index(Lambda::Two, 8), 0);
        assert_eq!(dense_index(Lambda::Two, 3), 1);
        assert_eq!(dense_index(Lambda::Three, 2), 0);
        assert_eq!(dense_index(Lambda::Three, 5), 1);
    }

    #[test]
    fn leading_parts_examples() {
        let three = p(&[1, 4, 7, 12, 15, 20]);
        assert_eq!(leading_parts(Lambda::Three, &three).unwrap(), vec![12, 20]);
        assert_eq!(index(Lambda::Three, &three).unwrap(), 2);
        assert_eq!(leading_parts(Lambda::Two, &p(&[3, 5, 8])).unwrap(), vec![3]);
        assert!(leading_parts(Lambda::Two, &p(&[1, 3, 5]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn marks_must_be_leading() {
        let base = p(&[1, 5, 8]);
        let ok = MarkedPartition::new(Lambda::Three, base.clone(), vec![5]).unwrap();
        assert_eq!(ok.total_len(), 4);
        assert_eq!(ok.degree(), 14);
        assert_eq!(
            MarkedPartition::new(Lambda::Three, base.clone(), vec![8]),
            Err(Error::MarkNotLeading(8))
        );
        assert_eq!(
            MarkedPartition::new(Lambda::Three, base.clone(), vec![1]),
            Err(Error::MarkNotLeading(1))
        );
        assert_eq!(
            MarkedPartition::new(Lambda::Three, base, vec![6]),
            Err(Error::MarkNotPart(6))
        );
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![p(&[1, 2, 3]), p(&[2, 4]), p(&[6]), p(&[1, 5])];
        v.sort();
        assert_eq!(v, vec![p(&[6]), p(&[1, 5]), p(&[2, 4]), p(&[1, 2, 3])]);
    }
}
