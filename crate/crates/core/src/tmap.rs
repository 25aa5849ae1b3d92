//! The recursive bijection `T_lambda : D_m(n) -> N_{lambda,m}(n)` for
//! lambda = 2 and 3, and its inverse.
//!
//! `T` leaves lambda-partitions untouched. Elsewhere it repairs the gaps that
//! are smaller than lambda from the right: a partition whose only violation
//! sits at its first gap is handled by a single merge-and-slide step (the
//! merged part `i1 + i2` is marked and slides right, gaining lambda each time
//! it passes a part, which loses lambda). Longer violation profiles recurse on
//! the suffix starting at the second violation and then re-run `T` on what is
//! left of the smallest new mark.
//!
//! The inverse peels marks smallest first: a mark `i` is split into the unique
//! pair `u + v = i` with `0 < v - u < lambda`, which is slid back left until
//! it fits.

use std::fmt;

use crate::partition::{check_increasing, dense_index, Lambda, MarkedPartition, Partition};
use crate::{Error, Result};

/// Positions (1-based) `a` with `i[a+1] - i[a] < lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationProfile {
    pub positions: Vec<usize>,
}

impl ViolationProfile {
    pub fn mu(&self) -> usize {
        self.positions.len()
    }

    pub fn is_special(&self) -> bool {
        self.positions.first() == Some(&1)
    }
}

pub fn violations(lambda: Lambda, parts: &[u32]) -> ViolationProfile {
    let positions = parts
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] - w[0] < lambda.get())
        .map(|(k, _)| k + 1)
        .collect();
    ViolationProfile { positions }
}

/// An ordered pair `(u, v)` used by the inverse map. Signed so that
/// iterating [`t_step`] past zero is observable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitPair {
    pub u: i64,
    pub v: i64,
}

/// The unique split `i = u + v` with `0 < v - u < lambda`; requires
/// `ind_lambda(i) = 1`.
pub fn split_value(lambda: Lambda, i: u32) -> Result<SplitPair> {
    if dense_index(lambda, i) != 1 {
        return Err(Error::Precondition(format!(
            "{i} is not a possible leading part for lambda = {lambda}"
        )));
    }
    let i = i64::from(i);
    Ok(SplitPair {
        u: (i - 1).div_euclid(2),
        v: (i + 2).div_euclid(2),
    })
}

/// One application of `t_lambda`; lowers `u + v` by lambda.
pub fn t_step(lambda: Lambda, sp: SplitPair) -> Result<SplitPair> {
    let SplitPair { u, v } = sp;
    match (lambda, v - u) {
        (Lambda::Two, 1) => Ok(SplitPair { u: u - 1, v: v - 1 }),
        (Lambda::Three, 1) => Ok(SplitPair { u: u - 2, v: v - 1 }),
        (Lambda::Three, 2) => Ok(SplitPair { u: u - 1, v: v - 2 }),
        (_, d) => Err(Error::Precondition(format!(
            "t-step needs 0 < v - u < {lambda}, got v - u = {d}"
        ))),
    }
}

/// `t_lambda^r(u(i), v(i))`.
pub fn iterated_split(lambda: Lambda, i: u32, r: usize) -> Result<SplitPair> {
    (0..r).try_fold(split_value(lambda, i)?, |sp, _| t_step(lambda, sp))
}

/// A strictly increasing sequence with some entries marked. Unlike
/// [`MarkedPartition`] there is no gap or leading-part requirement; the
/// inverse map passes through such states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedSequence {
    parts: Vec<u32>,
    marks: Vec<u32>,
}

impl MarkedSequence {
    pub fn new(parts: Vec<u32>, mut marks: Vec<u32>) -> Result<Self> {
        check_increasing(&parts)?;
        marks.sort_unstable();
        marks.dedup();
        if let Some(&m) = marks.iter().find(|m| parts.binary_search(m).is_err()) {
            return Err(Error::MarkNotPart(m));
        }
        Ok(MarkedSequence { parts, marks })
    }

    fn plain(parts: &[u32]) -> Self {
        MarkedSequence {
            parts: parts.to_vec(),
            marks: Vec::new(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn entries(&self) -> Vec<(u32, bool)> {
        self.parts
            .iter()
            .map(|&p| (p, self.marks.binary_search(&p).is_ok()))
            .collect()
    }

    pub fn into_marked_partition(self, lambda: Lambda) -> Result<MarkedPartition> {
        MarkedPartition::new(lambda, Partition::new(self.parts)?, self.marks)
    }

    /// Splits before the smallest marked part: the unmarked prefix, and the
    /// rest carrying every mark.
    fn split_at_smallest_mark(self) -> Result<(Vec<u32>, MarkedSequence)> {
        let first = *self.marks.first().ok_or_else(|| {
            Error::Invariant(format!("{:?} carries no mark to split at", self.parts))
        })?;
        let at = self.parts.binary_search(&first).expect("marks are parts");
        let mut parts = self.parts;
        let rest = parts.split_off(at);
        Ok((
            parts,
            MarkedSequence {
                parts: rest,
                marks: self.marks,
            },
        ))
    }
}

impl From<&MarkedPartition> for MarkedSequence {
    fn from(mp: &MarkedPartition) -> Self {
        MarkedSequence {
            parts: mp.base().parts().to_vec(),
            marks: mp.marks().to_vec(),
        }
    }
}

fn disjoint_union(a: MarkedSequence, b: MarkedSequence) -> Result<MarkedSequence> {
    let mut parts = a.parts;
    parts.extend_from_slice(&b.parts);
    parts.sort_unstable();
    if let Some(w) = parts.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Invariant(format!("union repeats the part {}", w[0])));
    }
    let mut marks = a.marks;
    marks.extend_from_slice(&b.marks);
    MarkedSequence::new(parts, marks)
}

/// One term of a rewrite chain, in the order the parts are written; a term
/// may be momentarily unsorted while a merged part slides into place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTerm(pub Vec<(u32, bool)>);

impl fmt::Display for TraceTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self
            .0
            .iter()
            .map(|&(p, m)| if m { format!("{p}*") } else { p.to_string() })
            .collect();
        f.write_str(&text.join(","))
    }
}

/// Records whole-partition states while the recursion works on a window.
/// `left` holds the untouched parts before the window and `right` the parts
/// already settled after it.
struct Tracer<'a> {
    left: Vec<u32>,
    right: Vec<(u32, bool)>,
    terms: Option<&'a mut Vec<TraceTerm>>,
}

impl Tracer<'_> {
    fn silent() -> Tracer<'static> {
        Tracer {
            left: Vec::new(),
            right: Vec::new(),
            terms: None,
        }
    }

    fn emit(&mut self, window: &[(u32, bool)]) {
        if let Some(terms) = self.terms.as_deref_mut() {
            let entries = self
                .left
                .iter()
                .map(|&p| (p, false))
                .chain(window.iter().copied())
                .chain(self.right.iter().copied())
                .collect();
            terms.push(TraceTerm(entries));
        }
    }
}

fn merge_and_slide(lambda: Lambda, p: &[u32], tr: &mut Tracer<'_>) -> Result<MarkedSequence> {
    let lam = i64::from(lambda.get());
    let q = p.len();
    if q < 2 {
        return Err(Error::Precondition("merge needs at least two parts".into()));
    }
    let at = |k: usize| i64::from(p[k - 1]);
    let merged = at(1) + at(2);
    // r is unique: i_s - (s - 2) lambda is non-decreasing for s >= 2.
    let r = (2..=q)
        .find(|&r| {
            let lower = at(r) - (r as i64 - 2) * lam;
            lower < merged && (r == q || merged <= at(r + 1) - (r as i64 - 1) * lam)
        })
        .ok_or_else(|| Error::Invariant(format!("no slide position for {p:?}")))?;

    let mut window: Vec<(u32, bool)> = std::iter::once((merged as u32, true))
        .chain(p[2..].iter().map(|&x| (x, false)))
        .collect();
    tr.emit(&window);
    for j in 1..=r - 2 {
        window[j - 1] = ((at(j + 2) - lam) as u32, false);
        window[j] = ((merged + j as i64 * lam) as u32, true);
        tr.emit(&window);
    }
    let marks = vec![(merged + (r as i64 - 2) * lam) as u32];
    MarkedSequence::new(window.into_iter().map(|(p, _)| p).collect(), marks)
}

fn t_rec(lambda: Lambda, parts: &[u32], tr: &mut Tracer<'_>) -> Result<MarkedSequence> {
    let profile = violations(lambda, parts);
    let Some(&first) = profile.positions.first() else {
        return Ok(MarkedSequence::plain(parts));
    };

    if first > 1 {
        let (prefix, suffix) = parts.split_at(first - 1);
        let saved = tr.left.len();
        tr.left.extend_from_slice(prefix);
        let tail = t_rec(lambda, suffix, tr);
        tr.left.truncate(saved);
        return disjoint_union(MarkedSequence::plain(prefix), tail?);
    }

    if profile.mu() == 1 {
        return merge_and_slide(lambda, parts, tr);
    }

    let second = profile.positions[1];
    let (head, rest) = parts.split_at(second - 1);
    let saved = tr.left.len();
    tr.left.extend_from_slice(head);
    let settled = t_rec(lambda, rest, tr);
    tr.left.truncate(saved);
    let (minus, plus) = settled?.split_at_smallest_mark()?;

    let mut next = head.to_vec();
    next.extend_from_slice(&minus);
    check_increasing(&next)
        .map_err(|e| Error::Invariant(format!("re-entry window for {parts:?}: {e}")))?;

    let saved_right = std::mem::take(&mut tr.right);
    tr.right = plus.entries();
    tr.right.extend_from_slice(&saved_right);
    let redone = t_rec(lambda, &next, tr);
    tr.right = saved_right;
    disjoint_union(redone?, plus)
}

fn finish(lambda: Lambda, p: &Partition, seq: MarkedSequence) -> Result<MarkedPartition> {
    let image = seq.into_marked_partition(lambda).map_err(|e| {
        Error::Invariant(format!(
            "T({:?}) is not a marked {lambda}-partition: {e}",
            p.parts()
        ))
    })?;
    if image.degree() != p.degree() || image.total_len() != p.len() {
        return Err(Error::Invariant(format!(
            "T({:?}) changed degree or length",
            p.parts()
        )));
    }
    Ok(image)
}

/// The single merge-and-slide step for a partition whose only violation is
/// at its first gap.
pub fn merge_step(lambda: Lambda, p: &Partition) -> Result<MarkedPartition> {
    let profile = violations(lambda, p.parts());
    if profile.positions != [1] {
        return Err(Error::Precondition(format!(
            "merge step needs the only violation at position 1, got {:?}",
            profile.positions
        )));
    }
    let seq = merge_and_slide(lambda, p.parts(), &mut Tracer::silent())?;
    finish(lambda, p, seq)
}

pub fn t_map(lambda: Lambda, p: &Partition) -> Result<MarkedPartition> {
    let seq = t_rec(lambda, p.parts(), &mut Tracer::silent())?;
    finish(lambda, p, seq)
}

/// [`t_map`] together with its rewrite chain: the input, then the whole
/// partition after every merge or slide.
pub fn t_map_traced(lambda: Lambda, p: &Partition) -> Result<(MarkedPartition, Vec<TraceTerm>)> {
    let mut terms = vec![TraceTerm(p.parts().iter().map(|&x| (x, false)).collect())];
    let seq = {
        let mut tr = Tracer {
            left: Vec::new(),
            right: Vec::new(),
            terms: Some(&mut terms),
        };
        t_rec(lambda, p.parts(), &mut tr)?
    };
    Ok((finish(lambda, p, seq)?, terms))
}

/// Removes the smallest mark of `seq`: its value is split into `(u, v)` and
/// moved left past `r` parts (each gaining lambda), `r` being the least shift
/// with `i[q - r - 1] < u_r` (where `i[0] = 0`).
pub fn local_unmark(lambda: Lambda, seq: &MarkedSequence) -> Result<MarkedSequence> {
    let &mark = seq
        .marks
        .first()
        .ok_or_else(|| Error::Precondition("no marked part to remove".into()))?;
    let parts = &seq.parts;
    let q = parts.binary_search(&mark).expect("marks are parts") + 1;
    let at = |k: usize| if k == 0 { 0 } else { i64::from(parts[k - 1]) };

    let mut sp = split_value(lambda, mark)?;
    let mut r = 0;
    while at(q - r - 1) >= sp.u {
        if r + 1 >= q {
            return Err(Error::Invariant(format!(
                "no shift places the split of {mark} in {parts:?}"
            )));
        }
        sp = t_step(lambda, sp)?;
        r += 1;
    }
    if sp.v > at(q - r) {
        return Err(Error::Invariant(format!(
            "split ({}, {}) of {mark} overruns {} in {parts:?}",
            sp.u,
            sp.v,
            at(q - r)
        )));
    }

    let lam = lambda.get();
    let mut out = Vec::with_capacity(parts.len() + 1);
    out.extend_from_slice(&parts[..q - r - 1]);
    out.push(sp.u as u32);
    out.push(sp.v as u32);
    out.extend(parts[q - r - 1..q - 1].iter().map(|x| x + lam));
    out.extend_from_slice(&parts[q..]);
    let marks = seq.marks[1..].to_vec();
    MarkedSequence::new(out, marks).map_err(|e| Error::Invariant(format!("unmarking {mark}: {e}")))
}

fn t_inverse_inner(
    mp: &MarkedPartition,
    mut terms: Option<&mut Vec<TraceTerm>>,
) -> Result<Partition> {
    let lambda = mp.lambda();
    let mut seq = MarkedSequence::from(mp);
    if let Some(t) = terms.as_deref_mut() {
        t.push(TraceTerm(seq.entries()));
    }
    while !seq.marks.is_empty() {
        seq = local_unmark(lambda, &seq)?;
        if let Some(t) = terms.as_deref_mut() {
            t.push(TraceTerm(seq.entries()));
        }
    }
    let p = Partition::new(seq.parts)?;
    if p.degree() != mp.degree() || p.len() != mp.total_len() {
        return Err(Error::Invariant("inverse changed degree or length".into()));
    }
    Ok(p)
}

pub fn t_inverse(mp: &MarkedPartition) -> Result<Partition> {
    t_inverse_inner(mp, None)
}

/// [`t_inverse`] with the state after each removed mark.
pub fn t_inverse_traced(mp: &MarkedPartition) -> Result<(Partition, Vec<TraceTerm>)> {
    let mut terms = Vec::new();
    let p = t_inverse_inner(mp, Some(&mut terms))?;
    Ok((p, terms))
}
