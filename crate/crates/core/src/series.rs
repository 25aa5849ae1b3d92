//! Exact truncated bivariate series in `x` and `t`, and coefficientwise
//! checks of the generating-function identities behind the bijections.
//!
//! A [`TruncatedSeries`] of order `N` keeps every coefficient of `t^h x^n`
//! with `n <= N`; products drop the rest. Reciprocals such as `1/(1 - x^j)`
//! and `1/(1 + t x^{2j})` only ever enter as truncated geometric series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerate::{distinct, lambda_partitions, marked};
use crate::partition::{leading_parts_unchecked, Lambda, Partition};

pub const DEFAULT_ORDER: usize = 60;

#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    order: usize,
    /// `rows[n][h]` is the coefficient of `t^h x^n`.
    rows: Vec<Vec<BigInt>>,
}

/// First coefficient (in order of `n`, then `h`) where two series differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub h: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            rows: vec![Vec::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, 1)
    }

    /// `c t^h x^n`, or zero if `n` exceeds the order.
    pub fn monomial(order: usize, n: usize, h: usize, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        s.add_coeff(n, h, c.into());
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize, h: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|row| row.get(h))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Coefficients of `x^n` as a polynomial in `t`, without trailing zeros.
    pub fn t_poly(&self, n: usize) -> Vec<BigInt> {
        let mut row = self.rows.get(n).cloned().unwrap_or_default();
        while row.last().is_some_and(Zero::is_zero) {
            row.pop();
        }
        row
    }

    pub fn add_coeff(&mut self, n: usize, h: usize, c: BigInt) {
        if n > self.order || c.is_zero() {
            return;
        }
        let row = &mut self.rows[n];
        if row.len() <= h {
            row.resize(h + 1, BigInt::zero());
        }
        row[h] += c;
    }

    fn add_shifted_row(&mut self, target: usize, source: &[BigInt], h: usize, c: i64) {
        for (k, v) in source.iter().enumerate() {
            if !v.is_zero() {
                self.add_coeff(target, k + h, v * c);
            }
        }
    }

    /// Multiplies in place by `1 + c t^h x^n` (`n >= 1`).
    pub fn mul_binomial(&mut self, c: i64, n: usize, h: usize) {
        assert!(n >= 1, "binomial factor needs a positive x-degree");
        for target in (n..=self.order).rev() {
            let source = self.rows[target - n].clone();
            self.add_shifted_row(target, &source, h, c);
        }
    }

    /// Multiplies in place by the truncated geometric series
    /// `sum_k (c t^h x^n)^k`, i.e. by `1/(1 - c t^h x^n)` (`n >= 1`).
    pub fn mul_geometric(&mut self, c: i64, n: usize, h: usize) {
        assert!(n >= 1, "geometric factor needs a positive x-degree");
        // Ascending order: row[target - n] already includes every power.
        for target in n..=self.order {
            let source = self.rows[target - n].clone();
            self.add_shifted_row(target, &source, h, c);
        }
    }

    /// Multiplies by `t^h x^n`.
    pub fn shift(&self, n: usize, h: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (k, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.add_coeff(k + n, j + h, v.clone());
            }
        }
        out
    }

    /// Substitutes a value for `t`; the result has only `t^0` terms.
    pub fn eval_t(&self, t: i64) -> Self {
        let mut out = Self::zero(self.order);
        let t = BigInt::from(t);
        for (n, row) in self.rows.iter().enumerate() {
            let mut power = BigInt::one();
            let mut sum = BigInt::zero();
            for v in row {
                sum += v * &power;
                power *= &t;
            }
            out.add_coeff(n, 0, sum);
        }
        out
    }

    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        let order = self.order.max(other.order);
        for n in 0..=order {
            let width = self
                .rows
                .get(n)
                .map_or(0, Vec::len)
                .max(other.rows.get(n).map_or(0, Vec::len));
            for h in 0..width {
                let (lhs, rhs) = (self.coeff(n, h), other.coeff(n, h));
                if lhs != rhs {
                    return Some(Mismatch { n, h, lhs, rhs });
                }
            }
        }
        None
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.first_mismatch(other).is_none()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (h, v) in row.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                terms.push(format!("{v}*t^{h}*x^{n}"));
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} + O(x^{})", terms.join(" + "), self.order + 1)
    }
}

fn combine(a: &TruncatedSeries, b: &TruncatedSeries, sign: i64) -> TruncatedSeries {
    let order = a.order.min(b.order);
    let mut out = TruncatedSeries::zero(order);
    for n in 0..=order {
        out.add_shifted_row(n, &a.rows[n], 0, 1);
        out.add_shifted_row(n, &b.rows[n], 0, sign);
    }
    out
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        combine(self, rhs, 1)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        combine(self, rhs, -1)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        combine(&TruncatedSeries::zero(self.order), self, -1)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = TruncatedSeries::zero(order);
        for n1 in 0..=order {
            for (h1, c1) in self.rows[n1]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
            {
                for n2 in 0..=order - n1 {
                    for (h2, c2) in rhs.rows[n2]
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                    {
                        out.add_coeff(n1 + n2, h1 + h2, c1 * c2);
                    }
                }
            }
        }
        out
    }
}

/// `prod_{k >= 1} (1 + t x^k)`; the coefficient of `t^m x^n` is `d_m(n)`.
pub fn product_distinct(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        s.mul_binomial(1, k, 1);
    }
    s
}

fn binomial_row(alpha: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..alpha {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, v) in row.iter().enumerate() {
            next[k] += v;
            next[k + 1] += v;
        }
        row = next;
    }
    row
}

/// `1 + sum (1 + t)^{ind} t^{len} x^{deg}` over all lambda-partitions of
/// degree at most `order`.
pub fn rhs_main(lambda: Lambda, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in 0..=order {
        for p in lambda_partitions(lambda, n as u32, None) {
            let alpha = leading_parts_unchecked(lambda, p.parts()).len();
            s.add_shifted_row(n, &binomial_row(alpha), p.len(), 1);
        }
    }
    s
}

/// Closed form of the generating function of marked 3-partitions with `q`
/// base parts:
/// `x^{(3q^2 - q)/2} (1+tx)...(1+tx^{q-1})(1+tx^{2q}) / ((1-x)...(1-x^q))`.
pub fn a3q_closed(q: usize, order: usize) -> TruncatedSeries {
    let lowest = (3 * q * q - q) / 2;
    let mut s = TruncatedSeries::monomial(order, lowest, 0, 1);
    for j in 1..q {
        s.mul_binomial(1, j, 1);
    }
    if q >= 1 {
        s.mul_binomial(1, 2 * q, 1);
        for j in 1..=q {
            s.mul_geometric(1, j, 0);
        }
    }
    s
}

/// The same generating function by enumeration: `sum a_{3,q,h}(n) t^h x^n`.
pub fn a3q_enumerated(q: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in 0..=order {
        for mp in marked(Lambda::Three, n as u32, None) {
            if mp.base().len() == q {
                s.add_coeff(n, mp.marks().len(), BigInt::one());
            }
        }
    }
    s
}

/// `1 + sum_q t^q A_{3,q}(x, t)` with every `A_{3,q}` in closed form.
pub fn sylvester_rhs(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for q in (1..).take_while(|q| (3 * q * q - q) / 2 <= order) {
        s = &s + &a3q_closed(q, order).shift(0, q);
    }
    s
}

/// Both sides of the product formula for index-zero 2-partitions: the
/// analytic left side and the enumeration `1 + sum p_{2,q}(n,0) t^q x^n`.
pub fn index_zero_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let mut bracket = TruncatedSeries::one(order);
    for r in (1..).take_while(|r| r * r <= order) {
        let mut term = TruncatedSeries::monomial(order, r * r, r, 1);
        for j in 1..=r {
            term.mul_geometric(-1, 2 * j, 1);
        }
        bracket = &bracket + &term;
    }
    for s in (1..).take_while(|s| 2 * s <= order) {
        bracket.mul_binomial(1, 2 * s, 1);
    }

    let mut counted = TruncatedSeries::zero(order);
    for n in 0..=order {
        for p in lambda_partitions(Lambda::Two, n as u32, None) {
            if leading_parts_unchecked(Lambda::Two, p.parts()).is_empty() {
                counted.add_coeff(n, p.len(), BigInt::one());
            }
        }
    }
    (bracket, counted)
}

/// `prod_{k >= 1} (1 - x^k)`.
pub fn euler_product(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        s.mul_binomial(-1, k, 0);
    }
    s
}

/// The main right-hand side for lambda = 3 at `t = -1`, and the Euler product.
pub fn pentagonal_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    (
        rhs_main(Lambda::Three, order).eval_t(-1),
        euler_product(order),
    )
}

/// `1 + sum_r (-1)^r x^{r^2} / ((1-x^2)...(1-x^{2r}))`.
pub fn odd_product_lhs(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for r in (1..).take_while(|r| r * r <= order) {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let mut term = TruncatedSeries::monomial(order, r * r, 0, sign);
        for j in 1..=r {
            term.mul_geometric(1, 2 * j, 0);
        }
        s = &s + &term;
    }
    s
}

/// `prod (1 - x^m)` over odd `m >= first`.
pub fn odd_moduli_product(first: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for m in (first..=order).step_by(2) {
        s.mul_binomial(-1, m, 0);
    }
    s
}

/// Left side against the product over all odd moduli `1, 3, 5, ...`.
pub fn odd_product_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    (odd_product_lhs(order), odd_moduli_product(1, order))
}

fn binom3(i: u32) -> BigInt {
    let i = BigInt::from(i);
    &i * (&i - 1) * (&i - 2) / 6
}

fn pair_products(parts: &[u32]) -> BigInt {
    let mut sum = BigInt::zero();
    for (a, &x) in parts.iter().enumerate() {
        for &y in &parts[a + 1..] {
            sum += BigInt::from(x) * y;
        }
    }
    sum
}

/// `F(I) = sum C(i_a, 3) + 2 sum_{a<b} i_a i_b - 3 sum_a (m - a) i_a^2`.
pub fn f_weight(p: &Partition) -> BigInt {
    let m = p.len();
    let cubic: BigInt = p.parts().iter().map(|&i| binom3(i)).sum();
    let squares: BigInt = p
        .parts()
        .iter()
        .enumerate()
        .map(|(a, &i)| BigInt::from(m - (a + 1)) * i * i)
        .sum();
    cubic + pair_products(p.parts()) * 2 - squares * 3
}

/// `E(I) = sum C(i_a, 3) - sum_{a<b} i_a i_b`.
pub fn e_weight(p: &Partition) -> BigInt {
    let cubic: BigInt = p.parts().iter().map(|&i| binom3(i)).sum();
    cubic - pair_products(p.parts())
}

fn add_poly(poly: &mut Vec<BigInt>, h: usize, c: BigInt) {
    if poly.len() <= h {
        poly.resize(h + 1, BigInt::zero());
    }
    poly[h] += c;
}

fn trimmed(mut poly: Vec<BigInt>) -> Vec<BigInt> {
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    poly
}

/// `sum_{I in D(n)} F(I) t^{l(I)}` and
/// `sum_I E(I) t^{l(I)} (1+t)^{ind_3(I)}` over 3-partitions `I` of `n`.
pub fn fe_sides(n: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut lhs = Vec::new();
    for p in distinct(n, None) {
        add_poly(&mut lhs, p.len(), f_weight(&p));
    }
    let mut rhs = Vec::new();
    for p in lambda_partitions(Lambda::Three, n, None) {
        let e = e_weight(&p);
        let alpha = leading_parts_unchecked(Lambda::Three, p.parts()).len();
        for (k, b) in binomial_row(alpha).into_iter().enumerate() {
            add_poly(&mut rhs, p.len() + k, &e * b);
        }
    }
    (trimmed(lhs), trimmed(rhs))
}

pub fn fe_identity_holds(n: u32) -> bool {
    let (lhs, rhs) = fe_sides(n);
    lhs == rhs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Main,
    Sylvester,
    IndexZero,
    Pentagonal,
    OddProduct,
    Fe,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Main,
        Identity::Sylvester,
        Identity::IndexZero,
        Identity::Pentagonal,
        Identity::OddProduct,
        Identity::Fe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Main => "main",
            Identity::Sylvester => "sylvester",
            Identity::IndexZero => "eq0",
            Identity::Pentagonal => "pentagonal",
            Identity::OddProduct => "odd-product",
            Identity::Fe => "fe",
        }
    }
}

/// Outcome of one identity check. Serializes as
/// `{"identity":..,"N":..,"ok":..,"first_mismatch":{n,h,lhs,rhs}|null}`
/// with big coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: &'static str,
    #[serde(rename = "N")]
    pub order: usize,
    pub ok: bool,
    pub first_mismatch: Option<MismatchJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MismatchJson {
    pub n: usize,
    pub h: usize,
    pub lhs: String,
    pub rhs: String,
}

impl From<Mismatch> for MismatchJson {
    fn from(m: Mismatch) -> Self {
        MismatchJson {
            n: m.n,
            h: m.h,
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }
    }
}

impl CheckReport {
    fn new(identity: Identity, order: usize, mismatch: Option<Mismatch>) -> Self {
        CheckReport {
            identity: identity.name(),
            order,
            ok: mismatch.is_none(),
            first_mismatch: mismatch.map(Into::into),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn fe_mismatch(max_n: usize) -> Option<Mismatch> {
    (1..=max_n as u32).find_map(|n| {
        let (lhs, rhs) = fe_sides(n);
        (0..lhs.len().max(rhs.len())).find_map(|h| {
            let l = lhs.get(h).cloned().unwrap_or_default();
            let r = rhs.get(h).cloned().unwrap_or_default();
            (l != r).then_some(Mismatch {
                n: n as usize,
                h,
                lhs: l,
                rhs: r,
            })
        })
    })
}

/// Checks one identity up to `x^order` (for [`Identity::Fe`], for every
/// degree `1..=order`). `lambda` only matters for [`Identity::Main`].
pub fn check(identity: Identity, lambda: Lambda, order: usize) -> CheckReport {
    let mismatch = match identity {
        Identity::Main => product_distinct(order).first_mismatch(&rhs_main(lambda, order)),
        Identity::Sylvester => product_distinct(order).first_mismatch(&sylvester_rhs(order)),
        Identity::IndexZero => {
            let (lhs, rhs) = index_zero_sides(order);
            lhs.first_mismatch(&rhs)
        }
        Identity::Pentagonal => {
            let (lhs, rhs) = pentagonal_sides(order);
            lhs.first_mismatch(&rhs)
        }
        Identity::OddProduct => {
            let (lhs, rhs) = odd_product_sides(order);
            lhs.first_mismatch(&rhs)
        }
        Identity::Fe => fe_mismatch(order),
    };
    CheckReport::new(identity, order, mismatch)
}

/// First `n <= max_n` where `d(n) != sum_alpha p_lambda(n, alpha) 2^alpha`,
/// with both sides.
pub fn index_weight_mismatch(lambda: Lambda, max_n: u32) -> Option<(u32, BigInt, BigInt)> {
    (0..=max_n).find_map(|n| {
        let d = BigInt::from(distinct(n, None).len());
        let weighted: BigInt = lambda_partitions(lambda, n, None)
            .iter()
            .map(|p| BigInt::one() << leading_parts_unchecked(lambda, p.parts()).len())
            .sum();
        (d != weighted).then_some((n, d, weighted))
    })
}
