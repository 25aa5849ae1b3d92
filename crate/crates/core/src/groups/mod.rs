//! The automorphisms `A_n = T_3^-1 . S` and `B_n = sylvester . glaisher` of
//! `D(n)`, their cyclic orders and the order of the group they generate.
//!
//! Permutations act on indices into `D(n)` in canonical order (by length,
//! then lexicographically).

pub mod chain;
pub mod odd;
pub mod perm;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::enumerate::distinct;
use crate::frobenius::s_map;
use crate::partition::Partition;
use crate::tmap::t_inverse;
use crate::{Error, Result};

pub use chain::{group_order, StabilizerChain};
pub use perm::Permutation;

/// Builds the index permutation of `map` on canonically ordered `D(n)`.
pub fn induced_permutation<F>(n: u32, map: F) -> Result<Permutation>
where
    F: Fn(&Partition) -> Result<Partition>,
{
    let domain = distinct(n, None);
    let position: HashMap<&Partition, usize> =
        domain.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let images = domain
        .iter()
        .map(|p| {
            let image = map(p)?;
            position
                .get(&image)
                .copied()
                .ok_or_else(|| Error::Invariant(format!("{p:?} maps to {image:?}, outside D({n})")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(images)
}

fn require_positive(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ok(())
}

pub fn a_map(p: &Partition) -> Result<Partition> {
    t_inverse(&s_map(p)?)
}

pub fn b_map(p: &Partition) -> Partition {
    odd::sylvester(&odd::glaisher(p))
}

pub fn a_perm(n: u32) -> Result<Permutation> {
    require_positive(n)?;
    induced_permutation(n, a_map)
}

pub fn b_perm(n: u32) -> Result<Permutation> {
    require_positive(n)?;
    induced_permutation(n, |p| Ok(b_map(p)))
}

pub fn perm_order(g: &Permutation) -> BigUint {
    g.order()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub d: usize,
    #[serde(serialize_with = "decimal")]
    pub nu_a: BigUint,
    #[serde(serialize_with = "decimal")]
    pub nu_b: BigUint,
    #[serde(serialize_with = "decimal")]
    pub nu_ab: BigUint,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn table_row(n: u32) -> Result<TableRow> {
    let a = a_perm(n)?;
    let b = b_perm(n)?;
    Ok(TableRow {
        n,
        d: a.degree(),
        nu_a: a.order(),
        nu_b: b.order(),
        nu_ab: group_order(&[a, b]),
    })
}

pub fn table(from: u32, to: u32) -> Result<Vec<TableRow>> {
    (from..=to).map(table_row).collect()
}

/// Writes `v` as `k!` or `k!/2` (smallest `k >= 1`) when one matches exactly.
pub fn factorial_form(v: &BigUint) -> Option<String> {
    let mut halves = None;
    let mut f = BigUint::one();
    for k in 1u32.. {
        f *= k;
        if &f == v {
            return Some(format!("{k}!"));
        }
        if halves.is_none() && k >= 2 && &(&f / 2u32) == v {
            halves = Some(format!("{k}!/2"));
        }
        if &(&f / 2u32) > v {
            return halves;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(k: u32) -> BigUint {
        (1..=k).map(BigUint::from).product()
    }

    #[test]
    fn a_on_six() {
        // D(6) = (6), (1,5), (2,4), (1,2,3)
        assert_eq!(a_perm(6).unwrap().images(), &[0, 2, 1, 3]);
        assert_eq!(a_perm(6).unwrap().order(), BigUint::from(2u32));
    }

    #[test]
    fn small_rows() {
        let row = table_row(3).unwrap();
        assert_eq!(
            (row.d, row.nu_a.clone(), row.nu_b.clone()),
            (2, 1u32.into(), 2u32.into())
        );
        assert_eq!(row.nu_ab, factorial(2));
        let row = table_row(4).unwrap();
        assert_eq!(
            (row.nu_a, row.nu_b, row.nu_ab),
            (1u32.into(), 1u32.into(), 1u32.into())
        );
        let row = table_row(9).unwrap();
        assert_eq!((row.nu_a, row.nu_b), (12u32.into(), 6u32.into()));
        let row = table_row(10).unwrap();
        assert_eq!(row.nu_ab, BigUint::from(1_814_400u32));
    }

    #[test]
    fn powers_of_two_fix_the_single_part() {
        for k in 0..=4 {
            let n = 1u32 << k;
            let single = distinct(n, None)
                .iter()
                .position(|p| p.parts() == [n])
                .unwrap();
            assert_eq!(a_perm(n).unwrap()[single], single);
            assert_eq!(b_perm(n).unwrap()[single], single);
        }
    }

    #[test]
    fn a_preserves_length() {
        for n in 1..=20 {
            let domain = distinct(n, None);
            let a = a_perm(n).unwrap();
            for (i, p) in domain.iter().enumerate() {
                assert_eq!(domain[a[i]].len(), p.len());
            }
        }
    }

    #[test]
    fn factorial_forms() {
        assert_eq!(factorial_form(&BigUint::one()).as_deref(), Some("1!"));
        assert_eq!(factorial_form(&BigUint::from(2u32)).as_deref(), Some("2!"));
        assert_eq!(
            factorial_form(&BigUint::from(3u32)).as_deref(),
            Some("3!/2")
        );
        assert_eq!(
            factorial_form(&BigUint::from(1_814_400u32)).as_deref(),
            Some("10!/2")
        );
        assert_eq!(factorial_form(&factorial(46)).as_deref(), Some("46!"));
        assert_eq!(factorial_form(&BigUint::from(7u32)), None);
        assert_eq!(factorial_form(&BigUint::from(0u32)), None);
    }

    #[test]
    fn row_json_uses_decimal_strings() {
        let json = serde_json::to_string(&table_row(5).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":5,"d":3,"nu_a":"2","nu_b":"3","nu_ab":"6"}"#);
    }
}
