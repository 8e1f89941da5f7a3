//! Quotient census of line bundles: subsheaves `O(n-r) -> O(n)` are given by
//! binary forms of degree `r` up to scalars, and the quotient is read off
//! from the factorization of the form.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::generators::theta_elem;
use crate::error::Result;
use crate::fq::{ClosedPoint, FqPoly};
use crate::hall::{aut, HallElement};
use crate::kronrep::{IsoClass, KClass};
use crate::scalars::ScalarQ;

/// Torsion class of `O(n) / f O(n-r)` for the form `f = sum c_i x^{r-i} y^i`.
fn quotient_class(c: &[u8], q: u32) -> IsoClass {
    let r = c.len() - 1;
    let g = FqPoly::new(c.to_vec(), q);
    let d = g.degree().expect("nonzero form");
    let mut out = IsoClass::zero();
    if r > d {
        out.r.insert(ClosedPoint::Infinity, vec![(r - d) as u32]);
    }
    for (p, t) in g.factor() {
        out.r.insert(ClosedPoint::Finite(p), vec![t]);
    }
    out
}

/// Coefficients of `[T] K_{(1,n-r)} ⊗ [O(n-r)]` in the coproduct of
/// `[O(n)]`, collected as the element `sum_T c_T [T]` with
/// `c_T = v^{-<T, O(n-r)>} N_T a_T a_{O(n-r)} / a_{O(n)} = v^r N_T a_T`,
/// where `N_T` counts scalar classes of forms with quotient `T`.
pub fn lb_coproduct_census(r: u32, q: u32) -> HallElement {
    let mut counts: std::collections::BTreeMap<IsoClass, u64> = Default::default();
    let r = r as usize;
    // scalar classes: the highest nonzero coefficient is 1
    for d in 0..=r {
        let free = (q as u64).pow(d as u32);
        for idx in 0..free {
            let mut c = vec![0u8; r + 1];
            let mut x = idx;
            for slot in c.iter_mut().take(d) {
                *slot = (x % q as u64) as u8;
                x /= q as u64;
            }
            c[d] = 1;
            *counts.entry(quotient_class(&c, q)).or_insert(0) += 1;
        }
    }
    let mut out = HallElement::zero(q);
    let w = ScalarQ::v_pow(r as i32, q);
    for (t, n) in counts {
        let c = w.scale(&BigRational::from_integer(BigInt::from(n) * aut(&t, q)));
        out.add_term(t, KClass::zero(), c);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub n: i64,
    pub r: u32,
    pub census: HallElement,
    pub theta: HallElement,
    pub equal: bool,
}

/// Compares the quotient census of `O(n)` with `Theta_r` for `1 <= r <= rmax`.
/// The census does not depend on `n`; it is reported per `n` anyway.
pub fn lb_coproduct_check(n: i64, rmax: u32, q: u32) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    for r in 1..=rmax {
        let census = lb_coproduct_census(r, q);
        let theta = theta_elem(r, q)?;
        let equal = census == theta;
        rows.push(CensusRow { n, r, census, theta, equal });
    }
    Ok(rows)
}
