//! The commutator of a preinjective with a preprojective in the Hall algebra.

use super::generators::theta_census;
use crate::error::Result;
use crate::hall::HallElement;
use crate::kronrep::IsoClass;
use crate::scalars::{specialize, RatFun};

/// Which normalization of the right-hand side to use. `Literal` carries the
/// prefactor `v^{-(m+n+1)} / (v^{-1} - v)`; `Corrected` multiplies it by
/// `v^2`, which is what the Hall product produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SzantoForm {
    Literal,
    Corrected,
}

/// `[I_m][P_n] - v^2 [P_n][I_m]`
pub fn szanto_lhs(m: u32, n: u32, q: u32) -> Result<HallElement> {
    let i = HallElement::class(IsoClass::preinj(m), q);
    let p = HallElement::class(IsoClass::preproj(n), q);
    Ok(i.mul(&p)?.sub(&p.mul(&i)?.shift(2)))
}

/// `v^{-(m+n+1)} / (v^{-1} - v) * sum prod (1 - v^{2 deg}) [T]`, times `v^2`
/// for the corrected form.
pub fn szanto_rhs(m: u32, n: u32, q: u32, form: SzantoForm) -> Result<HallElement> {
    let r = m + n + 1;
    // theta_census(r) already carries v^{-r}
    let extra = if form == SzantoForm::Corrected { 2 } else { 0 };
    let pre = RatFun::v_pow(extra).div(&RatFun::v_pow(-1).sub(&RatFun::v_pow(1)))?;
    Ok(theta_census(r, q).scale(&specialize(&pre, q)?))
}

pub fn szanto_check(m: u32, n: u32, q: u32, form: SzantoForm) -> Result<bool> {
    Ok(szanto_lhs(m, n, q)? == szanto_rhs(m, n, q, form)?)
}
