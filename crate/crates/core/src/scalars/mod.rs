//! Exact coefficient rings.

mod laurent;
mod ratfun;
mod scalarq;
mod series;

pub use laurent::LaurentPoly;
pub use ratfun::{quantum_factorial, quantum_int, v_minus_vinv, RatFun};
pub use scalarq::{parse_rational, specialize, ScalarQ};
pub use series::{series_exp, series_log, FormalSeries, SeriesAlgebra};


use crate::error::Result;
use num_rational::BigRational;

/// Rational functions as a series coefficient algebra.
pub struct RatFunAlgebra;

impl SeriesAlgebra for RatFunAlgebra {
    type Elem = RatFun;
    fn zero(&self) -> RatFun {
        RatFun::zero()
    }
    fn one(&self) -> RatFun {
        RatFun::one()
    }
    fn add(&self, a: &RatFun, b: &RatFun) -> RatFun {
        a.add(b)
    }
    fn mul(&self, a: &RatFun, b: &RatFun) -> Result<RatFun> {
        Ok(a.mul(b))
    }
    fn scale_rat(&self, a: &RatFun, c: &BigRational) -> RatFun {
        a.scale(c)
    }
    fn is_zero(&self, a: &RatFun) -> bool {
        a.is_zero()
    }
}

/// `Q[sqrt q]` as a series coefficient algebra.
pub struct ScalarQAlgebra(pub u32);

impl SeriesAlgebra for ScalarQAlgebra {
    type Elem = ScalarQ;
    fn zero(&self) -> ScalarQ {
        ScalarQ::zero(self.0)
    }
    fn one(&self) -> ScalarQ {
        ScalarQ::one(self.0)
    }
    fn add(&self, a: &ScalarQ, b: &ScalarQ) -> ScalarQ {
        a.add(b)
    }
    fn mul(&self, a: &ScalarQ, b: &ScalarQ) -> Result<ScalarQ> {
        Ok(a.mul(b))
    }
    fn scale_rat(&self, a: &ScalarQ, c: &BigRational) -> ScalarQ {
        a.scale(c)
    }
    fn is_zero(&self, a: &ScalarQ) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests;
