//! Truncated formal power series in `t` over a commutative algebra.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arithmetic of the coefficient algebra. Coefficients fed to `series_exp`
/// and `series_log` must commute with each other.
pub trait SeriesAlgebra {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn scale_rat(&self, a: &Self::Elem, c: &BigRational) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// Coefficients of `t^0 ..= t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> FormalSeries<E> {
    /// Builds a series from explicit coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &E {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `exp(s)` for `s` with vanishing constant term.
pub fn series_exp<A: SeriesAlgebra>(
    alg: &A,
    s: &FormalSeries<A::Elem>,
) -> Result<FormalSeries<A::Elem>> {
    if !alg.is_zero(s.coeff(0)) {
        return Err(Error::BadConstantTerm { expected: "0" });
    }
    let n_max = s.order();
    let mut e = vec![alg.one()];
    // n e_n = sum_{k=1}^n k s_k e_{n-k}
    for n in 1..=n_max {
        let mut acc = alg.zero();
        for k in 1..=n {
            if alg.is_zero(s.coeff(k)) {
                continue;
            }
            let term = alg.mul(s.coeff(k), &e[n - k])?;
            acc = alg.add(&acc, &alg.scale_rat(&term, &ratio(k as i64, n as i64)));
        }
        e.push(acc);
    }
    Ok(FormalSeries::new(e))
}

/// `log(s)` for `s` with constant term 1.
pub fn series_log<A: SeriesAlgebra>(
    alg: &A,
    s: &FormalSeries<A::Elem>,
) -> Result<FormalSeries<A::Elem>> {
    let minus_one = alg.scale_rat(&alg.one(), &ratio(-1, 1));
    if !alg.is_zero(&alg.add(s.coeff(0), &minus_one)) {
        return Err(Error::BadConstantTerm { expected: "1" });
    }
    let n_max = s.order();
    let mut l = vec![alg.zero()];
    // L_n = s_n - (1/n) sum_{k=1}^{n-1} k L_k s_{n-k}
    for n in 1..=n_max {
        let mut acc = s.coeff(n).clone();
        for k in 1..n {
            if alg.is_zero(&l[k]) {
                continue;
            }
            let term = alg.mul(&l[k], s.coeff(n - k))?;
            acc = alg.add(&acc, &alg.scale_rat(&term, &ratio(-(k as i64), n as i64)));
        }
        l.push(acc);
    }
    Ok(FormalSeries::new(l))
}
