//! Rational functions in `v` over the rationals, kept in canonical form.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1`, `den` a polynomial in `v` with
/// nonzero constant term equal to 1. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl RatFun {
    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n).into()
    }

    pub fn from_rational(c: BigRational) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn v_pow(k: i32) -> Self {
        LaurentPoly::v_pow(k).into()
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Move all v-powers of the denominator into the numerator.
        let dlo = den.min_exp().unwrap();
        let mut den = den.shift(-dlo);
        let mut num = num.shift(-dlo);
        if den.max_exp() != Some(0) {
            let nlo = num.min_exp().unwrap();
            let npoly = num.shift(-nlo);
            let g = LaurentPoly::poly_gcd(&npoly, &den);
            if g.max_exp() != Some(0) {
                num = npoly.poly_divrem(&g).0.shift(nlo);
                den = den.poly_divrem(&g).0;
            }
        }
        let c = den.lowest_coeff().unwrap().recip();
        Self {
            num: num.scale(&c),
            den: den.scale(&c),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalize(&self.num + &o.num, self.den.clone());
        }
        Self::normalize(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return (&self.num * &o.num).into();
        }
        Self::normalize(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().div(self)
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// True when the value is a Laurent polynomial with integer coefficients.
    pub fn is_integral_laurent(&self) -> bool {
        self.den.is_one() && self.num.has_integer_coeffs()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// `[n] = (v^n - v^{-n}) / (v - v^{-1})`, as a Laurent polynomial.
pub fn quantum_int(n: i64) -> RatFun {
    let m = n.unsigned_abs() as i32;
    let mut p = LaurentPoly::zero();
    let mut k = -(m - 1);
    while k <= m - 1 {
        p.add_term(k, BigRational::one());
        k += 2;
    }
    if n < 0 {
        p = -&p;
    }
    p.into()
}

/// `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: u32) -> RatFun {
    (1..=n as i64).fold(RatFun::one(), |acc, k| acc.mul(&quantum_int(k)))
}

/// `v - v^{-1}`
pub fn v_minus_vinv() -> RatFun {
    RatFun::v_pow(1).sub(&RatFun::v_pow(-1))
}
