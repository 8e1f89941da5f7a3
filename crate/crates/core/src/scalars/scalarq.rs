//! Elements `a + b*sqrt(q)` of the quadratic ring over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{fmt_rational, LaurentPoly};
use super::ratfun::RatFun;
use crate::error::{Error, Result};

/// `a + b*sqrt(q)`; `v` specializes to `sqrt(q)/q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    pub a: BigRational,
    pub b: BigRational,
    pub q: u32,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ScalarQ {
    pub fn new(a: BigRational, b: BigRational, q: u32) -> Self {
        Self { a, b, q }
    }

    pub fn zero(q: u32) -> Self {
        Self::new(BigRational::zero(), BigRational::zero(), q)
    }

    pub fn one(q: u32) -> Self {
        Self::from_rational(BigRational::one(), q)
    }

    pub fn from_int(n: i64, q: u32) -> Self {
        Self::from_rational(rat(n), q)
    }

    pub fn from_rational(a: BigRational, q: u32) -> Self {
        Self::new(a, BigRational::zero(), q)
    }

    /// Specialized `v^k = q^{-k/2}`.
    pub fn v_pow(k: i32, q: u32) -> Self {
        let qb = BigInt::from(q);
        // v^k = q^{-k/2}; write -k = 2m + e with e in {0, 1}.
        let (m, e) = (-k).div_mod_floor(&2);
        let mag = if m >= 0 {
            BigRational::from_integer(num_traits::pow(qb, m as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(qb, (-m) as usize))
        };
        if e == 0 {
            Self::from_rational(mag, q)
        } else {
            Self::new(BigRational::zero(), mag, q)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.q, o.q, "mixed q in scalar arithmetic");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(&self.a + &o.a, &self.b + &o.b, self.q)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(&self.a - &o.a, &self.b - &o.b, self.q)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.a.clone(), -self.b.clone(), self.q)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let qr = rat(self.q as i64);
        let a = &self.a * &o.a + &self.b * &o.b * qr;
        let b = &self.a * &o.b + &self.b * &o.a;
        Self::new(a, b, self.q)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.a * c, &self.b * c, self.q)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), self.q)
    }

    /// `a^2 - q b^2`, nonzero unless the element is zero since `q` is prime.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(self.q as i64)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm().recip();
        Ok(self.conj().scale(&n))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one(self.q);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Multiply by specialized `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.mul(&Self::v_pow(k, self.q))
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}*sqrt({})", fmt_rational(&self.b), self.q),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "{} {} {}*sqrt({})",
                    fmt_rational(&self.a),
                    sign,
                    fmt_rational(&self.b.abs()),
                    self.q
                )
            }
        }
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarQJson {
    a: String,
    b: String,
    q: u32,
}

impl Serialize for ScalarQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarQJson {
            a: fmt_rational(&self.a),
            b: fmt_rational(&self.b),
            q: self.q,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ScalarQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ScalarQJson::deserialize(d)?;
        let a = parse_rational(&j.a).ok_or_else(|| D::Error::custom("bad rational a"))?;
        let b = parse_rational(&j.b).ok_or_else(|| D::Error::custom("bad rational b"))?;
        Ok(ScalarQ::new(a, b, j.q))
    }
}

fn eval_laurent(p: &LaurentPoly, q: u32) -> ScalarQ {
    let mut out = ScalarQ::zero(q);
    for (k, c) in p.terms() {
        out = out.add(&ScalarQ::v_pow(k, q).scale(c));
    }
    out
}

/// Evaluate at `v = q^{-1/2}`.
pub fn specialize(f: &RatFun, q: u32) -> Result<ScalarQ> {
    let den = eval_laurent(f.denom(), q);
    if den.is_zero() {
        return Err(Error::SpecializationPole { q });
    }
    eval_laurent(f.numer(), q).div(&den)
}
