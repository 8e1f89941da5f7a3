//! Univariate polynomials over a prime field, irreducibles and closed points.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::Mutex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{add_mod, inv_mod, mul_mod, neg_mod};

/// Coefficients low-to-high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqPoly {
    coeffs: Vec<u8>,
    q: u32,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<u8>, q: u32) -> Self {
        for c in coeffs.iter_mut() {
            *c = (*c as u32 % q) as u8;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs, q }
    }

    pub fn zero(q: u32) -> Self {
        Self::new(vec![], q)
    }

    pub fn one(q: u32) -> Self {
        Self::new(vec![1], q)
    }

    /// The monomial `y`.
    pub fn y(q: u32) -> Self {
        Self::new(vec![0, 1], q)
    }

    pub fn constant(c: u8, q: u32) -> Self {
        Self::new(vec![c], q)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u8 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                add_mod(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *o.coeffs.get(i).unwrap_or(&0),
                    self.q,
                )
            })
            .collect();
        Self::new(c, self.q)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|&c| neg_mod(c, self.q)).collect(), self.q)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.q);
        }
        let mut c = vec![0u32; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] += a as u32 * b as u32;
            }
        }
        Self::new(c.into_iter().map(|x| (x % self.q) as u8).collect(), self.q)
    }

    pub fn scale(&self, s: u8) -> Self {
        Self::new(self.coeffs.iter().map(|&c| mul_mod(c, s, self.q)).collect(), self.q)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.q), |acc, _| acc.mul(self))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lead(), self.q))
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let q = self.q;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.lead(), q);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(q), self.clone());
        }
        let mut quo = vec![0u8; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = mul_mod(r[i], inv, q);
            if c == 0 {
                continue;
            }
            quo[i - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                r[k] = add_mod(r[k], neg_mod(mul_mod(c, dc, q), q), q);
            }
        }
        (Self::new(quo, q), Self::new(r, q))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: u8) -> u8 {
        let mut acc = 0u8;
        for &c in self.coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, self.q), c, self.q);
        }
        acc
    }

    /// Factorization into monic irreducibles with multiplicities, by trial
    /// division; the leading coefficient is dropped.
    pub fn factor(&self) -> Vec<(FqPoly, u32)> {
        let q = self.q;
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            for p in irreducibles(d, q).iter() {
                let mut m = 0;
                loop {
                    let (quo, r) = rest.divrem(p);
                    if !r.is_zero() {
                        break;
                    }
                    rest = quo;
                    m += 1;
                }
                if m > 0 {
                    out.push((p.clone(), m));
                }
                if rest.degree().unwrap_or(0) < 2 * d {
                    break;
                }
            }
            d += 1;
        }
        if rest.degree().unwrap_or(0) >= 1 {
            match out.iter_mut().find(|(p, _)| *p == rest) {
                Some(e) => e.1 += 1,
                None => out.push((rest, 1)),
            }
        }
        out.sort();
        out
    }

    /// Companion matrix rows (multiplication by `y` on `F_q[y]/(self)`),
    /// for a monic polynomial of positive degree.
    pub fn companion(&self) -> Vec<Vec<u8>> {
        let n = self.degree().unwrap();
        let mut m = vec![vec![0u8; n]; n];
        for i in 1..n {
            m[i][i - 1] = 1;
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[n - 1] = neg_mod(self.coeffs[i], self.q);
        }
        m
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

type IrrCache = HashMap<(usize, u32), Arc<Vec<FqPoly>>>;
static IRREDUCIBLES: Lazy<Mutex<IrrCache>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// All monic irreducible polynomials of degree `d` over `F_q`, sorted.
pub fn irreducibles(d: usize, q: u32) -> Arc<Vec<FqPoly>> {
    assert!(d >= 1);
    if let Some(v) = IRREDUCIBLES.lock().get(&(d, q)) {
        return v.clone();
    }
    let smaller: Vec<Arc<Vec<FqPoly>>> = (1..=d / 2).map(|e| irreducibles(e, q)).collect();
    let mut out = Vec::new();
    let total = (q as usize).pow(d as u32);
    for idx in 0..total {
        let mut c = Vec::with_capacity(d + 1);
        let mut x = idx;
        for _ in 0..d {
            c.push((x % q as usize) as u8);
            x /= q as usize;
        }
        c.push(1);
        let p = FqPoly::new(c, q);
        let reducible = smaller
            .iter()
            .any(|list| list.iter().any(|f| p.rem(f).is_zero()));
        if !reducible {
            out.push(p);
        }
    }
    out.sort();
    let out = Arc::new(out);
    IRREDUCIBLES.lock().insert((d, q), out.clone());
    out
}

/// A closed point of the projective line over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedPoint {
    Infinity,
    Finite(FqPoly),
}

impl ClosedPoint {
    pub fn degree(&self) -> usize {
        match self {
            ClosedPoint::Infinity => 1,
            ClosedPoint::Finite(p) => p.degree().unwrap(),
        }
    }

    /// All closed points of degree `d`, Infinity first.
    pub fn all_of_degree(d: usize, q: u32) -> Vec<ClosedPoint> {
        let mut out = Vec::new();
        if d == 1 {
            out.push(ClosedPoint::Infinity);
        }
        out.extend(irreducibles(d, q).iter().cloned().map(ClosedPoint::Finite));
        out
    }
}

impl fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedPoint::Infinity => write!(f, "inf"),
            ClosedPoint::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// JSON form: `"inf"` or the coefficient list; `q` comes from context.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum PointJson {
    Inf(String),
    Coeffs(Vec<u8>),
}

impl Serialize for ClosedPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClosedPoint::Infinity => "inf".serialize(s),
            ClosedPoint::Finite(p) => p.coeffs.serialize(s),
        }
    }
}

impl ClosedPoint {
    pub(crate) fn from_json<'de, D: Deserializer<'de>>(
        d: D,
        q: u32,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match PointJson::deserialize(d)? {
            PointJson::Inf(s) if s == "inf" => Ok(ClosedPoint::Infinity),
            PointJson::Inf(s) => Err(D::Error::custom(format!("bad point {s}"))),
            PointJson::Coeffs(c) => Ok(ClosedPoint::Finite(FqPoly::new(c, q))),
        }
    }
}

/// Number of closed points of degree `d` on the projective line over `F_q`.
pub fn point_census(d: usize, q: u32) -> usize {
    irreducibles(d, q).len() + usize::from(d == 1)
}
