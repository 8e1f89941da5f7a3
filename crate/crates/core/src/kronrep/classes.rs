//! Dimension vectors and Grothendieck-group classes.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

/// Dimensions at vertices 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct DimVec {
    pub d1: u32,
    pub d2: u32,
}

impl DimVec {
    pub const fn new(d1: u32, d2: u32) -> Self {
        Self { d1, d2 }
    }

    pub fn total(&self) -> u32 {
        self.d1 + self.d2
    }

    pub fn is_zero(&self) -> bool {
        self.d1 == 0 && self.d2 == 0
    }

    /// Componentwise `self <= o`.
    pub fn le(&self, o: &Self) -> bool {
        self.d1 <= o.d1 && self.d2 <= o.d2
    }

    pub fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(Self::new(self.d1.checked_sub(o.d1)?, self.d2.checked_sub(o.d2)?))
    }

    pub fn class(&self) -> KClass {
        KClass::new(self.d1 as i64, self.d2 as i64)
    }

    /// All `e` with `0 <= e <= self` componentwise.
    pub fn below(&self) -> impl Iterator<Item = DimVec> + '_ {
        (0..=self.d1).flat_map(move |a| (0..=self.d2).map(move |b| DimVec::new(a, b)))
    }
}

impl Add for DimVec {
    type Output = DimVec;
    fn add(self, o: DimVec) -> DimVec {
        DimVec::new(self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// A class in the Grothendieck group, in the basis of the two simples.
/// Coordinates are stored doubled so that half-integral classes, such as a
/// square root of the null root, are representable; both doubled
/// coordinates always have the same parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KClass {
    h1: i64,
    h2: i64,
}

impl KClass {
    pub const fn new(a1: i64, a2: i64) -> Self {
        Self { h1: 2 * a1, h2: 2 * a2 }
    }

    pub const fn zero() -> Self {
        Self { h1: 0, h2: 0 }
    }

    /// Class `(h1/2, h2/2)`.
    pub fn from_halves(h1: i64, h2: i64) -> Self {
        assert!((h1 - h2).rem_euclid(2) == 0, "half class with mixed parity");
        Self { h1, h2 }
    }

    pub fn halves(&self) -> (i64, i64) {
        (self.h1, self.h2)
    }

    pub fn is_integral(&self) -> bool {
        self.h1 % 2 == 0
    }

    /// Integral coordinates; panics on a half-integral class.
    pub fn coords(&self) -> (i64, i64) {
        assert!(self.is_integral(), "half-integral class has no integral coordinates");
        (self.h1 / 2, self.h2 / 2)
    }

    pub fn is_zero(&self) -> bool {
        self.h1 == 0 && self.h2 == 0
    }

    pub fn scale(&self, n: i64) -> Self {
        Self::from_halves(self.h1 * n, self.h2 * n)
    }
}

impl Add for KClass {
    type Output = KClass;
    fn add(self, o: KClass) -> KClass {
        KClass { h1: self.h1 + o.h1, h2: self.h2 + o.h2 }
    }
}

impl Sub for KClass {
    type Output = KClass;
    fn sub(self, o: KClass) -> KClass {
        KClass { h1: self.h1 - o.h1, h2: self.h2 - o.h2 }
    }
}

impl Neg for KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass { h1: -self.h1, h2: -self.h2 }
    }
}

impl From<DimVec> for KClass {
    fn from(d: DimVec) -> Self {
        d.class()
    }
}

fn half_str(h: i64) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{h}/2")
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", half_str(self.h1), half_str(self.h2))
    }
}

impl Serialize for KClass {
    /// Integral coordinates as numbers, halves as `"p/2"` strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = [self.h1, self.h2]
            .iter()
            .map(|&h| {
                if h % 2 == 0 {
                    serde_json::Value::from(h / 2)
                } else {
                    serde_json::Value::from(format!("{h}/2"))
                }
            })
            .collect();
        v.serialize(s)
    }
}

impl KClass {
    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let arr = v.as_array()?;
        if arr.len() != 2 {
            return None;
        }
        let mut h = [0i64; 2];
        for (i, x) in arr.iter().enumerate() {
            h[i] = if let Some(n) = x.as_i64() {
                2 * n
            } else {
                let s = x.as_str()?;
                let (p, d) = s.split_once('/')?;
                if d.trim() != "2" {
                    return None;
                }
                p.trim().parse().ok()?
            };
        }
        if (h[0] - h[1]).rem_euclid(2) != 0 {
            return None;
        }
        Some(Self::from_halves(h[0], h[1]))
    }
}

/// `<a, b> = a1 b1 + a2 b2 - 2 a1 b2` on integral classes.
pub fn euler_form(a: KClass, b: KClass) -> i64 {
    let (a1, a2) = a.coords();
    let (b1, b2) = b.coords();
    a1 * b1 + a2 * b2 - 2 * a1 * b2
}

/// `(a, b) = <a, b> + <b, a> = 2 (a1 - a2)(b1 - b2)`; always an integer
/// on classes with matching parity.
pub fn sym_form(a: KClass, b: KClass) -> i64 {
    let (a1, a2) = a.halves();
    let (b1, b2) = b.halves();
    (a1 - a2) * (b1 - b2) / 2
}

pub fn euler_dims(a: DimVec, b: DimVec) -> i64 {
    euler_form(a.class(), b.class())
}
