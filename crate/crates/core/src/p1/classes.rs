//! The P¹ side: K-group with the half-degree extension, sheaf descriptors and
//! their transport to Kronecker representations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fq::ClosedPoint;
use crate::kronrep::{IsoClass, KClass};

/// `(rank, degree)` with the degree stored doubled, so `C^{1/2}` is `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct P1Class {
    pub rank: i64,
    pub deg2: i64,
}

impl P1Class {
    pub fn new(rank: i64, deg: i64) -> Self {
        Self { rank, deg2: 2 * deg }
    }

    /// `C^{k/2}` as a class.
    pub fn half_delta(k: i64) -> Self {
        Self { rank: 0, deg2: k }
    }

    pub fn is_integral(&self) -> bool {
        self.deg2 % 2 == 0
    }

    /// Kronecker K-class: `(rk, deg) -> (deg, rk + deg)`.
    pub fn to_kclass(self) -> KClass {
        KClass::from_halves(self.deg2, 2 * self.rank + self.deg2)
    }

    /// Euler form `r1 r2 + r1 d2 - r2 d1` on integral classes.
    pub fn euler(a: P1Class, b: P1Class) -> i64 {
        assert!(a.is_integral() && b.is_integral());
        a.rank * b.rank + a.rank * b.deg2 / 2 - b.rank * a.deg2 / 2
    }
}

impl std::ops::Add for P1Class {
    type Output = P1Class;
    fn add(self, o: Self) -> Self {
        Self { rank: self.rank + o.rank, deg2: self.deg2 + o.deg2 }
    }
}

impl std::ops::Neg for P1Class {
    type Output = P1Class;
    fn neg(self) -> Self {
        Self { rank: -self.rank, deg2: -self.deg2 }
    }
}

impl fmt::Display for P1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "({}, {})", self.rank, self.deg2 / 2)
        } else {
            write!(f, "({}, {}/2)", self.rank, self.deg2)
        }
    }
}

/// A coherent sheaf on P¹ up to isomorphism: line bundle multiplicities and
/// a partition of torsion lengths at each closed point.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sheaf {
    pub line_bundles: BTreeMap<i64, u32>,
    pub torsion: BTreeMap<ClosedPoint, Vec<u32>>,
}

impl Sheaf {
    /// `O(n)`
    pub fn line_bundle(n: i64) -> Self {
        let mut s = Self::default();
        s.line_bundles.insert(n, 1);
        s
    }

    /// `S_{t,x} = O / m_x^t`
    pub fn torsion(x: ClosedPoint, t: u32) -> Self {
        let mut s = Self::default();
        s.torsion.insert(x, vec![t]);
        s
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (n, m) in &o.line_bundles {
            *s.line_bundles.entry(*n).or_insert(0) += m;
        }
        for (x, part) in &o.torsion {
            let e = s.torsion.entry(x.clone()).or_default();
            e.extend(part);
            e.sort_by(|a, b| b.cmp(a));
        }
        s
    }

    pub fn class(&self) -> P1Class {
        let mut c = P1Class::new(0, 0);
        for (n, m) in &self.line_bundles {
            c = c + P1Class::new(*m as i64, *m as i64 * n);
        }
        for (x, part) in &self.torsion {
            let len: u32 = part.iter().sum();
            c = c + P1Class::new(0, (len as usize * x.degree()) as i64);
        }
        c
    }
}

/// Image of a sheaf in the Kronecker double. The `+` copy goes to
/// `v^{v_power} [class]^+` (or `v^{v_power} [class]^- K_{twist}` when
/// `shifted`); the `-` copy to the mirror image with `K_{-twist}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transport {
    pub class: IsoClass,
    pub shifted: bool,
    pub twist: KClass,
    pub v_power: i32,
}

/// Transport along the tilting equivalence. Line bundles of negative degree
/// land in shifted preinjectives; a sum must not mix shifted and unshifted
/// summands.
pub fn obj_transport(s: &Sheaf) -> Result<Transport> {
    let mut pos = IsoClass::zero();
    let mut neg = IsoClass::zero();
    for (&n, &m) in &s.line_bundles {
        if n >= 0 {
            pos = pos.direct_sum(&IsoClass::preproj(n as u32).power(m));
        } else {
            neg = neg.direct_sum(&IsoClass::preinj((-n - 1) as u32).power(m));
        }
    }
    for (x, part) in &s.torsion {
        let mut c = IsoClass::zero();
        c.r.insert(x.clone(), part.clone());
        pos = pos.direct_sum(&c);
    }
    match (pos.is_zero(), neg.is_zero()) {
        (_, true) => Ok(Transport { class: pos, shifted: false, twist: KClass::zero(), v_power: 0 }),
        (true, false) => {
            let twist = neg.class();
            let v_power = crate::kronrep::euler_form(neg.class(), neg.class()) as i32;
            Ok(Transport { class: neg, shifted: true, twist, v_power })
        }
        (false, false) => Err(Error::Invalid(
            "sheaf mixes summands of negative and nonnegative degree".into(),
        )),
    }
}
