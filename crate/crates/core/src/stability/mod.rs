//! Stability functions on dimension vectors, the Harder–Narasimhan
//! recursion and Reineke's closed formula for semistable characteristic
//! elements.
//!
//! Products are written quotient first, so in `1_{b_1} ∘ ... ∘ 1_{b_t}` the
//! rightmost factor is the subobject. A Harder–Narasimhan chain therefore
//! appears with slopes increasing from left to right.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hall::{one_alpha, HallElement};
use crate::kronrep::{canonical_rep, enumerate_iso_classes, euler_dims, for_each_subrep, DimVec, IsoClass};
use crate::scalars::ScalarQ;

/// `Z(d) = a·d + i b·d` with integer linear forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StabilityFunction {
    pub a: (i64, i64),
    pub b: (i64, i64),
}

impl StabilityFunction {
    pub fn new(a: (i64, i64), b: (i64, i64)) -> Result<Self> {
        if b.0 <= 0 || b.1 <= 0 {
            return Err(Error::Invalid(format!(
                "stability ({},{}),({},{}) does not map both simples to the upper half plane",
                a.0, a.1, b.0, b.1
            )));
        }
        Ok(Self { a, b })
    }

    /// `mu(d) = -(a·d) / (b·d)`; `d` must be nonzero.
    pub fn slope(&self, d: DimVec) -> Ratio<i64> {
        let (x, y) = (d.d1 as i64, d.d2 as i64);
        Ratio::new(-(self.a.0 * x + self.a.1 * y), self.b.0 * x + self.b.1 * y)
    }
}

impl fmt::Display for StabilityFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a=({},{}) b=({},{})", self.a.0, self.a.1, self.b.0, self.b.1)
    }
}

/// `Z(m, n) = -m + i(m + n)`, so `mu(m, n) = m / (m + n)`.
pub fn default_stability() -> StabilityFunction {
    StabilityFunction { a: (-1, 0), b: (1, 1) }
}

/// Whether consecutive Harder–Narasimhan slopes must differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HnOrder {
    Strict,
    NonStrict,
}

/// One Harder–Narasimhan stratum: factor classes in product order with the
/// product of their semistable elements.
#[derive(Clone, Debug)]
pub struct HNDecomposition {
    pub parts: Vec<(DimVec, HallElement)>,
}

/// Ordered decompositions of `alpha` into nonzero parts, visited with the
/// parts listed in product order.
fn compositions(alpha: DimVec, f: &mut dyn FnMut(&[DimVec])) {
    fn go(rest: DimVec, acc: &mut Vec<DimVec>, f: &mut dyn FnMut(&[DimVec])) {
        if rest.is_zero() {
            f(acc);
            return;
        }
        for b in rest.below() {
            if b.is_zero() {
                continue;
            }
            acc.push(b);
            go(rest.checked_sub(&b).unwrap(), acc, f);
            acc.pop();
        }
    }
    go(alpha, &mut Vec::new(), f);
}

/// `v^{sum_{i<j} <b_i, b_j>}`, which cancels the twist of the product.
fn untwist(parts: &[DimVec], q: u32) -> ScalarQ {
    let mut e = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            e += euler_dims(parts[i], parts[j]);
        }
    }
    ScalarQ::v_pow(e as i32, q)
}

fn product_of(parts: &[HallElement], q: u32) -> Result<HallElement> {
    let mut acc = HallElement::one(q);
    for p in parts {
        acc = acc.mul(p)?;
    }
    Ok(acc)
}

struct Hn<'a> {
    z: &'a StabilityFunction,
    order: HnOrder,
    q: u32,
    memo: HashMap<DimVec, HallElement>,
}

impl Hn<'_> {
    fn admissible(&self, parts: &[DimVec]) -> bool {
        parts.windows(2).all(|w| {
            let (a, b) = (self.z.slope(w[0]), self.z.slope(w[1]));
            match self.order {
                HnOrder::Strict => a < b,
                HnOrder::NonStrict => a <= b,
            }
        })
    }

    fn strata(&mut self, alpha: DimVec) -> Result<Vec<HNDecomposition>> {
        let mut types = Vec::new();
        compositions(alpha, &mut |p| {
            if p.len() >= 2 {
                types.push(p.to_vec());
            }
        });
        let mut out = Vec::new();
        for t in types {
            if !self.admissible(&t) {
                continue;
            }
            let mut parts = Vec::with_capacity(t.len());
            for b in &t {
                parts.push((*b, self.semistable(*b)?));
            }
            out.push(HNDecomposition { parts });
        }
        Ok(out)
    }

    fn semistable(&mut self, alpha: DimVec) -> Result<HallElement> {
        if let Some(e) = self.memo.get(&alpha) {
            return Ok(e.clone());
        }
        let mut out = one_alpha(alpha, self.q);
        for s in self.strata(alpha)? {
            let dims: Vec<DimVec> = s.parts.iter().map(|(d, _)| *d).collect();
            let elems: Vec<HallElement> = s.parts.into_iter().map(|(_, e)| e).collect();
            let term = product_of(&elems, self.q)?.scale(&untwist(&dims, self.q));
            out = out.sub(&term);
        }
        self.memo.insert(alpha, out.clone());
        Ok(out)
    }
}

/// `1^ss_alpha` from `1_alpha` by subtracting every Harder–Narasimhan
/// stratum with at least two factors.
pub fn hn_semistable(alpha: DimVec, z: &StabilityFunction, q: u32) -> Result<HallElement> {
    hn_semistable_with(alpha, z, q, HnOrder::Strict)
}

pub fn hn_semistable_with(alpha: DimVec, z: &StabilityFunction, q: u32, order: HnOrder) -> Result<HallElement> {
    Hn { z, order, q, memo: HashMap::new() }.semistable(alpha)
}

/// The strata subtracted from `1_alpha` in the recursion.
pub fn hn_strata(alpha: DimVec, z: &StabilityFunction, q: u32) -> Result<Vec<HNDecomposition>> {
    Hn { z, order: HnOrder::Strict, q, memo: HashMap::new() }.strata(alpha)
}

/// Decompositions `b_1 + ... + b_t = alpha` (product order) whose every
/// proper subobject part `b_{s+1} + ... + b_t` has slope above `mu(alpha)`.
pub fn reineke_terms(alpha: DimVec, z: &StabilityFunction) -> Vec<Vec<DimVec>> {
    let mu = z.slope(alpha);
    let mut out = Vec::new();
    compositions(alpha, &mut |p| {
        let mut tail = DimVec::default();
        let ok = (1..p.len()).rev().all(|s| {
            tail = tail + p[s];
            z.slope(tail) > mu
        });
        if ok {
            out.push(p.to_vec());
        }
    });
    out
}

/// Reineke's formula
/// `1^ss_alpha = sum_t (-1)^{t-1} sum v^{sum_{i<j} <b_i,b_j>} 1_{b_1} ∘ ... ∘ 1_{b_t}`.
pub fn reineke_semistable(alpha: DimVec, z: &StabilityFunction, q: u32) -> Result<HallElement> {
    let mut out = HallElement::zero(q);
    let mut ones: HashMap<DimVec, HallElement> = HashMap::new();
    for p in reineke_terms(alpha, z) {
        let elems: Vec<HallElement> = p
            .iter()
            .map(|b| ones.entry(*b).or_insert_with(|| one_alpha(*b, q)).clone())
            .collect();
        let mut term = product_of(&elems, q)?.scale(&untwist(&p, q));
        if p.len() % 2 == 0 {
            term = term.neg();
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Whether no subrepresentation of `x` has slope strictly above `mu(x)`,
/// by enumerating subrepresentations.
pub fn is_semistable_brute(x: &IsoClass, z: &StabilityFunction, q: u32) -> bool {
    let alpha = x.dim();
    let mu = z.slope(alpha);
    let r = canonical_rep(x, q);
    for d in alpha.below() {
        if d.is_zero() || d == alpha || z.slope(d) <= mu {
            continue;
        }
        let mut found = false;
        for_each_subrep(&r, d, &mut |_, _| found = true);
        if found {
            return false;
        }
    }
    true
}

/// Sum of the classes of dimension `alpha` passing the brute-force test.
pub fn brute_semistable(alpha: DimVec, z: &StabilityFunction, q: u32) -> HallElement {
    let mut out = HallElement::zero(q);
    for x in enumerate_iso_classes(alpha, q) {
        if is_semistable_brute(&x, z, q) {
            out = out.add(&HallElement::class(x, q));
        }
    }
    out
}
