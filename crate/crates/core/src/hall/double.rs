//! The reduced Drinfeld double in triangular normal form
//! `[X]^+ K_alpha [Y]^-`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::element::{coproduct_slice, HallElement};
use super::structure::{aut, product};
use crate::error::{Error, Result};
use crate::kronrep::{euler_dims, sym_form, DimVec, IsoClass, KClass};
use crate::scalars::ScalarQ;

type Key = (IsoClass, KClass, IsoClass);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleElement {
    q: u32,
    terms: BTreeMap<Key, ScalarQ>,
}

impl DoubleElement {
    pub fn zero(q: u32) -> Self {
        Self {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(q: u32) -> Self {
        Self::k(KClass::zero(), q)
    }

    pub fn k(alpha: KClass, q: u32) -> Self {
        Self::term(IsoClass::zero(), alpha, IsoClass::zero(), ScalarQ::one(q))
    }

    pub fn term(plus: IsoClass, k: KClass, minus: IsoClass, c: ScalarQ) -> Self {
        let mut e = Self::zero(c.q);
        e.add_term(plus, k, minus, c);
        e
    }

    /// `[X]^+`
    pub fn plus_class(x: IsoClass, q: u32) -> Self {
        Self::term(x, KClass::zero(), IsoClass::zero(), ScalarQ::one(q))
    }

    /// `[X]^-`
    pub fn minus_class(x: IsoClass, q: u32) -> Self {
        Self::term(IsoClass::zero(), KClass::zero(), x, ScalarQ::one(q))
    }

    /// Embedding of the positive half: `[X] K_a ↦ [X]^+ K_a`.
    pub fn plus(h: &HallElement) -> Self {
        let mut out = Self::zero(h.q());
        for (x, k, c) in h.terms() {
            out.add_term(x.clone(), *k, IsoClass::zero(), c.clone());
        }
        out
    }

    /// Embedding of the negative half:
    /// `([X] K_a)^- = [X]^- K_{-a} = v^{(a,X)} K_{-a} [X]^-`.
    pub fn minus(h: &HallElement) -> Self {
        let mut out = Self::zero(h.q());
        for (x, k, c) in h.terms() {
            let tw = sym_form(*k, x.class()) as i32;
            out.add_term(IsoClass::zero(), -*k, x.clone(), c.shift(tw));
        }
        out
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IsoClass, &KClass, &IsoClass, &ScalarQ)> {
        self.terms.iter().map(|((p, k, m), c)| (p, k, m, c))
    }

    pub fn coeff(&self, p: &IsoClass, k: &KClass, m: &IsoClass) -> ScalarQ {
        self.terms
            .get(&(p.clone(), *k, m.clone()))
            .cloned()
            .unwrap_or_else(|| ScalarQ::zero(self.q))
    }

    pub fn add_term(&mut self, p: IsoClass, k: KClass, m: IsoClass, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        let key = (p, k, m);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((p, k, m), c) in &o.terms {
            out.add_term(p.clone(), *k, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&ScalarQ::from_int(-1, self.q))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let mut out = Self::zero(self.q);
        for ((p, k, m), d) in &self.terms {
            out.add_term(p.clone(), *k, m.clone(), d.mul(c));
        }
        out
    }

    pub fn shift(&self, k: i32) -> Self {
        self.scale(&ScalarQ::v_pow(k, self.q))
    }

    /// Right multiplication by `K_h`: `[P]^+ K_g [M]^- K_h = v^{-(h,M)} [P]^+ K_{g+h} [M]^-`.
    pub fn mul_k_right(&self, h: KClass) -> Self {
        let mut out = Self::zero(self.q);
        for ((p, k, m), c) in &self.terms {
            let tw = -sym_form(h, m.class()) as i32;
            out.add_term(p.clone(), *k + h, m.clone(), c.shift(tw));
        }
        out
    }

    /// Left multiplication by `K_h`: `K_h [P]^+ K_g [M]^- = v^{-(h,P)} [P]^+ K_{h+g} [M]^-`.
    pub fn mul_k_left(&self, h: KClass) -> Self {
        let mut out = Self::zero(self.q);
        for ((p, k, m), c) in &self.terms {
            let tw = -sym_form(h, p.class()) as i32;
            out.add_term(p.clone(), *k + h, m.clone(), c.shift(tw));
        }
        out
    }

    /// Product in the double, straightening every `[Y]^- [X]^+`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        let q = self.q;
        let mut out = Self::zero(q);
        for ((x1, a, y1), c1) in &self.terms {
            for ((x2, b, y2), c2) in &o.terms {
                let c = c1.mul(c2);
                let st = straighten(y1, x2, q)?;
                for ((p, g, m), c3) in &st.terms {
                    let tw = -sym_form(*a, p.class()) - sym_form(*b, m.class());
                    let coeff = c.mul(c3).shift(tw as i32);
                    let kk = *a + *g + *b;
                    let plus = class_product(x1, p, q)?;
                    let minus = class_product(m, y2, q)?;
                    for (zp, cp) in &plus {
                        let cpp = coeff.mul(cp);
                        for (zm, cm) in &minus {
                            out.add_term(zp.clone(), kk, zm.clone(), cpp.mul(cm));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::one(self.q);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Parts of the form `x^+ K_a` (no negative part).
    pub fn plus_part(&self) -> HallElement {
        let mut out = HallElement::zero(self.q);
        for ((p, k, m), c) in &self.terms {
            if m.is_zero() {
                out.add_term(p.clone(), *k, c.clone());
            }
        }
        out
    }
}

/// `a b - b a`
pub fn dbracket(a: &DoubleElement, b: &DoubleElement) -> Result<DoubleElement> {
    Ok(a.mul(b)?.sub(&b.mul(a)?))
}

pub fn dmul(a: &DoubleElement, b: &DoubleElement) -> Result<DoubleElement> {
    a.mul(b)
}

/// `[X] ∘ [Y]` as `(Z, v^{-<X,Y>} F^Z_{X,Y})` pairs.
fn class_product(x: &IsoClass, y: &IsoClass, q: u32) -> Result<Vec<(IsoClass, ScalarQ)>> {
    if x.is_zero() {
        return Ok(vec![(y.clone(), ScalarQ::one(q))]);
    }
    if y.is_zero() {
        return Ok(vec![(x.clone(), ScalarQ::one(q))]);
    }
    let tw = -euler_dims(x.dim(), y.dim()) as i32;
    Ok(product(x, y, q)?
        .iter()
        .map(|(z, f)| {
            (
                z.clone(),
                ScalarQ::from_rational(BigRational::from_integer(f.clone()), q).shift(tw),
            )
        })
        .collect())
}

type StraightenKey = (IsoClass, IsoClass, u32);
static STRAIGHTEN: Lazy<Mutex<HashMap<StraightenKey, Arc<DoubleElement>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn min_dim(a: DimVec, b: DimVec) -> DimVec {
    DimVec::new(a.d1.min(b.d1), a.d2.min(b.d2))
}

/// Triangular normal form of `[Y]^- [X]^+`, derived from the double
/// relation for the pair `([Y], [X])` using the coproduct and the pairing.
pub fn straighten(y: &IsoClass, x: &IsoClass, q: u32) -> Result<Arc<DoubleElement>> {
    if y.is_zero() || x.is_zero() {
        return Ok(Arc::new(DoubleElement::term(
            x.clone(),
            KClass::zero(),
            y.clone(),
            ScalarQ::one(q),
        )));
    }
    let key = (y.clone(), x.clone(), q);
    if let Some(s) = STRAIGHTEN.lock().get(&key) {
        return Ok(s.clone());
    }
    let out = Arc::new(compute_straighten(y, x, q)?);
    STRAIGHTEN.lock().insert(key, out.clone());
    Ok(out)
}

fn inv_aut(u: &IsoClass, q: u32) -> ScalarQ {
    ScalarQ::from_rational(BigRational::new(BigInt::from(1), aut(u, q)), q)
}

fn compute_straighten(y: &IsoClass, x: &IsoClass, q: u32) -> Result<DoubleElement> {
    let (dx, dy) = (x.dim(), y.dim());
    let top = min_dim(dx, dy);
    let mut out = DoubleElement::zero(q);
    // sum_U c^X_{X1,U} c^Y_{U,Y2} / a_U [X1]^+ K_U [Y2]^-
    for u in top.below() {
        let xs = coproduct_slice(x, u, q)?;
        let dy2 = dy.checked_sub(&u).ok_or(Error::Invalid("slice".into()))?;
        let ys = coproduct_slice(y, dy2, q)?;
        let mut by_quot: HashMap<&IsoClass, Vec<(&IsoClass, &ScalarQ)>> = HashMap::new();
        for (yq, ysub, c) in &ys {
            by_quot.entry(yq).or_default().push((ysub, c));
        }
        for (x1, uu, cx) in &xs {
            let Some(list) = by_quot.get(uu) else { continue };
            let base = cx.mul(&inv_aut(uu, q));
            for (y2, cy) in list {
                out.add_term(x1.clone(), uu.class(), (*y2).clone(), base.mul(cy));
            }
        }
    }
    // minus sum_{W != 0} c^Y_{Y1,W} c^X_{W,X2} / a_W v^{(W,X2)} ([Y1]^-[X2]^+) K_{-W}
    for w in top.below() {
        if w.is_zero() {
            continue;
        }
        let ys = coproduct_slice(y, w, q)?;
        let dx2 = dx.checked_sub(&w).ok_or(Error::Invalid("slice".into()))?;
        let xs = coproduct_slice(x, dx2, q)?;
        let mut by_quot: HashMap<&IsoClass, Vec<(&IsoClass, &ScalarQ)>> = HashMap::new();
        for (xq, xsub, c) in &xs {
            by_quot.entry(xq).or_default().push((xsub, c));
        }
        for (y1, ww, cy) in &ys {
            let Some(list) = by_quot.get(ww) else { continue };
            let base = cy.mul(&inv_aut(ww, q));
            for (x2, cx) in list {
                let tw = sym_form(ww.class(), x2.class()) as i32;
                let coeff = base.mul(cx).shift(tw);
                let inner = straighten(y1, x2, q)?;
                out = out.sub(&inner.mul_k_right(-ww.class()).scale(&coeff));
            }
        }
    }
    Ok(out)
}

impl fmt::Display for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((p, k, m), c)| format!("({c})[{p}]+ K{k} [{m}]-"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct DoubleTermJson<'a> {
    plus: &'a IsoClass,
    #[serde(rename = "K")]
    k: &'a KClass,
    minus: &'a IsoClass,
    coeff: &'a ScalarQ,
}

impl Serialize for DoubleElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((p, k, m), c) in &self.terms {
            seq.serialize_element(&DoubleTermJson {
                plus: p,
                k,
                minus: m,
                coeff: c,
            })?;
        }
        seq.end()
    }
}

impl DoubleElement {
    pub fn from_json(v: &serde_json::Value, q: u32) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("double element json: {m}"));
        let mut out = Self::zero(q);
        for t in v.as_array().ok_or_else(|| bad("not a list"))? {
            let p = IsoClass::from_json(t.get("plus").ok_or_else(|| bad("plus"))?, q)?;
            let m = IsoClass::from_json(t.get("minus").ok_or_else(|| bad("minus"))?, q)?;
            let k = KClass::from_json(t.get("K").ok_or_else(|| bad("K"))?).ok_or_else(|| bad("K"))?;
            let c: ScalarQ = serde_json::from_value(t.get("coeff").cloned().ok_or_else(|| bad("coeff"))?)
                .map_err(|e| bad(&e.to_string()))?;
            out.add_term(p, k, m, c);
        }
        Ok(out)
    }
}
