//! Elements of the extended twisted Hall algebra over `Q[sqrt q]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::structure::{aut, product, slice};
use crate::error::Result;
use crate::kronrep::{
    enumerate_iso_classes, euler_dims, regular_classes, sym_form, DimVec, IsoClass, KClass,
};
use crate::scalars::{quantum_factorial, specialize, ScalarQ};

/// Linear combination of `[X] K_alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallElement {
    q: u32,
    terms: BTreeMap<(IsoClass, KClass), ScalarQ>,
}

/// One summand `c [X] K_a ⊗ [Y] K_b` of a coproduct.
pub type TensorTerm = ((IsoClass, KClass), (IsoClass, KClass), ScalarQ);

impl HallElement {
    pub fn zero(q: u32) -> Self {
        Self {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(q: u32) -> Self {
        Self::class(IsoClass::zero(), q)
    }

    /// `[X]`
    pub fn class(x: IsoClass, q: u32) -> Self {
        Self::term(x, KClass::zero(), ScalarQ::one(q))
    }

    /// `K_alpha`
    pub fn k(alpha: KClass, q: u32) -> Self {
        Self::term(IsoClass::zero(), alpha, ScalarQ::one(q))
    }

    pub fn term(x: IsoClass, alpha: KClass, c: ScalarQ) -> Self {
        let mut e = Self::zero(c.q);
        e.add_term(x, alpha, c);
        e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IsoClass, &KClass, &ScalarQ)> {
        self.terms.iter().map(|((x, k), c)| (x, k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &IsoClass, k: &KClass) -> ScalarQ {
        self.terms
            .get(&(x.clone(), *k))
            .cloned()
            .unwrap_or_else(|| ScalarQ::zero(self.q))
    }

    pub fn add_term(&mut self, x: IsoClass, k: KClass, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        let key = (x, k);
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
        for ((x, k), c) in &o.terms {
            out.add_term(x.clone(), *k, c.clone());
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
        for ((x, k), d) in &self.terms {
            out.add_term(x.clone(), *k, d.mul(c));
        }
        out
    }

    /// Multiply by specialized `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        self.scale(&ScalarQ::v_pow(k, self.q))
    }

    /// The product: `[X] K_a ∘ [Y] K_b = v^{-(a, Y)} v^{-<X,Y>} sum_Z F^Z_{X,Y} [Z] K_{a+b}`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        let q = self.q;
        let mut out = Self::zero(q);
        for ((x, a), c) in &self.terms {
            for ((y, b), d) in &o.terms {
                let twist = -sym_form(*a, y.class()) - euler_dims(x.dim(), y.dim());
                let coeff = c.mul(d).shift(twist as i32);
                for (z, f) in product(x, y, q)?.iter() {
                    out.add_term(z.clone(), *a + *b, coeff.scale(&BigRational::from_integer(f.clone())));
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

    /// `x^n / [n]!`
    pub fn divided_power(&self, n: u32) -> Result<Self> {
        let f = specialize(&quantum_factorial(n), self.q)?;
        Ok(self.pow(n)?.scale(&f.inv()?))
    }

    /// `Δ([Z] K_a) = sum v^{-<X,Y>} (P^Z_{X,Y} / a_Z) [X] K_{Y+a} ⊗ [Y] K_a`.
    pub fn coproduct(&self) -> Result<Vec<TensorTerm>> {
        let mut acc: BTreeMap<((IsoClass, KClass), (IsoClass, KClass)), ScalarQ> = BTreeMap::new();
        for ((z, a), c) in &self.terms {
            for dsub in z.dim().below() {
                for (x, y, cc) in coproduct_slice(z, dsub, self.q)? {
                    let key = ((x, y.class() + *a), (y, *a));
                    let v = cc.mul(c);
                    let e = acc.entry(key).or_insert_with(|| ScalarQ::zero(self.q));
                    *e = e.add(&v);
                }
            }
        }
        Ok(acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((l, r), c)| (l, r, c))
            .collect())
    }
}

/// Coefficients `c^Z_{X,Y} = v^{-<X,Y>} F^Z_{X,Y} a_X a_Y / a_Z` of
/// `[X] K_Y ⊗ [Y]` in `Δ([Z])`, for subobjects `Y` of dimension `dsub`.
pub fn coproduct_slice(z: &IsoClass, dsub: DimVec, q: u32) -> Result<Vec<(IsoClass, IsoClass, ScalarQ)>> {
    let s = slice(z, dsub, q)?;
    let az = aut(z, q);
    let mut out = Vec::with_capacity(s.len());
    for ((x, y), &f) in s.iter() {
        let r = BigRational::new(BigInt::from(f) * aut(x, q) * aut(y, q), az.clone());
        let c = ScalarQ::from_rational(r, q).shift(-euler_dims(x.dim(), y.dim()) as i32);
        out.push((x.clone(), y.clone(), c));
    }
    Ok(out)
}

/// `([X] K_a, [Y] K_b) = v^{-(a,b)} δ_{X,Y} / a_X`, extended bilinearly.
pub fn green_pair(a: &HallElement, b: &HallElement) -> ScalarQ {
    let q = a.q;
    let mut out = ScalarQ::zero(q);
    for ((x, ka), c) in &a.terms {
        for ((y, kb), d) in &b.terms {
            if x != y {
                continue;
            }
            let r = BigRational::new(BigInt::from(1), aut(x, q));
            let v = c.mul(d).scale(&r).shift(-sym_form(*ka, *kb) as i32);
            out = out.add(&v);
        }
    }
    out
}

/// Pairing of a tensor `a ⊗ b` against a list of coproduct terms.
pub fn green_pair_tensor(a: &HallElement, b: &HallElement, terms: &[TensorTerm]) -> ScalarQ {
    let q = a.q;
    let mut out = ScalarQ::zero(q);
    for ((x, kx), (y, ky), c) in terms {
        let l = green_pair(a, &HallElement::term(x.clone(), *kx, ScalarQ::one(q)));
        if l.is_zero() {
            continue;
        }
        let r = green_pair(b, &HallElement::term(y.clone(), *ky, ScalarQ::one(q)));
        out = out.add(&l.mul(&r).mul(c));
    }
    out
}

/// `1_d = sum_{dim X = d} [X]`.
pub fn one_alpha(d: DimVec, q: u32) -> HallElement {
    let mut out = HallElement::zero(q);
    for x in enumerate_iso_classes(d, q) {
        out.add_term(x, KClass::zero(), ScalarQ::one(q));
    }
    out
}

/// Sum of all regular classes of dimension `(r, r)`.
pub fn tube_one(r: u32, q: u32) -> HallElement {
    let mut out = HallElement::zero(q);
    for x in regular_classes(r, q).iter() {
        out.add_term(x.clone(), KClass::zero(), ScalarQ::one(q));
    }
    out
}

impl fmt::Display for HallElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((x, k), c)| {
                if k.is_zero() {
                    format!("({c})[{x}]")
                } else {
                    format!("({c})[{x}]K{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct HallTermJson<'a> {
    class: &'a IsoClass,
    #[serde(rename = "K")]
    k: &'a KClass,
    coeff: &'a ScalarQ,
}

impl Serialize for HallElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((x, k), c) in &self.terms {
            seq.serialize_element(&HallTermJson { class: x, k, coeff: c })?;
        }
        seq.end()
    }
}

impl HallElement {
    pub fn from_json(v: &serde_json::Value, q: u32) -> Result<Self> {
        use crate::error::Error;
        let bad = |m: &str| Error::Invalid(format!("hall element json: {m}"));
        let mut out = Self::zero(q);
        for t in v.as_array().ok_or_else(|| bad("not a list"))? {
            let x = IsoClass::from_json(t.get("class").ok_or_else(|| bad("class"))?, q)?;
            let k = KClass::from_json(t.get("K").ok_or_else(|| bad("K"))?).ok_or_else(|| bad("K"))?;
            let c: ScalarQ = serde_json::from_value(t.get("coeff").cloned().ok_or_else(|| bad("coeff"))?)
                .map_err(|e| bad(&e.to_string()))?;
            out.add_term(x, k, c);
        }
        Ok(out)
    }
}
