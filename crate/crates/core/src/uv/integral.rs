//! Integral-form elements, composition words for indecomposables, the
//! PBW rank test and confluence sampling.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::Rng;

use super::loop_nf::{psi, LoopLetter, LoopNormalForm, Mono, PbwMonomial, Rewriter};
use super::maps::{coxeter_a, coxeter_a_loop, lusztig_s, map_g, GTable, Sym, SymTable};
use super::term::{parse_term, Letter, PresTerm};
use super::eval::ev_q;
use crate::error::{Error, Result};
use crate::kronrep::{DimVec, Indec, IsoClass, KClass};
use crate::scalars::{quantum_int, series_exp, FormalSeries, RatFun, ScalarQ, SeriesAlgebra};
use crate::stability::{reineke_terms, StabilityFunction};

/// Which series defines `P_r`: `exp(sum Psi_r/[r] t^r)` or
/// `exp(sum H_r/[r] t^r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PSeries {
    Psi,
    H,
}

type HPolyElem = BTreeMap<Vec<i64>, RatFun>;

struct HAlg;

impl SeriesAlgebra for HAlg {
    type Elem = HPolyElem;
    fn zero(&self) -> HPolyElem {
        BTreeMap::new()
    }
    fn one(&self) -> HPolyElem {
        BTreeMap::from([(vec![], RatFun::one())])
    }
    fn add(&self, a: &HPolyElem, b: &HPolyElem) -> HPolyElem {
        let mut out = a.clone();
        for (k, c) in b {
            let e = out.entry(k.clone()).or_insert_with(RatFun::zero);
            *e = e.add(c);
            if e.is_zero() {
                out.remove(k);
            }
        }
        out
    }
    fn mul(&self, a: &HPolyElem, b: &HPolyElem) -> Result<HPolyElem> {
        let mut out = BTreeMap::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let mut k: Vec<i64> = ka.iter().chain(kb).copied().collect();
                k.sort();
                out = self.add(&out, &BTreeMap::from([(k, ca.mul(cb))]));
            }
        }
        Ok(out)
    }
    fn scale_rat(&self, a: &HPolyElem, c: &num_rational::BigRational) -> HPolyElem {
        a.iter().map(|(k, x)| (k.clone(), x.scale(c))).filter(|(_, x)| !x.is_zero()).collect()
    }
    fn is_zero(&self, a: &HPolyElem) -> bool {
        a.is_empty()
    }
}

/// `P_r` from `1 + sum P_r C^{-r/2} t^r = exp(sum X_r/[r] t^r)` with
/// `X_r = Psi_r` or `H_r`.
pub fn p_elem(r: u32, series: PSeries) -> Result<PresTerm> {
    let mut coeffs: Vec<HPolyElem> = vec![BTreeMap::new()];
    for s in 1..=r {
        let inv = quantum_int(s as i64).inv()?;
        let x: HPolyElem = match series {
            PSeries::H => BTreeMap::from([(vec![s as i64], RatFun::one())]),
            PSeries::Psi => psi(1, s)?.into_iter().collect(),
        };
        coeffs.push(x.into_iter().map(|(k, c)| (k, c.mul(&inv))).collect());
    }
    let e = series_exp(&HAlg, &FormalSeries::new(coeffs))?;
    let mut out = PresTerm::zero();
    for (hs, c) in e.coeff(r as usize) {
        let mut w: Vec<Letter> = hs.iter().map(|&s| Letter::H(s)).collect();
        w.push(Letter::C(r as i32));
        out.add_word(w, c.clone());
    }
    Ok(out)
}

/// Outcome of the coefficient test in the divided-power PBW basis.
#[derive(Clone, Debug)]
pub struct IntegralityReport {
    pub integral: bool,
    pub offending: Vec<(PbwMonomial, RatFun)>,
}

/// Whether every PBW coefficient of `t` lies in `Z[v, v^{-1}]`.
pub fn is_integral(t: &PresTerm, rw: &mut Rewriter) -> Result<IntegralityReport> {
    let nf = rw.normal_form(t)?;
    let offending: Vec<(PbwMonomial, RatFun)> =
        nf.pbw_terms()?.into_iter().filter(|(_, c)| !c.is_integral_laurent()).collect();
    Ok(IntegralityReport { integral: offending.is_empty(), offending })
}

/// `1_{(a,b)} = v^{a(a-1) + b(b-1) - 2ab} E_1^{(a)} E_2^{(b)}`, the sum of all
/// classes of dimension `(a, b)`.
pub fn one_ab(a: u32, b: u32) -> Result<PresTerm> {
    let e = (a * a.saturating_sub(1) + b * b.saturating_sub(1)) as i32 - 2 * (a * b) as i32;
    let e1 = PresTerm::letter(Letter::E(1)).divided_power(a)?;
    let e2 = PresTerm::letter(Letter::E(2)).divided_power(b)?;
    Ok(e1.mul(&e2)?.scale(&RatFun::v_pow(e)))
}

/// The printed variant `v^{a(a-1) + b(b-1)} E_2^{(b)} E_1^{(a)}`.
pub fn one_ab_printed(a: u32, b: u32) -> Result<PresTerm> {
    let e = (a * a.saturating_sub(1) + b * b.saturating_sub(1)) as i32;
    let e1 = PresTerm::letter(Letter::E(1)).divided_power(a)?;
    let e2 = PresTerm::letter(Letter::E(2)).divided_power(b)?;
    Ok(e2.mul(&e1)?.scale(&RatFun::v_pow(e)))
}

/// Reineke's formula for the semistables of slope `mu(r, r)`, as a list of
/// coefficients of products `E_1^{(a_1)} E_2^{(b_1)} E_1^{(a_2)} ...`.
pub fn tube_certificate_terms(r: u32, z: &StabilityFunction) -> Result<Vec<(RatFun, Vec<DimVec>)>> {
    let mut out = Vec::new();
    for parts in reineke_terms(DimVec::new(r, r), z) {
        let mut e = 0i64;
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                e += crate::kronrep::euler_dims(parts[i], parts[j]);
            }
        }
        for p in &parts {
            let (a, b) = (p.d1 as i64, p.d2 as i64);
            e += a * (a - 1) + b * (b - 1) - 2 * a * b;
        }
        let sign = if parts.len() % 2 == 0 { -1 } else { 1 };
        out.push((RatFun::v_pow(e as i32).scale(&BigRational::from_integer(sign.into())), parts));
    }
    Ok(out)
}

/// A Drinfeld–Jimbo word for the sum of regular classes of dimension
/// `(r, r)`, built from the elements `1_{(a,b)}`.
pub fn tube_certificate(r: u32, z: &StabilityFunction) -> Result<PresTerm> {
    let mut out = PresTerm::zero();
    for (c, parts) in tube_certificate_terms(r, z)? {
        let mut t = PresTerm::scalar(c);
        for p in &parts {
            let e1 = PresTerm::letter(Letter::E(1)).divided_power(p.d1)?;
            let e2 = PresTerm::letter(Letter::E(2)).divided_power(p.d2)?;
            t = t.mul(&e1)?.mul(&e2)?;
        }
        out = out.add(&t);
    }
    Ok(out)
}

/// Which `v`-weight the reflection formula puts on the divided powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReflWeight {
    /// `v^{-b}`, on the right-hand power.
    Right,
    /// `v^{-a}`, on the left-hand power.
    Left,
}

/// `sum_{a+b=2} (-1)^a v^{-w} x^{(a)} y x^{(b)}` for the classes of `P_1`
/// (`x = E_2`, `y = E_1`) and `I_1` (`x = E_1`, `y = E_2`).
pub fn refl_formula(target: &Indec, weight: ReflWeight) -> Result<PresTerm> {
    let (x, y) = match target {
        Indec::P(1) => ("E2", "E1"),
        Indec::I(1) => ("E1", "E2"),
        other => return Err(Error::Invalid(format!("no formula for {other}"))),
    };
    let parts: Vec<String> = (0..=2)
        .map(|a| {
            let w = match weight {
                ReflWeight::Right => 2 - a,
                ReflWeight::Left => a,
            };
            format!("{}v^{}*{x}^({a})*{y}*{x}^({})", if a % 2 == 1 { "-" } else { "" }, -w, 2 - a)
        })
        .collect();
    parse_term(&parts.join(" + ").replace("+ -", "- "))
}

/// A composition word for `P_n` or `I_n` built from a simple by powers of
/// the Coxeter automorphism and one reflection.
pub fn composition_word(x: &Indec, table: SymTable) -> Result<PresTerm> {
    let (n, simple, sym) = match x {
        Indec::P(n) => (*n, Letter::E(2), Sym::Minus),
        Indec::I(n) => (*n, Letter::E(1), Sym::Plus),
        Indec::T(..) => return Err(Error::Invalid("tubes have no composition word".into())),
    };
    let mut t = PresTerm::letter(simple);
    if n % 2 == 1 {
        t = lusztig_s(&t, sym, table)?;
    }
    for _ in 0..n / 2 {
        t = coxeter_a(&t, sym, table)?;
    }
    Ok(t)
}

/// The image under `G` of a composition word for `x`, in loop normal form.
/// The Coxeter powers are applied on the loop side, where they only shift
/// indices; this relies on `G` intertwining the two Coxeter automorphisms.
pub fn composition_loop(x: &Indec, table: SymTable, rw: &mut Rewriter) -> Result<LoopNormalForm> {
    let (n, sym) = match x {
        Indec::P(n) => (*n, Sym::Minus),
        Indec::I(n) => (*n, Sym::Plus),
        Indec::T(..) => return Err(Error::Invalid("tubes have no composition word".into())),
    };
    let start = composition_word(&match x {
        Indec::P(_) => Indec::P(n % 2),
        _ => Indec::I(n % 2),
    }, table)?;
    let mut nf = rw.normal_form(&map_g(&start, GTable::Corrected)?)?;
    for _ in 0..n / 2 {
        nf = rw.normal_form(&coxeter_a_loop(&nf.to_term(), sym)?)?;
    }
    Ok(nf)
}

/// Finds `c` and `gamma` with `ev_q(w) = c [X]^+ K_gamma` for the
/// composition word `w` of `x`, if the image has that shape.
pub fn plus_twist(x: &Indec, table: SymTable, q: u32, rw: &mut Rewriter) -> Result<Option<(ScalarQ, KClass)>> {
    let nf = composition_loop(x, table, rw)?;
    let e = ev_q(&nf.to_term(), q)?;
    if e.len() != 1 {
        return Ok(None);
    }
    let (p, k, m, c) = e.terms().next().unwrap();
    Ok((*p == IsoClass::indec(x) && m.is_zero()).then(|| (c.clone(), *k)))
}

/// Evidence that `P_r` lies in the integral form: a combination of products
/// of divided powers with Laurent coefficients whose image under `G` is `P_r`.
#[derive(Clone, Debug)]
pub struct IntegralCertificate {
    pub word: PresTerm,
    pub laurent_coefficients: bool,
    pub image_matches: bool,
}

impl IntegralCertificate {
    pub fn holds(&self) -> bool {
        self.laurent_coefficients && self.image_matches
    }
}

pub fn certify_p(r: u32, series: PSeries, z: &StabilityFunction, rw: &mut Rewriter) -> Result<IntegralCertificate> {
    let word = tube_certificate(r, z)?;
    let laurent_coefficients = tube_certificate_terms(r, z)?.iter().all(|(c, _)| c.is_integral_laurent());
    let lhs = rw.normal_form(&map_g(&word, GTable::Corrected)?)?;
    let rhs = rw.normal_form(&p_elem(r, series)?)?;
    Ok(IntegralCertificate { word, laurent_coefficients, image_matches: lhs == rhs })
}

/// PBW monomials in the letters `X^±_n` (`|n| <= 1`) and `H_{±1}`, with
/// at most `max_len` letters, in order of length.
pub fn small_pbw_monomials(max_len: usize) -> Vec<Mono> {
    let alphabet = [
        LoopLetter::Xp(1),
        LoopLetter::Xp(0),
        LoopLetter::Xp(-1),
        LoopLetter::H(1),
        LoopLetter::Xm(1),
        LoopLetter::Xm(0),
        LoopLetter::Xm(-1),
        LoopLetter::H(-1),
    ];
    let mut out = vec![Mono { w: vec![], k: 0, c2: 0 }];
    let mut layer: Vec<(Vec<LoopLetter>, usize)> = vec![(vec![], 0)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, start) in &layer {
            for (i, l) in alphabet.iter().enumerate().skip(*start) {
                let mut w2 = w.clone();
                w2.push(*l);
                next.push((w2, i));
            }
        }
        out.extend(next.iter().map(|(w, _)| Mono { w: w.clone(), k: 0, c2: 0 }));
        layer = next;
    }
    out
}

/// Rank over `Q(sqrt q)` of the `ev_q` images of the given monomials.
pub fn pbw_rank(monos: &[Mono], q: u32) -> Result<usize> {
    let mut rows = Vec::with_capacity(monos.len());
    for m in monos {
        let nf = LoopNormalForm { terms: BTreeMap::from([(m.clone(), RatFun::one())]) };
        let e = ev_q(&nf.to_term(), q)?;
        let row: BTreeMap<_, ScalarQ> =
            e.terms().map(|(p, k, mm, c)| ((p.clone(), *k, mm.clone()), c.clone())).collect();
        rows.push(row);
    }
    rank(rows, q)
}

fn rank<K: Ord + Clone>(mut rows: Vec<BTreeMap<K, ScalarQ>>, q: u32) -> Result<usize> {
    let mut r = 0;
    let mut pivots: Vec<(K, BTreeMap<K, ScalarQ>)> = Vec::new();
    for row in rows.iter_mut() {
        for (pk, prow) in &pivots {
            if let Some(c) = row.get(pk).cloned() {
                for (k, v) in prow {
                    let e = row.entry(k.clone()).or_insert_with(|| ScalarQ::zero(q));
                    *e = e.sub(&v.mul(&c));
                }
                row.retain(|_, v| !v.is_zero());
            }
        }
        if let Some((k, c)) = row.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let inv = c.inv()?;
            let normalized: BTreeMap<K, ScalarQ> = row.iter().map(|(k, v)| (k.clone(), v.mul(&inv))).collect();
            pivots.push((k, normalized));
            r += 1;
        }
    }
    Ok(r)
}

/// A random loop word of length `1..=max_len` with indices in `[-w, w]`.
pub fn random_loop_word<R: Rng>(rng: &mut R, max_len: usize, w: i64) -> PresTerm {
    let len = rng.gen_range(1..=max_len);
    let mut word = Vec::with_capacity(len);
    for _ in 0..len {
        let n = rng.gen_range(-w..=w);
        let l = match rng.gen_range(0..5) {
            0 | 1 => Letter::Xp(n),
            2 | 3 => Letter::Xm(n),
            _ => Letter::H(if n == 0 { 1 } else { n }),
        };
        word.push(l);
    }
    PresTerm::word(word, RatFun::one())
}
