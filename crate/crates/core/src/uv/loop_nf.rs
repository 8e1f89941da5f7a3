//! Rewriting of loop-presentation words to the PBW order
//! `X^+ (n descending), H_{>0}, K^a C^{b/2}, X^- (n descending), H_{<0}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::term::{Letter, PresTerm};
use crate::error::{Error, Result};
use crate::scalars::{quantum_factorial, quantum_int, series_exp, FormalSeries, RatFun, SeriesAlgebra};

/// Letters that take part in rewriting; `K` and `C` are kept in counters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoopLetter {
    Xp(i64),
    Xm(i64),
    H(i64),
}

impl LoopLetter {
    fn key(&self) -> (u8, i64) {
        match *self {
            LoopLetter::Xp(n) => (0, -n),
            LoopLetter::H(r) if r > 0 => (1, r),
            LoopLetter::Xm(n) => (3, -n),
            LoopLetter::H(r) => (4, r),
        }
    }

    /// Net `X^+` minus `X^-` count, which governs `K`-commutation.
    fn charge(&self) -> i64 {
        match self {
            LoopLetter::Xp(_) => 1,
            LoopLetter::Xm(_) => -1,
            LoopLetter::H(_) => 0,
        }
    }

    fn to_letter(self) -> Letter {
        match self {
            LoopLetter::Xp(n) => Letter::Xp(n),
            LoopLetter::Xm(n) => Letter::Xm(n),
            LoopLetter::H(r) => Letter::H(r),
        }
    }
}

/// `w K^k C^{c2/2}` with `K` parked at the right end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub w: Vec<LoopLetter>,
    pub k: i64,
    pub c2: i64,
}

impl Mono {
    fn scalar() -> Self {
        Mono { w: vec![], k: 0, c2: 0 }
    }
}

fn charge(w: &[LoopLetter]) -> i64 {
    w.iter().map(LoopLetter::charge).sum()
}

/// `K X^± = v^{∓2} X^± K`, so `K^k w = v^{-2 k charge(w)} w K^k`.
fn k_passage(k: i64, w: &[LoopLetter]) -> i32 {
    (-2 * k * charge(w)) as i32
}

pub type LoopPoly = BTreeMap<Mono, RatFun>;

fn add_to(p: &mut LoopPoly, m: Mono, c: RatFun) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&m) {
        Some(e) => {
            *e = e.add(&c);
            if e.is_zero() {
                p.remove(&m);
            }
        }
        None => {
            p.insert(m, c);
        }
    }
}

/// How `[X_m^+, X_n^-]` is expanded when `m + n = 0`. `Literal` uses
/// `K^{sign(m+n)} = 1` for both summands; `Corrected` attaches `K` to the
/// `Psi^+` summand and `K^{-1}` to the `Psi^-` summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopVariant {
    Literal,
    Corrected,
}

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteBounds {
    pub max_len: usize,
    pub max_index: i64,
}

impl Default for RewriteBounds {
    fn default() -> Self {
        Self { max_len: 24, max_index: 24 }
    }
}

/// A normal form: monomials in PBW order with `K` at the right end.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LoopNormalForm {
    pub terms: LoopPoly,
}

/// A PBW monomial with `K^a C^{b/2}` in the middle and divided powers of
/// the `X` letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub xplus: Vec<(i64, u32)>,
    pub hplus: Vec<(i64, u32)>,
    pub k: i64,
    pub c2: i64,
    pub xminus: Vec<(i64, u32)>,
    pub hminus: Vec<(i64, u32)>,
}

fn runs(w: &[LoopLetter], f: impl Fn(&LoopLetter) -> Option<i64>) -> Vec<(i64, u32)> {
    let mut out: Vec<(i64, u32)> = Vec::new();
    for l in w {
        if let Some(n) = f(l) {
            match out.last_mut() {
                Some((m, e)) if *m == n => *e += 1,
                _ => out.push((n, 1)),
            }
        }
    }
    out
}

impl LoopNormalForm {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients in the basis of divided powers
    /// `prod X^{+(m)} prod H^l K^a C^{b/2} prod X^{-(m)} prod H^l`.
    pub fn pbw_terms(&self) -> Result<Vec<(PbwMonomial, RatFun)>> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let xplus = runs(&m.w, |l| if let LoopLetter::Xp(n) = l { Some(*n) } else { None });
            let xminus = runs(&m.w, |l| if let LoopLetter::Xm(n) = l { Some(*n) } else { None });
            let hplus = runs(&m.w, |l| matches!(l, LoopLetter::H(r) if *r > 0).then(|| if let LoopLetter::H(r) = l { *r } else { 0 }));
            let hminus = runs(&m.w, |l| matches!(l, LoopLetter::H(r) if *r < 0).then(|| if let LoopLetter::H(r) = l { *r } else { 0 }));
            let nminus: u32 = xminus.iter().map(|(_, e)| e).sum();
            // X^- K = v^{-2} K X^-: moving K^k from the right end to the middle
            let mut coeff = c.shift((-2 * m.k * nminus as i64) as i32);
            for (_, e) in xplus.iter().chain(xminus.iter()) {
                coeff = coeff.mul(&quantum_factorial(*e));
            }
            out.push((PbwMonomial { xplus, hplus, k: m.k, c2: m.c2, xminus, hminus }, coeff));
        }
        Ok(out)
    }

    pub fn to_term(&self) -> PresTerm {
        let mut t = PresTerm::zero();
        for (m, c) in &self.terms {
            let mut w: Vec<Letter> = m.w.iter().map(|l| l.to_letter()).collect();
            if m.k != 0 {
                w.push(Letter::K(m.k as i32));
            }
            if m.c2 != 0 {
                w.push(Letter::C(m.c2 as i32));
            }
            t.add_word(w, c.clone());
        }
        t
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let dp = |e: u32| if e == 1 { String::new() } else { format!("^({e})") };
        let pw = |e: u32| if e == 1 { String::new() } else { format!("^{e}") };
        for (n, e) in &self.xplus {
            parts.push(format!("X[{n}]+{}", dp(*e)));
        }
        for (r, e) in &self.hplus {
            parts.push(format!("H[{r}]{}", pw(*e)));
        }
        if self.k != 0 {
            parts.push(Letter::K(self.k as i32).to_string());
        }
        if self.c2 != 0 {
            parts.push(Letter::C(self.c2 as i32).to_string());
        }
        for (n, e) in &self.xminus {
            parts.push(format!("X[{n}]-{}", dp(*e)));
        }
        for (r, e) in &self.hminus {
            parts.push(format!("H[{r}]{}", pw(*e)));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Display for LoopNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.pbw_terms().map_err(|_| fmt::Error)?;
        let parts: Vec<String> = terms.iter().map(|(m, c)| format!("({c}) {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[2r]/r` for `r != 0`.
fn hecke(r: i64) -> RatFun {
    let a = r.abs();
    quantum_int(2 * a).scale(&BigRational::new(BigInt::from(1), BigInt::from(a)))
}

fn v_over_v_minus_vinv() -> RatFun {
    RatFun::v_pow(1).div(&RatFun::v_pow(1).sub(&RatFun::v_pow(-1))).expect("nonzero")
}

struct HPoly;

impl SeriesAlgebra for HPoly {
    type Elem = BTreeMap<Vec<i64>, RatFun>;
    fn zero(&self) -> Self::Elem {
        BTreeMap::new()
    }
    fn one(&self) -> Self::Elem {
        BTreeMap::from([(vec![], RatFun::one())])
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
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
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let mut out = BTreeMap::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let mut k: Vec<i64> = ka.iter().chain(kb.iter()).copied().collect();
                k.sort();
                out = self.add(&out, &BTreeMap::from([(k, ca.mul(cb))]));
            }
        }
        Ok(out)
    }
    fn scale_rat(&self, a: &Self::Elem, c: &BigRational) -> Self::Elem {
        a.iter()
            .map(|(k, x)| (k.clone(), x.scale(c)))
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
}

/// `Psi^±_{±r}` as a polynomial in `H_{±1}, ..., H_{±r}`, from
/// `1 + sum Psi^±_{±r} t^r = exp(±(v^{-1} - v) sum H_{±r} t^r)`.
pub fn psi(sign: i64, r: u32) -> Result<Vec<(Vec<i64>, RatFun)>> {
    let f = RatFun::v_pow(-1).sub(&RatFun::v_pow(1)).scale(&BigRational::from_integer(sign.into()));
    let mut coeffs = vec![BTreeMap::new()];
    for s in 1..=r as i64 {
        coeffs.push(BTreeMap::from([(vec![sign * s], f.clone())]));
    }
    let e = series_exp(&HPoly, &FormalSeries::new(coeffs))?;
    Ok(e.coeff(r as usize).clone().into_iter().collect())
}

/// Memoizing rewriter for one variant and strategy.
pub struct Rewriter {
    pub variant: LoopVariant,
    pub strategy: Strategy,
    pub bounds: RewriteBounds,
    memo: HashMap<Vec<LoopLetter>, Arc<LoopPoly>>,
    psi_cache: HashMap<(i64, u32), Arc<Vec<(Vec<i64>, RatFun)>>>,
}

impl Rewriter {
    pub fn new(variant: LoopVariant, strategy: Strategy, bounds: RewriteBounds) -> Self {
        Self { variant, strategy, bounds, memo: HashMap::new(), psi_cache: HashMap::new() }
    }

    fn psi_poly(&mut self, sign: i64, r: u32) -> Result<Arc<Vec<(Vec<i64>, RatFun)>>> {
        if let Some(p) = self.psi_cache.get(&(sign, r)) {
            return Ok(p.clone());
        }
        let p = Arc::new(psi(sign, r)?);
        self.psi_cache.insert((sign, r), p.clone());
        Ok(p)
    }

    /// Normal form of a loop-presentation term.
    pub fn normal_form(&mut self, t: &PresTerm) -> Result<LoopNormalForm> {
        let mut out = LoopPoly::new();
        for (w, c) in t.terms() {
            let (m, shift) = to_mono(w)?;
            let c = c.shift(shift);
            for (n, d) in self.nf_word(&m.w)?.iter() {
                // K^{n.k} and K^{m.k} both sit at the right end
                let mm = Mono { w: n.w.clone(), k: n.k + m.k, c2: n.c2 + m.c2 };
                add_to(&mut out, mm, d.mul(&c));
            }
        }
        Ok(LoopNormalForm { terms: out })
    }

    fn check_bounds(&self, w: &[LoopLetter]) -> Result<()> {
        if w.len() > self.bounds.max_len {
            return Err(Error::TooLarge {
                what: format!("rewriting word {}", render(w)),
                size: w.len(),
                bound: self.bounds.max_len,
            });
        }
        for l in w {
            let (LoopLetter::Xp(n) | LoopLetter::Xm(n) | LoopLetter::H(n)) = *l;
            if n.unsigned_abs() as i64 > self.bounds.max_index {
                return Err(Error::TooLarge {
                    what: format!("index in word {}", render(w)),
                    size: n.unsigned_abs() as usize,
                    bound: self.bounds.max_index as usize,
                });
            }
        }
        Ok(())
    }

    fn find_pair(&self, w: &[LoopLetter]) -> Option<usize> {
        let bad = |i: &usize| w[*i].key() > w[*i + 1].key();
        let n = w.len().saturating_sub(1);
        match self.strategy {
            Strategy::Leftmost => (0..n).find(bad),
            Strategy::Rightmost => (0..n).rev().find(bad),
        }
    }

    fn nf_word(&mut self, w: &[LoopLetter]) -> Result<Arc<LoopPoly>> {
        if let Some(p) = self.memo.get(w) {
            return Ok(p.clone());
        }
        self.check_bounds(w)?;
        let out = match self.find_pair(w) {
            None => {
                let mut p = LoopPoly::new();
                p.insert(Mono { w: w.to_vec(), k: 0, c2: 0 }, RatFun::one());
                p
            }
            Some(i) => {
                let (left, right) = (&w[..i], &w[i + 2..]);
                let mut p = LoopPoly::new();
                for (mid, c) in self.swap(w[i], w[i + 1])? {
                    let mut nw = left.to_vec();
                    nw.extend_from_slice(&mid.w);
                    nw.extend_from_slice(right);
                    let c = c.shift(k_passage(mid.k, right));
                    for (n, d) in self.nf_word(&nw)?.iter() {
                        let mm = Mono { w: n.w.clone(), k: n.k + mid.k, c2: n.c2 + mid.c2 };
                        add_to(&mut p, mm, d.mul(&c));
                    }
                }
                p
            }
        };
        let out = Arc::new(out);
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// `ab` for an out-of-order pair, as a combination of monomials.
    fn swap(&mut self, a: LoopLetter, b: LoopLetter) -> Result<Vec<(Mono, RatFun)>> {
        use LoopLetter::*;
        let one = RatFun::one();
        let mono = |w: Vec<LoopLetter>, c2: i64| Mono { w, k: 0, c2 };
        let mut out = vec![(mono(vec![b, a], 0), one.clone())];
        match (a, b) {
            (Xp(x), Xp(y)) | (Xm(x), Xm(y)) => {
                let plus = matches!(a, Xp(_));
                let e = if plus { 2 } else { -2 };
                let mk = |n: i64| if plus { Xp(n) } else { Xm(n) };
                out.clear();
                // X_a X_b = v^{±2} X_b X_a + v^{±2} X_{a+1} X_{b-1} - X_{b-1} X_{a+1}
                if y == x + 1 {
                    out.push((mono(vec![b, a], 0), RatFun::v_pow(e)));
                } else {
                    out.push((mono(vec![b, a], 0), RatFun::v_pow(e)));
                    out.push((mono(vec![mk(x + 1), mk(y - 1)], 0), RatFun::v_pow(e)));
                    out.push((mono(vec![mk(y - 1), mk(x + 1)], 0), RatFun::from_int(-1)));
                }
            }
            (H(_), H(_)) => {
                if let (H(s), H(r)) = (a, b) {
                    if s < 0 && r > 0 && s + r == 0 {
                        // [H_s, H_r] = [2r]/r (C^r - C^{-r}) / (v - v^{-1})
                        let f = hecke(r).div(&RatFun::v_pow(1).sub(&RatFun::v_pow(-1)))?;
                        out.push((mono(vec![], 2 * r), f.clone()));
                        out.push((mono(vec![], -2 * r), f.neg()));
                    }
                }
            }
            // [H_r, X_n^+] = [2r]/r X_{n+r}^+ C^{-|r|/2}
            (H(r), Xp(n)) => out.push((mono(vec![Xp(n + r)], -r.abs()), hecke(r))),
            // [H_r, X_n^-] = -[2r]/r X_{n+r}^- C^{|r|/2}
            (H(r), Xm(n)) => out.push((mono(vec![Xm(n + r)], r.abs()), hecke(r).neg())),
            (Xm(n), H(r)) => out.push((mono(vec![Xm(n + r)], r.abs()), hecke(r))),
            (Xm(n), Xp(m)) => {
                for (t, c) in self.x_commutator(m, n)? {
                    out.push((t, c.neg()));
                }
            }
            _ => unreachable!("pair {a:?} {b:?} is never out of order"),
        }
        Ok(out)
    }

    /// `[X_m^+, X_n^-]`.
    fn x_commutator(&mut self, m: i64, n: i64) -> Result<Vec<(Mono, RatFun)>> {
        let s = m + n;
        let pre = v_over_v_minus_vinv();
        let (kp, km) = match (self.variant, s.signum()) {
            (LoopVariant::Literal, sg) => (sg, sg),
            (LoopVariant::Corrected, _) => (1, -1),
        };
        let mut out = Vec::new();
        if s >= 0 {
            for (hs, c) in self.psi_poly(1, s as u32)?.iter() {
                let w = hs.iter().map(|&r| LoopLetter::H(r)).collect();
                out.push((Mono { w, k: kp, c2: m - n }, c.mul(&pre)));
            }
        }
        if s <= 0 {
            for (hs, c) in self.psi_poly(-1, (-s) as u32)?.iter() {
                let w = hs.iter().map(|&r| LoopLetter::H(r)).collect();
                out.push((Mono { w, k: km, c2: n - m }, c.mul(&pre).neg()));
            }
        }
        // H letters have zero charge, so K at the right end of the inserted
        // monomial needs no further adjustment here
        Ok(out)
    }
}

fn render(w: &[LoopLetter]) -> String {
    w.iter().map(|l| l.to_letter().to_string()).collect::<Vec<_>>().join(" ")
}

/// Splits a loop word into rewriting letters with `K` moved to the right
/// end; returns the monomial and the accumulated power of `v`.
pub fn to_mono(w: &[Letter]) -> Result<(Mono, i32)> {
    let mut m = Mono::scalar();
    let mut shift = 0i32;
    for (i, l) in w.iter().enumerate() {
        match *l {
            Letter::Xp(n) => m.w.push(LoopLetter::Xp(n)),
            Letter::Xm(n) => m.w.push(LoopLetter::Xm(n)),
            Letter::H(r) => m.w.push(LoopLetter::H(r)),
            Letter::C(k) => m.c2 += k as i64,
            Letter::K(e) => {
                let rest: Vec<LoopLetter> = w[i + 1..]
                    .iter()
                    .filter_map(|l| match *l {
                        Letter::Xp(n) => Some(LoopLetter::Xp(n)),
                        Letter::Xm(n) => Some(LoopLetter::Xm(n)),
                        _ => None,
                    })
                    .collect();
                shift += k_passage(e as i64, &rest);
                m.k += e as i64;
            }
            _ => return Err(Error::Invalid(format!("letter {l} is not a loop generator"))),
        }
    }
    Ok((m, shift))
}

/// Normal form with the default bounds, corrected variant, leftmost strategy.
pub fn loop_normal_form(t: &PresTerm) -> Result<LoopNormalForm> {
    Rewriter::new(LoopVariant::Corrected, Strategy::Leftmost, RewriteBounds::default()).normal_form(t)
}
