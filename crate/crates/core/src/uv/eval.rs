//! Evaluation of presentation terms in the Kronecker double at `v = q^{-1/2}`.

use std::collections::HashMap;

use super::term::{Letter, PresTerm};
use crate::error::Result;
use crate::hall::DoubleElement;
use crate::kronrep::IsoClass;
use crate::p1::{c_half, k_gen, line_bundle, t_tilde, Sign};
use crate::scalars::specialize;

/// Image of one generator.
pub fn ev_letter(l: Letter, q: u32) -> Result<DoubleElement> {
    let simple = |i: u8| if i == 1 { IsoClass::s1() } else { IsoClass::s2() };
    Ok(match l {
        Letter::E(i) => DoubleElement::plus_class(simple(i), q),
        Letter::F(i) => DoubleElement::minus_class(simple(i), q),
        Letter::Ki(i, e) => DoubleElement::k(simple(i).class().scale(e as i64), q),
        Letter::Xp(n) => line_bundle(n, Sign::Plus, q),
        Letter::Xm(n) => line_bundle(-n, Sign::Minus, q),
        Letter::H(0) => DoubleElement::zero(q),
        Letter::H(r) if r > 0 => t_tilde(r as u32, Sign::Plus, q)?,
        Letter::H(r) => t_tilde((-r) as u32, Sign::Minus, q)?.neg(),
        Letter::K(e) => k_gen(e as i64, q),
        Letter::C(k) => c_half(k as i64, q),
    })
}

/// `ev_q` on a whole term; generator images are computed once per call.
pub fn ev_q(t: &PresTerm, q: u32) -> Result<DoubleElement> {
    let mut cache: HashMap<Letter, DoubleElement> = HashMap::new();
    let mut out = DoubleElement::zero(q);
    for (w, c) in t.terms() {
        let mut acc = DoubleElement::one(q).scale(&specialize(c, q)?);
        for l in w {
            if !cache.contains_key(l) {
                cache.insert(*l, ev_letter(*l, q)?);
            }
            acc = acc.mul(&cache[l])?;
            if acc.is_zero() {
                break;
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}
