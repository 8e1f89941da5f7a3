//! Composition-algebra generators of the P¹ side, realized in the Kronecker
//! double.

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use super::classes::{obj_transport, P1Class, Sheaf};
use crate::error::Result;
use crate::hall::{tube_one, DoubleElement, HallElement};
use crate::kronrep::{IsoClass, KClass};
use crate::scalars::{
    quantum_int, series_exp, series_log, specialize, FormalSeries, RatFun, ScalarQ, SeriesAlgebra,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The double element of a sheaf's `±` copy, via `obj_transport`.
pub fn sheaf_elem(s: &Sheaf, sign: Sign, q: u32) -> Result<DoubleElement> {
    let t = obj_transport(s)?;
    let (side, twist) = if t.shifted {
        (sign.flip(), t.twist.scale(sign.unit()))
    } else {
        (sign, KClass::zero())
    };
    let base = match side {
        Sign::Plus => DoubleElement::plus_class(t.class, q),
        Sign::Minus => DoubleElement::minus_class(t.class, q),
    };
    Ok(base.mul_k_right(twist).shift(t.v_power))
}

/// `L_n^±`, the class of `O(n)`.
pub fn line_bundle(n: i64, sign: Sign, q: u32) -> DoubleElement {
    sheaf_elem(&Sheaf::line_bundle(n), sign, q).expect("a single line bundle always transports")
}

/// `K_a` for a P¹ class.
pub fn k_p1(a: P1Class, q: u32) -> DoubleElement {
    DoubleElement::k(a.to_kclass(), q)
}

/// `K = K_{(1,0)}`
pub fn k_gen(power: i64, q: u32) -> DoubleElement {
    k_p1(P1Class::new(power, 0), q)
}

/// `C^{k/2}`
pub fn c_half(k: i64, q: u32) -> DoubleElement {
    k_p1(P1Class::half_delta(k), q)
}

/// Sum of the classes of all torsion sheaves of degree `r`.
pub fn one_tor(r: u32, q: u32) -> HallElement {
    if r == 0 {
        return HallElement::one(q);
    }
    tube_one(r, q)
}

struct HallSeries(u32);

impl SeriesAlgebra for HallSeries {
    type Elem = HallElement;
    fn zero(&self) -> HallElement {
        HallElement::zero(self.0)
    }
    fn one(&self) -> HallElement {
        HallElement::one(self.0)
    }
    fn add(&self, a: &HallElement, b: &HallElement) -> HallElement {
        a.add(b)
    }
    fn mul(&self, a: &HallElement, b: &HallElement) -> Result<HallElement> {
        a.mul(b)
    }
    fn scale_rat(&self, a: &HallElement, c: &BigRational) -> HallElement {
        a.scale(&ScalarQ::from_rational(c.clone(), self.0))
    }
    fn is_zero(&self, a: &HallElement) -> bool {
        a.is_zero()
    }
}

/// `1_{(0,r)}`, `T_r` and `Theta_r` for `r = 0..=order`.
#[derive(Clone, Debug)]
pub struct TorsionGenerators {
    pub one: Vec<HallElement>,
    pub t: Vec<HallElement>,
    pub theta: Vec<HallElement>,
}

static TORSION: Lazy<Mutex<HashMap<u32, Arc<TorsionGenerators>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Torsion generators up to degree `order`, from the generating series
/// `1 + sum 1_{(0,r)} t^r = exp(sum T_r/[r] t^r)` and
/// `1 + sum Theta_r t^r = exp((v^{-1} - v) sum T_r t^r)`.
pub fn torsion_generators(order: u32, q: u32) -> Result<Arc<TorsionGenerators>> {
    if let Some(g) = TORSION.lock().get(&q) {
        if g.one.len() > order as usize {
            return Ok(g.clone());
        }
    }
    let alg = HallSeries(q);
    let ones: Vec<HallElement> = (0..=order).map(|r| one_tor(r, q)).collect();
    let logs = series_log(&alg, &FormalSeries::new(ones.clone()))?;
    let mut t = vec![HallElement::zero(q)];
    for r in 1..=order {
        let qi = specialize(&quantum_int(r as i64), q)?;
        t.push(logs.coeff(r as usize).scale(&qi));
    }
    let factor = specialize(&RatFun::v_pow(-1).sub(&RatFun::v_pow(1)), q)?;
    let scaled: Vec<HallElement> = t.iter().map(|x| x.scale(&factor)).collect();
    let theta = series_exp(&alg, &FormalSeries::new(scaled))?.into_coeffs();
    let mut t0 = t;
    t0[0] = HallElement::one(q);
    let g = Arc::new(TorsionGenerators { one: ones, t: t0, theta });
    TORSION.lock().insert(q, g.clone());
    Ok(g)
}

/// `T_r`; `T_0 = 1`.
pub fn t_elem(r: u32, q: u32) -> Result<HallElement> {
    Ok(torsion_generators(r, q)?.t[r as usize].clone())
}

/// `Theta_r`; `Theta_0 = 1`.
pub fn theta_elem(r: u32, q: u32) -> Result<HallElement> {
    Ok(torsion_generators(r, q)?.theta[r as usize].clone())
}

fn wing(h: &HallElement, sign: Sign) -> DoubleElement {
    match sign {
        Sign::Plus => DoubleElement::plus(h),
        Sign::Minus => DoubleElement::minus(h),
    }
}

/// `T_r^±`
pub fn t_double(r: u32, sign: Sign, q: u32) -> Result<DoubleElement> {
    Ok(wing(&t_elem(r, q)?, sign))
}

/// `Theta_r^±`
pub fn theta_double(r: u32, sign: Sign, q: u32) -> Result<DoubleElement> {
    Ok(wing(&theta_elem(r, q)?, sign))
}

/// `T~_r^± = T_r^± C^{∓r/2}`
pub fn t_tilde(r: u32, sign: Sign, q: u32) -> Result<DoubleElement> {
    let c = P1Class::half_delta(-sign.unit() * r as i64).to_kclass();
    Ok(t_double(r, sign, q)?.mul_k_right(c))
}

/// `Theta~_r^± = Theta_r^± C^{∓r/2}`
pub fn theta_tilde(r: u32, sign: Sign, q: u32) -> Result<DoubleElement> {
    let c = P1Class::half_delta(-sign.unit() * r as i64).to_kclass();
    Ok(theta_double(r, sign, q)?.mul_k_right(c))
}

/// Closed-form evaluation
/// `Theta_r = v^{-r} sum prod_i (1 - v^{2 deg x_i}) [S_{t_i, x_i}]`
/// over distinct points `x_i` and lengths with `sum t_i deg x_i = r`.
pub fn theta_census(r: u32, q: u32) -> HallElement {
    let mut out = HallElement::zero(q);
    if r == 0 {
        return HallElement::one(q);
    }
    for x in crate::kronrep::regular_classes(r, q).iter() {
        if x.r.values().any(|part| part.len() != 1) {
            continue;
        }
        out.add_term(x.clone(), KClass::zero(), theta_weight(x, r, q));
    }
    out
}

/// `v^{-r} prod (1 - v^{2 deg x})` over the points of a regular class.
fn theta_weight(x: &IsoClass, r: u32, q: u32) -> ScalarQ {
    let mut w = ScalarQ::v_pow(-(r as i32), q);
    for pt in x.r.keys() {
        let f = ScalarQ::one(q).sub(&ScalarQ::v_pow(2 * pt.degree() as i32, q));
        w = w.mul(&f);
    }
    w
}
