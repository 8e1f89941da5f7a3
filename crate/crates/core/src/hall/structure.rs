//! Cached structure constants: products via extension censuses or
//! subobject counts, and coproduct slices via subobject counts.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::kronrep::{
    aut_count_fast, canonical_rep, decompose, enumerate_iso_classes, ext_census, ext_dim,
    for_each_subrep, hall_number_bound, DimVec, IsoClass, EXT_ENUMERATION_BOUND,
};

/// Extension enumerations up to this many cocycle classes are preferred
/// over subobject counting.
const EXT_PREFERRED: u128 = 20_000;

type ProdKey = (IsoClass, IsoClass, u32);
type SliceKey = (IsoClass, DimVec, u32);
type AutKey = (IsoClass, u32);

static PRODUCTS: Lazy<Mutex<HashMap<ProdKey, Arc<Vec<(IsoClass, BigInt)>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static SLICES: Lazy<Mutex<HashMap<SliceKey, Arc<Slice>>>> = Lazy::new(|| Mutex::new(HashMap::new()));
static AUTS: Lazy<Mutex<HashMap<AutKey, BigInt>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `F^Z_{X,Y}` keyed by `(X, Y)` (quotient, sub) for a fixed `Z` and
/// subobject dimension.
pub type Slice = BTreeMap<(IsoClass, IsoClass), u64>;

/// `|Aut X|`, memoized.
pub fn aut(x: &IsoClass, q: u32) -> BigInt {
    let key = (x.clone(), q);
    if let Some(a) = AUTS.lock().get(&key) {
        return a.clone();
    }
    let a = aut_count_fast(x, q);
    AUTS.lock().insert(key, a.clone());
    a
}

/// All subobject counts of `Z` with subobject dimension `dsub`.
pub fn slice(z: &IsoClass, dsub: DimVec, q: u32) -> Result<Arc<Slice>> {
    let key = (z.clone(), dsub, q);
    if let Some(s) = SLICES.lock().get(&key) {
        return Ok(s.clone());
    }
    let dz = z.dim();
    let Some(dquo) = dz.checked_sub(&dsub) else {
        return Ok(Arc::new(Slice::new()));
    };
    let mut out = Slice::new();
    if dsub.is_zero() {
        out.insert((z.clone(), IsoClass::zero()), 1);
    } else if dquo.is_zero() {
        out.insert((IsoClass::zero(), z.clone()), 1);
    } else {
        let bound = hall_number_bound(q);
        if dz.total() as usize > bound {
            return Err(Error::TooLarge {
                what: format!("subobject enumeration of {z}"),
                size: dz.total() as usize,
                bound,
            });
        }
        let r = canonical_rep(z, q);
        for_each_subrep(&r, dsub, &mut |sub, quo| {
            *out.entry((decompose(quo), decompose(sub))).or_default() += 1;
        });
    }
    let out = Arc::new(out);
    SLICES.lock().insert(key, out.clone());
    Ok(out)
}

/// `q^{k(n-k)}`, the leading term of the Gaussian binomial.
fn gaussian_estimate(n: u32, k: u32, q: u32) -> u128 {
    (q as u128).saturating_pow(k * (n - k))
}

/// `F^Z_{X,Y}` for all `Z`, as `(Z, F)` pairs with `F > 0`.
pub fn product(x: &IsoClass, y: &IsoClass, q: u32) -> Result<Arc<Vec<(IsoClass, BigInt)>>> {
    let key = (x.clone(), y.clone(), q);
    if let Some(p) = PRODUCTS.lock().get(&key) {
        return Ok(p.clone());
    }
    let out = Arc::new(compute_product(x, y, q)?);
    PRODUCTS.lock().insert(key, out.clone());
    Ok(out)
}

fn compute_product(x: &IsoClass, y: &IsoClass, q: u32) -> Result<Vec<(IsoClass, BigInt)>> {
    if x.is_zero() {
        return Ok(vec![(y.clone(), BigInt::one())]);
    }
    if y.is_zero() {
        return Ok(vec![(x.clone(), BigInt::one())]);
    }
    let (dx, dy) = (x.dim(), y.dim());
    let dz = dx + dy;
    let e = ext_dim(x, y, q);
    let ext_cost = (q as u128).saturating_pow(e as u32);
    let within_slice_bound = dz.total() as usize <= hall_number_bound(q);
    let slice_cost = gaussian_estimate(dz.d1, dy.d1, q)
        .saturating_mul(gaussian_estimate(dz.d2, dy.d2, q))
        .saturating_mul(4);
    let use_ext = e <= EXT_ENUMERATION_BOUND
        && (ext_cost <= EXT_PREFERRED || !within_slice_bound || ext_cost <= slice_cost);
    if use_ext {
        // Riedtmann: F = |Ext(X,Y)_Z| a_Z / (|Hom(X,Y)| a_X a_Y)
        let census = ext_census(x, y, q)?;
        let denom = BigInt::from(q).pow(census.hom as u32) * aut(x, q) * aut(y, q);
        let mut out = Vec::new();
        for (z, &n) in &census.counts {
            let f = BigRational::new(BigInt::from(n) * aut(z, q), denom.clone());
            debug_assert!(f.is_integer());
            out.push((z.clone(), f.to_integer()));
        }
        return Ok(out);
    }
    if !within_slice_bound {
        return Err(Error::TooLarge {
            what: format!("dim Ext^1({x}, {y})"),
            size: e,
            bound: EXT_ENUMERATION_BOUND,
        });
    }
    let mut out = Vec::new();
    for z in enumerate_iso_classes(dz, q) {
        let s = slice(&z, dy, q)?;
        if let Some(&f) = s.get(&(x.clone(), y.clone())) {
            out.push((z, BigInt::from(f)));
        }
    }
    Ok(out)
}

/// Number of cached products, slices and automorphism counts.
pub fn cache_sizes() -> (usize, usize, usize) {
    (PRODUCTS.lock().len(), SLICES.lock().len(), AUTS.lock().len())
}
