//! Hom, Aut and Ext counts, extension censuses and Hall numbers.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use rayon::prelude::*;

use super::classes::{euler_dims, DimVec};
use super::iso::{Indec, IsoClass};
use super::rep::{canonical_indec, canonical_rep, decompose, Rep};
use crate::error::{Error, Result};
use crate::fq::{for_each_subspace, for_each_superspace, ClosedPoint, FqMatrix};

/// Default bound on `dim End` for exhaustive automorphism counting.
pub const AUT_ENUMERATION_BOUND: usize = 9;

/// Largest total dimension of the middle term for subspace-enumerated Hall
/// numbers at a given `q`.
pub fn hall_number_bound(q: u32) -> usize {
    match q {
        2 => 12,
        3 => 8,
        5 => 6,
        _ => 5,
    }
}

/// Coefficient matrix of the intertwiner equations
/// `f2 A_X = A_Y f1`, `f2 B_X = B_Y f1` in the unknowns `(f1, f2)`.
fn intertwiner_system(x: &Rep, y: &Rep) -> FqMatrix {
    let q = x.q();
    let (x1, x2) = (x.dim.d1 as usize, x.dim.d2 as usize);
    let (y1, y2) = (y.dim.d1 as usize, y.dim.d2 as usize);
    let n1 = y1 * x1;
    let mut m = FqMatrix::zeros(2 * y2 * x1, n1 + y2 * x2, q);
    for (s, (ax, ay)) in [(&x.a, &y.a), (&x.b, &y.b)].into_iter().enumerate() {
        for r in 0..y2 {
            for c in 0..x1 {
                let row = s * y2 * x1 + r * x1 + c;
                for k in 0..x2 {
                    // + f2[r][k] * AX[k][c]
                    let col = n1 + r * x2 + k;
                    let v = crate::fq::add_mod(m.get(row, col), ax.get(k, c), q);
                    m.set(row, col, v);
                }
                for k in 0..y1 {
                    // - AY[r][k] * f1[k][c]
                    let col = k * x1 + c;
                    let v = crate::fq::add_mod(m.get(row, col), crate::fq::neg_mod(ay.get(r, k), q), q);
                    m.set(row, col, v);
                }
            }
        }
    }
    m
}

/// `dim Hom(x, y)` for concrete representations.
pub fn hom_dim_reps(x: &Rep, y: &Rep) -> usize {
    intertwiner_system(x, y).nullity()
}

type HomKey = (Indec, Indec, u32);
static HOM_CACHE: Lazy<Mutex<HashMap<HomKey, usize>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn hom_indec(x: &Indec, y: &Indec, q: u32) -> usize {
    let key = (x.clone(), y.clone(), q);
    if let Some(&h) = HOM_CACHE.lock().get(&key) {
        return h;
    }
    let h = hom_dim_reps(&canonical_indec(x, q), &canonical_indec(y, q));
    HOM_CACHE.lock().insert(key, h);
    h
}

/// `dim Hom(X, Y)`, additive over indecomposable summands.
pub fn hom_dim(x: &IsoClass, y: &IsoClass, q: u32) -> usize {
    let ys = y.summands();
    x.summands()
        .iter()
        .map(|(a, m)| {
            ys.iter()
                .map(|(b, n)| (*m as usize) * (*n as usize) * hom_indec(a, b, q))
                .sum::<usize>()
        })
        .sum()
}

/// `dim Ext^1(X, Y) = dim Hom(X, Y) - <X, Y>`.
pub fn ext_dim(x: &IsoClass, y: &IsoClass, q: u32) -> usize {
    (hom_dim(x, y, q) as i64 - euler_dims(x.dim(), y.dim())) as usize
}

pub fn end_dim(x: &IsoClass, q: u32) -> usize {
    hom_dim(x, x, q)
}

/// `|Aut X|` by enumerating every endomorphism of the canonical model and
/// testing invertibility; fails when `dim End X` exceeds `bound`.
pub fn aut_count_bounded(x: &IsoClass, q: u32, bound: usize) -> Result<BigInt> {
    let r = canonical_rep(x, q);
    let basis = intertwiner_system(&r, &r).kernel();
    if basis.len() > bound {
        return Err(Error::TooLarge {
            what: format!("dim End({x})"),
            size: basis.len(),
            bound,
        });
    }
    let (d1, d2) = (r.dim.d1 as usize, r.dim.d2 as usize);
    let n = basis.first().map_or(0, |v| v.len());
    let total = (q as u64).pow(basis.len() as u32);
    let count: u64 = (0..total)
        .into_par_iter()
        .filter(|&idx| {
            let mut coeffs = Vec::with_capacity(basis.len());
            let mut t = idx;
            for _ in 0..basis.len() {
                coeffs.push((t % q as u64) as u8);
                t /= q as u64;
            }
            let mut f = vec![0u8; n];
            for (c, v) in coeffs.iter().zip(&basis) {
                for (fi, vi) in f.iter_mut().zip(v) {
                    *fi = crate::fq::add_mod(*fi, crate::fq::mul_mod(*c, *vi, q), q);
                }
            }
            let f1: Vec<Vec<i64>> = (0..d1)
                .map(|i| (0..d1).map(|j| f[i * d1 + j] as i64).collect())
                .collect();
            let f2: Vec<Vec<i64>> = (0..d2)
                .map(|i| (0..d2).map(|j| f[d1 * d1 + i * d2 + j] as i64).collect())
                .collect();
            FqMatrix::from_rows(&f1, d1, q).is_invertible()
                && FqMatrix::from_rows(&f2, d2, q).is_invertible()
        })
        .count() as u64;
    Ok(BigInt::from(count))
}

/// `|Aut X|` by exhaustive enumeration with the default bound.
pub fn aut_count(x: &IsoClass, q: u32) -> Result<BigInt> {
    aut_count_bounded(x, q, AUT_ENUMERATION_BOUND)
}

/// `|Aut X| = q^{dim End X} prod_i prod_{j=1}^{m_i} (1 - q^{-d_i j})` where
/// `X = ⊕ X_i^{m_i}` and `End(X_i)/rad` has `q^{d_i}` elements.
pub fn aut_count_fast(x: &IsoClass, q: u32) -> BigInt {
    let qb = BigInt::from(q);
    let mut power = end_dim(x, q) as i64;
    let mut out = BigInt::one();
    for (ind, m) in x.summands() {
        let d = ind.top_degree();
        for j in 1..=m {
            let e = d * j;
            out *= Pow::pow(&qb, e) - BigInt::one();
            power -= e as i64;
        }
    }
    debug_assert!(power >= 0);
    out * Pow::pow(&qb, power as u32)
}

/// Extensions `0 -> Y -> Z -> X -> 0` grouped by the middle term.
#[derive(Clone, Debug)]
pub struct ExtCensus {
    pub hom: usize,
    pub ext: usize,
    /// `|Ext^1(X, Y)_Z|` for each middle term `Z`.
    pub counts: BTreeMap<IsoClass, u64>,
}

type ExtKey = (IsoClass, IsoClass, u32);
static EXT_CACHE: Lazy<Mutex<HashMap<ExtKey, Arc<ExtCensus>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Largest `dim Ext^1` enumerated by `ext_census`.
pub const EXT_ENUMERATION_BOUND: usize = 26;

/// Enumerates a complement of the coboundaries in the cocycle space of
/// `Ext^1(X, Y)` and decomposes every extension.
pub fn ext_census(x: &IsoClass, y: &IsoClass, q: u32) -> Result<Arc<ExtCensus>> {
    let key = (x.clone(), y.clone(), q);
    if let Some(c) = EXT_CACHE.lock().get(&key) {
        return Ok(c.clone());
    }
    let c = Arc::new(compute_ext_census(x, y, q)?);
    EXT_CACHE.lock().insert(key, c.clone());
    Ok(c)
}

fn compute_ext_census(x: &IsoClass, y: &IsoClass, q: u32) -> Result<ExtCensus> {
    let rx = canonical_rep(x, q);
    let ry = canonical_rep(y, q);
    let (x1, x2) = (rx.dim.d1 as usize, rx.dim.d2 as usize);
    let (y1, y2) = (ry.dim.d1 as usize, ry.dim.d2 as usize);
    let ncoc = 2 * y2 * x1;
    let nunk = y1 * x1 + y2 * x2;
    // delta(phi1, phi2) = (A_Y phi1 - phi2 A_X, B_Y phi1 - phi2 B_X),
    // one column per unknown, i.e. the negated intertwiner system.
    let delta = intertwiner_system(&rx, &ry);
    let rank = delta.rank();
    let hom = nunk - rank;
    let ext = ncoc - rank;
    if ext > EXT_ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            what: format!("dim Ext^1({x}, {y})"),
            size: ext,
            bound: EXT_ENUMERATION_BOUND,
        });
    }
    let (_, pivots) = delta.transpose().rref();
    let free: Vec<usize> = (0..ncoc).filter(|c| !pivots.contains(c)).collect();
    debug_assert_eq!(free.len(), ext);
    let zd1 = y1 + x1;
    let zd2 = y2 + x2;
    let base_a = {
        let mut m = FqMatrix::zeros(zd2, zd1, q);
        m.set_block(0, 0, &ry.a);
        m.set_block(y2, y1, &rx.a);
        m
    };
    let base_b = {
        let mut m = FqMatrix::zeros(zd2, zd1, q);
        m.set_block(0, 0, &ry.b);
        m.set_block(y2, y1, &rx.b);
        m
    };
    let total = (q as u64).pow(ext as u32);
    let counts = (0..total)
        .into_par_iter()
        .fold(HashMap::<IsoClass, u64>::new, |mut acc, idx| {
            let (mut a, mut b) = (base_a.clone(), base_b.clone());
            let mut t = idx;
            for &coord in &free {
                let v = (t % q as u64) as u8;
                t /= q as u64;
                if v == 0 {
                    continue;
                }
                let (s, rest) = (coord / (y2 * x1), coord % (y2 * x1));
                let (r, c) = (rest / x1, rest % x1);
                let m = if s == 0 { &mut a } else { &mut b };
                m.set(r, y1 + c, v);
            }
            *acc.entry(decompose(&Rep::new(a, b))).or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(ExtCensus {
        hom,
        ext,
        counts: counts.into_iter().collect(),
    })
}

/// Coordinates of `v` in the row space basis `u` (reduced echelon form
/// with the given pivots); `v` must lie in the row space.
fn coords_in(v: &[u8], pivots: &[usize]) -> Vec<u8> {
    pivots.iter().map(|&p| v[p]).collect()
}

/// Image of `v` in `F^n / rowspace(u)`, in the coordinates of the
/// non-pivot columns.
fn quotient_coords(v: &[u8], u: &FqMatrix, pivots: &[usize], free: &[usize]) -> Vec<u8> {
    let q = u.q();
    let mut w = v.to_vec();
    for (i, &p) in pivots.iter().enumerate() {
        let f = w[p];
        if f == 0 {
            continue;
        }
        for j in 0..w.len() {
            let x = crate::fq::add_mod(w[j], crate::fq::neg_mod(crate::fq::mul_mod(f, u.get(i, j), q), q), q);
            w[j] = x;
        }
    }
    free.iter().map(|&c| w[c]).collect()
}

fn column(m: &FqMatrix, j: usize) -> Vec<u8> {
    (0..m.rows()).map(|i| m.get(i, j)).collect()
}

fn matrix_from_columns(cols: &[Vec<u8>], rows: usize, q: u32) -> FqMatrix {
    let mut m = FqMatrix::zeros(rows, cols.len(), q);
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

/// Visits every subrepresentation `U` of `r` with dimension `d`, passing
/// the subrepresentation and the quotient `r / U`.
pub fn for_each_subrep(r: &Rep, d: DimVec, f: &mut dyn FnMut(&Rep, &Rep)) {
    let q = r.q();
    let (z1, z2) = (r.dim.d1 as usize, r.dim.d2 as usize);
    let (u1d, u2d) = (d.d1 as usize, d.d2 as usize);
    if u1d > z1 || u2d > z2 {
        return;
    }
    for_each_subspace(z1, u1d, q, &mut |u1, piv1| {
        // S = A U1 + B U1 must lie in U2
        let mut img = FqMatrix::zeros(2 * u1d, z2, q);
        for i in 0..u1d {
            let v = u1.row(i);
            let av = r.a.mul_vec(v);
            let bv = r.b.mul_vec(v);
            for j in 0..z2 {
                img.set(2 * i, j, av[j]);
                img.set(2 * i + 1, j, bv[j]);
            }
        }
        let (s, spiv) = img.rref();
        let free1: Vec<usize> = (0..z1).filter(|c| !piv1.contains(c)).collect();
        for_each_superspace(&s, &spiv, u2d, &mut |u2, piv2| {
            let free2: Vec<usize> = (0..z2).filter(|c| !piv2.contains(c)).collect();
            let mut sub_a = Vec::new();
            let mut sub_b = Vec::new();
            for i in 0..u1d {
                let v = u1.row(i);
                sub_a.push(coords_in(&r.a.mul_vec(v), piv2));
                sub_b.push(coords_in(&r.b.mul_vec(v), piv2));
            }
            let mut quo_a = Vec::new();
            let mut quo_b = Vec::new();
            for &c in &free1 {
                quo_a.push(quotient_coords(&column(&r.a, c), u2, piv2, &free2));
                quo_b.push(quotient_coords(&column(&r.b, c), u2, piv2, &free2));
            }
            let sub = Rep::new(
                matrix_from_columns(&sub_a, u2d, q),
                matrix_from_columns(&sub_b, u2d, q),
            );
            let quo = Rep::new(
                matrix_from_columns(&quo_a, z2 - u2d, q),
                matrix_from_columns(&quo_b, z2 - u2d, q),
            );
            f(&sub, &quo);
        });
    });
}

/// `F^Z_{X,Y}`: the number of subrepresentations `U` of `Z` with `U ≅ Y`
/// and `Z/U ≅ X`, by subspace enumeration.
pub fn hall_number(z: &IsoClass, x: &IsoClass, y: &IsoClass, q: u32) -> Result<u64> {
    let (dz, dx, dy) = (z.dim(), x.dim(), y.dim());
    if dz != dx + dy {
        return Ok(0);
    }
    let bound = hall_number_bound(q);
    if dz.total() as usize > bound {
        return Err(Error::TooLarge {
            what: format!("total dimension of {z}"),
            size: dz.total() as usize,
            bound,
        });
    }
    let r = canonical_rep(z, q);
    let mut count = 0u64;
    for_each_subrep(&r, dy, &mut |sub, quo| {
        if decompose(sub) == *y && decompose(quo) == *x {
            count += 1;
        }
    });
    Ok(count)
}

type RegKey = (u32, u32);
static REGULAR_CACHE: Lazy<Mutex<HashMap<RegKey, Arc<Vec<IsoClass>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All regular classes of dimension `(r, r)`.
pub fn regular_classes(r: u32, q: u32) -> Arc<Vec<IsoClass>> {
    if let Some(v) = REGULAR_CACHE.lock().get(&(r, q)) {
        return v.clone();
    }
    let points: Vec<ClosedPoint> = (1..=r as usize)
        .flat_map(|d| ClosedPoint::all_of_degree(d, q))
        .collect();
    let mut out = Vec::new();
    fn rec(points: &[ClosedPoint], left: u32, cur: &mut IsoClass, out: &mut Vec<IsoClass>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let Some((pt, rest)) = points.split_first() else {
            return;
        };
        let deg = pt.degree() as u32;
        for size in 0..=left / deg {
            for part in partitions(size, size) {
                let mut next = cur.clone();
                if !part.is_empty() {
                    next.r.insert(pt.clone(), part);
                }
                rec(rest, left - size * deg, &mut next, out);
            }
        }
    }
    rec(&points, r, &mut IsoClass::zero(), &mut out);
    out.sort();
    let out = Arc::new(out);
    REGULAR_CACHE.lock().insert((r, q), out.clone());
    out
}

/// Every isomorphism class of dimension `d`, in canonical order.
pub fn enumerate_iso_classes(d: DimVec, q: u32) -> Vec<IsoClass> {
    let mut singular: Vec<Indec> = Vec::new();
    for n in 0..=d.d1.max(d.d2) {
        let p = Indec::P(n);
        if p.dim().le(&d) {
            singular.push(p);
        }
        let i = Indec::I(n);
        if i.dim().le(&d) {
            singular.push(i);
        }
    }
    let mut out = Vec::new();
    fn rec(
        cands: &[Indec],
        left: DimVec,
        cur: &IsoClass,
        q: u32,
        out: &mut Vec<IsoClass>,
    ) {
        let Some((x, rest)) = cands.split_first() else {
            if left.d1 == left.d2 {
                for reg in regular_classes(left.d1, q).iter() {
                    out.push(cur.direct_sum(reg));
                }
            }
            return;
        };
        let xd = x.dim();
        let mut m = 0;
        let mut c = cur.clone();
        let mut l = left;
        loop {
            rec(rest, l, &c, q, out);
            match l.checked_sub(&xd) {
                Some(nl) => {
                    l = nl;
                    m += 1;
                    c = cur.clone();
                    c.add_indec(x, m);
                }
                None => break,
            }
        }
    }
    rec(&singular, d, &IsoClass::zero(), q, &mut out);
    out.sort();
    out
}
