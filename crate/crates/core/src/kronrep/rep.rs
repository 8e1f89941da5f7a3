//! Concrete representations: canonical models and pencil decomposition.

use std::collections::BTreeMap;

use super::classes::DimVec;
use super::iso::{Indec, IsoClass};
use crate::fq::{ClosedPoint, FqMatrix, FqPoly};

/// Two linear maps `A, B: F_q^{d1} -> F_q^{d2}`, as `d2 x d1` matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    pub dim: DimVec,
    pub a: FqMatrix,
    pub b: FqMatrix,
}

impl Rep {
    pub fn new(a: FqMatrix, b: FqMatrix) -> Self {
        assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
        Self {
            dim: DimVec::new(a.cols() as u32, a.rows() as u32),
            a,
            b,
        }
    }

    pub fn q(&self) -> u32 {
        self.a.q()
    }

    pub fn direct_sum(reps: &[&Rep], q: u32) -> Rep {
        let a: Vec<&FqMatrix> = reps.iter().map(|r| &r.a).collect();
        let b: Vec<&FqMatrix> = reps.iter().map(|r| &r.b).collect();
        Rep::new(FqMatrix::block_diag(&a, q), FqMatrix::block_diag(&b, q))
    }

    /// The representation with both arrow matrices transposed.
    pub fn dual(&self) -> Rep {
        Rep::new(self.a.transpose(), self.b.transpose())
    }
}

fn companion_matrix(p: &FqPoly) -> FqMatrix {
    let rows: Vec<Vec<i64>> = p
        .companion()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect();
    FqMatrix::from_rows(&rows, p.degree().unwrap(), p.q())
}

/// Canonical model of an indecomposable.
pub fn canonical_indec(x: &Indec, q: u32) -> Rep {
    match x {
        Indec::P(n) => {
            let n = *n as usize;
            let mut a = FqMatrix::zeros(n + 1, n, q);
            let mut b = FqMatrix::zeros(n + 1, n, q);
            for i in 0..n {
                a.set(i, i, 1);
                b.set(i + 1, i, 1);
            }
            Rep::new(a, b)
        }
        Indec::I(n) => {
            let n = *n as usize;
            let mut a = FqMatrix::zeros(n, n + 1, q);
            let mut b = FqMatrix::zeros(n, n + 1, q);
            for i in 0..n {
                a.set(i, i, 1);
                b.set(i, i + 1, 1);
            }
            Rep::new(a, b)
        }
        Indec::T(ClosedPoint::Finite(p), t) => {
            let c = companion_matrix(&p.pow(*t));
            Rep::new(FqMatrix::identity(c.rows(), q), c)
        }
        Indec::T(ClosedPoint::Infinity, t) => {
            let c = companion_matrix(&FqPoly::y(q).pow(*t));
            Rep::new(c, FqMatrix::identity(*t as usize, q))
        }
    }
}

/// Block-diagonal model assembled from canonical indecomposables.
pub fn canonical_rep(c: &IsoClass, q: u32) -> Rep {
    let mut blocks = Vec::new();
    for (x, m) in c.summands() {
        let r = canonical_indec(&x, q);
        for _ in 0..m {
            blocks.push(r.clone());
        }
    }
    let refs: Vec<&Rep> = blocks.iter().collect();
    Rep::direct_sum(&refs, q)
}

/// Dimension of the space of polynomial solutions of degree `< k` of
/// `(A + x B) u(x) = 0`.
fn poly_kernel_dim(a: &FqMatrix, b: &FqMatrix, k: usize) -> usize {
    let (d2, d1) = (a.rows(), a.cols());
    let q = a.q();
    let mut m = FqMatrix::zeros((k + 1) * d2, k * d1, q);
    for i in 0..k {
        m.set_block(i * d2, i * d1, a);
        m.set_block((i + 1) * d2, i * d1, b);
    }
    m.nullity()
}

/// Multiplicities of column minimal indices `eps` of the pencil, given the
/// number of such blocks.
fn minimal_indices(a: &FqMatrix, b: &FqMatrix, blocks: usize) -> BTreeMap<u32, u32> {
    let mut out = BTreeMap::new();
    if blocks == 0 {
        return out;
    }
    // f(k) = sum_j max(0, k - eps_j); the second difference counts eps.
    let mut f = vec![0usize, 0usize];
    let mut found = 0;
    let mut k = 1;
    while found < blocks {
        f.push(poly_kernel_dim(a, b, k));
        let c = f[k + 1] + f[k - 1] - 2 * f[k];
        if c > 0 {
            out.insert((k - 1) as u32, c as u32);
            found += c;
        }
        k += 1;
    }
    out
}

/// Diagonalizes a matrix over `F_q[y]` by unimodular row and column
/// operations and returns its nonzero diagonal entries.
fn diagonal_entries(mut m: Vec<Vec<FqPoly>>) -> Vec<FqPoly> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // bring a nonzero entry of least degree to (t, t)
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if let Some(d) = m[i][j].degree() {
                        if best.is_none_or(|(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, bi, bj)) = best else {
                return out;
            };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let piv = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let (quo, r) = m[i][t].divrem(&piv);
                for j in t..cols {
                    let x = m[i][j].sub(&quo.mul(&m[t][j]));
                    m[i][j] = x;
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let (quo, r) = m[t][j].divrem(&piv);
                for i in t..rows {
                    let x = m[i][j].sub(&quo.mul(&m[i][t]));
                    m[i][j] = x;
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        out.push(m[t][t].clone());
    }
    out
}

/// `s A - B` as a polynomial matrix in `s`.
fn pencil(a: &FqMatrix, b: &FqMatrix, s_on_a: bool) -> Vec<Vec<FqPoly>> {
    let q = a.q();
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| {
                    let (x, y) = (a.get(i, j), b.get(i, j));
                    // s_on_a: s*A - B; otherwise A - s*B
                    let c = if s_on_a {
                        vec![crate::fq::neg_mod(y, q), x]
                    } else {
                        vec![x, crate::fq::neg_mod(y, q)]
                    };
                    FqPoly::new(c, q)
                })
                .collect()
        })
        .collect()
}

/// The isomorphism class of a representation, read off from the minimal
/// indices and elementary divisors of the pencil `xA + yB`.
pub fn decompose(r: &Rep) -> IsoClass {
    let mut c = IsoClass::zero();
    if r.dim.is_zero() {
        return c;
    }
    let finite = diagonal_entries(pencil(&r.a, &r.b, true));
    let generic_rank = finite.len();
    let d1 = r.dim.d1 as usize;
    let d2 = r.dim.d2 as usize;
    for (n, m) in minimal_indices(&r.a, &r.b, d1 - generic_rank) {
        c.add_indec(&Indec::I(n), m);
    }
    let (at, bt) = (r.a.transpose(), r.b.transpose());
    for (n, m) in minimal_indices(&at, &bt, d2 - generic_rank) {
        c.add_indec(&Indec::P(n), m);
    }
    for e in finite {
        if e.degree() == Some(0) {
            continue;
        }
        for (p, t) in e.factor() {
            c.add_indec(&Indec::T(ClosedPoint::Finite(p), t), 1);
        }
    }
    // regular divisors at infinity: powers of s in the divisors of A - sB
    let regular_dim = c.dim();
    if regular_dim != r.dim {
        for e in diagonal_entries(pencil(&r.a, &r.b, false)) {
            let t = e.coeffs().iter().take_while(|&&x| x == 0).count() as u32;
            if t > 0 {
                c.add_indec(&Indec::T(ClosedPoint::Infinity, t), 1);
            }
        }
    }
    debug_assert_eq!(c.dim(), r.dim, "decomposition lost dimension");
    c
}
