//! Dense matrices over a prime field.

use std::fmt;

use crate::error::{Error, Result};

/// Prime fields supported by the engine.
pub const PRIMES: [u32; 4] = [2, 3, 5, 7];

pub fn check_prime(q: u32) -> Result<()> {
    if PRIMES.contains(&q) {
        Ok(())
    } else {
        Err(Error::BadPrime(q))
    }
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv_mod(a: u8, q: u32) -> u8 {
    debug_assert!(a != 0);
    let mut r = 1u32;
    for _ in 0..q - 2 {
        r = r * a as u32 % q;
    }
    r as u8
}

#[inline]
pub fn add_mod(a: u8, b: u8, q: u32) -> u8 {
    ((a as u32 + b as u32) % q) as u8
}

#[inline]
pub fn mul_mod(a: u8, b: u8, q: u32) -> u8 {
    ((a as u32 * b as u32) % q) as u8
}

#[inline]
pub fn neg_mod(a: u8, q: u32) -> u8 {
    ((q - a as u32) % q) as u8
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    q: u32,
    data: Vec<u8>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.q, self.to_rows())
    }
}

impl FqMatrix {
    pub fn zeros(rows: usize, cols: usize, q: u32) -> Self {
        Self {
            rows,
            cols,
            q,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, q: u32) -> Self {
        let mut m = Self::zeros(n, n, q);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Entries are reduced mod `q`.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize, q: u32) -> Self {
        let mut m = Self::zeros(rows.len(), cols, q);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x.rem_euclid(q as i64) as u8);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let q = self.q;
        let mut out = Self::zeros(self.rows, o.cols, q);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let x = add_mod(out.get(i, j), mul_mod(a, o.get(k, j), q), q);
                    out.set(i, j, x);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = 0u32;
                for (j, &x) in v.iter().enumerate() {
                    s += self.get(i, j) as u32 * x as u32;
                }
                (s % self.q) as u8
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Places `blk` with its top-left corner at `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, blk: &Self) {
        for i in 0..blk.rows {
            for j in 0..blk.cols {
                self.set(r + i, c + j, blk.get(i, j));
            }
        }
    }

    pub fn block_diag(blocks: &[&Self], q: u32) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols, q);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let q = self.q;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), q);
            if inv != 1 {
                for j in c..self.cols {
                    let x = mul_mod(self.get(r, j), inv, q);
                    self.set(r, j, x);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                let nf = neg_mod(f, q);
                for j in c..self.cols {
                    let x = add_mod(self.get(i, j), mul_mod(nf, self.get(r, j), q), q);
                    self.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form with zero rows removed, and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel `{x : M x = 0}`, one vector per row.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let q = self.q;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; self.cols];
            v[f] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = neg_mod(r.get(i, f), q);
            }
            basis.push(v);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u8]) -> Option<Vec<u8>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1, self.q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u8; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, self.cols);
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}
