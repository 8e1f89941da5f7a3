//! Enumeration of subspaces of `F_q^n` as reduced row echelon bases.

use super::matrix::FqMatrix;

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

fn combinations(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Calls `f` once per `k`-dimensional subspace of `F_q^n`, passing its
/// `k x n` reduced row echelon basis and pivot columns.
pub fn for_each_subspace(n: usize, k: usize, q: u32, f: &mut dyn FnMut(&FqMatrix, &[usize])) {
    if k > n {
        return;
    }
    combinations(n, k, &mut |pivots: &[usize]| {
        let mut free = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..n {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let mut m = FqMatrix::zeros(k, n, q);
        for (i, &p) in pivots.iter().enumerate() {
            m.set(i, p, 1);
        }
        let mut digits = vec![0u8; free.len()];
        loop {
            for (t, &(i, j)) in free.iter().enumerate() {
                m.set(i, j, digits[t]);
            }
            f(&m, pivots);
            // odometer increment
            let mut t = 0;
            loop {
                if t == digits.len() {
                    return;
                }
                digits[t] += 1;
                if (digits[t] as u32) < q {
                    break;
                }
                digits[t] = 0;
                t += 1;
            }
        }
    });
}

/// All `k`-dimensional subspaces of `F_q^n`.
pub fn enumerate_subspaces(n: usize, k: usize, q: u32) -> Vec<FqMatrix> {
    let mut out = Vec::new();
    for_each_subspace(n, k, q, &mut |m, _| out.push(m.clone()));
    out
}

/// Calls `f` once per `k`-dimensional subspace containing the row space of
/// `s` (given in reduced row echelon form with pivot columns `s_pivots`).
pub fn for_each_superspace(
    s: &FqMatrix,
    s_pivots: &[usize],
    k: usize,
    f: &mut dyn FnMut(&FqMatrix, &[usize]),
) {
    let n = s.cols();
    let q = s.q();
    let d = s_pivots.len();
    if k < d || k > n {
        return;
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !s_pivots.contains(c)).collect();
    for_each_subspace(n - d, k - d, q, &mut |w, _| {
        let mut u = FqMatrix::zeros(k, n, q);
        for i in 0..d {
            for j in 0..n {
                u.set(i, j, s.get(i, j));
            }
        }
        for i in 0..w.rows() {
            for (t, &c) in free_cols.iter().enumerate() {
                u.set(d + i, c, w.get(i, t));
            }
        }
        let (u, piv) = u.rref();
        f(&u, &piv);
    });
}
