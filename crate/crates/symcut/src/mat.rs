//! Dense exact linear algebra over `BigRational`.
//!
//! Everything here works on matrices of dimension at most rank + 1 (nine in
//! practice), so the implementation favors clarity over asymptotics:
//! Gauss-Jordan elimination with the first nonzero pivot, no pivot scaling.

use crate::Rat;
use num_traits::Zero;

/// `a * v` for a rectangular matrix and a column vector.
pub fn mat_vec(a: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(x, y)| x * y)
                .fold(Rat::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// Plain dot product of two vectors.
pub fn dot(u: &[Rat], v: &[Rat]) -> Rat {
    u.iter()
        .zip(v)
        .map(|(x, y)| x * y)
        .fold(Rat::zero(), |acc, t| acc + t)
}

/// `u^T a v`, the bilinear form given by `a`.
pub fn bilinear(a: &[Vec<Rat>], u: &[Rat], v: &[Rat]) -> Rat {
    dot(u, &mat_vec(a, v))
}

/// Solves the square system `a x = rhs` exactly.
///
/// Returns `None` when `a` is singular. The inputs are copied; `n^3` rational
/// operations on matrices this small are far from any hot path except vertex
/// enumeration, which calls this tens of thousands of times and still
/// finishes in seconds.
pub fn solve(a: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && rhs.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col][col..].iter_mut() {
            *x = &*x / &p;
        }
        let pivot_row = m[col].clone();
        for (row, r) in m.iter_mut().enumerate() {
            if row != col && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r[col..].iter_mut().zip(&pivot_row[col..]) {
                    let sub = &f * y;
                    *x = &*x - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Exact inverse of a square matrix, or `None` when singular.
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut unit = vec![Rat::zero(); n];
        unit[j] = crate::rat(1);
        cols.push(solve(a, &unit)?);
    }
    // cols[j] is the j-th column of the inverse; transpose into row order.
    let mut inv = vec![vec![Rat::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            inv[i][j] = x.clone();
        }
    }
    Some(inv)
}

/// Rank of the affine hull of a point set, i.e. the linear rank of the
/// differences from the first point. Used to check facet dimensions.
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for p in rest {
        let mut v: Vec<Rat> = p.iter().zip(first).map(|(a, b)| a - b).collect();
        // Reduce v against the triangular basis collected so far.
        for b in &basis {
            let lead = b.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = &v[lead] / &b[lead];
                for (x, y) in v.iter_mut().zip(b) {
                    let sub = &f * y;
                    *x = &*x - sub;
                }
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            basis.push(v);
            basis.sort_by_key(|b| b.iter().position(|x| !x.is_zero()).unwrap());
        }
    }
    basis.len()
}
