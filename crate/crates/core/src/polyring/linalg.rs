//! Dense linear algebra over ℚ.

use num_traits::{One, Zero};

use super::Q;
use crate::error::{Error, Result};

/// Determinant by Gaussian elimination.
pub fn det_rational(matrix: &[Vec<Q>]) -> Q {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a = matrix.to_vec();
    let mut det = Q::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Q::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Reduced row echelon form and its pivot columns.
pub fn rref(matrix: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut a = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = Q::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(matrix: &[Vec<Q>]) -> usize {
    rref(matrix).1.len()
}

/// A basis of the right kernel `{y : A y = 0}`, one vector per free column.
/// Requires full row rank.
pub fn kernel_basis(matrix: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let (red, pivots) = rref(matrix);
    if pivots.len() < rows {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            expected: rows,
        });
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -red[r][f].clone();
            }
            v
        })
        .collect())
}
