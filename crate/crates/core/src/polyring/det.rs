use std::cmp::Ordering;

use super::MPoly;

fn pivot_cost(p: &MPoly) -> (usize, Option<super::Monomial>) {
    (p.num_terms(), p.leading().map(|(m, _)| m.clone()))
}

/// Fraction-free Bareiss elimination over the polynomial ring.
///
/// Each step picks, among the rows with a non-zero entry in the pivot column,
/// the one whose entry has the fewest terms and then the smallest leading
/// monomial. All divisions are exact. A column with no non-zero entry means
/// the determinant is zero, so no cofactor fallback is needed.
pub fn det_poly(matrix: &[Vec<MPoly>]) -> MPoly {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return MPoly::one();
    }
    let mut a: Vec<Vec<MPoly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n {
        let best = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by(|&i, &j| {
                let (ci, cj) = (pivot_cost(&a[i][k]), pivot_cost(&a[j][k]));
                ci.0.cmp(&cj.0).then_with(|| ci.1.cmp(&cj.1)).then(Ordering::Equal)
            });
        let Some(p) = best else {
            return MPoly::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_divide(&prev)
                    .expect("Bareiss division is exact");
            }
            a[i][k] = MPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Laplace expansion column by column, memoised over the set of rows used.
///
/// Costs `n·2^(n-1)` products and no division; it is the fast path for model
/// matrices, whose columns each involve a single variable.
pub fn det_by_columns(matrix: &[Vec<MPoly>]) -> MPoly {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(n < 32, "matrix too large for subset expansion");
    let mut level: Vec<(u32, MPoly)> = vec![(0, MPoly::one())];
    for col in 0..n {
        let mut next: std::collections::BTreeMap<u32, MPoly> = Default::default();
        for (mask, val) in &level {
            for (row, r) in matrix.iter().enumerate() {
                if mask & (1 << row) != 0 || r[col].is_zero() {
                    continue;
                }
                let above = (mask >> (row + 1)).count_ones();
                next.entry(mask | (1 << row))
                    .or_default()
                    .add_product(val, &r[col], above % 2 == 1);
            }
        }
        level = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    }
    level.pop().map(|(_, v)| v).unwrap_or_default()
}
