//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subword_core::polyring::{q, x_var, MPoly, Monomial, Q};
use subword_core::tensors::ParameterTensor;
use subword_core::Word;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    if rng.random_bool(0.25) {
        return Q::zero();
    }
    q(rng.random_range(-4..=4), rng.random_range(1..=3))
}

pub fn random_tensor(rng: &mut ChaCha8Rng, rows: usize, letters: usize, d: usize) -> ParameterTensor {
    let m: Vec<Vec<Q>> = (0..rows)
        .map(|_| (0..letters * d).map(|_| random_rational(rng)).collect())
        .collect();
    ParameterTensor::from_rational_rows(&m, letters, d).unwrap()
}

/// `det M(v, P)` by dense Laplace expansion over the columns, in exact
/// integer arithmetic after clearing denominators column by column.
///
/// Coefficients are stored densely, indexed by the exponent vector of
/// `x_1, …, x_l` in base `d`; nothing here uses Schur functions or
/// Vandermonde factors.
pub fn dense_model_det(v: &Word, p: &ParameterTensor) -> MPoly {
    let n = v.len();
    let d = p.d();
    let (arr, scale) = dense_model_det_int(v, p);
    let scale = Q::from_integer(scale);
    let mut out = MPoly::zero();
    for (mut idx, &c) in arr.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut pairs = Vec::new();
        for l in (1..=n).rev() {
            let e = idx % d;
            idx /= d;
            if e > 0 {
                pairs.push((x_var(l), e as u16));
            }
        }
        out += &MPoly::term(Q::from_integer(c.into()) / &scale, Monomial::from_pairs(pairs));
    }
    out
}

/// `(a, s)` with `det M(v, P) = a / s`, `a` dense as in [`dense_model_det`].
pub fn dense_model_det_int(v: &Word, p: &ParameterTensor) -> (Vec<i128>, BigInt) {
    let n = v.len();
    let d = p.d();
    let pm = p.rational_matrix().expect("numeric tensor");
    assert_eq!(pm.len(), n);
    let mut scale = BigInt::one();
    // cols[l][k][i]: integer coefficient of x_l^k in row i
    let cols: Vec<Vec<Vec<i128>>> = v
        .letters()
        .iter()
        .map(|&s| {
            let base = (s as usize - 1) * d;
            let lcm = (0..d)
                .flat_map(|k| pm.iter().map(move |r| r[base + k].denom().clone()))
                .fold(BigInt::one(), |a, b| a.lcm(&b));
            scale *= &lcm;
            (0..d)
                .map(|k| {
                    pm.iter()
                        .map(|r| (r[base + k].clone() * Q::from_integer(lcm.clone())).to_integer().to_i128().unwrap())
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut level: std::collections::BTreeMap<u32, Vec<i128>> = [(0u32, vec![1i128])].into();
    for (l, col) in cols.iter().enumerate() {
        let size = d.pow(l as u32 + 1);
        let mut next: std::collections::BTreeMap<u32, Vec<i128>> = Default::default();
        for (&mask, arr) in &level {
            for row in 0..n {
                if mask & (1 << row) != 0 {
                    continue;
                }
                let negate = (mask >> (row + 1)).count_ones() % 2 == 1;
                let slot = next.entry(mask | (1 << row)).or_insert_with(|| vec![0; size]);
                for (k, coeffs) in col.iter().enumerate() {
                    let a = if negate { -coeffs[row] } else { coeffs[row] };
                    if a == 0 {
                        continue;
                    }
                    for (idx, &c) in arr.iter().enumerate() {
                        if c != 0 {
                            slot[idx * d + k] += a * c;
                        }
                    }
                }
            }
        }
        level = next;
    }
    let arr = level.into_values().next().unwrap_or_else(|| vec![0; d.pow(n as u32)]);
    (arr, scale)
}

/// `(terms, c)` with `c · f = Σ coeff · x^key`, exponents packed in 4-bit
/// fields (`x_1` highest); `None` if something does not fit.
fn packed_integral(f: &MPoly, n: usize, d: usize) -> Option<(Vec<(u64, i128)>, i128)> {
    let den = f.terms().fold(BigInt::one(), |a, (_, c)| a.lcm(c.denom()));
    let terms = f
        .terms()
        .map(|(m, c)| {
            let mut key = 0u64;
            let mut degree = 0u32;
            for l in 1..=n {
                let e = m.exponent(x_var(l));
                if e as usize >= d {
                    return None;
                }
                degree += e as u32;
                key = (key << 4) | e as u64;
            }
            // a variable other than x_1..x_n
            if degree != m.degree() {
                return None;
            }
            (c * Q::from_integer(den.clone())).to_integer().to_i128().map(|c| (key, c))
        })
        .collect::<Option<_>>()?;
    Some((terms, den.to_i128()?))
}

/// Whether `sign · divisor · sum` equals `det M(v, P)`, multiplying the two
/// factors densely here rather than through the library. `None` when the
/// numbers outgrow `i128`.
pub fn factored_equals_dense(
    v: &Word,
    p: &ParameterTensor,
    sign: i8,
    divisor: &MPoly,
    sum: &MPoly,
) -> Option<bool> {
    let (n, d) = (v.len(), p.d());
    if d > 8 || n > 16 {
        return None;
    }
    let (det, det_scale) = dense_model_det_int(v, p);
    let det_scale = det_scale.to_i128()?;
    let (a, da) = packed_integral(divisor, n, d)?;
    let (b, db) = packed_integral(sum, n, d)?;
    let mut prod = vec![0i128; d.pow(n as u32)];
    let mut stray: std::collections::HashMap<u64, i128> = Default::default();
    for &(ka, ca) in &a {
        for &(kb, cb) in &b {
            // fields hold at most 2(d-1) < 16, so the sum never carries
            let key = ka + kb;
            let t = ca.checked_mul(cb)?;
            let mut idx = 0;
            let mut fits = true;
            for l in (0..n).rev() {
                let e = ((key >> (4 * l)) & 15) as usize;
                fits &= e < d;
                idx = idx * d + e;
            }
            let slot = if fits { &mut prod[idx] } else { stray.entry(key).or_default() };
            *slot = slot.checked_add(t)?;
        }
    }
    let lhs_scale = da.checked_mul(db)?.checked_mul(sign as i128)?;
    for (x, &y) in prod.iter().zip(&det) {
        // sign·x / (da·db) == y / det_scale
        if x.checked_mul(det_scale)? != y.checked_mul(lhs_scale)? {
            return Some(false);
        }
    }
    Some(stray.values().all(|&c| c == 0))
}
