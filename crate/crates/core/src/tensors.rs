//! Parameter tensors, model matrices and the factorisation of their
//! determinants through partial Schur functions.
//!
//! A parameter tensor `P` has entries `p^i_{s,k}` for a row `i < N`, a letter
//! `s` and a degree `k < d`. Viewed as an `N × (n·d)` matrix its columns are
//! `(s, k)` in lexicographic order, with flat 0-based index `(s-1)·d + k`.
//! Column `l` of the model matrix `M(v, P)` is the curve of letter `v_l`
//! evaluated at `x_l`: `M[i][l] = Σ_k p^i_{v_l,k} x_l^k`.
//!
//! For a word `v` with abelian vector `(c_1, …, c_n)`:
//!
//! ```text
//! det M(v, P) = σ(v) · 𝒱(v) · Σ_𝔷 det[P]_𝔷 · 𝒮_{Λ_𝔷, Ω_v}
//! ```
//!
//! where `𝔷` runs over the column sets with exactly `c_i` columns of letter
//! `s_i`, and `Λ_𝔷` are the standard partitions of `𝔷`.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{
    det_by_columns, det_poly, det_rational, format_rational, partial_schur, schur, x_var, MPoly,
    Partition, Q, PARAM_M,
};
use crate::words::{s_sign, AbelianVector, Word};

/// The tensor `p^i_{s,k}`, `i < N`, `s ∈ 1..=n`, `k < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterTensor {
    rows: usize,
    letters: usize,
    d: usize,
    entries: Vec<MPoly>,
}

impl ParameterTensor {
    pub fn zeros(rows: usize, letters: usize, d: usize) -> ParameterTensor {
        ParameterTensor {
            rows,
            letters,
            d,
            entries: vec![MPoly::zero(); rows * letters * d],
        }
    }

    /// From an `N × (n·d)` matrix with columns `(s, k)` in lexicographic order.
    pub fn from_matrix(matrix: Vec<Vec<MPoly>>, letters: usize, d: usize) -> Result<ParameterTensor> {
        if d == 0 || matrix.iter().any(|r| r.len() != letters * d) {
            return Err(Error::Dimension(format!(
                "every row needs {letters}·{d} entries"
            )));
        }
        Ok(ParameterTensor {
            rows: matrix.len(),
            letters,
            d,
            entries: matrix.into_iter().flatten().collect(),
        })
    }

    pub fn from_rational_rows(rows: &[Vec<Q>], letters: usize, d: usize) -> Result<ParameterTensor> {
        Self::from_matrix(
            rows.iter()
                .map(|r| r.iter().cloned().map(MPoly::constant).collect())
                .collect(),
            letters,
            d,
        )
    }

    /// `N`
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `n`
    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn d(&self) -> usize {
        self.d
    }

    fn idx(&self, i: usize, s: u8, k: usize) -> usize {
        assert!(i < self.rows && s >= 1 && (s as usize) <= self.letters && k < self.d);
        (i * self.letters + (s as usize - 1)) * self.d + k
    }

    /// `p^i_{s,k}` (row `i` 0-based, letter `s` 1-based).
    pub fn get(&self, i: usize, s: u8, k: usize) -> &MPoly {
        &self.entries[self.idx(i, s, k)]
    }

    pub fn set(&mut self, i: usize, s: u8, k: usize, value: MPoly) {
        let j = self.idx(i, s, k);
        self.entries[j] = value;
    }

    /// The `N × (n·d)` matrix `[P]`.
    pub fn matrix(&self) -> Vec<Vec<MPoly>> {
        self.entries
            .chunks(self.letters * self.d)
            .map(|r| r.to_vec())
            .collect()
    }

    /// The entries as rationals, when no entry involves a variable.
    pub fn rational_matrix(&self) -> Option<Vec<Vec<Q>>> {
        self.matrix()
            .iter()
            .map(|r| r.iter().map(|e| e.as_constant()).collect())
            .collect()
    }

    /// Replaces the parameter `m` by a value.
    pub fn specialize_m(&self, m: &Q) -> ParameterTensor {
        let values = HashMap::from([(PARAM_M, m.clone())]);
        ParameterTensor {
            entries: self.entries.iter().map(|e| e.substitute(&values)).collect(),
            ..self.clone()
        }
    }

    /// The curve `Σ_k p^i_{s,k} t^k` of letter `s`, coordinate `i`, in the variable `var`.
    pub fn curve(&self, i: usize, s: u8, var: u16) -> MPoly {
        (0..self.d)
            .map(|k| &(self.get(i, s, k).clone()) * &MPoly::var(var).pow(k as u32))
            .sum()
    }

    /// `{"N", "letters", "d", "entries": [{"row", "letter", "deg", "value"}]}`
    /// with `row` and `deg` 0-based, `letter` 1-based; zero entries are omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = Vec::new();
        for i in 0..self.rows {
            for s in 1..=self.letters as u8 {
                for k in 0..self.d {
                    let e = self.get(i, s, k);
                    if !e.is_zero() {
                        let value = match e.as_constant() {
                            Some(c) => format_rational(&c),
                            None => e.to_string(),
                        };
                        entries.push(TensorEntry {
                            row: i,
                            letter: s,
                            deg: k,
                            value,
                        });
                    }
                }
            }
        }
        serde_json::to_value(TensorFile {
            n_rows: self.rows,
            letters: (1..=self.letters as u8).collect(),
            d: self.d,
            entries,
        })
        .expect("tensor serialises")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<ParameterTensor> {
        let file: TensorFile = serde_json::from_value(value.clone())
            .map_err(|e| Error::Invalid(format!("bad parameter tensor: {e}")))?;
        let letters = file.letters.iter().copied().max().unwrap_or(0) as usize;
        let mut p = ParameterTensor::zeros(file.n_rows, letters, file.d);
        for e in file.entries {
            if e.row >= file.n_rows || e.letter == 0 || e.letter as usize > letters || e.deg >= file.d {
                return Err(Error::Dimension(format!(
                    "entry (row {}, letter {}, deg {}) is out of range",
                    e.row, e.letter, e.deg
                )));
            }
            p.set(e.row, e.letter, e.deg, e.value.parse()?);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct TensorEntry {
    row: usize,
    letter: u8,
    deg: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct TensorFile {
    #[serde(rename = "N")]
    n_rows: usize,
    letters: Vec<u8>,
    d: usize,
    entries: Vec<TensorEntry>,
}

fn check_word(v: &Word, p: &ParameterTensor) -> Result<()> {
    if v.len() != p.rows {
        return Err(Error::Dimension(format!(
            "word of length {} against a tensor with {} rows",
            v.len(),
            p.rows
        )));
    }
    v.check_rank(p.letters)
}

/// `M(v, P)`: column `l` holds the curve of letter `v_l` in the variable `x_l`.
pub fn model_matrix(v: &Word, p: &ParameterTensor) -> Result<Vec<Vec<MPoly>>> {
    check_word(v, p)?;
    Ok((0..p.rows)
        .map(|i| {
            v.letters()
                .iter()
                .enumerate()
                .map(|(l, &s)| p.curve(i, s, x_var(l + 1)))
                .collect()
        })
        .collect())
}

/// The model matrix evaluated at `x_l = xs[l-1]`.
pub fn model_matrix_at(v: &Word, p: &ParameterTensor, xs: &[Q]) -> Result<Vec<Vec<Q>>> {
    check_word(v, p)?;
    if xs.len() != v.len() {
        return Err(Error::Dimension("one x value per position is needed".into()));
    }
    let pm = p
        .rational_matrix()
        .ok_or_else(|| Error::Invalid("tensor still has symbolic entries".into()))?;
    let d = p.d;
    Ok((0..p.rows)
        .map(|i| {
            v.letters()
                .iter()
                .zip(xs)
                .map(|(&s, x)| {
                    let base = (s as usize - 1) * d;
                    let mut acc = Q::zero();
                    for k in (0..d).rev() {
                        acc = acc * x + &pm[i][base + k];
                    }
                    acc
                })
                .collect()
        })
        .collect())
}

/// The brute-force determinant of the model matrix.
pub fn model_det(v: &Word, p: &ParameterTensor) -> Result<MPoly> {
    Ok(det_by_columns(&model_matrix(v, p)?))
}

/// `𝒞(v, P)`: the `N × (N·d)` matrix with `c^i_{(j,k)} = p^i_{v_j,k}`,
/// column `(j, k)` at flat index `j·d + k` (0-based `j`).
pub fn coefficients_tensor(v: &Word, p: &ParameterTensor) -> Result<Vec<Vec<MPoly>>> {
    check_word(v, p)?;
    Ok((0..p.rows)
        .map(|i| {
            v.letters()
                .iter()
                .flat_map(|&s| (0..p.d).map(move |k| (s, k)))
                .map(|(s, k)| p.get(i, s, k).clone())
                .collect()
        })
        .collect())
}

/// `𝒯(d, N)`: the `(N·d) × N` matrix with `x_j^k` in row `j·d + k`, column `j`.
pub fn variables_tensor(d: usize, n: usize) -> Vec<Vec<MPoly>> {
    (0..n * d)
        .map(|z| {
            let (j, k) = (z / d, z % d);
            (0..n)
                .map(|l| {
                    if l == j {
                        MPoly::x(j + 1).pow(k as u32)
                    } else {
                        MPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// A column set `𝔷 ⊆ S × {0,…,d−1}`, as the chosen degrees of each letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColumnSet {
    pub d: usize,
    pub degrees: Vec<Vec<usize>>,
}

impl ColumnSet {
    /// Flat 0-based column indices `(s-1)·d + k`, increasing.
    pub fn flat(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .enumerate()
            .flat_map(|(s, ks)| ks.iter().map(move |&k| s * self.d + k))
            .collect()
    }

    pub fn abelian_vector(&self) -> AbelianVector {
        AbelianVector(self.degrees.iter().map(|k| k.len() as u32).collect())
    }

    /// `Λ_𝔷`: for letter `i`, sort its degrees decreasingly to `r_1 > r_2 > …`
    /// and take `λ_j = r_j − (c_i − j)`.
    pub fn standard_partitions(&self) -> Vec<Partition> {
        self.degrees
            .iter()
            .map(|ks| {
                let c = ks.len();
                let mut r = ks.clone();
                r.sort_unstable_by(|a, b| b.cmp(a));
                let parts = r
                    .iter()
                    .enumerate()
                    .map(|(j, &rj)| (rj - (c - 1 - j)) as u32)
                    .collect();
                Partition::new(parts).expect("distinct degrees give a partition")
            })
            .collect()
    }
}

impl fmt::Display for ColumnSet {
    /// The `{0,1,2|3,4|6}` notation of flat indices, one block per letter.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .degrees
            .iter()
            .enumerate()
            .map(|(s, ks)| {
                ks.iter()
                    .map(|k| (s * self.d + k).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `𝔛_α`: every column set with exactly `c_i` degrees for letter `s_i`,
/// in lexicographic order of the flat column lists.
pub fn minor_support(alpha: &AbelianVector, d: usize) -> Result<Vec<ColumnSet>> {
    if let Some((i, &c)) = alpha.0.iter().enumerate().find(|(_, &c)| c as usize > d) {
        return Err(Error::Invalid(format!(
            "letter {} occurs {c} times but curves only have {d} coefficients",
            i + 1
        )));
    }
    let mut sets: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &c in &alpha.0 {
        let choices = combinations(d, c as usize);
        sets = sets
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |ch| {
                    let mut p = prefix.clone();
                    p.push(ch.clone());
                    p
                })
            })
            .collect();
    }
    Ok(sets
        .into_iter()
        .map(|degrees| ColumnSet { d, degrees })
        .collect())
}

/// `det [P]_𝔷`, the maximal minor on the columns of `𝔷`.
pub fn minor(p: &ParameterTensor, z: &ColumnSet) -> Result<MPoly> {
    let cols = z.flat();
    if cols.len() != p.rows {
        return Err(Error::Dimension(format!(
            "{} columns for a tensor with {} rows",
            cols.len(),
            p.rows
        )));
    }
    let m = p.matrix();
    let sub: Vec<Vec<MPoly>> = m
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let rational: Option<Vec<Vec<Q>>> = sub
        .iter()
        .map(|r| r.iter().map(|e| e.as_constant()).collect())
        .collect();
    Ok(match rational {
        Some(q) => MPoly::constant(det_rational(&q)),
        None => det_poly(&sub),
    })
}

/// One summand of the factorisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateTerm {
    pub columns: ColumnSet,
    pub minor: MPoly,
    pub partitions: Vec<Partition>,
    pub schur: MPoly,
}

/// `det M(v,P) = sign · ∏(x_k − x_j) · Σ minor · schur`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub word: Word,
    pub sign: i8,
    /// Pairs `(k, j)`, `j < k`, standing for the factor `x_k − x_j`.
    pub divisor: Vec<(usize, usize)>,
    /// Only the column sets with a non-zero minor.
    pub terms: Vec<CertificateTerm>,
}

impl Certificate {
    pub fn divisor_poly(&self) -> MPoly {
        self.divisor
            .iter()
            .map(|&(k, j)| &MPoly::x(k) - &MPoly::x(j))
            .product()
    }

    /// `Σ det[P]_𝔷 · 𝒮_{Λ_𝔷,Ω_v}`
    pub fn schur_sum(&self) -> MPoly {
        self.terms.iter().map(|t| &t.minor * &t.schur).sum()
    }

    pub fn determinant(&self) -> MPoly {
        (&self.divisor_poly() * &self.schur_sum()).scale(&Q::from_integer(self.sign.into()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|t| {
                serde_json::json!({
                    "columns": t.columns.flat(),
                    "column_set": t.columns.to_string(),
                    "minor": t.minor.to_string(),
                    "partitions": t.partitions,
                    "schur": t.schur.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "word": self.word.to_string(),
            "sign": self.sign,
            "divisor": self.divisor.iter().map(|(k, j)| format!("x{k} - x{j}")).collect::<Vec<_>>(),
            "terms": terms,
            "determinant": self.determinant().to_string(),
        })
    }
}

/// Pairs `(k, j)` of 1-based positions with `j < k` and `v_j = v_k`.
pub fn divisor_factors(v: &Word) -> Vec<(usize, usize)> {
    let l = v.letters();
    let mut out = Vec::new();
    for k in 0..l.len() {
        for j in 0..k {
            if l[j] == l[k] {
                out.push((k + 1, j + 1));
            }
        }
    }
    out
}

/// The factored determinant of `M(v, P)`.
pub fn theorem_b(v: &Word, p: &ParameterTensor) -> Result<Certificate> {
    check_word(v, p)?;
    let alpha = v.abelian_vector(p.letters);
    let omega = v.set_partition(p.letters);
    let support = minor_support(&alpha, p.d)?;
    let terms: Vec<Option<CertificateTerm>> = support
        .into_par_iter()
        .map(|z| -> Result<Option<CertificateTerm>> {
            let m = minor(p, &z)?;
            if m.is_zero() {
                return Ok(None);
            }
            let partitions = z.standard_partitions();
            let schur = partial_schur(&partitions, &omega)?;
            Ok(Some(CertificateTerm {
                columns: z,
                minor: m,
                partitions,
                schur,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(Certificate {
        word: v.clone(),
        sign: s_sign(v),
        divisor: divisor_factors(v),
        terms: terms.into_iter().flatten().collect(),
    })
}

/// The non-zero minors of `P` on `𝔛_α` with their standard partitions;
/// this is everything the Schur sum needs, for every word with vector `α`.
pub fn schur_sum_data(p: &ParameterTensor, alpha: &AbelianVector) -> Result<Vec<(Q, Vec<Partition>)>> {
    let mut out = Vec::new();
    for z in minor_support(alpha, p.d)? {
        let m = minor(p, &z)?
            .as_constant()
            .ok_or_else(|| Error::Invalid("tensor still has symbolic entries".into()))?;
        if !m.is_zero() {
            out.push((m, z.standard_partitions()));
        }
    }
    Ok(out)
}

/// `Σ det[P]_𝔷 𝒮_{Λ_𝔷,Ω_v}` evaluated at `x`, where `values[i]` lists the
/// values of the variables at the positions of letter `i + 1`.
pub fn eval_schur_sum(data: &[(Q, Vec<Partition>)], values: &[Vec<Q>]) -> Q {
    let mut total = Q::zero();
    for (m, lams) in data {
        let mut prod = m.clone();
        for (lam, vals) in lams.iter().zip(values) {
            if lam.is_zero() {
                continue;
            }
            let vars: Vec<u16> = (0..vals.len() as u16).collect();
            let s = schur(lam, &vars).expect("partition length matches letter count");
            prod *= s.eval(|v| vals.get(v as usize).cloned()).expect("all variables bound");
        }
        total += prod;
    }
    total
}

fn sign_of(q: &Q) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// The sign of `det M(v, P)` at `x`, read off the Schur sum.
///
/// Requires `x_l > 0` and `x_j < x_k` whenever `j < k` and `v_j = v_k`, so
/// that the Vandermonde divisor is positive.
pub fn sign_of_model_det(v: &Word, p: &ParameterTensor, xs: &[Q]) -> Result<i8> {
    check_word(v, p)?;
    if xs.len() != v.len() {
        return Err(Error::Dimension("one x value per position is needed".into()));
    }
    if xs.iter().any(|x| !x.is_positive()) {
        return Err(Error::Invalid("x values must be positive".into()));
    }
    if divisor_factors(v).iter().any(|&(k, j)| xs[k - 1] <= xs[j - 1]) {
        return Err(Error::Invalid(
            "x values must increase along the positions of each letter".into(),
        ));
    }
    let data = schur_sum_data(p, &v.abelian_vector(p.letters))?;
    let values: Vec<Vec<Q>> = v
        .set_partition(p.letters)
        .parts
        .iter()
        .map(|part| part.iter().map(|&l| xs[l - 1].clone()).collect())
        .collect();
    let sign = s_sign(v) * sign_of(&eval_schur_sum(&data, &values));
    debug_assert_eq!(sign, sign_of(&det_rational(&model_matrix_at(v, p, xs)?)));
    Ok(sign)
}

/// The named parameter tensors of the counting-matrix constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BclTensor {
    A1,
    /// `P_{s1s2,m}`
    A2,
    /// `P_{s1s2s3,m}`
    A3S1S2S3,
    /// `P_{s2s1s3,m}`
    A3S2S1S3,
}

impl std::str::FromStr for BclTensor {
    type Err = Error;
    fn from_str(s: &str) -> Result<BclTensor> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Ok(BclTensor::A1),
            "a2" | "a2-s1s2" => Ok(BclTensor::A2),
            "a3" | "a3-s1s2s3" => Ok(BclTensor::A3S1S2S3),
            "a3-s2s1s3" => Ok(BclTensor::A3S2S1S3),
            _ => Err(Error::Invalid(format!(
                "unknown counting tensor `{s}` (a1, a2, a3-s1s2s3, a3-s2s1s3)"
            ))),
        }
    }
}

/// The counting-matrix parameter tensor, symbolic in `m` unless a value is given.
pub fn bcl_parameter_tensor(which: BclTensor, m: Option<&Q>) -> ParameterTensor {
    let mm = MPoly::var(PARAM_M);
    let c = |a: i64, b: i64| MPoly::constant(crate::polyring::q(a, b));
    let z = MPoly::zero;
    let lin = |a: i64, b: i64, k: i64| &mm.scale(&crate::polyring::q(k, 1)) + &c(a, b);
    // binom(m + a, 2) = (m + a)(m + a - 1) / 2
    let binom2 = |a: i64| (&lin(a, 1, 1) * &lin(a - 1, 1, 1)).scale(&crate::polyring::q(1, 2));
    let (rows, letters, d): (Vec<Vec<MPoly>>, usize, usize) = match which {
        BclTensor::A1 => (vec![vec![c(1, 1)]], 1, 1),
        BclTensor::A2 => (
            vec![
                vec![c(1, 1), z(), z(), z()],
                vec![mm.clone(), c(-1, 1), z(), c(1, 1)],
                vec![z(), z(), c(1, 1), z()],
            ],
            2,
            2,
        ),
        BclTensor::A3S1S2S3 => (
            vec![
                vec![c(1, 1), z(), z(), z(), z(), z(), z(), z(), z()],
                vec![z(), c(1, 1), z(), lin(1, 1, 1), c(-1, 1), z(), z(), z(), z()],
                vec![
                    z(),
                    c(1, 2),
                    c(1, 2),
                    z(),
                    lin(1, 1, 1),
                    c(-1, 1),
                    binom2(2),
                    lin(-3, 2, -1),
                    c(1, 2),
                ],
                vec![z(), z(), z(), c(1, 1), z(), z(), z(), z(), z()],
                vec![z(), z(), z(), z(), c(1, 1), z(), lin(1, 1, 1), c(-1, 1), z()],
                vec![z(), z(), z(), z(), z(), z(), c(1, 1), z(), z()],
            ],
            3,
            3,
        ),
        BclTensor::A3S2S1S3 => (
            vec![
                vec![z(), z(), z(), c(1, 1), z(), z(), z(), z(), z()],
                vec![lin(1, 1, 1), c(-1, 1), z(), z(), c(1, 1), z(), z(), z(), z()],
                vec![z(), z(), z(), z(), c(1, 1), z(), lin(1, 1, 1), c(-1, 1), z()],
                vec![
                    binom2(1),
                    c(1, 2),
                    c(-1, 2),
                    z(),
                    z(),
                    c(1, 1),
                    binom2(1),
                    c(1, 2),
                    c(-1, 2),
                ],
                vec![z(), z(), z(), z(), z(), z(), c(1, 1), z(), z()],
                vec![c(1, 1), z(), z(), z(), z(), z(), z(), z(), z()],
            ],
            3,
            3,
        ),
    };
    let p = ParameterTensor::from_matrix(rows, letters, d).expect("hard-coded shapes are consistent");
    match m {
        Some(v) => p.specialize_m(v),
        None => p,
    }
}

/// The tensor whose model matrix for `1^a 2^b` is `det = 𝒱 · ∏(1 + x_i y_j)`,
/// with `y_j = x_{a+j}`: letter 1 has the identity columns and column
/// `(s_2, k)` is `(−1)^k e_{N−k}`, `N = d = a + b`.
pub fn dual_cauchy_tensor(a: usize, b: usize) -> ParameterTensor {
    let n = a + b;
    let mut p = ParameterTensor::zeros(n, 2, n);
    for k in 0..n {
        p.set(k, 1, k, MPoly::one());
        let sign = if k % 2 == 0 { 1 } else { -1 };
        p.set(n - 1 - k, 2, k, MPoly::int(sign));
    }
    p
}

/// The word `1^a 2^b` matching [`dual_cauchy_tensor`].
pub fn dual_cauchy_word(a: usize, b: usize) -> Word {
    Word::new(std::iter::repeat_n(1, a).chain(std::iter::repeat_n(2, b)).collect())
}

/// The type-B₂ tensor with curves `f_1(x) = (1, 0, −x, x²)` and
/// `f_2(x) = (0, 1, x, −x²)`; its model matrices realise cyclic polytopes.
pub fn cyclic_b2_tensor() -> ParameterTensor {
    let mut p = ParameterTensor::zeros(4, 2, 3);
    p.set(0, 1, 0, MPoly::one());
    p.set(2, 1, 1, MPoly::int(-1));
    p.set(3, 1, 2, MPoly::one());
    p.set(1, 2, 0, MPoly::one());
    p.set(2, 2, 1, MPoly::one());
    p.set(3, 2, 2, MPoly::int(-1));
    p
}

/// A tensor with integer entries, given as the rows of `[P]`.
pub fn constant_tensor(rows: &[Vec<i64>], letters: usize, d: usize) -> ParameterTensor {
    let q: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
        .collect();
    ParameterTensor::from_rational_rows(&q, letters, d).expect("rows have letters·d entries")
}

/// `∏_{i ≤ a, j ≤ b} (1 + x_i y_j)` with `y_j = x_{a+j}`.
pub fn dual_cauchy_product(a: usize, b: usize) -> MPoly {
    let mut acc = MPoly::one();
    for i in 1..=a {
        for j in 1..=b {
            acc = &acc * &(&MPoly::one() + &(&MPoly::x(i) * &MPoly::x(a + j)));
        }
    }
    acc
}

impl ParameterTensor {
    /// Whether every entry is `0`, `1` or `−1`.
    pub fn is_unit(&self) -> bool {
        self.entries.iter().all(|e| match e.as_constant() {
            Some(c) => c.is_zero() || c.abs().is_one(),
            None => false,
        })
    }
}
