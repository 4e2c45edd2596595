//! Subword complexes and the sign conditions that make a matrix realise one.
//!
//! For a word `p` of length `m`, the facets of the subword complex are the
//! complements of the occurrences of reduced words of `w₀` in `p`. A matrix
//! `B` with `N` rows and `m` columns is a signature matrix for `p` when, for
//! every such occurrence `Z` spelling `v`, `sign det [B]_Z = τ(v)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{Budget, CoxeterSystem};
use crate::error::{Error, Result};
use crate::polyring::{det_rational, format_rational, kernel_basis, Partition, Q};
use crate::redgraph::{t_signs, RedGraph, SignAssignment, TNormalization};
use crate::tensors::{eval_schur_sum, schur_sum_data, ParameterTensor};
use crate::words::{s_sign, AbelianVector, Word};

/// All occurrences (0-based increasing position lists) of reduced words of
/// `w₀` in `p`, in lexicographic order.
pub fn occurrences(sys: &CoxeterSystem, p: &Word) -> Result<Vec<Vec<usize>>> {
    p.check_rank(sys.rank())?;
    let n = sys.longest_length();
    let letters = p.letters();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    fn rec(
        sys: &CoxeterSystem,
        letters: &[u8],
        n: usize,
        from: usize,
        u: &crate::coxeter::Element,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == n {
            out.push(chosen.clone());
            return;
        }
        for i in from..letters.len() {
            if letters.len() - i < n - chosen.len() {
                break;
            }
            let s = letters[i];
            if !sys.is_right_descent(u, s) {
                chosen.push(i);
                rec(sys, letters, n, i + 1, &sys.mul_gen(u, s), chosen, out);
                chosen.pop();
            }
        }
    }
    rec(sys, letters, n, 0, &sys.identity(), &mut chosen, &mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubwordComplex {
    pub word: Word,
    /// 1-based position sets, sorted.
    pub facets: Vec<Vec<usize>>,
    /// Positions (1-based) lying in every occurrence, hence in no facet.
    pub non_vertices: Vec<usize>,
}

impl SubwordComplex {
    /// The word spelled by the complement of a facet.
    pub fn combinatorial_type(&self, facet: &[usize]) -> Word {
        let pos: Vec<usize> = (1..=self.word.len())
            .filter(|i| !facet.contains(i))
            .map(|i| i - 1)
            .collect();
        self.word.restrict(&pos)
    }

    pub fn facet_abelian_vector(&self, facet: &[usize], rank: usize) -> AbelianVector {
        self.combinatorial_type(facet).abelian_vector(rank)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "word": self.word.to_string(),
            "facets": self.facets,
            "non_vertices": self.non_vertices,
        })
    }
}

/// `Δ_W(p)`. An empty facet list means `p` contains no reduced word of `w₀`.
pub fn build_complex(sys: &CoxeterSystem, p: &Word) -> Result<SubwordComplex> {
    let occ = occurrences(sys, p)?;
    let m = p.len();
    let mut facets: Vec<Vec<usize>> = occ
        .iter()
        .map(|z| (1..=m).filter(|i| !z.contains(&(i - 1))).collect())
        .collect();
    facets.sort();
    let non_vertices = if occ.is_empty() {
        Vec::new()
    } else {
        (1..=m).filter(|i| occ.iter().all(|z| z.contains(&(i - 1)))).collect()
    };
    Ok(SubwordComplex {
        word: p.clone(),
        facets,
        non_vertices,
    })
}

/// The word `c^k w₀(c)` for the Coxeter element `c = s_1 ⋯ s_n`, where
/// `w₀(c)` is the leftmost reduced word of `w₀` inside `c^∞`.
pub fn c_power_word(sys: &CoxeterSystem, k: usize) -> Word {
    let c: Vec<u8> = (1..=sys.rank() as u8).collect();
    let mut l: Vec<u8> = c.iter().copied().cycle().take(k * c.len()).collect();
    l.extend_from_slice(crate::redgraph::greedy_longest_word(sys).letters());
    Word::new(l)
}

/// The sign data needed by the checkers: `τ` on `R(w₀)` under a fixed normalisation.
pub struct SignContext<'a> {
    pub sys: &'a CoxeterSystem,
    pub tau: SignAssignment,
}

impl<'a> SignContext<'a> {
    pub fn new(sys: &'a CoxeterSystem, norm: TNormalization, budget: Budget) -> Result<SignContext<'a>> {
        let graph = RedGraph::longest(sys, budget)?;
        let tau = t_signs(sys, &graph, norm)?;
        Ok(SignContext { sys, tau })
    }

    /// The same context with `τ` negated everywhere.
    pub fn flipped(&self) -> SignContext<'a> {
        SignContext {
            sys: self.sys,
            tau: self.tau.flipped(),
        }
    }

    fn tau(&self, v: &Word) -> i8 {
        self.tau.get(v).expect("occurrences spell reduced words of w0")
    }
}

/// The first failing occurrence of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub word: Word,
    /// 1-based positions in `p`.
    pub positions: Vec<usize>,
    /// Observed sign (0 for a vanishing determinant or sum).
    pub sign: i8,
    pub expected: i8,
}

impl Witness {
    /// `"basis"` when the determinant or sum vanishes, `"sign"` otherwise.
    pub fn condition(&self) -> &'static str {
        if self.sign == 0 {
            "basis"
        } else {
            "sign"
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub checked: usize,
    pub failures: usize,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_results(results: Vec<Option<Witness>>) -> Verdict {
        let checked = results.len();
        let failures = results.iter().filter(|r| r.is_some()).count();
        let witness = results.into_iter().flatten().next();
        Verdict {
            ok: failures == 0,
            checked,
            failures,
            witness,
        }
    }
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

fn check_matrix_shape(b: &[Vec<Q>], rows: usize, cols: usize) -> Result<()> {
    if b.len() != rows || b.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!("expected a {rows} × {cols} matrix")));
    }
    Ok(())
}

/// A matrix together with the word it is meant to realise and the points
/// `x` its columns are taken at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleMatrixData {
    pub b: Vec<Vec<Q>>,
    pub p: Word,
    pub x: Vec<Q>,
}

impl GaleMatrixData {
    /// Checks that `x_i < x_j` whenever `i < j` and `p_i = p_j`.
    pub fn new(b: Vec<Vec<Q>>, p: Word, x: Vec<Q>) -> Result<GaleMatrixData> {
        let rows = b.len();
        check_matrix_shape(&b, rows, p.len())?;
        if x.len() != p.len() {
            return Err(Error::Dimension("one x value per column is needed".into()));
        }
        check_increasing(&p, &x)?;
        Ok(GaleMatrixData { b, p, x })
    }

    /// `x_i = i`.
    pub fn with_default_x(b: Vec<Vec<Q>>, p: Word) -> Result<GaleMatrixData> {
        let x = (1..=p.len() as i64).map(|i| Q::from_integer(i.into())).collect();
        Self::new(b, p, x)
    }
}

fn check_increasing(p: &Word, x: &[Q]) -> Result<()> {
    let l = p.letters();
    for j in 0..l.len() {
        for i in 0..j {
            if l[i] == l[j] && x[i] >= x[j] {
                return Err(Error::Invalid(format!(
                    "x must increase along each letter: x{} = {} but x{} = {}",
                    i + 1,
                    format_rational(&x[i]),
                    j + 1,
                    format_rational(&x[j])
                )));
            }
        }
    }
    Ok(())
}

/// Whether `sign det [B]_Z = τ(v)` for every occurrence `Z` of every
/// reduced word `v` of `w₀` in `p`. A vanishing determinant fails.
pub fn check_signature_matrix(ctx: &SignContext, b: &[Vec<Q>], p: &Word) -> Result<Verdict> {
    check_matrix_shape(b, ctx.sys.longest_length(), p.len())?;
    let occ = occurrences(ctx.sys, p)?;
    let results = occ
        .par_iter()
        .map(|z| {
            let sub: Vec<Vec<Q>> = b
                .iter()
                .map(|r| z.iter().map(|&c| r[c].clone()).collect())
                .collect();
            let sign = sign_of(&det_rational(&sub));
            let v = p.restrict(z);
            let expected = ctx.tau(&v);
            (sign != expected).then(|| Witness {
                word: v,
                positions: z.iter().map(|i| i + 1).collect(),
                sign,
                expected,
            })
        })
        .collect();
    Ok(Verdict::from_results(results))
}

// Coefficients of the interpolating polynomial through (xs, ys), degree < len.
fn interpolate(xs: &[Q], ys: &[Q]) -> Vec<Q> {
    let n = xs.len();
    let mut coeffs = vec![Q::zero(); n];
    for i in 0..n {
        // basis polynomial ∏_{j≠i} (t − x_j) / (x_i − x_j)
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let f = &ys[i] / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &f;
        }
    }
    coeffs
}

/// The parameter tensor whose curve for letter `s` interpolates the columns
/// of `B` at the positions of `s`: degree `|p|_s − 1`, `d = max_s |p|_s`.
pub fn extract_parameter_tensor(data: &GaleMatrixData, letters: usize) -> Result<ParameterTensor> {
    data.p.check_rank(letters)?;
    let rows = data.b.len();
    let omega = data.p.set_partition(letters);
    let d = omega.parts.iter().map(|p| p.len()).max().unwrap_or(0).max(1);
    let mut t = ParameterTensor::zeros(rows, letters, d);
    for (s, part) in omega.parts.iter().enumerate() {
        let xs: Vec<Q> = part.iter().map(|&l| data.x[l - 1].clone()).collect();
        for i in 0..xs.len() {
            if xs[..i].contains(&xs[i]) {
                return Err(Error::Invalid(format!(
                    "letter {} has the x value {} twice",
                    s + 1,
                    format_rational(&xs[i])
                )));
            }
        }
        for k in 0..rows {
            let ys: Vec<Q> = part.iter().map(|&l| data.b[k][l - 1].clone()).collect();
            for (deg, c) in interpolate(&xs, &ys).into_iter().enumerate() {
                t.set(k, (s + 1) as u8, deg, c.into());
            }
        }
    }
    Ok(t)
}

/// Per abelian vector: how many occurrences passed and failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCReport {
    pub verdict: Verdict,
    pub by_vector: BTreeMap<AbelianVector, (usize, usize)>,
}

/// Whether `sign(Σ_𝔷 det[P]_𝔷 𝒮_{Λ_𝔷,Ω_v}(x_Z)) = σ(v)·τ(v)` for every
/// occurrence `Z` of every reduced word `v` of `w₀` in `p`.
///
/// Occurrences with the same abelian vector share the list of non-zero
/// minors and partitions; only the evaluation points change.
pub fn check_theorem_c(ctx: &SignContext, t: &ParameterTensor, p: &Word, x: &[Q]) -> Result<TheoremCReport> {
    let n = ctx.sys.rank();
    if t.rows() != ctx.sys.longest_length() || t.letters() < n {
        return Err(Error::Dimension("tensor does not match the Coxeter system".into()));
    }
    if x.len() != p.len() {
        return Err(Error::Dimension("one x value per position is needed".into()));
    }
    if x.iter().any(|v| !v.is_positive()) {
        return Err(Error::Invalid("x values must be positive".into()));
    }
    check_increasing(p, x)?;
    let occ = occurrences(ctx.sys, p)?;
    let mut data: HashMap<AbelianVector, Vec<(Q, Vec<Partition>)>> = HashMap::new();
    for z in &occ {
        let alpha = p.restrict(z).abelian_vector(t.letters());
        if !data.contains_key(&alpha) {
            let d = schur_sum_data(t, &alpha)?;
            data.insert(alpha, d);
        }
    }
    let results: Vec<(AbelianVector, Option<Witness>)> = occ
        .par_iter()
        .map(|z| {
            let v = p.restrict(z);
            let alpha = v.abelian_vector(t.letters());
            let mut values = vec![Vec::new(); t.letters()];
            for &pos in z {
                values[p.letters()[pos] as usize - 1].push(x[pos].clone());
            }
            let sign = sign_of(&eval_schur_sum(&data[&alpha], &values));
            let expected = s_sign(&v) * ctx.tau(&v);
            let w = (sign != expected).then(|| Witness {
                word: v,
                positions: z.iter().map(|i| i + 1).collect(),
                sign,
                expected,
            });
            (alpha, w)
        })
        .collect();
    let mut by_vector: BTreeMap<AbelianVector, (usize, usize)> = BTreeMap::new();
    for (alpha, w) in &results {
        let e = by_vector.entry(alpha.clone()).or_default();
        if w.is_some() {
            e.1 += 1;
        } else {
            e.0 += 1;
        }
    }
    Ok(TheoremCReport {
        verdict: Verdict::from_results(results.into_iter().map(|r| r.1).collect()),
        by_vector,
    })
}

/// The matrix `B` whose column `l` is the curve of letter `p_l` at `x_l`.
pub fn curve_matrix(t: &ParameterTensor, p: &Word, x: &[Q]) -> Result<Vec<Vec<Q>>> {
    if p.len() != x.len() {
        return Err(Error::Dimension("one x value per position is needed".into()));
    }
    p.check_rank(t.letters())?;
    let pm = t
        .rational_matrix()
        .ok_or_else(|| Error::Invalid("tensor still has symbolic entries".into()))?;
    let d = t.d();
    Ok((0..t.rows())
        .map(|i| {
            p.letters()
                .iter()
                .zip(x)
                .map(|(&s, xv)| {
                    let base = (s as usize - 1) * d;
                    (0..d).rev().fold(Q::zero(), |acc, k| acc * xv + &pm[i][base + k])
                })
                .collect()
        })
        .collect())
}

/// Signs of the maximal minors of an `r × m` matrix, on sorted 0-based `r`-subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chirotope {
    pub rank: usize,
    pub size: usize,
    pub signs: BTreeMap<Vec<usize>, i8>,
}

fn subsets(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, r, cur, out);
            cur.pop();
        }
    }
    rec(0, m, r, &mut cur, &mut out);
    out
}

pub fn chirotope_from_matrix(a: &[Vec<Q>]) -> Chirotope {
    let r = a.len();
    let m = a.first().map_or(0, |row| row.len());
    let signs = subsets(m, r)
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Q>> = a
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            let s = sign_of(&det_rational(&sub));
            (cols, s)
        })
        .collect();
    Chirotope { rank: r, size: m, signs }
}

impl Chirotope {
    /// `χ` on an arbitrary tuple: zero with a repeated element, otherwise
    /// the sign of the sorting permutation times `χ` of the sorted tuple.
    pub fn chi(&self, tuple: &[usize]) -> i8 {
        let mut t = tuple.to_vec();
        let mut parity = 1i8;
        for i in 0..t.len() {
            for j in 0..t.len() - 1 - i {
                if t[j] == t[j + 1] {
                    return 0;
                }
                if t[j] > t[j + 1] {
                    t.swap(j, j + 1);
                    parity = -parity;
                }
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return 0;
        }
        parity * self.signs.get(&t).copied().unwrap_or(0)
    }

    /// The sorted subsets with non-zero sign.
    pub fn bases(&self) -> Vec<&Vec<usize>> {
        self.signs.iter().filter(|(_, &s)| s != 0).map(|(b, _)| b).collect()
    }

    /// The three-term Grassmann–Plücker condition for `(a, b, c, d, e)`,
    /// `|a| = r − 2`: the signs of `χ(abc)χ(ade)`, `−χ(abd)χ(ace)`,
    /// `χ(abe)χ(acd)` are all zero or contain both `+1` and `−1`.
    pub fn three_term_holds(&self, a: &[usize], b: usize, c: usize, d: usize, e: usize) -> bool {
        let t = |x: usize, y: usize| {
            let mut v = a.to_vec();
            v.push(x);
            v.push(y);
            self.chi(&v)
        };
        let s = [t(b, c) * t(d, e), -t(b, d) * t(c, e), t(b, e) * t(c, d)];
        s.iter().all(|&x| x == 0) || (s.contains(&1) && s.contains(&-1))
    }
}

/// A matrix whose rows span the right kernel of `a` (full row rank required).
pub fn gale_transform(a: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let b = kernel_basis(a)?;
    debug_assert!(a.iter().all(|ar| b
        .iter()
        .all(|br| ar.iter().zip(br).fold(Q::zero(), |s, (x, y)| s + x * y).is_zero())));
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::q;

    fn sys(s: &str) -> CoxeterSystem {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn a2_complex() {
        let c = build_complex(&sys("A2"), &w("12122")).unwrap();
        assert_eq!(c.facets, vec![vec![1, 4], vec![1, 5], vec![4, 5]]);
        assert_eq!(c.non_vertices, vec![2, 3]);
        assert_eq!(c.combinatorial_type(&[4, 5]), w("121"));
        assert_eq!(c.facet_abelian_vector(&[4, 5], 2), AbelianVector(vec![2, 1]));
        let single = build_complex(&sys("A2"), &w("121")).unwrap();
        assert_eq!(single.facets, vec![Vec::<usize>::new()]);
        let none = build_complex(&sys("A2"), &w("12")).unwrap();
        assert!(none.facets.is_empty());
    }

    #[test]
    fn c_power_words() {
        assert_eq!(c_power_word(&sys("B2"), 1), w("121212"));
        assert_eq!(c_power_word(&sys("A3"), 0), w("123121"));
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let xs = [q(1, 1), q(3, 1), q(4, 1)];
        let ys: Vec<Q> = xs.iter().map(|x| x * x - q(2, 1) * x + q(1, 2)).collect();
        assert_eq!(interpolate(&xs, &ys), vec![q(1, 2), q(-2, 1), q(1, 1)]);
    }

    #[test]
    fn chirotope_basics() {
        let a: Vec<Vec<Q>> = vec![
            (1..=4).map(|_| q(1, 1)).collect(),
            (1..=4).map(|i| q(i, 1)).collect(),
        ];
        let chi = chirotope_from_matrix(&a);
        assert!(chi.signs.values().all(|&s| s == 1));
        assert_eq!(chi.signs.len(), 6);
        assert_eq!(chi.chi(&[1, 0]), -1);
        assert_eq!(chi.chi(&[1, 1]), 0);
        assert!(chi.three_term_holds(&[], 0, 1, 2, 3));
        let id = vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]];
        assert_eq!(chirotope_from_matrix(&id).signs, BTreeMap::from([(vec![0, 1], 1)]));
    }

    #[test]
    fn gale_of_small_matrices() {
        let b = gale_transform(&[vec![q(1, 1), q(1, 1)]]).unwrap();
        assert_eq!(b, vec![vec![q(-1, 1), q(1, 1)]]);
        assert!(gale_transform(&[vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]]).is_err());
    }
}
