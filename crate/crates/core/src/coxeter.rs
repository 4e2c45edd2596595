//! Finite Coxeter systems of types A, B, D, H₃ and I₂(m).
//!
//! Group elements are stored as permutations of the root system of the
//! geometric representation. The roots are found once in floating point and
//! then turned into exact permutation tables, so every later computation
//! (products, lengths, descents) is combinatorial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{AbelianVector, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    H,
    I2,
}

/// Caps on enumeration work; exceeding either yields [`Error::Budget`].
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_items: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_items: 100_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

pub(crate) struct Meter {
    task: &'static str,
    budget: Budget,
    // `None` where there is no clock (browser wasm); only the item cap applies
    start: Option<Instant>,
    pub(crate) count: u64,
}

impl Meter {
    pub(crate) fn new(task: &'static str, budget: Budget) -> Meter {
        Meter {
            task,
            budget,
            start: if cfg!(all(target_arch = "wasm32", target_os = "unknown")) {
                None
            } else {
                Some(Instant::now())
            },
            count: 0,
        }
    }

    pub(crate) fn tick(&mut self, n: u64) -> Result<()> {
        self.count += n;
        // the clock is only read every few thousand items
        if self.count > self.budget.max_items
            || (self.count % 4096 < n && self.elapsed() > self.budget.max_time)
        {
            return Err(Error::Budget {
                task: self.task.to_string(),
                processed: self.count,
                elapsed_ms: self.elapsed().as_millis(),
            });
        }
        Ok(())
    }

    fn elapsed(&self) -> Duration {
        self.start.map_or(Duration::ZERO, |s| s.elapsed())
    }
}

/// An element of `W`, as the permutation it induces on the roots.
///
/// Roots `0..N` are positive (the first `n` of them simple), root `r + N`
/// is `-r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    img: Vec<u16>,
}

/// A braid move found in a word: the factor `start..start+len` (0-based) is
/// alternating of length `m_{i,j}` and `result` is the word after swapping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidMove {
    pub start: usize,
    pub len: usize,
    pub result: Word,
}

#[derive(Clone)]
pub struct CoxeterSystem {
    family: Family,
    rank: usize,
    param: u32,
    matrix: Vec<Vec<u32>>,
    n_pos: usize,
    // gens[s][r] = s_{s+1}(root r)
    gens: Vec<Vec<u16>>,
}

fn coxeter_matrix(family: Family, rank: usize, param: u32) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut link = |i: usize, j: usize, v: u32| {
        m[i][j] = v;
        m[j][i] = v;
    };
    match family {
        Family::A => (1..rank).for_each(|i| link(i - 1, i, 3)),
        Family::B => {
            link(0, 1, 4);
            (2..rank).for_each(|i| link(i - 1, i, 3));
        }
        Family::D => {
            link(0, 2, 3);
            link(1, 2, 3);
            (3..rank).for_each(|i| link(i - 1, i, 3));
        }
        Family::H => {
            link(0, 1, 5);
            link(1, 2, 3);
        }
        Family::I2 => link(0, 1, param),
    }
    m
}

// Positive roots of the geometric representation, as coordinates in the
// basis of simple roots; simple roots come first.
fn positive_roots(matrix: &[Vec<u32>]) -> Vec<Vec<f64>> {
    let n = matrix.len();
    let form: Vec<Vec<f64>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&m| -(std::f64::consts::PI / m as f64).cos())
                .collect()
        })
        .collect();
    let reflect = |s: usize, v: &[f64]| -> Vec<f64> {
        let b: f64 = (0..n).map(|j| form[s][j] * v[j]).sum();
        let mut out = v.to_vec();
        out[s] -= 2.0 * b;
        out
    };
    let key = |v: &[f64]| -> Vec<i64> { v.iter().map(|x| (x * 1e6).round() as i64).collect() };
    let mut roots: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut seen: HashMap<Vec<i64>, usize> =
        roots.iter().enumerate().map(|(i, r)| (key(r), i)).collect();
    let mut next = 0;
    while next < roots.len() {
        for s in 0..n {
            let r = reflect(s, &roots[next]);
            if r.iter().all(|&x| x > -1e-9) && !seen.contains_key(&key(&r)) {
                seen.insert(key(&r), roots.len());
                roots.push(r);
            }
        }
        next += 1;
    }
    roots
}

impl CoxeterSystem {
    pub fn new(family: Family, rank: usize, param: u32) -> Result<CoxeterSystem> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::H => rank == 3,
            Family::I2 => rank == 2 && param >= 2,
        };
        if !ok || rank > 64 {
            return Err(Error::BadType(format!("{family:?}{rank}")));
        }
        let matrix = coxeter_matrix(family, rank, param);
        let pos = positive_roots(&matrix);
        let n_pos = pos.len();
        let mut index: HashMap<Vec<i64>, u16> = HashMap::new();
        let key = |v: &[f64]| -> Vec<i64> { v.iter().map(|x| (x * 1e6).round() as i64).collect() };
        for (i, r) in pos.iter().enumerate() {
            index.insert(key(r), i as u16);
            let neg: Vec<f64> = r.iter().map(|x| -x).collect();
            index.insert(key(&neg), (i + n_pos) as u16);
        }
        let form: Vec<Vec<f64>> = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&m| -(std::f64::consts::PI / m as f64).cos())
                    .collect()
            })
            .collect();
        let all: Vec<Vec<f64>> = pos
            .iter()
            .cloned()
            .chain(pos.iter().map(|r| r.iter().map(|x| -x).collect()))
            .collect();
        let gens = (0..rank)
            .map(|s| {
                all.iter()
                    .map(|v| {
                        let b: f64 = (0..rank).map(|j| form[s][j] * v[j]).sum();
                        let mut out = v.clone();
                        out[s] -= 2.0 * b;
                        index[&key(&out)]
                    })
                    .collect()
            })
            .collect();
        Ok(CoxeterSystem {
            family,
            rank,
            param,
            matrix,
            n_pos,
            gens,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m_{i,j}` for 1-based generators.
    pub fn m(&self, i: u8, j: u8) -> u32 {
        self.matrix[i as usize - 1][j as usize - 1]
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// `N = ℓ(w₀)`, the number of positive roots.
    pub fn longest_length(&self) -> usize {
        self.n_pos
    }

    /// The lengths `m_{i,j}` (i ≠ j) that occur, in increasing order.
    pub fn edge_lengths(&self) -> Vec<u32> {
        let mut v: Vec<u32> = (0..self.rank)
            .flat_map(|i| (0..self.rank).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.matrix[i][j])
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn identity(&self) -> Element {
        Element {
            img: (0..2 * self.n_pos as u16).collect(),
        }
    }

    /// `w·s` for the 1-based generator `s`.
    pub fn mul_gen(&self, w: &Element, s: u8) -> Element {
        let g = &self.gens[s as usize - 1];
        Element {
            img: g.iter().map(|&r| w.img[r as usize]).collect(),
        }
    }

    /// `s·w` for the 1-based generator `s`.
    pub fn gen_mul(&self, s: u8, w: &Element) -> Element {
        let g = &self.gens[s as usize - 1];
        Element {
            img: w.img.iter().map(|&r| g[r as usize]).collect(),
        }
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let mut img = vec![0u16; w.img.len()];
        for (r, &t) in w.img.iter().enumerate() {
            img[t as usize] = r as u16;
        }
        Element { img }
    }

    /// Whether `ℓ(ws) < ℓ(w)`, i.e. `w(α_s)` is negative.
    pub fn is_right_descent(&self, w: &Element, s: u8) -> bool {
        w.img[s as usize - 1] as usize >= self.n_pos
    }

    pub fn right_descents(&self, w: &Element) -> Vec<u8> {
        (1..=self.rank as u8)
            .filter(|&s| self.is_right_descent(w, s))
            .collect()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &Element) -> usize {
        w.img[..self.n_pos]
            .iter()
            .filter(|&&r| r as usize >= self.n_pos)
            .count()
    }

    /// The product of the letters of `word`.
    pub fn element(&self, word: &Word) -> Result<Element> {
        word.check_rank(self.rank)?;
        Ok(word
            .letters()
            .iter()
            .fold(self.identity(), |w, &s| self.mul_gen(&w, s)))
    }

    pub fn longest_element(&self) -> Element {
        let mut w = self.identity();
        while let Some(s) = (1..=self.rank as u8).find(|&s| !self.is_right_descent(&w, s)) {
            w = self.mul_gen(&w, s);
        }
        w
    }

    /// A word is reduced iff no letter is a right descent of the prefix
    /// before it (exchange condition).
    pub fn is_reduced(&self, word: &Word) -> bool {
        if word.check_rank(self.rank).is_err() {
            return false;
        }
        let mut w = self.identity();
        for &s in word.letters() {
            if self.is_right_descent(&w, s) {
                return false;
            }
            w = self.mul_gen(&w, s);
        }
        true
    }

    /// Every alternating factor of length `m_{i,j}` and the word after the swap.
    pub fn braid_moves(&self, word: &Word) -> Vec<BraidMove> {
        let l = word.letters();
        let mut out = Vec::new();
        for start in 0..l.len().saturating_sub(1) {
            let (a, b) = (l[start], l[start + 1]);
            if a == b || a as usize > self.rank || b as usize > self.rank || a == 0 || b == 0 {
                continue;
            }
            let m = self.m(a, b) as usize;
            if start + m > l.len() {
                continue;
            }
            let alternating = (0..m).all(|t| l[start + t] == if t % 2 == 0 { a } else { b });
            if alternating {
                let mut r = l.to_vec();
                for t in 0..m {
                    r[start + t] = if t % 2 == 0 { b } else { a };
                }
                out.push(BraidMove {
                    start,
                    len: m,
                    result: Word::new(r),
                });
            }
        }
        out
    }

    /// Reduced words of `w` in lexicographic order, generated lazily.
    pub fn reduced_words(&self, w: &Element) -> ReducedWords<'_> {
        let len = self.length(w);
        ReducedWords {
            sys: self,
            stack: vec![(self.inverse(w), len, 1)],
            word: Vec::with_capacity(len),
        }
    }

    /// `R(w₀)` in lexicographic order.
    pub fn longest_reduced_words(&self) -> ReducedWords<'_> {
        self.reduced_words(&self.longest_element())
    }

    // The lower interval [e, w] in the right weak order, grouped by length.
    fn weak_interval(&self, w: &Element, meter: &mut Meter) -> Result<Vec<Vec<Element>>> {
        let top = self.length(w);
        let mut levels: Vec<Vec<Element>> = vec![Vec::new(); top + 1];
        levels[top].push(w.clone());
        for l in (1..=top).rev() {
            let mut seen: HashMap<Element, ()> = HashMap::new();
            for u in &levels[l] {
                for s in self.right_descents(u) {
                    seen.entry(self.mul_gen(u, s)).or_insert(());
                }
            }
            meter.tick(seen.len() as u64)?;
            let mut next: Vec<Element> = seen.into_keys().collect();
            next.sort_by(|a, b| a.img.cmp(&b.img));
            levels[l - 1] = next;
        }
        Ok(levels)
    }

    /// `|R(w)|`, by dynamic programming over the weak order (no words stored).
    pub fn count_reduced_words(&self, w: &Element, budget: Budget) -> Result<u128> {
        let mut meter = Meter::new("counting reduced words", budget);
        let levels = self.weak_interval(w, &mut meter)?;
        let mut prev: HashMap<Element, u128> = HashMap::new();
        prev.insert(self.identity(), 1);
        for level in &levels[1..] {
            let mut cur = HashMap::with_capacity(level.len());
            for u in level {
                let mut c: u128 = 0;
                for s in self.right_descents(u) {
                    c = c
                        .checked_add(prev[&self.mul_gen(u, s)])
                        .ok_or_else(|| Error::Invalid("word count overflows u128".into()))?;
                }
                cur.insert(u.clone(), c);
            }
            meter.tick(level.len() as u64)?;
            prev = cur;
        }
        Ok(prev.into_values().next().unwrap_or(1))
    }

    /// Abelian vectors of `R(w)` with multiplicities, by dynamic programming
    /// over the weak order: the vectors of `u` are those of `us` plus `e_s`
    /// for each right descent `s`. Memory is two levels of the interval.
    pub fn abelian_spectrum(&self, w: &Element, budget: Budget) -> Result<AbelianSpectrum> {
        let mut meter = Meter::new("aggregating abelian vectors", budget);
        let levels = self.weak_interval(w, &mut meter)?;
        let n = self.rank;
        let mut prev: HashMap<Element, BTreeMap<Vec<u16>, u128>> = HashMap::new();
        prev.insert(self.identity(), BTreeMap::from([(vec![0u16; n], 1u128)]));
        for level in &levels[1..] {
            let mut cur = HashMap::with_capacity(level.len());
            for u in level {
                let mut acc: BTreeMap<Vec<u16>, u128> = BTreeMap::new();
                for s in self.right_descents(u) {
                    let below = &prev[&self.mul_gen(u, s)];
                    meter.tick(below.len() as u64)?;
                    for (vec, &c) in below {
                        let mut v = vec.clone();
                        v[s as usize - 1] += 1;
                        let e = acc.entry(v).or_insert(0);
                        *e = e
                            .checked_add(c)
                            .ok_or_else(|| Error::Invalid("word count overflows u128".into()))?;
                    }
                }
                cur.insert(u.clone(), acc);
            }
            prev = cur;
        }
        let counts = prev
            .into_values()
            .next()
            .unwrap_or_default()
            .into_iter()
            .map(|(v, c)| (AbelianVector(v.into_iter().map(u32::from).collect()), c))
            .collect();
        Ok(AbelianSpectrum::from_counts(n, counts))
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2:{}", self.param),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem({self})")
    }
}

impl FromStr for CoxeterSystem {
    type Err = Error;

    /// `A3`, `B4`, `D5`, `H3`, `I2:7`.
    fn from_str(s: &str) -> Result<CoxeterSystem> {
        let bad = || Error::BadType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('D') => Family::D,
            Some('H') => Family::H,
            Some('I') => Family::I2,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let (rank, param) = if family == Family::I2 {
            let (r, m) = rest.split_once(':').ok_or_else(bad)?;
            if r != "2" {
                return Err(bad());
            }
            (2, m.parse::<u32>().map_err(|_| bad())?)
        } else {
            (rest.parse::<usize>().map_err(|_| bad())?, 0)
        };
        CoxeterSystem::new(family, rank, param).map_err(|_| bad())
    }
}

/// Depth-first, lexicographic enumeration of the reduced words of an element.
///
/// The state is `r⁻¹` where `r` is what remains to be spelled: the next letter
/// must be a left descent of `r`, which is a right descent of `r⁻¹`.
pub struct ReducedWords<'a> {
    sys: &'a CoxeterSystem,
    // (inverse of the remaining element, its length, next letter to try)
    stack: Vec<(Element, usize, u8)>,
    word: Vec<u8>,
}

impl Iterator for ReducedWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let (rest_inv, len, next) = self.stack.last_mut()?;
            if *len == 0 {
                let out = Word::new(self.word.clone());
                self.stack.pop();
                self.word.pop();
                return Some(out);
            }
            let found = (*next..=self.sys.rank as u8).find(|&s| self.sys.is_right_descent(rest_inv, s));
            match found {
                Some(s) => {
                    *next = s + 1;
                    let child = self.sys.mul_gen(rest_inv, s);
                    let l = *len - 1;
                    self.stack.push((child, l, 1));
                    self.word.push(s);
                }
                None => {
                    self.stack.pop();
                    self.word.pop();
                }
            }
        }
    }
}

/// The abelian vectors of `R(w)` with the number of reduced words having each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSpectrum {
    pub rank: usize,
    pub counts: BTreeMap<AbelianVector, u128>,
}

impl AbelianSpectrum {
    pub fn from_counts(rank: usize, counts: BTreeMap<AbelianVector, u128>) -> Self {
        AbelianSpectrum { rank, counts }
    }

    /// Aggregates an explicit stream of words.
    pub fn from_words(rank: usize, words: impl IntoIterator<Item = Word>) -> Self {
        let mut counts = BTreeMap::new();
        for w in words {
            *counts.entry(w.abelian_vector(rank)).or_insert(0) += 1;
        }
        AbelianSpectrum { rank, counts }
    }

    /// The vectors in decreasing lexicographic order.
    pub fn vectors(&self) -> Vec<AbelianVector> {
        self.counts.keys().rev().cloned().collect()
    }

    pub fn word_count(&self) -> u128 {
        self.counts.values().sum()
    }

    /// `ν`: the largest multiplicity of a letter.
    pub fn nu(&self) -> u32 {
        self.counts
            .keys()
            .flat_map(|v| v.0.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// `μ`: the coordinatewise minimum.
    pub fn mu(&self) -> AbelianVector {
        self.coordinatewise(u32::min)
    }

    pub fn coordinatewise_max(&self) -> AbelianVector {
        self.coordinatewise(u32::max)
    }

    fn coordinatewise(&self, f: fn(u32, u32) -> u32) -> AbelianVector {
        let mut it = self.counts.keys();
        let Some(first) = it.next() else {
            return AbelianVector(vec![0; self.rank]);
        };
        let mut acc = first.0.clone();
        for v in it {
            for (a, &b) in acc.iter_mut().zip(&v.0) {
                *a = f(*a, b);
            }
        }
        AbelianVector(acc)
    }
}
