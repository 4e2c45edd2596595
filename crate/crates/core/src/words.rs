//! Words over the generators `s_1 < … < s_n`: abelian vectors, inversions,
//! standardization, S-signs and the sign law for braid moves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the generators, stored as 1-based letters (`1` is `s_1`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Fails if some letter is not in `1..=rank`.
    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&a| a == 0 || a as usize > rank) {
            Some(&a) => Err(Error::LetterOutOfRange {
                letter: a as usize,
                rank,
            }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The image under `s_i ↦ s_{n+1-i}`.
    pub fn mirrored(&self, rank: usize) -> Word {
        Word(self.0.iter().map(|&a| (rank + 1 - a as usize) as u8).collect())
    }

    /// The subword at the given 0-based positions.
    pub fn restrict(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&p| self.0[p]).collect())
    }

    /// Number of occurrences of each letter `1..=rank`.
    pub fn abelian_vector(&self, rank: usize) -> AbelianVector {
        let mut c = vec![0u32; rank];
        for &a in &self.0 {
            c[a as usize - 1] += 1;
        }
        AbelianVector(c)
    }

    /// `Ω_w`: the 1-based positions of each letter.
    pub fn set_partition(&self, rank: usize) -> OrderedSetPartition {
        let mut parts = vec![Vec::new(); rank];
        for (p, &a) in self.0.iter().enumerate() {
            parts[a as usize - 1].push(p + 1);
        }
        OrderedSetPartition { parts }
    }

    /// Formats as a digit string when every letter is a digit, else comma separated.
    pub fn format(&self, rank: usize) -> String {
        if rank <= 9 {
            self.0.iter().map(|a| char::from(b'0' + a)).collect()
        } else {
            self.0
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        f.write_str(&self.format(self.max_letter() as usize))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `121321`, `1,2,1,3`, or `e` / the empty string for the identity.
    fn from_str(s: &str) -> Result<Word> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(Word::empty());
        }
        let bad = |why: &str| Error::BadWord(s.to_string(), why.to_string());
        let letters: Vec<u8> = if t.contains(',') {
            t.split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| bad("not a letter")))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| bad("expected digits"))
                })
                .collect::<Result<_>>()?
        };
        if letters.contains(&0) {
            return Err(bad("letters are 1-based"));
        }
        Ok(Word(letters))
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Word {
        Word(v)
    }
}

/// Letter counts `(|w|_1, …, |w|_n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianVector(pub Vec<u32>);

impl AbelianVector {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &AbelianVector) -> AbelianVector {
        AbelianVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for AbelianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `n` disjoint sets of 1-based positions; part `i` holds the positions of `s_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedSetPartition {
    pub parts: Vec<Vec<usize>>,
}

/// Number of pairs `i < j` with `w_j < w_i`. Equal letters never count.
pub fn inversion_number(w: &Word) -> u64 {
    let n = w.max_letter() as usize;
    let mut seen = vec![0u64; n + 1];
    let mut inv = 0;
    for &a in w.letters() {
        inv += seen[a as usize + 1..].iter().sum::<u64>();
        seen[a as usize] += 1;
    }
    inv
}

/// `σ(w) = (-1)^{inv(w)}`.
pub fn s_sign(w: &Word) -> i8 {
    if inversion_number(w) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The shortest permutation sorting `w`, in one-line notation: position `i`
/// goes to its rank under a stable sort of the letters.
pub fn standardization(w: &Word) -> Vec<usize> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w.letters()[i], i));
    let mut perm = vec![0; w.len()];
    for (rank, &i) in order.iter().enumerate() {
        perm[i] = rank + 1;
    }
    perm
}

/// A braid move `u b_{i,j} v ↔ u b_{j,i} v` where `b_{i,j} = s_i s_j s_i ⋯`
/// and `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidMoveContext {
    pub u: Word,
    pub i: u8,
    pub j: u8,
    pub v: Word,
}

impl BraidMoveContext {
    /// Splits `w` around the alternating factor `w[start..start+len]`.
    pub fn around(w: &Word, start: usize, len: usize) -> BraidMoveContext {
        let l = w.letters();
        let (a, b) = (l[start], l[start + 1]);
        BraidMoveContext {
            u: Word(l[..start].to_vec()),
            i: a.min(b),
            j: a.max(b),
            v: Word(l[start + len..].to_vec()),
        }
    }

    /// `Σ_{i<k≤j} |u|_k`
    pub fn kappa(&self) -> u64 {
        self.u
            .letters()
            .iter()
            .filter(|&&k| self.i < k && k <= self.j)
            .count() as u64
    }

    /// `Σ_{i≤k<j} |v|_k`
    pub fn mu(&self) -> u64 {
        self.v
            .letters()
            .iter()
            .filter(|&&k| self.i <= k && k < self.j)
            .count() as u64
    }

    fn with_factor(&self, first: u8, second: u8, m: usize) -> Word {
        let mut l = self.u.letters().to_vec();
        l.extend((0..m).map(|t| if t % 2 == 0 { first } else { second }));
        l.extend_from_slice(self.v.letters());
        Word(l)
    }

    /// `u b_{i,j} v`
    pub fn lower_word(&self, m: usize) -> Word {
        self.with_factor(self.i, self.j, m)
    }

    /// `u b_{j,i} v`
    pub fn upper_word(&self, m: usize) -> Word {
        self.with_factor(self.j, self.i, m)
    }

    /// Predicted `σ(u b_{i,j} v) / σ(u b_{j,i} v)` for a move of length `m`.
    pub fn predicted_ratio(&self, m: usize) -> i8 {
        let e = if m % 2 == 0 {
            (m / 2) as u64
        } else {
            self.kappa() + self.mu()
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }
}
