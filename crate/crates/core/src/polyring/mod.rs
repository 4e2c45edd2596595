//! Sparse multivariate polynomials with arbitrary-precision rational
//! coefficients.
//!
//! Variables are small integers. Ids `0, 1, 2, …` print as `x1, x2, x3, …`;
//! ids from [`PARAM_BASE`] on are symbolic parameters (`m`, `t1`, `t2`, …)
//! which sort after every `x` variable. Terms are kept in graded
//! lexicographic order with `x1 > x2 > … > m`.

mod det;
mod linalg;
mod schur;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use det::{det_by_columns, det_poly};
pub use linalg::{det_rational, kernel_basis, rank, rref};
pub use schur::{partial_schur, schur, vandermonde, vandermonde_divisor, Partition};

pub type Q = BigRational;

/// First id reserved for symbolic parameters.
pub const PARAM_BASE: u16 = 0x8000;
/// The parameter printed as `m`.
pub const PARAM_M: u16 = PARAM_BASE;

/// The id of `x_i` (1-based).
pub fn x_var(i: usize) -> u16 {
    (i - 1) as u16
}

pub fn var_name(v: u16) -> String {
    if v < PARAM_BASE {
        format!("x{}", v + 1)
    } else if v == PARAM_M {
        "m".to_string()
    } else {
        format!("t{}", v - PARAM_BASE)
    }
}

fn parse_var(s: &str) -> Option<u16> {
    if s == "m" {
        return Some(PARAM_M);
    }
    let (head, digits) = s.split_at(1);
    let k: u16 = digits.parse().ok()?;
    match head {
        "x" if k >= 1 && k < PARAM_BASE => Some(k - 1),
        "t" if k >= 1 && k < PARAM_BASE => Some(PARAM_BASE + k),
        _ => None,
    }
}

/// Parses `3`, `-2/5` or `1.25` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::BadPoly(s.to_string(), "not a rational number".into());
    if let Some((a, b)) = t.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(a, b));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let int = int.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() {
            return Err(bad());
        }
        let whole: BigInt = if int.is_empty() { BigInt::zero() } else { int.parse().map_err(|_| bad())? };
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let v = Q::new(whole * &den + f, den);
        return Ok(if neg { -v } else { v });
    }
    Ok(Q::from_integer(t.parse().map_err(|_| bad())?))
}

/// `a/b`, or just `a` for integers.
pub fn format_rational(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A monomial: `(variable, exponent)` pairs sorted by variable, exponents > 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[(u16, u16); 10]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: u16, e: u16) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(SmallVec::from_slice(&[(v, e)]))
        }
    }

    pub fn from_pairs(mut pairs: Vec<(u16, u16)>) -> Monomial {
        pairs.sort_unstable();
        let mut out: SmallVec<[(u16, u16); 10]> = SmallVec::new();
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|p| p.1 > 0);
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(u16, u16)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1 as u32).sum()
    }

    pub fn exponent(&self, v: u16) -> u16 {
        self.0.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out: SmallVec<[(u16, u16); 10]> = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order, `x1 > x2 > …`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a.0 != b.0 {
                    // the smaller variable id is the larger variable
                    return b.0.cmp(&a.0);
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    var_name(v)
                } else {
                    format!("{}^{}", var_name(v), e)
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A polynomial over ℚ. No zero coefficient is ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> MPoly {
        MPoly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> MPoly {
        MPoly::constant(Q::from_integer(c.into()))
    }

    pub fn term(c: Q, m: Monomial) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn var(v: u16) -> MPoly {
        MPoly::term(Q::one(), Monomial::var(v, 1))
    }

    /// `x_i`, 1-based.
    pub fn x(i: usize) -> MPoly {
        MPoly::var(x_var(i))
    }

    /// `Σ_k coeffs[k] · var^k`
    pub fn univariate(v: u16, coeffs: &[Q]) -> MPoly {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(Monomial::var(v, k as u16), c.clone());
            }
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: u16) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<u16> {
        let mut v: Vec<u16> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|p| p.0))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += sign · a · b`, without building the product first.
    pub fn add_product(&mut self, a: &MPoly, b: &MPoly, negate: bool) {
        for (m, c) in &a.terms {
            for (n, d) in &b.terms {
                let t = c * d;
                self.add_term(m.mul(n), if negate { -t } else { t });
            }
        }
    }

    /// `self += c · m · other`
    fn add_scaled(&mut self, other: &MPoly, c: &Q, m: &Monomial) {
        for (n, a) in &other.terms {
            self.add_term(n.mul(m), a * c);
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes values for some variables; the others are kept.
    pub fn substitute(&self, values: &HashMap<u16, Q>) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match values.get(&v) {
                    Some(val) => coeff *= num_traits::pow(val.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }

    /// Renames variables (the map must be injective on the variables used).
    pub fn rename(&self, map: impl Fn(u16) -> u16) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let pairs = m.pairs().iter().map(|&(v, e)| (map(v), e)).collect();
                    (Monomial::from_pairs(pairs), c.clone())
                })
                .collect(),
        }
    }

    /// Evaluates with every variable given a value; unknown variables are an error.
    pub fn eval(&self, value: impl Fn(u16) -> Option<Q>) -> Result<Q> {
        let mut total = Q::zero();
        let mut cache: HashMap<u16, Q> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let val = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(v).ok_or_else(|| {
                            Error::Invalid(format!("no value for {}", var_name(v)))
                        })?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                t *= num_traits::pow(val, e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates at `x_i = xs[i-1]`.
    pub fn eval_x(&self, xs: &[Q]) -> Result<Q> {
        self.eval(|v| xs.get(v as usize).filter(|_| v < PARAM_BASE).cloned())
    }

    /// Exact quotient `self / den`, by multivariate division in graded lex order.
    pub fn exact_divide(&self, den: &MPoly) -> Result<MPoly> {
        let (lm, lc) = den
            .leading()
            .ok_or_else(|| Error::Invalid("division by the zero polynomial".into()))?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        let mut stuck = MPoly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let (m, c) = (m.clone(), c.clone());
            match m.div(&lm) {
                Some(t) => {
                    let coeff = &c / &lc;
                    rem.add_scaled(den, &-coeff.clone(), &t);
                    quo.add_term(t, coeff);
                }
                None => {
                    rem.terms.remove(&m);
                    stuck.add_term(m, c);
                }
            }
        }
        if stuck.is_zero() {
            Ok(quo)
        } else {
            Err(Error::NotExact {
                remainder: stuck.to_string(),
            })
        }
    }

    /// The JSON term list `[{"coeff": "a/b", "monomial": [["x1", 2], …]}, …]`.
    pub fn to_json_terms(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(m, c)| {
                let mono: Vec<serde_json::Value> = m
                    .pairs()
                    .iter()
                    .map(|&(v, e)| serde_json::json!([var_name(v), e]))
                    .collect();
                serde_json::json!({"coeff": format_rational(c), "monomial": mono})
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    pub fn from_json_terms(value: &serde_json::Value) -> Result<MPoly> {
        let bad = |why: &str| Error::BadPoly(value.to_string(), why.to_string());
        let arr = value.as_array().ok_or_else(|| bad("expected an array of terms"))?;
        let mut p = MPoly::zero();
        for t in arr {
            let c = t
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| bad("term without coeff"))?;
            let c = parse_rational(c)?;
            let mono = t
                .get("monomial")
                .and_then(|m| m.as_array())
                .ok_or_else(|| bad("term without monomial"))?;
            let mut pairs = Vec::new();
            for f in mono {
                let name = f.get(0).and_then(|n| n.as_str()).ok_or_else(|| bad("bad factor"))?;
                let e = f.get(1).and_then(|e| e.as_u64()).ok_or_else(|| bad("bad exponent"))?;
                let v = parse_var(name).ok_or_else(|| bad("unknown variable"))?;
                pairs.push((v, e as u16));
            }
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }
}

impl fmt::Display for MPoly {
    /// Canonical form, leading term first: `x1^2*x3 - 1/2*x2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.0.is_empty() {
                f.write_str(&format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{}", format_rational(&a), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Reads sums of products of rationals and powers of variables, e.g.
    /// `-x1^2*x3 + 3/2*m - 4`. Parenthesised factors are also accepted.
    fn from_str(s: &str) -> Result<MPoly> {
        let mut p = Parser {
            src: s,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let out = p.sum()?;
        if p.pos != p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, why: &str) -> Error {
        Error::BadPoly(self.src.to_string(), format!("{why} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.product()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
    }

    fn product(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: u32 = self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/' || c == '.') {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(MPoly::constant(parse_rational(&s)?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let v = parse_var(&s).ok_or_else(|| self.err("unknown variable"))?;
                Ok(MPoly::var(v))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<MPoly, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// `p = q / den` with `q` integral and every number an `i64`, if possible.
fn integral_form(p: &MPoly) -> Option<(Vec<(&Monomial, i64)>, i64)> {
    let mut den = 1i64;
    for c in p.terms.values() {
        den = i64::try_from(c.denom()).ok().and_then(|d| den.checked_mul(d / den.gcd(&d)))?;
    }
    let scale = Q::from_integer(den.into());
    let nums = p
        .terms
        .iter()
        .map(|(m, c)| i64::try_from((c * &scale).to_integer()).ok().map(|n| (m, n)))
        .collect::<Option<_>>()?;
    Some((nums, den))
}

/// Product over `i128` accumulators; `None` on overflow or large coefficients.
fn mul_machine(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let (a, da) = integral_form(a)?;
    let (b, db) = integral_form(b)?;
    let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(a.len() * b.len());
    for (m, c) in &a {
        for (n, e) in &b {
            let slot = acc.entry(m.mul(n)).or_insert(0);
            *slot = slot.checked_add(*c as i128 * *e as i128)?;
        }
    }
    let den = BigInt::from(da) * BigInt::from(db);
    Some(MPoly {
        terms: acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, Q::new(c.into(), den.clone())))
            .collect(),
    })
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return MPoly {
                terms: big.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
            };
        }
        if let Some(p) = mul_machine(small, big) {
            return p;
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(small.terms.len() * big.terms.len());
        for (m, c) in &small.terms {
            for (n, a) in &big.terms {
                let t = c * a;
                match acc.entry(m.mul(n)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += t,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(t);
                    }
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |a, b| &a * &b)
    }
}

impl From<Q> for MPoly {
    fn from(q: Q) -> MPoly {
        MPoly::constant(q)
    }
}

/// Shorthand for `a/b`.
pub fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn graded_lex_order() {
        let x1 = Monomial::var(0, 1);
        let x2sq = Monomial::var(1, 2);
        let x1x2 = Monomial::from_pairs(vec![(0, 1), (1, 1)]);
        assert!(x2sq > x1);
        assert!(x1x2 < Monomial::var(0, 2));
        assert!(x1x2 > x2sq);
        assert!(Monomial::var(0, 1) > Monomial::var(1, 1));
        assert!(Monomial::var(1, 1) > Monomial::var(PARAM_M, 1));
    }

    #[test]
    fn arithmetic() {
        let a = p("x1 + x2");
        let b = p("x1 - x2");
        assert_eq!(&a * &b, p("x1^2 - x2^2"));
        assert_eq!(&a - &a, MPoly::zero());
        assert_eq!(p("(x1+1)^3"), p("x1^3 + 3*x1^2 + 3*x1 + 1"));
        assert_eq!(p("2*m*x1").variables(), vec![0, PARAM_M]);
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "-1/2", "x1^2*x3 - 1/2*x2 + 3", "-m^2 + x4", "t3*x1 - 7/3*m"] {
            let q = p(s);
            assert_eq!(q.to_string().parse::<MPoly>().unwrap(), q);
        }
        assert_eq!(p("3 + x2 - 1/2*x1^2").to_string(), "-1/2*x1^2 + x2 + 3");
        let j = p("x1^2*x3 - 1/2*m + 3").to_json_terms();
        assert_eq!(MPoly::from_json_terms(&j).unwrap(), p("x1^2*x3 - 1/2*m + 3"));
        assert!("x0".parse::<MPoly>().is_err());
        assert!("x1 +".parse::<MPoly>().is_err());
    }

    #[test]
    fn division() {
        assert_eq!(p("x1^2 - x2^2").exact_divide(&p("x1 - x2")).unwrap(), p("x1 + x2"));
        let f = p("3*x1*x2 - x2^3 + 1/2");
        assert_eq!(f.exact_divide(&MPoly::one()).unwrap(), f);
        assert!(matches!(
            p("x1^2 + 1").exact_divide(&p("x1 - x2")),
            Err(Error::NotExact { .. })
        ));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-2/4").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("1.25").unwrap(), q(5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), q(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&q(6, 3)), "2");
    }

    #[test]
    fn evaluation() {
        let f = p("x1^2*x3 - m");
        let xs = [q(2, 1), q(5, 1), q(3, 1)];
        assert!(f.eval_x(&xs).is_err());
        let g = f.substitute(&HashMap::from([(PARAM_M, q(1, 1))]));
        assert_eq!(g.eval_x(&xs).unwrap(), q(11, 1));
    }
}
