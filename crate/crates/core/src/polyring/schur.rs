use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{det_by_columns, x_var, MPoly};
use crate::error::{Error, Result};
use crate::words::{OrderedSetPartition, Word};

/// A weakly decreasing sequence of non-negative integers of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn zero(len: usize) -> Partition {
        Partition(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// The conjugate partition, padded with zeros to `len` parts.
    pub fn conjugate(&self, len: usize) -> Partition {
        let top = self.0.first().copied().unwrap_or(0) as usize;
        let mut out: Vec<u32> = (1..=top as u32)
            .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
            .collect();
        out.resize(len.max(out.len()), 0);
        Partition(out)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `∏_{j<k} (v_k − v_j)` over the given variables, in that order.
pub fn vandermonde(vars: &[u16]) -> MPoly {
    let mut acc = MPoly::one();
    for k in 0..vars.len() {
        for j in 0..k {
            acc = &acc * &(&MPoly::var(vars[k]) - &MPoly::var(vars[j]));
        }
    }
    acc
}

/// `𝒱(v) = ∏ (x_k − x_j)` over positions `j < k` carrying the same letter.
pub fn vandermonde_divisor(v: &Word) -> MPoly {
    let rank = v.max_letter() as usize;
    v.set_partition(rank)
        .parts
        .iter()
        .map(|part| vandermonde(&part.iter().map(|&p| x_var(p)).collect::<Vec<_>>()))
        .product()
}

fn cache() -> &'static Mutex<HashMap<Vec<u32>, MPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u32>, MPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

// s_λ in the variables with ids 0..d, as bialternant / Vandermonde.
fn schur_standard(lambda: &Partition) -> MPoly {
    if let Some(p) = cache().lock().unwrap().get(&lambda.0) {
        return p.clone();
    }
    let d = lambda.len();
    let vars: Vec<u16> = (0..d as u16).collect();
    let numerator: Vec<Vec<MPoly>> = (0..d)
        .map(|i| {
            let e = i as u32 + lambda.0[d - 1 - i];
            vars.iter()
                .map(|&v| MPoly::term(num_traits::One::one(), super::Monomial::var(v, e as u16)))
                .collect()
        })
        .collect();
    let s = det_by_columns(&numerator)
        .exact_divide(&vandermonde(&vars))
        .expect("the bialternant is divisible by the Vandermonde determinant");
    cache().lock().unwrap().insert(lambda.0.clone(), s.clone());
    s
}

/// The Schur polynomial `𝓈_{λ,J}` in the variables `J`, `|J| = len(λ)`.
pub fn schur(lambda: &Partition, vars: &[u16]) -> Result<MPoly> {
    if vars.len() != lambda.len() {
        return Err(Error::Dimension(format!(
            "partition {lambda} needs {} variables, got {}",
            lambda.len(),
            vars.len()
        )));
    }
    if lambda.is_zero() {
        return Ok(MPoly::one());
    }
    Ok(schur_standard(lambda).rename(|v| vars[v as usize]))
}

/// `𝒮_{Λ,P} = ∏_i 𝓈_{λ^i, p_i}` with `p_i` sets of 1-based positions `l`
/// standing for `x_l`. Empty parts contribute 1.
pub fn partial_schur(lambdas: &[Partition], parts: &OrderedSetPartition) -> Result<MPoly> {
    if lambdas.len() != parts.parts.len() {
        return Err(Error::Dimension(format!(
            "{} partitions for {} parts",
            lambdas.len(),
            parts.parts.len()
        )));
    }
    let mut acc = MPoly::one();
    for (lam, part) in lambdas.iter().zip(&parts.parts) {
        let vars: Vec<u16> = part.iter().map(|&p| x_var(p)).collect();
        acc = &acc * &schur(lam, &vars)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn schur_values() {
        assert_eq!(schur(&part(&[0, 0, 0]), &[0, 1, 2]).unwrap(), MPoly::one());
        assert_eq!(schur(&part(&[1, 0]), &[x_var(2), x_var(4)]).unwrap(), p("x2 + x4"));
        assert_eq!(
            schur(&part(&[3, 1]), &[x_var(1), x_var(3)]).unwrap(),
            p("x1*x3*(x1^2 + x1*x3 + x3^2)")
        );
        assert_eq!(
            schur(&part(&[4, 1, 0]), &[0, 1, 2]).unwrap(),
            p("(x1^2 + x2^2 + x3^2)*(x1 + x2)*(x1 + x3)*(x2 + x3)")
        );
        assert!(schur(&part(&[1]), &[0, 1]).is_err());
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[3, 1]).conjugate(3), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 2]).conjugate(4), part(&[2, 2, 0, 0]));
        assert_eq!(part(&[0, 0]).conjugate(2), part(&[0, 0]));
    }

    #[test]
    fn vandermonde_divisors() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(vandermonde_divisor(&w("1212")), p("(x3 - x1)*(x4 - x2)"));
        assert_eq!(vandermonde_divisor(&w("123")), MPoly::one());
        assert_eq!(
            vandermonde_divisor(&w("111")),
            p("(x3 - x1)*(x3 - x2)*(x2 - x1)")
        );
    }

    #[test]
    fn partial_schur_products() {
        let parts = OrderedSetPartition {
            parts: vec![vec![1, 3], vec![2, 4]],
        };
        let got = partial_schur(&[part(&[3, 1]), part(&[2, 0])], &parts).unwrap();
        assert_eq!(got, p("x1*x3*(x1^2 + x1*x3 + x3^2)*(x2^2 + x2*x4 + x4^2)"));
        let got = partial_schur(&[part(&[0, 0]), part(&[1, 0])], &parts).unwrap();
        assert_eq!(got, p("x2 + x4"));
        let zero = partial_schur(&[part(&[0, 0]), part(&[0, 0])], &parts).unwrap();
        assert_eq!(zero, MPoly::one());
        let empty = OrderedSetPartition {
            parts: vec![vec![1], vec![]],
        };
        assert_eq!(partial_schur(&[part(&[2]), Partition::zero(0)], &empty).unwrap(), p("x1^2"));
        assert!(partial_schur(&[part(&[1])], &parts).is_err());
    }
}
