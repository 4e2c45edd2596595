use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use subword_core::polyring::{
    det_poly, det_rational, kernel_basis, partial_schur, q, rank, schur, vandermonde, vandermonde_divisor, x_var,
    MPoly, Monomial, Partition, Q,
};
use subword_core::words::{OrderedSetPartition, Word};

fn p(s: &str) -> MPoly {
    s.parse().unwrap()
}

fn x(i: usize) -> MPoly {
    MPoly::x(i)
}

fn xs(vars: &[usize]) -> Vec<u16> {
    vars.iter().map(|&i| x_var(i)).collect()
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn cofactor(m: &[Vec<MPoly>]) -> MPoly {
    if m.is_empty() {
        return MPoly::one();
    }
    let mut acc = MPoly::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<MPoly>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let t = &m[0][j] * &cofactor(&minor);
        if j % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

// Σ over semistandard tableaux of shape λ filled from `vars`
fn ssyt_sum(lambda: &[u32], vars: &[u16]) -> MPoly {
    let shape: Vec<usize> = lambda.iter().map(|&l| l as usize).filter(|&l| l > 0).collect();
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let mut grid = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
    let mut acc = MPoly::zero();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, vars: &[u16], acc: &mut MPoly) {
        if k == cells.len() {
            let mut m = Monomial::one();
            for &(r, c) in cells {
                m = m.mul(&Monomial::var(vars[grid[r][c]], 1));
            }
            *acc += &MPoly::term(Q::from_integer(1.into()), m);
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for e in lo_row.max(lo_col)..vars.len() {
            grid[r][c] = e;
            go(k + 1, cells, grid, vars, acc);
        }
    }
    go(0, &cells, &mut grid, vars, &mut acc);
    acc
}

fn poly_strategy(nvars: usize, max_terms: usize, coeff: i64) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-coeff..=coeff, prop::collection::vec(0u16..3, nvars)), 0..=max_terms).prop_map(move |ts| {
        let mut acc = MPoly::zero();
        for (c, exps) in ts {
            let m = Monomial::from_pairs(exps.into_iter().enumerate().map(|(i, e)| (x_var(i + 1), e)).collect());
            acc += &MPoly::term(Q::from_integer(c.into()), m);
        }
        acc
    })
}

#[test]
fn determinant_examples() {
    let vand3: Vec<Vec<MPoly>> = (0..3).map(|i| (1..=3).map(|j| x(j).pow(i)).collect()).collect();
    assert_eq!(det_poly(&vand3), &(&(&x(2) - &x(1)) * &(&x(3) - &x(1))) * &(&x(3) - &x(2)));
    let id: Vec<Vec<MPoly>> = (0..4).map(|i| (0..4).map(|j| MPoly::int((i == j) as i64)).collect()).collect();
    assert_eq!(det_poly(&id), MPoly::one());
    let m = vec![vec![x(1), x(2)], vec![x(1).pow(2), x(2).pow(2)]];
    assert_eq!(det_poly(&m), &(&x(1) * &x(2)) * &(&x(2) - &x(1)));
}

#[test]
fn division_examples() {
    // rows x^{i-1+λ_{d-i+1}} for λ = (4,1,0): exponents 0, 2, 6
    let rows: Vec<Vec<MPoly>> = [0u32, 2, 6].iter().map(|&e| (1..=3).map(|j| x(j).pow(e)).collect()).collect();
    let quotient = det_poly(&rows).exact_divide(&vandermonde(&xs(&[1, 2, 3]))).unwrap();
    let expect = &(&(&p("x1^2 + x2^2 + x3^2") * &p("x1 + x2")) * &p("x1 + x3")) * &p("x2 + x3");
    assert_eq!(quotient, expect);
    let f = p("3*x1^2*x2 - 1/2*x3");
    assert_eq!(f.exact_divide(&MPoly::one()).unwrap(), f);
    assert_eq!(p("x1^2 - x2^2").exact_divide(&p("x1 - x2")).unwrap(), p("x1 + x2"));
    assert!(p("x1^2 + x2^2").exact_divide(&p("x1 - x2")).is_err());
}

#[test]
fn schur_examples() {
    assert_eq!(schur(&part(&[0, 0, 0]), &xs(&[1, 2, 3])).unwrap(), MPoly::one());
    assert_eq!(schur(&part(&[1, 0]), &xs(&[2, 4])).unwrap(), p("x2 + x4"));
    assert_eq!(schur(&part(&[3, 1]), &xs(&[1, 3])).unwrap(), &(&x(1) * &x(3)) * &p("x1^2 + x1*x3 + x3^2"));
}

#[test]
fn partial_schur_examples() {
    let parts = OrderedSetPartition { parts: vec![vec![1, 3], vec![2, 4]] };
    let got = partial_schur(&[part(&[3, 1]), part(&[2, 0])], &parts).unwrap();
    let expect = &(&(&x(1) * &x(3)) * &p("x1^2 + x1*x3 + x3^2")) * &p("x2^2 + x2*x4 + x4^2");
    assert_eq!(got, expect);
    assert_eq!(partial_schur(&[part(&[0, 0]), part(&[0, 0])], &parts).unwrap(), MPoly::one());
    let got = partial_schur(&[part(&[0, 0]), part(&[1, 0])], &parts).unwrap();
    assert_eq!(got, p("x2 + x4"));
    assert!(partial_schur(&[part(&[1])], &parts).is_err());
}

#[test]
fn vandermonde_divisor_examples() {
    let w = |s: &str| s.parse::<Word>().unwrap();
    assert_eq!(vandermonde_divisor(&w("1212")), &(&x(3) - &x(1)) * &(&x(4) - &x(2)));
    assert_eq!(vandermonde_divisor(&w("1234")), MPoly::one());
    let expect = &(&(&x(3) - &x(1)) * &(&x(3) - &x(2))) * &(&x(2) - &x(1));
    assert_eq!(vandermonde_divisor(&w("111")), expect);
}

#[test]
fn rational_linear_algebra() {
    let m = vec![vec![q(1, 1), q(2, 1), q(3, 1)], vec![q(2, 1), q(4, 1), q(7, 1)]];
    assert_eq!(rank(&m), 2);
    let k = kernel_basis(&m).unwrap();
    assert_eq!(k.len(), 1);
    for row in &m {
        let dot: Q = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
        assert_eq!(dot, q(0, 1));
    }
}

fn small_partition() -> impl Strategy<Value = Vec<u32>> {
    (1usize..=4).prop_flat_map(|d| prop::collection::vec(0u32..=3, d)).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        while v.iter().sum::<u32>() > 6 {
            let i = v.iter().position(|&c| c > 0).unwrap();
            v[i] -= 1;
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_is_the_tableau_sum(lambda in small_partition()) {
        let vars: Vec<u16> = (1..=lambda.len()).map(|i| x_var(2 * i)).collect();
        let s = schur(&part(&lambda), &vars).unwrap();
        prop_assert_eq!(&s, &ssyt_sum(&lambda, &vars));
        prop_assert!(s.terms().all(|(_, c)| c.is_integer() && *c > q(0, 1)));
    }

    #[test]
    fn schur_is_symmetric(lambda in small_partition(), seed in any::<u64>()) {
        let d = lambda.len();
        let vars = xs(&(1..=d).collect::<Vec<_>>());
        let s = schur(&part(&lambda), &vars).unwrap();
        let mut perm: Vec<u16> = vars.clone();
        let mut st = seed;
        for i in (1..d).rev() {
            st = st.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (st >> 33) as usize % (i + 1));
        }
        let renamed = s.rename(|v| perm[vars.iter().position(|&u| u == v).unwrap()]);
        prop_assert_eq!(renamed, s);
    }

    #[test]
    fn det_matches_cofactor_expansion(entries in prop::collection::vec(poly_strategy(3, 3, 4), 16)) {
        let m: Vec<Vec<MPoly>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        prop_assert_eq!(det_poly(&m), cofactor(&m));
    }

    #[test]
    fn rational_det_is_multiplicative(a in prop::collection::vec(-9i64..=9, 9), b in prop::collection::vec(-9i64..=9, 9)) {
        let mat = |v: &[i64]| -> Vec<Vec<Q>> { v.chunks(3).map(|r| r.iter().map(|&c| q(c, 1)).collect()).collect() };
        let (ma, mb) = (mat(&a), mat(&b));
        let prod: Vec<Vec<Q>> = (0..3).map(|i| (0..3).map(|j| (0..3).map(|k| &ma[i][k] * &mb[k][j]).sum()).collect()).collect();
        prop_assert_eq!(det_rational(&prod), det_rational(&ma) * det_rational(&mb));
        let poly: Vec<Vec<MPoly>> = ma.iter().map(|r| r.iter().map(|c| MPoly::constant(c.clone())).collect()).collect();
        prop_assert_eq!(det_poly(&poly).as_constant().unwrap(), det_rational(&ma));
    }

    #[test]
    fn binet_cauchy(a in prop::collection::vec(-5i64..=5, 8), b in prop::collection::vec(-5i64..=5, 8)) {
        // 2×4 times 4×2
        let ma: Vec<Vec<Q>> = a.chunks(4).map(|r| r.iter().map(|&c| q(c, 1)).collect()).collect();
        let mb: Vec<Vec<Q>> = b.chunks(2).map(|r| r.iter().map(|&c| q(c, 1)).collect()).collect();
        let prod: Vec<Vec<Q>> = (0..2).map(|i| (0..2).map(|j| (0..4).map(|k| &ma[i][k] * &mb[k][j]).sum()).collect()).collect();
        let mut sum = q(0, 1);
        for s in 0..4 {
            for t in s + 1..4 {
                let sa: Vec<Vec<Q>> = ma.iter().map(|r| vec![r[s].clone(), r[t].clone()]).collect();
                let sb = vec![mb[s].clone(), mb[t].clone()];
                sum += det_rational(&sa) * det_rational(&sb);
            }
        }
        prop_assert_eq!(det_rational(&prod), sum);
    }

    #[test]
    fn text_and_json_round_trip(f in poly_strategy(4, 6, 50), den in 1i64..7) {
        let f = f.scale(&q(1, den));
        prop_assert_eq!(f.to_string().parse::<MPoly>().unwrap(), f.clone());
        prop_assert_eq!(MPoly::from_json_terms(&f.to_json_terms()).unwrap(), f);
    }

    #[test]
    fn ring_axioms(a in poly_strategy(3, 4, 9), b in poly_strategy(3, 4, 9), c in poly_strategy(3, 4, 9)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let ab = &a * &b;
        if !b.is_zero() {
            prop_assert_eq!(ab.exact_divide(&b).unwrap(), a);
        }
    }

    #[test]
    fn products_evaluate_pointwise(a in poly_strategy(3, 5, 9), b in poly_strategy(3, 5, 9), big in any::<i64>(), pt in prop::collection::vec(-4i64..=4, 3)) {
        // a large coefficient pushes the product off the machine-integer path
        let huge = MPoly::constant(Q::from_integer(BigInt::from(big) * BigInt::from(big) * BigInt::from(3)));
        let a = &a + &(&huge * &x(1));
        let b = b.scale(&q(1, 3));
        let point: Vec<Q> = pt.iter().map(|&c| q(c, 1)).collect();
        let lhs = (&a * &b).eval_x(&point).unwrap();
        prop_assert_eq!(lhs, a.eval_x(&point).unwrap() * b.eval_x(&point).unwrap());
        let sub: HashMap<u16, Q> = (1..=3).map(|i| (x_var(i), point[i - 1].clone())).collect();
        prop_assert_eq!((&a * &b).substitute(&sub).as_constant().unwrap(), (&a * &b).eval_x(&point).unwrap());
    }
}
