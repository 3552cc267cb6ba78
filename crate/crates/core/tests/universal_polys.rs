//! Universal polynomials against their defining products, evaluated at
//! random integer points.

use lambdaring::ground::Rational;
use lambdaring::sympoly::{universal_p, universal_pcomp, UniversalPolyCache};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Coefficients of `∏ (1 + r t)` over the given roots, up to degree `n`.
fn roots_to_coeffs(roots: &[Rational], n: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::one();
    for r in roots {
        for k in (1..=n).rev() {
            c[k] = c[k].add(&c[k - 1].mul(r));
        }
    }
    c
}

fn subsets(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(k, n - 1);
    for mut s in subsets(k - 1, n - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

#[test]
fn products_match_grothendieck_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=5 {
        let p = universal_p(n).unwrap();
        for _ in 0..6 {
            let xs: Vec<Rational> = (0..n).map(|_| q(rng.gen_range(-4..=4))).collect();
            let ys: Vec<Rational> = (0..n).map(|_| q(rng.gen_range(-4..=4))).collect();
            let a = roots_to_coeffs(&xs, n);
            let b = roots_to_coeffs(&ys, n);
            let xy: Vec<Rational> = xs.iter().flat_map(|x| ys.iter().map(move |y| x.mul(y))).collect();
            let want = roots_to_coeffs(&xy, n)[n].clone();
            let mut vals = a[1..].to_vec();
            vals.extend_from_slice(&b[1..]);
            assert_eq!(p.eval(&vals, &Rational::zero()), want, "n = {n}");
        }
    }
}

#[test]
fn composites_match_subset_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for m in 1..=6usize {
        for n in 1..=6 / m {
            let k = m * n;
            let pc = universal_pcomp(m, n).unwrap();
            for _ in 0..5 {
                let xs: Vec<Rational> = (0..k).map(|_| q(rng.gen_range(-3..=3))).collect();
                let a = roots_to_coeffs(&xs, k);
                let monos: Vec<Rational> = subsets(n, k)
                    .iter()
                    .map(|s| s.iter().fold(Rational::one(), |acc, &i| acc.mul(&xs[i])))
                    .collect();
                let want = roots_to_coeffs(&monos, m)[m].clone();
                assert_eq!(pc.eval(&a[1..], &Rational::zero()), want, "m = {m}, n = {n}");
            }
        }
    }
}

#[test]
fn small_cases() {
    assert_eq!(universal_p(1).unwrap().to_string(), "a1*b1");
    assert_eq!(universal_p(2).unwrap().to_string(), "a1^2*b2 + a2*b1^2 - 2*a2*b2");
    assert_eq!(universal_pcomp(1, 2).unwrap().to_string(), "a2");
    assert_eq!(universal_pcomp(2, 1).unwrap().to_string(), "a2");
    assert_eq!(universal_pcomp(2, 2).unwrap().to_string(), "a1*a3 - a4");
    let p2 = universal_p(2).unwrap();
    assert!(p2.eval(&[q(5), q(0), q(-3), q(0)], &Rational::zero()).is_zero());
}

#[test]
fn integer_coefficients_and_bound() {
    let cache = UniversalPolyCache::default();
    for n in 1..=6 {
        assert!(cache.p(n).unwrap().has_integer_coefficients());
    }
    for (m, n) in [(1, 6), (2, 3), (3, 2), (6, 1)] {
        assert!(cache.pcomp(m, n).unwrap().has_integer_coefficients());
    }
    assert!(cache.pcomp(3, 3).is_err());
    assert!(UniversalPolyCache::with_bound(9).pcomp(3, 3).unwrap().has_integer_coefficients());
}
