//! Witt arithmetic and the exponential isomorphism against brute-force
//! integer oracles.

use lambdaring::ground::{Coeff, Ideal, Rational};
use lambdaring::lambda_witt::{
    exp_iso, exp_iso_inv, filtration_member, ghost, lambda_add, lambda_mul, symbolic_pair, witt_add, witt_mul,
    witt_neg, LambdaElem, WittVec,
};
use lambdaring::series::TruncSeries;
use lambdaring::sympoly::UniversalPolyCache;
use num_bigint::BigInt;
use proptest::prelude::*;

fn wv(c: &[i64]) -> WittVec<Rational> {
    WittVec::new(c.iter().map(|&v| Rational::from_int(v)).collect())
}

fn to_big(w: &WittVec<Rational>) -> Vec<BigInt> {
    w.coeffs().iter().map(|c| c.numer().clone()).collect()
}

/// `w_n = Σ_{d|n} d a_d^{n/d}`.
fn ghost_oracle(a: &[BigInt], n: usize) -> BigInt {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| BigInt::from(d) * a[d - 1].pow((n / d) as u32)).sum()
}

/// `∏ (1 + (−1)^{i+1} a_i t^i)` expanded factor by factor.
fn exp_oracle(a: &[BigInt]) -> Vec<BigInt> {
    let n = a.len();
    let mut c = vec![BigInt::from(0); n + 1];
    c[0] = BigInt::from(1);
    for (k, ak) in a.iter().enumerate() {
        let i = k + 1;
        let f = if i % 2 == 1 { ak.clone() } else { -ak.clone() };
        for d in (i..=n).rev() {
            let t = &c[d - i] * &f;
            c[d] += t;
        }
    }
    c
}

#[test]
fn documented_witt_values() {
    let one = wv(&[1, 0, 0, 0]);
    assert_eq!(witt_add(&one, &one).unwrap(), wv(&[2, -1, -2, -4]));
    assert_eq!(witt_mul(&one, &one).unwrap(), one);
    assert_eq!(witt_add(&wv(&[3, 1, 4, 1]), &wv(&[0, 0, 0, 0])).unwrap(), wv(&[3, 1, 4, 1]));
    let (a, _) = symbolic_pair(6);
    assert_eq!(ghost(4, &a).unwrap().to_string(), "a1^4 + 2*a2^2 + 4*a4");
    assert_eq!(ghost(6, &a).unwrap().to_string(), "a1^6 + 2*a2^3 + 3*a3^2 + 6*a6");
}

#[test]
fn exp_of_line_element() {
    let f = LambdaElem::new(vec![Rational::one(), Rational::zero(), Rational::zero()]);
    assert_eq!(exp_iso_inv(&f), wv(&[1, 0, 0]));
}

#[test]
fn symbolic_transport() {
    let cache = UniversalPolyCache::default();
    let (a, b) = symbolic_pair(4);
    let (ea, eb) = (exp_iso(&a), exp_iso(&b));
    assert_eq!(exp_iso(&witt_add(&a, &b).unwrap()), lambda_add(&ea, &eb).unwrap());
    assert_eq!(exp_iso(&witt_mul(&a, &b).unwrap()), lambda_mul(&ea, &eb, &cache).unwrap());
}

#[test]
fn membership_example() {
    let w = wv(&[2, 4]);
    let two = Ideal::Multiple(2);
    assert!(filtration_member(&w, &two).unwrap());
    assert!(filtration_member(&exp_iso(&w), &two).unwrap());
    assert!(!filtration_member(&wv(&[1, 2]), &two).unwrap());
}

fn small_vec(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ghost_is_additive_and_multiplicative(a in small_vec(6), b in small_vec(6)) {
        let (wa, wb) = (wv(&a), wv(&b));
        let s = to_big(&witt_add(&wa, &wb).unwrap());
        let p = to_big(&witt_mul(&wa, &wb).unwrap());
        let (ba, bb) = (to_big(&wa), to_big(&wb));
        for n in 1..=6 {
            prop_assert_eq!(ghost_oracle(&s, n), ghost_oracle(&ba, n) + ghost_oracle(&bb, n));
            prop_assert_eq!(ghost_oracle(&p, n), ghost_oracle(&ba, n) * ghost_oracle(&bb, n));
        }
    }

    #[test]
    fn negation_is_additive_inverse(a in small_vec(5)) {
        let w = wv(&a);
        let z = witt_add(&w, &witt_neg(&w).unwrap()).unwrap();
        prop_assert!(z.coeffs().iter().all(Coeff::is_zero));
    }

    #[test]
    fn exp_matches_product_expansion(a in small_vec(8)) {
        let w = wv(&a);
        let e = exp_iso(&w);
        let want = exp_oracle(&to_big(&w));
        for i in 1..=8 {
            prop_assert_eq!(e.coeff(i).numer().clone(), want[i].clone());
        }
    }

    #[test]
    fn exp_inverse_recovers_vector(a in prop::collection::vec(-30i64..=30, 8)) {
        let w = wv(&a);
        let want = exp_oracle(&to_big(&w));
        let f = LambdaElem::new(want[1..].iter().map(|c| Rational::from(c.clone())).collect());
        prop_assert_eq!(exp_iso_inv(&f), w);
    }

    #[test]
    fn exp_transports_ring_operations(a in small_vec(5), b in small_vec(5)) {
        let cache = UniversalPolyCache::default();
        let (wa, wb) = (wv(&a), wv(&b));
        let (ea, eb) = (exp_iso(&wa), exp_iso(&wb));
        prop_assert_eq!(exp_iso(&witt_add(&wa, &wb).unwrap()), lambda_add(&ea, &eb).unwrap());
        prop_assert_eq!(exp_iso(&witt_mul(&wa, &wb).unwrap()), lambda_mul(&ea, &eb, &cache).unwrap());
    }

    #[test]
    fn filtration_equivalence(comps in prop::collection::vec((0usize..=5, prop::collection::vec(-3i64..=3, 5)), 1..=5), k in 1usize..=4) {
        let zero = Rational::zero();
        let w = WittVec::new(comps.iter().map(|(v, c)| {
            let cs: Vec<Rational> = c.iter().enumerate().map(|(d, &x)| if d < *v { zero.clone() } else { Rational::from_int(x) }).collect();
            TruncSeries::from_coeffs(&zero, &cs, 4)
        }).collect());
        let ideal = Ideal::XPower(k);
        prop_assert_eq!(filtration_member(&w, &ideal).unwrap(), filtration_member(&exp_iso(&w), &ideal).unwrap());
    }
}
