//! Scalars, series and Λ-operations through the public API.

use std::sync::Arc;

use lambdaring::ground::{binomial, is_p_divisible, ring_arith, GroundRing, Rational, RingElement, RingOp};
use lambdaring::lambda_witt::{lambda_op, symbolic_pair, LambdaElem};
use lambdaring::series::{TruncSeries, Valuation};
use lambdaring::sympoly::{express_in_elementary, var_list, MPoly, UniversalPolyCache};
use proptest::prelude::*;

fn ring(s: &str) -> Arc<GroundRing> {
    Arc::new(s.parse().unwrap())
}

fn rs(c: &[i64], n: usize) -> TruncSeries<Rational> {
    let cs: Vec<Rational> = c.iter().map(|&v| Rational::from_int(v)).collect();
    TruncSeries::from_coeffs(&Rational::zero(), &cs, n)
}

#[test]
fn scalar_arithmetic() {
    let q = ring("Q");
    let a = q.parse_element("1/2").unwrap();
    let b = q.parse_element("1/3").unwrap();
    assert_eq!(ring_arith(RingOp::Add, &a, &b).unwrap().to_string(), "5/6");
    let d = ring("Z[eps]");
    let x = d.parse_element("2 + 3*eps").unwrap();
    let y = d.parse_element("5 + 7*eps").unwrap();
    assert_eq!(ring_arith(RingOp::Mul, &x, &y).unwrap().to_string(), "10 + 29*eps");
    assert!(ring("Z[1/2]").parse_element("1/3").is_err());
    let z = ring("Z");
    assert!(is_p_divisible(&RingElement::int(&z, 6), 2));
    assert!(!is_p_divisible(&RingElement::int(&z, 3), 2));
    assert!(is_p_divisible(&RingElement::int(&q, 3), 2));
    assert_eq!(binomial(&RingElement::int(&z, -1), 3).0, RingElement::int(&z, -1));
    let (v, ok) = binomial(&a, 2);
    assert_eq!((v.to_string(), ok), ("-1/8".to_string(), true));
}

#[test]
fn symmetric_reduction() {
    let vars = var_list(&["x1", "x2", "x3"]);
    let f = MPoly::parse("x1^3 + x2^3 + x3^3", vars).unwrap();
    assert_eq!(express_in_elementary(&f, &["x1", "x2", "x3"]).unwrap().to_string(), "e1^3 - 3*e1*e2 + 3*e3");
    let g = MPoly::parse("x1^2 + x2", var_list(&["x1", "x2"])).unwrap();
    assert!(express_in_elementary(&g, &["x1", "x2"]).is_err());
}

#[test]
fn series_examples() {
    assert_eq!(rs(&[1, 1], 3).mul(&rs(&[1, -1], 3)).unwrap().to_string(), "1 - x^2");
    assert!(rs(&[0, 1], 1).mul(&rs(&[0, 1], 1)).unwrap().is_zero());
    assert_eq!(rs(&[1, 2, 1], 2).mul(&rs(&[1, 1], 2)).unwrap().to_string(), "1 + 3*x + 3*x^2");
    assert_eq!(rs(&[0, 0, 1], 4).compose(&rs(&[0, 2, 1], 4)).unwrap().to_string(), "4*x^2 + 4*x^3 + x^4");
    assert_eq!(rs(&[0, 1, 1], 3).revert().unwrap().to_string(), "x - x^2 + 2*x^3");
    assert!(rs(&[0, 2], 3).revert().is_err());
    assert!(rs(&[0, 2, 1], 4).congruent_mod(&rs(&[0, 0, 1], 4), 2).unwrap());
    assert!(!rs(&[0, 3, 1], 4).congruent_mod(&rs(&[0, 0, 1], 4), 2).unwrap());
    assert_eq!(rs(&[0, 0, 1], 4).with_filtration(4).xadic_valuation(), Valuation::Finite(8));
    assert_eq!(rs(&[], 4).xadic_valuation(), Valuation::Infinite);
    assert_eq!(rs(&[1, 1], 4).xadic_valuation(), Valuation::Finite(0));
}

#[test]
fn lambda_operations() {
    let cache = UniversalPolyCache::default();
    let (a, _) = symbolic_pair(3);
    let f = LambdaElem::new(a.coeffs().to_vec());
    let l1 = lambda_op(1, &f, &cache).unwrap();
    assert_eq!(l1.known_prefix().unwrap(), f);
    let l2 = lambda_op(2, &f, &cache).unwrap();
    assert_eq!(l2.coeffs[0].as_ref().unwrap().to_string(), "a2");
    let short = LambdaElem::new(vec![Rational::from_int(4)]);
    assert!(lambda_op(2, &short, &cache).unwrap().coeffs[0].is_none());
    let padded = LambdaElem::new(vec![Rational::from_int(4), Rational::zero()]);
    let z = lambda_op(2, &padded, &cache).unwrap();
    assert!(z.coeffs[0].as_ref().unwrap().is_zero());
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(f in coeffs(6), g in coeffs(6), h in coeffs(6)) {
        let n = 5;
        let mut g = g; g[0] = 0;
        let mut h = h; h[0] = 0;
        let (f, g, h) = (rs(&f, n), rs(&g, n), rs(&h, n));
        prop_assert_eq!(f.compose(&g.compose(&h).unwrap()).unwrap(), f.compose(&g).unwrap().compose(&h).unwrap());
    }

    #[test]
    fn reversion_inverts(tail in coeffs(5), sign in prop::bool::ANY) {
        let mut c = vec![0, if sign { 1 } else { -1 }];
        c.extend(tail);
        let f = rs(&c, 6);
        let g = f.revert().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), rs(&[0, 1], 6));
        prop_assert_eq!(g.compose(&f).unwrap(), rs(&[0, 1], 6));
    }

    #[test]
    fn binomials_of_integers_are_integral(m in -20i64..=20, n in 0u32..=8) {
        let (v, ok) = binomial(&Rational::from_int(m), n);
        prop_assert!(ok);
        prop_assert!(v.is_integer());
    }
}
