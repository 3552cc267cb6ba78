//! Structures, the universal-ring correspondence and the Hasse check.

use std::collections::BTreeMap;
use std::sync::Arc;

use lambdaring::ground::{Coeff, GroundRing, Rational, RingElement};
use lambdaring::lubin::{hasse_check, lubin_solve, CommutingProblem, HasseVerdict};
use lambdaring::series::TruncSeries;
use lambdaring::structures::{
    axiom_check, conjugate_structure, default_samples, multiplicative_structure, power_structure, Carrier,
    CarrierElem, LambdaStructure,
};
use lambdaring::sympoly::UniversalPolyCache;
use lambdaring::universal::{
    fermat_quotient, hom_from_structure, hom_roundtrip_check, random_admissible_assignment, relation_violations,
    roundtrip_check, structure_from_hom, universal_adams, GeneratorIndex, HomAssignment,
};
use proptest::prelude::*;

fn zx(n: usize) -> Carrier {
    Carrier::power_series(GroundRing::integers(), n, 1).unwrap()
}

fn series(c: &Carrier, s: &str) -> TruncSeries<RingElement> {
    match c.parse_element(s).unwrap() {
        CarrierElem::Series(p) => p,
        CarrierElem::Scalar(_) => unreachable!(),
    }
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `C(m, n)` by Pascal's rule.
fn pascal(m: i64, n: usize) -> Rational {
    if m >= 0 {
        let mut row = vec![q(1)];
        for _ in 0..m {
            let mut next = vec![q(1)];
            next.extend(row.windows(2).map(|w| w[0].add(&w[1])));
            next.push(q(1));
            row = next;
        }
        row.get(n).cloned().unwrap_or_else(Rational::zero)
    } else {
        // C(−k, n) = (−1)^n C(k + n − 1, n)
        let v = pascal(-m + n as i64 - 1, n);
        if n.is_multiple_of(2) { v } else { v.neg() }
    }
}

#[test]
fn binomial_lift_matches_pascal() {
    let s = LambdaStructure::binomial(GroundRing::integers(), vec![2, 3, 5, 7]).unwrap();
    let c = s.carrier();
    for m in -10..=10 {
        let l = s.newton_lambdas(6, &c.from_int(m)).unwrap();
        for (n, v) in l.iter().enumerate() {
            assert_eq!(*v, c.from_rational(&pascal(m, n)).unwrap(), "m = {m}, n = {n}");
        }
    }
}

#[test]
fn multiplicative_structure_full_window() {
    let c = zx(8);
    let s = multiplicative_structure(c.clone(), &[2, 3, 5, 7]).unwrap();
    assert!(s.validate().all_passed());
    let r = axiom_check(&s, &default_samples(&c, 0), 3, &UniversalPolyCache::with_bound(9)).unwrap();
    assert!(r.all_passed(), "{r}");
}

#[test]
fn documented_assignments() {
    let s = multiplicative_structure(zx(8), &[2, 3, 5]).unwrap();
    let h = hom_from_structure(&s, 2).unwrap();
    let z = |n| RingElement::int(h.target(), n);
    assert_eq!(*h.get(&GeneratorIndex::depth0(2, 1)).unwrap(), z(1));
    assert_eq!(*h.get(&GeneratorIndex::depth0(2, 2)).unwrap(), z(0));
    assert_eq!(*h.get(&GeneratorIndex::new(2, 1, vec![3])).unwrap(), z(0));
    assert!(relation_violations(&h).unwrap().is_empty());
    assert!(roundtrip_check(&s, 2).unwrap());

    let p = power_structure(zx(8), &[2, 3, 5]).unwrap();
    let hp = hom_from_structure(&p, 2).unwrap();
    assert!(hp.values().values().all(Coeff::is_zero));
    assert!(roundtrip_check(&p, 2).unwrap());
    assert_ne!(h.get(&GeneratorIndex::depth0(2, 1)).unwrap(), hp.get(&GeneratorIndex::depth0(2, 1)).unwrap());
    assert_eq!(universal_adams(2, &h, 4).unwrap().to_string(), "2*x + x^2");
    assert_eq!(structure_from_hom(&hp, &zx(8)).unwrap(), p);
}

#[test]
fn non_commuting_assignment_rejected() {
    let ring = Arc::new(GroundRing::integers());
    let mut base = BTreeMap::new();
    for p in [2u64, 3] {
        for i in 1..=6 {
            base.insert((p, i), RingElement::int(&ring, 0));
        }
    }
    base.insert((2, 2), RingElement::int(&ring, 1));
    let h = HomAssignment::from_depth0(ring, vec![2, 3], 6, 1, &base).unwrap();
    assert!(!relation_violations(&h).unwrap().is_empty());
    assert!(structure_from_hom(&h, &zx(6)).is_err());
}

#[test]
fn inconsistent_tail_values_rejected() {
    let c = zx(3);
    let s = multiplicative_structure(c, &[2, 3]).unwrap();
    let h = hom_from_structure(&s, 1).unwrap();
    let mut values = h.values().clone();
    let g = GeneratorIndex::new(2, 1, vec![3]);
    values.insert(g, RingElement::int(h.target(), 5));
    assert!(HomAssignment::new(h.target().clone(), vec![2, 3], 3, 1, values).is_err());
}

#[test]
fn documented_hasse_cases() {
    let c = zx(8);
    let s1 = multiplicative_structure(c.clone(), &[2, 3, 5]).unwrap();
    for p0 in [2, 3, 5] {
        assert_eq!(hasse_check(&s1, &s1, &series(&c, "x"), p0).unwrap().verdict, HasseVerdict::AllPass);
    }
    let phi = series(&c, "x + x^2");
    let s2 = conjugate_structure(&s1, &phi).unwrap();
    assert_eq!(hasse_check(&s1, &s2, &phi, 2).unwrap().verdict, HasseVerdict::AllPass);
    assert_eq!(hasse_check(&s1, &s2, &series(&c, "x - x^2"), 2).unwrap().verdict, HasseVerdict::NotLambdaMap);
}

fn rseries(c: &[i64], n: usize) -> TruncSeries<Rational> {
    let cs: Vec<Rational> = c.iter().map(|&v| q(v)).collect();
    TruncSeries::from_coeffs(&Rational::zero(), &cs, n)
}

#[test]
fn lubin_multiplicative_family() {
    let f = rseries(&[0, 2, 1], 8);
    for c in 1..=3 {
        let prob = CommutingProblem::new(f.clone(), f.clone(), q(c)).unwrap();
        let h = lubin_solve(&prob, 8).unwrap();
        let want: Vec<Rational> = (0..=8).map(|k| if k == 0 { Rational::zero() } else { pascal(c, k) }).collect();
        assert_eq!(h.coeffs(), want.as_slice());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lubin_solution_is_unique(tail in prop::collection::vec(-3i64..=3, 4), a in 2i64..=4, c in -3i64..=3, j in 2usize..=6, bump in 1i64..=3) {
        let mut fc = vec![0, a];
        fc.extend(tail);
        let f = rseries(&fc, 6);
        let prob = CommutingProblem::new(f.clone(), f.clone(), q(c)).unwrap();
        let h = lubin_solve(&prob, 6).unwrap();
        prop_assert_eq!(h.compose(&f).unwrap(), f.compose(&h).unwrap());
        prop_assert_eq!(lubin_solve(&prob, 6).unwrap(), h.clone());
        let mut bad = h.coeffs().to_vec();
        bad[j] = bad[j].add(&q(bump));
        let hb = TruncSeries::new(bad);
        prop_assert_ne!(hb.compose(&f).unwrap(), f.compose(&hb).unwrap());
    }

    #[test]
    fn lubin_solutions_compose(tail in prop::collection::vec(-2i64..=2, 3), c1 in -3i64..=3, c2 in -3i64..=3) {
        let mut fc = vec![0, 3];
        fc.extend(tail);
        let f = rseries(&fc, 5);
        let solve = |c| lubin_solve(&CommutingProblem::new(f.clone(), f.clone(), q(c)).unwrap(), 5).unwrap();
        let (h1, h2) = (solve(c1), solve(c2));
        prop_assert_eq!(h1.compose(&h2).unwrap(), solve(c1 * c2));
    }

    #[test]
    fn hasse_implication_on_conjugates(c2 in -2i64..=2, c3 in -2i64..=2, d2 in -2i64..=2, sign in prop::bool::ANY) {
        let c = zx(6);
        let ring = c.ground_ring().clone();
        let s1 = multiplicative_structure(c.clone(), &[2, 3, 5]).unwrap();
        let e = |v: i64| RingElement::int(&ring, v);
        let lead = if sign { 1 } else { -1 };
        let phi = TruncSeries::from_coeffs(&e(0), &[e(0), e(lead), e(c2), e(c3)], 6);
        let s2 = conjugate_structure(&s1, &phi).unwrap();
        let other = TruncSeries::from_coeffs(&e(0), &[e(0), e(lead), e(d2), e(c3)], 6);
        for cand in [&phi, &other] {
            let v = hasse_check(&s1, &s2, cand, 2).unwrap().verdict;
            prop_assert!(matches!(v, HasseVerdict::AllPass | HasseVerdict::NotLambdaMap), "{:?}", v);
        }
    }

    #[test]
    fn random_assignments_round_trip(seed in 0u64..1000) {
        let c = zx(5);
        let h = random_admissible_assignment(&c, &[2, 3, 5], 2, seed).unwrap();
        prop_assert!(relation_violations(&h).unwrap().is_empty());
        prop_assert!(hom_roundtrip_check(&h, &c).unwrap());
        let s = structure_from_hom(&h, &c).unwrap();
        prop_assert!(s.validate().all_passed());
        prop_assert!(roundtrip_check(&s, 2).unwrap());
        for u in h.values().values() {
            for p in [2u64, 3, 5] {
                prop_assert!(fermat_quotient(u, p).is_integral());
            }
        }
    }

    #[test]
    fn binomial_axioms_on_integers(r in -6i64..=6, s in -6i64..=6) {
        let st = LambdaStructure::binomial(GroundRing::integers(), vec![2, 3, 5]).unwrap();
        let c = st.carrier();
        let rep = axiom_check(&st, &[c.from_int(r), c.from_int(s)], 2, &UniversalPolyCache::default()).unwrap();
        prop_assert!(rep.all_passed(), "{}", rep);
    }
}
