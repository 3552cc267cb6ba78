use std::collections::BTreeMap;

use super::carrier::Carrier;
use super::structure::{AdamsData, LambdaStructure};
use crate::error::{Error, Result};
use crate::ground::{is_p_divisible, Coeff, GroundRing, Rational, RingElement};
use crate::series::TruncSeries;

fn series_data(
    carrier: Carrier,
    primes: &[u64],
    f: impl Fn(u64, &RingElement, usize) -> TruncSeries<RingElement>,
) -> Result<LambdaStructure> {
    let n = carrier
        .series_truncation()
        .ok_or_else(|| Error::Unsupported(format!("{carrier} is not a series carrier")))?;
    let zero = RingElement::int(carrier.ground_ring(), 0);
    let d = carrier.x_filtration();
    let data = primes.iter().map(|&p| (p, f(p, &zero, n).with_filtration(d))).collect();
    LambdaStructure::new(carrier, primes.to_vec(), AdamsData::Series(data))
}

/// `ψ^p(x) = (1+x)^p − 1`, the structure of the multiplicative formal group.
pub fn multiplicative_structure(carrier: Carrier, primes: &[u64]) -> Result<LambdaStructure> {
    series_data(carrier, primes, |p, zero, n| {
        let one_plus_x = TruncSeries::from_coeffs(zero, &[zero.one_like(), zero.one_like()], n);
        let mut coeffs = one_plus_x.pow(p as u32).into_coeffs();
        coeffs[0] = coeffs[0].sub(&zero.one_like());
        TruncSeries::new(coeffs)
    })
}

/// `ψ^p(x) = x^p`.
pub fn power_structure(carrier: Carrier, primes: &[u64]) -> Result<LambdaStructure> {
    series_data(carrier, primes, |p, zero, n| TruncSeries::monomial(zero.one_like(), p as usize, n))
}

/// The dual-number structure `ψ^p(α + βε) = α + a_p βε`. Each `a_p` must
/// be `p`-divisible in `B`.
pub fn make_dual_structure(base: GroundRing, a: &BTreeMap<u64, Rational>) -> Result<LambdaStructure> {
    let carrier = Carrier::dual(base)?;
    let mut data = BTreeMap::new();
    for (&p, ap) in a {
        let v = carrier.scalar(ap)?;
        if !is_p_divisible(&v, p) {
            return Err(Error::NotDivisible(format!("a_{p} = {ap}"), p));
        }
        data.insert(p, v);
    }
    LambdaStructure::new(carrier, a.keys().copied().collect(), AdamsData::Dual(data))
}

/// Whether two dual-number structures over the same `B[ε]` are isomorphic,
/// which happens exactly when their sequences `a_p` agree.
pub fn dual_iso_test(s1: &LambdaStructure, s2: &LambdaStructure) -> Result<bool> {
    match (s1.carrier(), s2.carrier()) {
        (Carrier::DualNumbers { base: b1, .. }, Carrier::DualNumbers { base: b2, .. }) if b1 == b2 => {}
        _ => return Err(Error::Unsupported("both structures must live on the same B[eps]".into())),
    }
    if s1.primes() != s2.primes() {
        return Err(Error::WindowMismatch);
    }
    Ok(s1.primes().iter().all(|&p| s1.dual_coefficient(p) == s2.dual_coefficient(p)))
}

/// Linear Adams data `ψ^p(x) = a_p x` over a ℚ-algebra; every `a_p` must
/// be a nonzero rational.
pub fn make_family_structure(carrier: Carrier, a: &BTreeMap<u64, Rational>) -> Result<LambdaStructure> {
    if !carrier.is_series() || !carrier.is_q_algebra() {
        return Err(Error::Hypothesis(format!("{carrier} is not a series carrier over a Q-algebra")));
    }
    if let Some((p, _)) = a.iter().find(|(_, v)| v.is_zero()) {
        return Err(Error::NotAUnit(format!("a_{p} = 0")));
    }
    let primes: Vec<u64> = a.keys().copied().collect();
    series_data(carrier, &primes, |p, zero, n| TruncSeries::monomial(zero.from_rational_like(&a[&p]), 1, n))
}

/// The structure with `ψ^p_2 = φ ∘ ψ^p ∘ φ⁻¹`, for which `φ` intertwines
/// the two families.
pub fn conjugate_structure(s: &LambdaStructure, phi: &TruncSeries<RingElement>) -> Result<LambdaStructure> {
    let AdamsData::Series(data) = s.adams() else {
        return Err(Error::Unsupported("conjugation needs a series carrier".into()));
    };
    let inv = phi.revert()?;
    let mut out = BTreeMap::new();
    for (&p, psi) in data {
        out.insert(p, phi.compose(&psi.compose(&inv)?)?);
    }
    LambdaStructure::new(s.carrier().clone(), s.primes().to_vec(), AdamsData::Series(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::carrier::CarrierElem;

    fn zx(n: usize) -> Carrier {
        Carrier::power_series(GroundRing::integers(), n, 1).unwrap()
    }

    fn rat(pairs: &[(u64, i64)]) -> BTreeMap<u64, Rational> {
        pairs.iter().map(|&(p, v)| (p, Rational::from_int(v))).collect()
    }

    #[test]
    fn multiplicative_validates() {
        let s = multiplicative_structure(zx(8), &[2, 3, 5]).unwrap();
        assert_eq!(s.series_for(2).unwrap().to_string(), "2*x + x^2");
        let r = s.validate();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn identity_for_two_fails_frobenius() {
        let x = TruncSeries::x(&RingElement::int(&std::sync::Arc::new(GroundRing::integers()), 0), 8);
        let data = [(2, x)].into_iter().collect();
        let s = LambdaStructure::new(zx(8), vec![2], AdamsData::Series(data)).unwrap();
        let r = s.validate();
        assert!(!r.all_passed());
        assert!(r.failures().any(|c| c.name.contains("Frobenius")));
    }

    #[test]
    fn dual_structures() {
        let s = make_dual_structure(GroundRing::integers(), &rat(&[(2, 6), (3, 6)])).unwrap();
        assert!(s.validate().all_passed());
        let c = s.carrier().clone();
        let r = c.parse_element("4 + 5*eps").unwrap();
        assert_eq!(s.adams_apply(6, &r).unwrap().to_string(), "4 + 180*eps");
        assert_eq!(s.adams_apply(1, &r).unwrap(), r);
        assert!(matches!(s.adams_apply(5, &r), Err(Error::PrimeOutsideWindow(5))));
        assert!(make_dual_structure(GroundRing::integers(), &rat(&[(2, 3)])).is_err());
        let q = [(2, Rational::new(1, 3))].into_iter().collect();
        assert!(make_dual_structure(GroundRing::rationals(), &q).is_ok());
        let zero = make_dual_structure(GroundRing::integers(), &rat(&[(2, 0), (3, 0)])).unwrap();
        assert!(zero.validate().all_passed());
    }

    #[test]
    fn dual_structure_with_bad_coefficient_fails_validation() {
        let carrier = Carrier::dual(GroundRing::integers()).unwrap();
        let a3 = carrier.scalar(&Rational::from_int(3)).unwrap();
        let s = LambdaStructure::new(carrier, vec![2], AdamsData::Dual([(2, a3)].into_iter().collect())).unwrap();
        assert!(!s.validate().all_passed());
    }

    #[test]
    fn dual_isomorphism_classes() {
        let mk = |a2, a3| make_dual_structure(GroundRing::integers(), &rat(&[(2, a2), (3, a3)])).unwrap();
        assert!(dual_iso_test(&mk(2, 3), &mk(2, 3)).unwrap());
        assert!(!dual_iso_test(&mk(2, 3), &mk(4, 3)).unwrap());
        assert!(dual_iso_test(&mk(0, 0), &mk(0, 0)).unwrap());
        let other = make_dual_structure(GroundRing::integers(), &rat(&[(2, 2)])).unwrap();
        assert!(matches!(dual_iso_test(&mk(2, 3), &other), Err(Error::WindowMismatch)));
    }

    #[test]
    fn linear_families() {
        let c = Carrier::trunc_poly(GroundRing::rationals(), 3).unwrap();
        let s = make_family_structure(c, &rat(&[(2, 5), (3, 7)])).unwrap();
        assert!(s.validate().all_passed());
        let c = Carrier::power_series(GroundRing::rationals(), 8, 1).unwrap();
        let half = [(2, Rational::new(1, 2))].into_iter().collect();
        assert!(make_family_structure(c, &half).unwrap().validate().all_passed());
        assert!(make_family_structure(zx(4), &rat(&[(2, 1)])).is_err());
    }

    #[test]
    fn adams_composites_on_series() {
        let s = multiplicative_structure(zx(6), &[2, 3]).unwrap();
        let x = s.carrier().x().unwrap();
        let psi4 = s.adams_apply(4, &x).unwrap();
        assert_eq!(psi4.to_string(), "4*x + 6*x^2 + 4*x^3 + x^4");
        let psi6 = s.adams_apply(6, &x).unwrap();
        let psi23 = s.adams_apply(2, &s.adams_apply(3, &x).unwrap()).unwrap();
        assert_eq!(psi6, psi23);
    }

    #[test]
    fn newton_on_binomial_structure() {
        let s = LambdaStructure::binomial(GroundRing::integers(), vec![2, 3, 5]).unwrap();
        let c = s.carrier().clone();
        let five = c.from_int(5);
        assert_eq!(s.newton_lambda(2, &five).unwrap(), c.from_int(10));
        assert_eq!(s.newton_lambda(3, &c.from_int(4)).unwrap(), c.from_int(4));
        assert_eq!(s.newton_lambda(1, &c.from_int(-7)).unwrap(), c.from_int(-7));
    }

    #[test]
    fn newton_detects_non_lambda_data() {
        let carrier = Carrier::dual(GroundRing::integers()).unwrap();
        let a3 = carrier.scalar(&Rational::from_int(3)).unwrap();
        let s = LambdaStructure::new(carrier.clone(), vec![2], AdamsData::Dual([(2, a3)].into_iter().collect())).unwrap();
        let eps: CarrierElem = carrier.epsilon().unwrap();
        assert!(matches!(s.newton_lambda(2, &eps), Err(Error::NotLambdaRing(_))));
    }

    #[test]
    fn conjugation_stays_valid() {
        let s = multiplicative_structure(zx(8), &[2, 3, 5]).unwrap();
        let phi = match s.carrier().parse_element("x + x^2").unwrap() {
            CarrierElem::Series(p) => p,
            _ => unreachable!(),
        };
        let t = conjugate_structure(&s, &phi).unwrap();
        assert!(t.validate().all_passed());
        assert_ne!(t, s);
    }
}
