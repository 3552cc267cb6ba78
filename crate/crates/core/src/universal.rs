//! The universal ring `U` of ψ-ring structures on power series, handled
//! through generators, relation evaluators and assignments `v ↦ f(v)`
//! within a finite window (primes, truncation `N`, tail depth `D`).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ground::{Coeff, GroundRing, Rational, RingElement};
use crate::series::TruncSeries;
use crate::structures::{
    conjugate_structure, multiplicative_structure, power_structure, AdamsData, Carrier, LambdaStructure,
};
use crate::sympoly::{var_list, MPoly};

/// Default tail depth.
pub const DEFAULT_DEPTH: usize = 2;

/// The index `(p, i, q_1, …, q_n)` of a generator `v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorIndex {
    pub p: u64,
    pub i: usize,
    pub tail: Vec<u64>,
}

impl GeneratorIndex {
    pub fn new(p: u64, i: usize, tail: Vec<u64>) -> Self {
        GeneratorIndex { p, i, tail }
    }

    pub fn depth0(p: u64, i: usize) -> Self {
        GeneratorIndex { p, i, tail: Vec::new() }
    }

    /// The index with `q` appended to the tail.
    pub fn extend(&self, q: u64) -> Self {
        let mut tail = self.tail.clone();
        tail.push(q);
        GeneratorIndex { p: self.p, i: self.i, tail }
    }

    /// Variable name `v_p_i_q1_…`.
    pub fn var_name(&self) -> String {
        let mut s = format!("v_{}_{}", self.p, self.i);
        for q in &self.tail {
            s.push_str(&format!("_{q}"));
        }
        s
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({},{}", self.p, self.i)?;
        for q in &self.tail {
            write!(f, ",{q}")?;
        }
        write!(f, ")")
    }
}

/// Every generator index within the window, depth-0 first.
pub fn window_indices(primes: &[u64], n: usize, depth: usize) -> Vec<GeneratorIndex> {
    let mut level: Vec<GeneratorIndex> =
        primes.iter().flat_map(|&p| (1..=n).map(move |i| GeneratorIndex::depth0(p, i))).collect();
    let mut out = level.clone();
    for _ in 0..depth {
        level = level.iter().flat_map(|g| primes.iter().map(move |&q| g.extend(q))).collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// A ring map `U → R`, recorded by its values on the window generators.
#[derive(Debug, Clone, PartialEq)]
pub struct HomAssignment {
    target: Arc<GroundRing>,
    primes: Vec<u64>,
    n: usize,
    depth: usize,
    values: BTreeMap<GeneratorIndex, RingElement>,
}

impl HomAssignment {
    /// Assembles an assignment from explicit values. Every window index must
    /// be present and lie in `target`, and deeper values must follow the
    /// Fermat-quotient recursion.
    pub fn new(
        target: Arc<GroundRing>,
        primes: Vec<u64>,
        n: usize,
        depth: usize,
        values: BTreeMap<GeneratorIndex, RingElement>,
    ) -> Result<Self> {
        if !target.is_between_z_and_q() {
            return Err(Error::Unsupported(format!("target {target} must lie between Z and Q")));
        }
        let h = HomAssignment { target, primes, n, depth, values };
        for g in window_indices(&h.primes, n, depth) {
            let v = h.get(&g)?;
            if v.ring() != &h.target || !v.is_integral() {
                return Err(Error::NotAMember { value: v.to_string(), ring: h.target.to_string() });
            }
            if let Some(&q) = g.tail.last() {
                let mut parent = g.clone();
                parent.tail.pop();
                let want = fermat_quotient(h.get(&parent)?, q);
                if *v != want {
                    return Err(Error::RelationViolation(format!("V at {parent} with q = {q}: {v} != {want}")));
                }
            }
        }
        Ok(h)
    }

    /// Values on depth-0 generators, extended to depth `depth` by the
    /// Fermat-quotient recursion, with membership checked throughout.
    pub fn from_depth0(
        target: Arc<GroundRing>,
        primes: Vec<u64>,
        n: usize,
        depth: usize,
        base: &BTreeMap<(u64, usize), RingElement>,
    ) -> Result<Self> {
        let mut values = BTreeMap::new();
        for g in window_indices(&primes, n, depth) {
            let v = if g.tail.is_empty() {
                base.get(&(g.p, g.i)).cloned().ok_or_else(|| Error::MissingValue(g.to_string()))?
            } else {
                let mut parent = g.clone();
                let q = parent.tail.pop().expect("nonempty tail");
                let fq: RingElement = fermat_quotient(&values[&parent], q);
                if !fq.is_integral() {
                    return Err(Error::NotDivisible(format!("{}^{q} - {}", values[&parent], values[&parent]), q));
                }
                fq
            };
            if !v.is_integral() {
                return Err(Error::NotAMember { value: v.to_string(), ring: target.to_string() });
            }
            values.insert(g, v);
        }
        HomAssignment::new(target, primes, n, depth, values)
    }

    pub fn target(&self) -> &Arc<GroundRing> {
        &self.target
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn values(&self) -> &BTreeMap<GeneratorIndex, RingElement> {
        &self.values
    }

    pub fn get(&self, g: &GeneratorIndex) -> Result<&RingElement> {
        self.values.get(g).ok_or_else(|| Error::MissingValue(g.to_string()))
    }
}

/// `(u^q − u)/q`, computed in the rational envelope.
pub fn fermat_quotient<T: Coeff>(u: &T, q: u64) -> T {
    u.pow(q as u32).sub(u).scale(&Rational::new(1, q as i64))
}

/// `u_{(p,i)} = p·v`, or `1 + p·v` when `i = p`.
pub fn u_element<T: Coeff>(p: u64, i: usize, v: &T) -> T {
    let pv = v.scale(&Rational::from_int(p as i64));
    if i as u64 == p {
        pv.add(&v.one_like())
    } else {
        pv
    }
}

/// `u_{(p,i)}` as a polynomial in the single generator `v_p_i`.
pub fn u_symbolic(p: u64, i: usize) -> MPoly {
    let vars = var_list(&[GeneratorIndex::depth0(p, i).var_name()]);
    u_element(p, i, &MPoly::var(vars, 0))
}

/// `ψ^p_univ(x) = Σ_{i≤N} u_{(p,i)} x^i` over `ℤ[v_p_1..v_p_N]`.
pub fn universal_adams_symbolic(p: u64, n: usize) -> TruncSeries<MPoly> {
    let names: Vec<String> = (1..=n).map(|i| GeneratorIndex::depth0(p, i).var_name()).collect();
    let vars = var_list(&names);
    let gens = MPoly::gens(&vars);
    let mut coeffs = vec![MPoly::zero(vars)];
    coeffs.extend(gens.iter().enumerate().map(|(k, v)| u_element(p, k + 1, v)));
    TruncSeries::new(coeffs)
}

/// `ψ^p_univ(x)` pushed forward along the assignment.
pub fn universal_adams(p: u64, h: &HomAssignment, n: usize) -> Result<TruncSeries<RingElement>> {
    let zero = RingElement::int(&h.target, 0);
    let mut coeffs = vec![zero];
    for i in 1..=n {
        coeffs.push(u_element(p, i, h.get(&GeneratorIndex::depth0(p, i))?));
    }
    Ok(TruncSeries::new(coeffs))
}

/// Coefficients `w_{(p,q,l)}`, `l = 0..N`, of `ψ^p ψ^q − ψ^q ψ^p`.
pub fn relation_w(p: u64, q: u64, h: &HomAssignment, n: usize) -> Result<Vec<RingElement>> {
    let sp = universal_adams(p, h, n)?;
    let sq = universal_adams(q, h, n)?;
    Ok(sp.compose(&sq)?.sub(&sq.compose(&sp)?)?.into_coeffs())
}

/// `V = v^q − v − q·v′`, where `v′` is the generator with `q` appended.
pub fn relation_v(g: &GeneratorIndex, q: u64, h: &HomAssignment) -> Result<RingElement> {
    let next = g.extend(q);
    if g.tail.len() >= h.depth {
        return Err(Error::OutOfRange { index: next.tail.len(), max: h.depth });
    }
    let v = h.get(g)?;
    let v2 = h.get(&next)?;
    Ok(v.pow(q as u32).sub(v).sub(&v2.scale(&Rational::from_int(q as i64))))
}

fn power_series_over_localization(s: &LambdaStructure) -> Result<(&Arc<GroundRing>, usize)> {
    match s.carrier() {
        Carrier::PowerSeries { ring, n, .. } if ring.is_between_z_and_q() => Ok((ring, *n)),
        c => Err(Error::Unsupported(format!("{c} is not R[[x]] with R between Z and Q"))),
    }
}

/// The assignment `f` with `f_*(ψ^p_univ) = ψ^p_S`.
pub fn hom_from_structure(s: &LambdaStructure, depth: usize) -> Result<HomAssignment> {
    let (ring, n) = power_series_over_localization(s)?;
    let mut base = BTreeMap::new();
    for &p in s.primes() {
        let series = s.series_for(p).expect("series data");
        for i in 1..=n {
            let mut r = series.coeff(i).clone();
            if i as u64 == p {
                r = r.sub(&r.one_like());
            }
            let v = r.scale(&Rational::new(1, p as i64));
            if !v.is_integral() {
                return Err(Error::NotDivisible(format!("coefficient of x^{i} in psi^{p}"), p));
            }
            base.insert((p, i), v);
        }
    }
    HomAssignment::from_depth0(ring.clone(), s.primes().to_vec(), n, depth, &base)
}

/// Every window relation the assignment fails to kill.
pub fn relation_violations(h: &HomAssignment) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (k, &p) in h.primes.iter().enumerate() {
        for &q in &h.primes[k + 1..] {
            for (l, w) in relation_w(p, q, h, h.n)?.iter().enumerate() {
                if !w.is_zero() {
                    bad.push(format!("w({p},{q},{l}) = {w}"));
                }
            }
        }
    }
    for g in window_indices(&h.primes, h.n, h.depth.saturating_sub(1)) {
        if g.tail.len() >= h.depth {
            continue;
        }
        for &q in &h.primes {
            let v = relation_v(&g, q, h)?;
            if !v.is_zero() {
                bad.push(format!("V at {g}, q = {q}: {v}"));
            }
        }
    }
    Ok(bad)
}

/// The pushforward structure `ψ^p = f_*(ψ^p_univ)` on `carrier`, after
/// checking that `f` kills the w- and V-relations of the window.
pub fn structure_from_hom(h: &HomAssignment, carrier: &Carrier) -> Result<LambdaStructure> {
    match carrier {
        Carrier::PowerSeries { ring, n, .. } if ring == h.target() && *n == h.n => {}
        _ => return Err(Error::Unsupported(format!("carrier {carrier} does not match the assignment window"))),
    }
    let bad = relation_violations(h)?;
    if let Some(first) = bad.first() {
        return Err(Error::RelationViolation(format!("{first} ({} violations)", bad.len())));
    }
    let d = carrier.x_filtration();
    let data = h
        .primes
        .iter()
        .map(|&p| Ok((p, universal_adams(p, h, h.n)?.with_filtration(d))))
        .collect::<Result<_>>()?;
    LambdaStructure::new(carrier.clone(), h.primes.clone(), AdamsData::Series(data))
}

/// `structure_from_hom ∘ hom_from_structure` is the identity on `s`.
pub fn roundtrip_check(s: &LambdaStructure, depth: usize) -> Result<bool> {
    let h = hom_from_structure(s, depth)?;
    Ok(structure_from_hom(&h, s.carrier())? == *s)
}

/// `hom_from_structure ∘ structure_from_hom` is the identity on `h`.
pub fn hom_roundtrip_check(h: &HomAssignment, carrier: &Carrier) -> Result<bool> {
    let s = structure_from_hom(h, carrier)?;
    Ok(hom_from_structure(&s, h.depth)? == *h)
}

/// Pairwise distinct structures give pairwise distinct assignments.
pub fn distinct_assignments(structures: &[LambdaStructure], depth: usize) -> Result<bool> {
    let homs = structures.iter().map(|s| hom_from_structure(s, depth)).collect::<Result<Vec<_>>>()?;
    for i in 0..structures.len() {
        for j in i + 1..structures.len() {
            if (structures[i] != structures[j]) && homs[i] == homs[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A random valid assignment: the structure `(1+x)^p − 1` or `x^p`
/// conjugated by a random integral change of variable `φ(x) = ±x + …`.
pub fn random_admissible_assignment(carrier: &Carrier, primes: &[u64], depth: usize, seed: u64) -> Result<HomAssignment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = if rng.gen_bool(0.5) {
        multiplicative_structure(carrier.clone(), primes)?
    } else {
        power_structure(carrier.clone(), primes)?
    };
    let n = carrier.series_truncation().expect("series carrier");
    let ring = carrier.ground_ring();
    let mut coeffs = vec![RingElement::int(ring, 0), RingElement::int(ring, if rng.gen_bool(0.5) { 1 } else { -1 })];
    for _ in 2..=n.min(4) {
        coeffs.push(RingElement::int(ring, rng.gen_range(-2..=2)));
    }
    let phi = TruncSeries::from_coeffs(&coeffs[0], &coeffs, n).with_filtration(carrier.x_filtration());
    hom_from_structure(&conjugate_structure(&base, &phi)?, depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zx(n: usize) -> Carrier {
        Carrier::power_series(GroundRing::integers(), n, 1).unwrap()
    }

    fn int(n: i64) -> RingElement {
        RingElement::int(&Arc::new(GroundRing::integers()), n)
    }

    #[test]
    fn u_elements() {
        assert_eq!(u_symbolic(2, 1).to_string(), "2*v_2_1");
        assert_eq!(u_symbolic(2, 2).to_string(), "2*v_2_2 + 1");
        assert!(u_element(2, 2, &Rational::zero()).is_one());
    }

    #[test]
    fn symbolic_series() {
        let s = universal_adams_symbolic(2, 3);
        assert_eq!(s.to_string(), "2*v_2_1*x + (2*v_2_2 + 1)*x^2 + 2*v_2_3*x^3");
    }

    #[test]
    fn fermat_quotients() {
        assert_eq!(fermat_quotient(&int(1), 3), int(0));
        assert_eq!(fermat_quotient(&int(2), 2), int(1));
        assert_eq!(fermat_quotient(&int(2), 3), int(2));
    }

    #[test]
    fn hom_of_multiplicative_structure() {
        let s = multiplicative_structure(zx(4), &[2, 3]).unwrap();
        let h = hom_from_structure(&s, 2).unwrap();
        assert_eq!(h.get(&GeneratorIndex::depth0(2, 1)).unwrap(), &int(1));
        assert_eq!(h.get(&GeneratorIndex::depth0(2, 2)).unwrap(), &int(0));
        assert_eq!(h.get(&GeneratorIndex::new(2, 1, vec![3])).unwrap(), &int(0));
        assert!(relation_violations(&h).unwrap().is_empty());
        assert!(roundtrip_check(&s, 2).unwrap());
        assert!(hom_roundtrip_check(&h, s.carrier()).unwrap());
    }

    #[test]
    fn power_structure_has_zero_assignment() {
        let s = power_structure(zx(6), &[2, 3, 5]).unwrap();
        let h = hom_from_structure(&s, 1).unwrap();
        assert!(h.values().values().all(Coeff::is_zero));
        assert!(roundtrip_check(&s, 1).unwrap());
    }

    #[test]
    fn bad_assignment_is_rejected() {
        let mut base = BTreeMap::new();
        for p in [2u64, 3] {
            for i in 1..=3 {
                base.insert((p, i), int(0));
            }
        }
        base.insert((2, 2), int(1));
        let h = HomAssignment::from_depth0(Arc::new(GroundRing::integers()), vec![2, 3], 3, 1, &base).unwrap();
        assert_eq!(universal_adams(2, &h, 3).unwrap().to_string(), "3*x^2");
        let n6 = {
            let mut b = base.clone();
            for p in [2u64, 3] {
                for i in 4..=6 {
                    b.insert((p, i), int(0));
                }
            }
            HomAssignment::from_depth0(Arc::new(GroundRing::integers()), vec![2, 3], 6, 1, &b).unwrap()
        };
        assert!(!relation_w(2, 3, &n6, 6).unwrap().iter().all(Coeff::is_zero));
        assert!(matches!(structure_from_hom(&n6, &zx(6)), Err(Error::RelationViolation(_))));
    }

    #[test]
    fn v_relation_values() {
        let mut base = BTreeMap::new();
        base.insert((2, 1), int(2));
        let h = HomAssignment::from_depth0(Arc::new(GroundRing::integers()), vec![2], 1, 1, &base).unwrap();
        let g = GeneratorIndex::depth0(2, 1);
        assert!(relation_v(&g, 2, &h).unwrap().is_zero());
        assert!(relation_v(&g.extend(2), 2, &h).is_err());
    }

    #[test]
    fn random_assignments_are_admissible() {
        let c = zx(6);
        for seed in 0..3 {
            let h = random_admissible_assignment(&c, &[2, 3, 5], 1, seed).unwrap();
            let s = structure_from_hom(&h, &c).unwrap();
            assert!(s.validate().all_passed());
            assert!(roundtrip_check(&s, 1).unwrap());
        }
    }
}
