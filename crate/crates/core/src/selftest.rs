//! The eight desk-scale verification suites behind `selftest`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::ground::{binomial, Coeff, GroundRing, Ideal, Rational, RingElement};
use crate::lambda_witt::{
    coalgebra_check, exp_iso, exp_iso_inv, filtration_member, ghost, lambda_add, lambda_mul, symbolic_pair,
    witt_add, witt_mul, WittVec,
};
use crate::lubin::{hasse_check, lubin_solve, CommutingProblem, HasseVerdict};
use crate::report::Report;
use crate::series::TruncSeries;
use crate::structures::{
    axiom_check, conjugate_structure, default_samples, dual_iso_test, make_dual_structure, multiplicative_structure,
    power_structure, Carrier, LambdaStructure, DEFAULT_PRIMES,
};
use crate::sympoly::UniversalPolyCache;
use crate::universal::{
    hom_roundtrip_check, random_admissible_assignment, relation_violations, roundtrip_check, structure_from_hom,
    hom_from_structure,
};

/// Names of the suites, in order.
pub const SUITES: [&str; 8] = [
    "universal polynomials",
    "exponential isomorphism",
    "filtration equivalence",
    "Wilkerson lifting",
    "dual-number classification",
    "universal ring correspondence",
    "commuting series and Hasse principle",
    "coalgebra laws",
];

/// Tallies many cases into a single check, keeping the first failure.
struct Tally {
    name: String,
    cases: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), cases: 0, first_failure: None }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(detail());
        }
    }

    fn result<T>(&mut self, r: Result<T>, ok: impl FnOnce(T) -> bool, detail: impl FnOnce() -> String) {
        match r {
            Ok(v) => {
                let good = ok(v);
                self.case(good, detail)
            }
            Err(e) => self.case(false, || format!("{}: {e}", detail())),
        }
    }

    fn finish(self, report: &mut Report) {
        let passed = self.first_failure.is_none();
        let detail = match self.first_failure {
            None => format!("{} cases", self.cases),
            Some(f) => format!("{} cases, first failure: {f}", self.cases),
        };
        report.push(self.name, passed, detail);
    }
}

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `C(m, n)` from the factorial product, independent of the λ machinery.
fn binom_int(m: i64, n: u32) -> Rational {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for k in 0..n as i64 {
        num *= m - k;
        den *= k + 1;
    }
    Rational::new(num, den)
}

/// Runs suite `k` (1-based) with the given seed.
pub fn run_suite(k: usize, seed: u64) -> Report {
    let title = format!("suite {k}: {}", SUITES.get(k.wrapping_sub(1)).copied().unwrap_or("unknown"));
    let mut report = Report::new(title);
    let body = match k {
        1 => universal_polynomials(&mut report),
        2 => exponential(&mut report, seed),
        3 => filtration(&mut report, seed),
        4 => wilkerson(&mut report, seed),
        5 => dual_numbers(&mut report),
        6 => correspondence(&mut report, seed),
        7 => hasse(&mut report, seed),
        8 => coalgebra(&mut report, seed),
        _ => {
            report.fail("suite index", format!("no suite {k}"));
            Ok(())
        }
    };
    if let Err(e) = body {
        report.fail("suite aborted", e.to_string());
    }
    report
}

/// Runs every suite.
pub fn run_all(seed: u64) -> Vec<Report> {
    (1..=SUITES.len()).map(|k| run_suite(k, seed)).collect()
}

fn universal_polynomials(report: &mut Report) -> Result<()> {
    let cache = UniversalPolyCache::with_bound(6);
    let mut integral = Tally::new("P_n and P_{m,n} have integer coefficients");
    for n in 1..=6 {
        integral.case(cache.p(n)?.has_integer_coefficients(), || format!("P_{n}"));
    }
    for m in 1..=6 {
        for n in 1..=6 / m {
            integral.case(cache.pcomp(m, n)?.has_integer_coefficients(), || format!("P_{m},{n}"));
        }
    }
    integral.finish(report);

    let lam = |r: i64| -> Vec<Rational> { (0..=6).map(|n| binomial(&int(r), n).0).collect() };
    let mut a0 = Tally::new("lambda^0 = 1");
    let mut a1 = Tally::new("lambda^1 = id");
    let mut a2 = Tally::new("lambda^n(1) = 0 for n >= 2");
    let mut a3 = Tally::new("lambda^n(r + s) = sum lambda^i(r) lambda^(n-i)(s)");
    let mut a4 = Tally::new("lambda^n(rs) = P_n");
    let mut a5 = Tally::new("lambda^m(lambda^n(r)) = P_{m,n}");
    let l1 = lam(1);
    for n in 2..=6 {
        a2.case(l1[n].is_zero(), || format!("n = {n}"));
    }
    for r in -4..=4i64 {
        let lr = lam(r);
        a0.case(lr[0].is_one(), || format!("r = {r}"));
        a1.case(lr[1] == int(r), || format!("r = {r}"));
        for m in 1..=6usize {
            for n in 1..=6 / m {
                let inner = &lr[n];
                let got: Vec<Rational> = (0..=m as u32).map(|k| binomial(inner, k).0).collect();
                let lr_full: Vec<Rational> = (1..=m * n).map(|k| binomial(&int(r), k as u32).0).collect();
                let want = cache.pcomp(m, n)?.eval(&lr_full, &Rational::zero());
                a5.case(got[m] == want, || format!("r = {r}, m = {m}, n = {n}"));
            }
        }
        for s in -4..=4i64 {
            let ls = lam(s);
            let lsum = lam(r + s);
            let lprod = lam(r * s);
            for n in 1..=6usize {
                let conv = (0..=n).fold(Rational::zero(), |acc, i| acc.add(&lr[i].mul(&ls[n - i])));
                a3.case(lsum[n] == conv, || format!("r = {r}, s = {s}, n = {n}"));
                let mut vals = lr[1..=n].to_vec();
                vals.extend_from_slice(&ls[1..=n]);
                let want = cache.p(n)?.eval(&vals, &Rational::zero());
                a4.case(lprod[n] == want, || format!("r = {r}, s = {s}, n = {n}"));
            }
        }
    }
    for t in [a0, a1, a2, a3, a4, a5] {
        t.finish(report);
    }
    Ok(())
}

fn random_witt(rng: &mut ChaCha8Rng, n: usize, range: i64) -> WittVec<Rational> {
    WittVec::new((0..n).map(|_| int(rng.gen_range(-range..=range))).collect())
}

fn exponential(report: &mut Report, seed: u64) -> Result<()> {
    let cache = UniversalPolyCache::with_bound(6);
    let (a, b) = symbolic_pair(4);
    let ea = exp_iso(&a);
    let eb = exp_iso(&b);
    let sum = exp_iso(&witt_add(&a, &b)?);
    report.push("E(a +_W b) = E(a) +_Lambda E(b) symbolically, N = 4", sum == lambda_add(&ea, &eb)?, "");
    let prod = exp_iso(&witt_mul(&a, &b)?);
    report.push("E(a *_W b) = E(a) *_Lambda E(b) symbolically, N = 4", prod == lambda_mul(&ea, &eb, &cache)?, "");

    let (a, b) = symbolic_pair(6);
    let s = witt_add(&a, &b)?;
    let p = witt_mul(&a, &b)?;
    let mut add = Tally::new("ghost components additive, n <= 6");
    let mut mul = Tally::new("ghost components multiplicative, n <= 6");
    for n in 1..=6 {
        let (ga, gb) = (ghost(n, &a)?, ghost(n, &b)?);
        add.case(ghost(n, &s)? == ga.add(&gb), || format!("n = {n}"));
        mul.case(ghost(n, &p)? == ga.mul(&gb), || format!("n = {n}"));
    }
    add.finish(report);
    mul.finish(report);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inv = Tally::new("E^-1 E = id on random integer Witt vectors, N = 8");
    for _ in 0..100 {
        let w = random_witt(&mut rng, 8, 20);
        inv.case(exp_iso_inv(&exp_iso(&w)) == w, || w.to_string());
    }
    inv.finish(report);
    Ok(())
}

fn filtration(report: &mut Report, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
    let zero = Rational::zero();
    let mut t = Tally::new("w in W((x^k)) iff E(w) in Lambda((x^k)) over Z[x]/x^5");
    let mut hits = [0usize; 2];
    for _ in 0..200 {
        let len = rng.gen_range(1..=5);
        let floor = rng.gen_range(0..=4usize);
        let comps: Vec<TruncSeries<Rational>> = (0..len)
            .map(|_| {
                let v = floor + if rng.gen_bool(0.7) { 0 } else { rng.gen_range(0..=2) };
                let coeffs: Vec<Rational> =
                    (0..=4).map(|d| if d < v { zero.clone() } else { int(rng.gen_range(-3..=3)) }).collect();
                TruncSeries::from_coeffs(&zero, &coeffs, 4)
            })
            .collect();
        let w = WittVec::new(comps);
        let e = exp_iso(&w);
        for k in 1..=4 {
            let ideal = Ideal::XPower(k);
            let (mw, me) = (filtration_member(&w, &ideal)?, filtration_member(&e, &ideal)?);
            hits[mw as usize] += 1;
            t.case(mw == me, || format!("w = {w}, k = {k}: {mw} vs {me}"));
        }
    }
    report.push("sample covers members and non-members", hits[0] > 0 && hits[1] > 0, format!("{hits:?}"));
    t.finish(report);
    Ok(())
}

fn wilkerson(report: &mut Report, seed: u64) -> Result<()> {
    let s = LambdaStructure::binomial(GroundRing::integers(), DEFAULT_PRIMES.to_vec())?;
    let c = s.carrier();
    let mut t = Tally::new("psi = id on Z lifts to lambda^n(m) = C(m, n), |m| <= 10, n <= 6");
    for m in -10..=10i64 {
        let r = s.newton_lambdas(6, &c.from_int(m));
        t.result(
            r,
            |l| (0..=6).all(|n| l[n] == c.from_rational(&binom_int(m, n as u32)).expect("integer")),
            || format!("m = {m}"),
        );
    }
    t.finish(report);

    let carrier = Carrier::power_series(GroundRing::integers(), 8, 1)?;
    let s = multiplicative_structure(carrier.clone(), &DEFAULT_PRIMES)?;
    report.absorb("(1+x)^p - 1 validate", s.validate());
    let samples = default_samples(&carrier, seed);
    let axioms = axiom_check(&s, &samples, 3, &UniversalPolyCache::with_bound(9))?;
    let n = axioms.checks.len();
    let failed = axioms.num_failed();
    let first = axioms.failures().next().map(|c| format!("{}: {}", c.name, c.detail)).unwrap_or_default();
    report.push(
        "(1+x)^p - 1 axiom_check, n <= 3",
        failed == 0,
        if failed == 0 { format!("{n} checks") } else { format!("{failed} of {n} failed, first: {first}") },
    );
    Ok(())
}

fn dual_numbers(report: &mut Report) -> Result<()> {
    let primes = DEFAULT_PRIMES;
    let mut structures = Vec::new();
    for k in 0..20i64 {
        let a: BTreeMap<u64, Rational> =
            primes.iter().enumerate().map(|(j, &p)| (p, int(p as i64 * ((k >> j) % 3 - 1 + (k % 2) * j as i64)))).collect();
        structures.push((a.clone(), make_dual_structure(GroundRing::integers(), &a)?));
    }
    let mut distinct = Tally::new("20 structures have distinct sequences a_p");
    for i in 0..structures.len() {
        for j in i + 1..structures.len() {
            distinct.case(structures[i].0 != structures[j].0, || format!("{i} and {j}"));
        }
    }
    distinct.finish(report);
    let mut valid = Tally::new("every constructed structure validates");
    for (a, s) in &structures {
        valid.case(s.validate().all_passed(), || format!("{a:?}"));
    }
    valid.finish(report);
    let mut iso = Tally::new("distinct sequences are pairwise non-isomorphic");
    let mut refl = Tally::new("each structure is isomorphic to itself");
    for i in 0..structures.len() {
        refl.result(dual_iso_test(&structures[i].1, &structures[i].1), |b| b, || format!("{i}"));
        for j in i + 1..structures.len() {
            iso.result(dual_iso_test(&structures[i].1, &structures[j].1), |b| !b, || format!("{i} vs {j}"));
        }
    }
    iso.finish(report);
    refl.finish(report);
    let mut reject = Tally::new("a_p not divisible by p is rejected at construction");
    for &p in &primes {
        for bad in [1i64, p as i64 + 1, -(2 * p as i64) + 1] {
            let a: BTreeMap<u64, Rational> = primes.iter().map(|&q| (q, int(if q == p { bad } else { 0 }))).collect();
            reject.case(make_dual_structure(GroundRing::integers(), &a).is_err(), || format!("a_{p} = {bad}"));
        }
    }
    reject.finish(report);
    Ok(())
}

fn correspondence(report: &mut Report, seed: u64) -> Result<()> {
    let carrier = Carrier::power_series(GroundRing::integers(), 8, 1)?;
    let primes = DEFAULT_PRIMES;
    let depth = 2;
    let mut corpus = vec![
        ("x^p".to_string(), power_structure(carrier.clone(), &primes)?),
        ("(1+x)^p - 1".to_string(), multiplicative_structure(carrier.clone(), &primes)?),
    ];
    for k in 0..3u64 {
        let h = random_admissible_assignment(&carrier, &primes, depth, seed.wrapping_mul(31).wrapping_add(k))?;
        corpus.push((format!("random structure {k}"), structure_from_hom(&h, &carrier)?));
    }
    for (name, s) in &corpus {
        report.absorb(name, s.validate());
        let h = hom_from_structure(s, depth)?;
        let bad = relation_violations(&h)?;
        report.push(
            format!("{name}: assignment kills w (l <= 8) and V (depth <= {depth})"),
            bad.is_empty(),
            bad.first().cloned().unwrap_or_default(),
        );
        report.push(format!("{name}: structure -> hom -> structure"), roundtrip_check(s, depth)?, "");
        report.push(format!("{name}: hom -> structure -> hom"), hom_roundtrip_check(&h, &carrier)?, "");
    }
    let mut distinct = Tally::new("distinct structures give distinct assignments");
    for i in 0..corpus.len() {
        for j in i + 1..corpus.len() {
            if corpus[i].1 != corpus[j].1 {
                let (hi, hj) = (hom_from_structure(&corpus[i].1, depth)?, hom_from_structure(&corpus[j].1, depth)?);
                distinct.case(hi != hj, || format!("{} vs {}", corpus[i].0, corpus[j].0));
            }
        }
    }
    distinct.finish(report);
    Ok(())
}

fn hasse(report: &mut Report, seed: u64) -> Result<()> {
    let n = 8;
    let zero = Rational::zero();
    let f = TruncSeries::from_coeffs(&zero, &[int(0), int(2), int(1)], n);
    let mut t = Tally::new("lubin_solve gives (1+x)^c - 1 for f = g = (1+x)^2 - 1, N = 8");
    for c in 1..=3i64 {
        let prob = CommutingProblem::new(f.clone(), f.clone(), int(c))?;
        let want: Vec<Rational> = (0..=n).map(|k| if k == 0 { zero.clone() } else { binom_int(c, k as u32) }).collect();
        t.result(lubin_solve(&prob, n), |h| h.coeffs() == want.as_slice(), || format!("c = {c}"));
    }
    t.finish(report);

    let carrier = Carrier::power_series(GroundRing::integers(), n, 1)?;
    let ring: Arc<GroundRing> = carrier.ground_ring().clone();
    let s1 = multiplicative_structure(carrier.clone(), &DEFAULT_PRIMES)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(7));
    let mut implication = Tally::new("pass at p0 = 2 implies pass at 3, 5, 7");
    let mut conj_pass = Tally::new("phi conjugating psi_1 to psi_2 passes at p0 = 2");
    let mut negatives = 0usize;
    for _ in 0..10 {
        let mut coeffs = vec![RingElement::int(&ring, 0), RingElement::int(&ring, if rng.gen_bool(0.5) { 1 } else { -1 })];
        for _ in 2..=4 {
            coeffs.push(RingElement::int(&ring, rng.gen_range(-2..=2)));
        }
        let phi = TruncSeries::from_coeffs(&coeffs[0], &coeffs, n);
        let s2 = conjugate_structure(&s1, &phi)?;
        let mut other = coeffs.clone();
        other[2] = other[2].add(&other[2].one_like());
        let phi2 = TruncSeries::from_coeffs(&coeffs[0], &other, n);
        for (candidate, expect_pass) in [(&phi, true), (&phi2, false)] {
            let out = hasse_check(&s1, &s2, candidate, 2)?;
            if expect_pass {
                conj_pass.case(out.verdict == HasseVerdict::AllPass, || format!("phi = {phi}: {:?}", out.verdict));
            } else if out.verdict == HasseVerdict::NotLambdaMap {
                negatives += 1;
            }
            implication.case(
                matches!(out.verdict, HasseVerdict::AllPass | HasseVerdict::NotLambdaMap),
                || format!("phi = {candidate}: {:?}", out.verdict),
            );
        }
    }
    conj_pass.finish(report);
    implication.finish(report);
    report.push("perturbed maps are detected as non-lambda maps", negatives > 0, format!("{negatives} of 10"));
    Ok(())
}

fn coalgebra(report: &mut Report, seed: u64) -> Result<()> {
    let cache = UniversalPolyCache::with_bound(9);
    let s = LambdaStructure::binomial(GroundRing::integers(), vec![2, 3, 5, 7])?;
    let samples: Vec<_> = (-3..=3).map(|k| s.carrier().from_int(k)).collect();
    let r = coalgebra_check(&s, &samples, 3, &cache)?;
    report.absorb("binomial on Z", r);
    let a: BTreeMap<u64, Rational> = DEFAULT_PRIMES.iter().map(|&p| (p, int(p as i64))).collect();
    let d = make_dual_structure(GroundRing::integers(), &a)?;
    let samples = default_samples(d.carrier(), seed);
    report.absorb("dual numbers, a_p = p", coalgebra_check(&d, &samples, 3, &cache)?);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_oracle() {
        assert_eq!(binom_int(5, 2), int(10));
        assert_eq!(binom_int(-1, 3), int(-1));
        assert_eq!(binom_int(3, 0), int(1));
    }

    #[test]
    fn unknown_suite_fails() {
        assert!(!run_suite(9, 0).all_passed());
    }

    #[test]
    fn fast_suites_pass() {
        for k in [5, 7] {
            let r = run_suite(k, 0);
            assert!(r.all_passed(), "{r}");
        }
    }
}
