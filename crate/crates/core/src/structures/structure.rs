use std::collections::BTreeMap;

use super::carrier::{Carrier, CarrierElem};
use crate::error::{Error, Result};
use crate::ground::primes::{factorize, is_prime};
use crate::ground::{is_p_divisible, Coeff, Rational, RingElement};
use crate::lambda_witt::LambdaOps;
use crate::report::Report;
use crate::series::TruncSeries;

/// The Adams data `ψ^p` for each prime of the window.
#[derive(Debug, Clone, PartialEq)]
pub enum AdamsData {
    /// `ψ^p = id` (the binomial structure on a ground ring).
    Identity,
    /// `ψ^p(α + βε) = α + a_p βε`, storing `a_p ∈ B`.
    Dual(BTreeMap<u64, RingElement>),
    /// The series `ψ^p(x)`.
    Series(BTreeMap<u64, TruncSeries<RingElement>>),
}

/// A filtered λ-ring structure presented by Adams operations on a finite
/// prime window.
///
/// Construction only checks that the data has the right shape; whether it
/// actually defines a ψ-ring is answered by [`LambdaStructure::validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaStructure {
    carrier: Carrier,
    primes: Vec<u64>,
    adams: AdamsData,
}

pub const DEFAULT_PRIMES: [u64; 4] = [2, 3, 5, 7];

impl LambdaStructure {
    pub fn new(carrier: Carrier, primes: Vec<u64>, adams: AdamsData) -> Result<Self> {
        if primes.is_empty() || primes.windows(2).any(|w| w[0] >= w[1]) || !primes.iter().all(|&p| is_prime(p)) {
            return Err(Error::InvalidRing(format!("prime window {primes:?} must be ascending primes")));
        }
        let keys_match = |keys: Vec<u64>| keys == primes;
        match (&carrier, &adams) {
            (Carrier::Ground(_), AdamsData::Identity) => {}
            (Carrier::DualNumbers { base, .. }, AdamsData::Dual(a)) => {
                if !keys_match(a.keys().copied().collect()) {
                    return Err(Error::WindowMismatch);
                }
                if let Some((p, _)) = a.iter().find(|(_, v)| v.ring() != base) {
                    return Err(Error::RingMismatch { left: a[p].ring().to_string(), right: base.to_string() });
                }
            }
            (c, AdamsData::Series(a)) if c.is_series() => {
                if !keys_match(a.keys().copied().collect()) {
                    return Err(Error::WindowMismatch);
                }
                let n = c.series_truncation().expect("series carrier");
                for s in a.values() {
                    if s.truncation() != n {
                        return Err(Error::TruncationMismatch { left: s.truncation(), right: n });
                    }
                    if s.coeffs().iter().any(|v| v.ring() != c.ground_ring()) {
                        return Err(Error::RingMismatch {
                            left: s.coeff(0).ring().to_string(),
                            right: c.ground_ring().to_string(),
                        });
                    }
                }
            }
            _ => return Err(Error::InvalidRing(format!("Adams data does not fit the carrier {carrier}"))),
        }
        Ok(LambdaStructure { carrier, primes, adams })
    }

    /// `ψ^n = id` on a ground ring: `λ^n(r)` is the binomial symbol.
    pub fn binomial(carrier_ring: crate::ground::GroundRing, primes: Vec<u64>) -> Result<Self> {
        LambdaStructure::new(Carrier::ground(carrier_ring), primes, AdamsData::Identity)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn adams(&self) -> &AdamsData {
        &self.adams
    }

    /// `ψ^p(x)` for series carriers.
    pub fn series_for(&self, p: u64) -> Option<&TruncSeries<RingElement>> {
        match &self.adams {
            AdamsData::Series(a) => a.get(&p),
            _ => None,
        }
    }

    /// `a_p` for dual-number carriers.
    pub fn dual_coefficient(&self, p: u64) -> Option<&RingElement> {
        match &self.adams {
            AdamsData::Dual(a) => a.get(&p),
            _ => None,
        }
    }

    fn adams_prime(&self, p: u64, r: &CarrierElem) -> Result<CarrierElem> {
        if !self.primes.contains(&p) {
            return Err(Error::PrimeOutsideWindow(p));
        }
        match (&self.adams, r) {
            (AdamsData::Identity, _) => Ok(r.clone()),
            (AdamsData::Dual(a), CarrierElem::Scalar(c)) => {
                let (alpha, beta) = c.dual_parts().ok_or_else(|| Error::RingMismatch {
                    left: c.ring().to_string(),
                    right: self.carrier.to_string(),
                })?;
                self.carrier.dual_elem(&alpha, &beta.mul(&a[&p]))
            }
            (AdamsData::Series(a), CarrierElem::Series(s)) => Ok(CarrierElem::Series(s.compose(&a[&p])?)),
            _ => Err(Error::RingMismatch { left: r.to_string(), right: self.carrier.to_string() }),
        }
    }

    /// `ψ^n(r)`, composing prime Adams maps along the factorization of `n`.
    pub fn adams_apply(&self, n: u64, r: &CarrierElem) -> Result<CarrierElem> {
        if n == 0 {
            return Err(Error::OutOfRange { index: 0, max: usize::MAX });
        }
        let mut out = r.clone();
        for (p, e) in factorize(n) {
            if !self.primes.contains(&p) {
                return Err(Error::PrimeOutsideWindow(p));
            }
            for _ in 0..e {
                out = self.adams_prime(p, &out)?;
            }
        }
        Ok(out)
    }

    /// `ψ^1(r)..ψ^n(r)`, each built from a smaller one.
    fn adams_table(&self, n: usize, r: &CarrierElem) -> Result<Vec<CarrierElem>> {
        let mut psi: Vec<CarrierElem> = Vec::with_capacity(n);
        for k in 1..=n {
            if k == 1 {
                psi.push(r.clone());
                continue;
            }
            let p = factorize(k as u64)[0].0;
            let prev = psi[k / p as usize - 1].clone();
            psi.push(self.adams_prime(p, &prev)?);
        }
        Ok(psi)
    }

    /// `λ^0(r)..λ^n(r)` by the Newton recursion, checking that each
    /// division by `k` stays in the carrier.
    pub fn newton_lambdas(&self, n: usize, r: &CarrierElem) -> Result<Vec<CarrierElem>> {
        let psi = self.adams_table(n, r)?;
        let mut lam = vec![r.one_like()];
        for k in 1..=n {
            // λ^k = (−1)^{k+1}/k · Σ_{i<k} (−1)^i λ^i ψ^{k−i}
            let mut acc = r.zero_like();
            for i in 0..k {
                let t = lam[i].mul(&psi[k - i - 1]);
                acc = if i % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            let mut v = acc.scale(&Rational::new(1, k as i64));
            if k % 2 == 0 {
                v = v.neg();
            }
            if !v.is_integral() {
                return Err(Error::NotLambdaRing(format!("lambda^{k}({r}) = {v} leaves the carrier")));
            }
            lam.push(v);
        }
        Ok(lam)
    }

    /// `λ^n(r)`.
    pub fn newton_lambda(&self, n: usize, r: &CarrierElem) -> Result<CarrierElem> {
        Ok(self.newton_lambdas(n, r)?.pop().expect("nonempty"))
    }

    /// Checks the ψ-ring conditions on the window.
    pub fn validate(&self) -> Report {
        let mut report = Report::new(format!("validate structure on {}", self.carrier));
        match &self.adams {
            AdamsData::Identity => {
                for &p in &self.primes {
                    report.push(format!("psi^{p} Frobenius mod {p}"), true, "identity; r^p = r mod p on the ground ring");
                }
                report.push("Adams operations commute", true, "identity");
            }
            AdamsData::Dual(a) => {
                for (&p, ap) in a {
                    let ok = is_p_divisible(ap, p);
                    let unit = self.carrier.ground_ring().inverts(p);
                    let detail = match (ok, unit) {
                        (_, true) => format!("{p} is a unit"),
                        (true, false) => String::new(),
                        (false, false) => format!("a_{p} = {ap}"),
                    };
                    report.push(format!("a_{p} divisible by {p}"), ok, detail.clone());
                    report.push(format!("psi^{p}(eps) = eps^p mod {p}"), ok, detail);
                }
                report.push("Adams operations commute", true, "a_p a_q = a_q a_p");
            }
            AdamsData::Series(a) => {
                let n = self.carrier.series_truncation().expect("series carrier");
                let zero = RingElement::int(self.carrier.ground_ring(), 0);
                for (&p, s) in a {
                    let c0 = s.coeff(0);
                    report.push(format!("psi^{p}(0) = 0"), c0.is_zero(), if c0.is_zero() { String::new() } else { format!("constant term {c0}") });
                    let xp = TruncSeries::monomial(zero.one_like(), p as usize, n);
                    if self.carrier.ground_ring().inverts(p) {
                        report.push(format!("psi^{p} Frobenius mod {p}"), true, format!("{p} is a unit"));
                    } else {
                        match s.congruent_mod(&xp, p) {
                            Ok(true) => report.pass(format!("psi^{p} Frobenius mod {p}")),
                            Ok(false) => report.fail(format!("psi^{p} Frobenius mod {p}"), format!("psi^{p}(x) = {s}")),
                            Err(e) => report.fail(format!("psi^{p} Frobenius mod {p}"), e.to_string()),
                        }
                    }
                }
                for (i, (&p, sp)) in a.iter().enumerate() {
                    for (&q, sq) in a.iter().skip(i + 1) {
                        let name = format!("psi^{p} psi^{q} = psi^{q} psi^{p}");
                        match (sp.compose(sq), sq.compose(sp)) {
                            (Ok(l), Ok(r)) if l == r => report.pass(name),
                            (Ok(l), Ok(r)) => report.fail(name, format!("{l} vs {r}")),
                            (Err(e), _) | (_, Err(e)) => report.fail(name, e.to_string()),
                        }
                    }
                }
            }
        }
        report
    }
}

impl LambdaOps<CarrierElem> for LambdaStructure {
    fn lambda(&self, n: usize, r: &CarrierElem) -> Result<CarrierElem> {
        self.newton_lambda(n, r)
    }

    fn lambda_t(&self, r: &CarrierElem, n: usize) -> Result<crate::lambda_witt::LambdaElem<CarrierElem>> {
        let mut lam = self.newton_lambdas(n, r)?;
        lam.remove(0);
        Ok(crate::lambda_witt::LambdaElem::new(lam))
    }
}
