//! Commuting power series `h ∘ g = f ∘ h` and the Hasse-principle check
//! for Adams operations on power-series λ-rings.

use crate::error::{Error, Result};
use crate::ground::{Coeff, Rational, RingElement};
use crate::report::Report;
use crate::series::TruncSeries;
use crate::structures::{Carrier, LambdaStructure};

/// Data `f, g` with `f ≡ αx ≡ g`, and the requested linear coefficient `c`.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutingProblem<T: Coeff> {
    f: TruncSeries<T>,
    g: TruncSeries<T>,
    alpha: T,
    c: T,
}

/// Rejects `α = 0`, rational `α = ±1`, and any `α^j = α` with `j ≤ n`.
pub fn check_alpha<T: Coeff>(alpha: &T, n: usize) -> Result<()> {
    if alpha.is_zero() {
        return Err(Error::Hypothesis("alpha = 0".into()));
    }
    if let Some(q) = alpha.as_rational() {
        if q == Rational::one() || q == Rational::from_int(-1) {
            return Err(Error::Hypothesis(format!("alpha = {q} is a root of unity")));
        }
    }
    let mut pow = alpha.clone();
    for j in 2..=n {
        pow = pow.mul(alpha);
        if pow.sub(alpha).fraction_inverse().is_none() {
            return Err(Error::Hypothesis(format!("alpha^{j} - alpha = {} is not invertible", pow.sub(alpha))));
        }
    }
    Ok(())
}

impl<T: Coeff> CommutingProblem<T> {
    pub fn new(f: TruncSeries<T>, g: TruncSeries<T>, c: T) -> Result<Self> {
        if !f.coeff(0).is_zero() || !g.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if f.truncation() != g.truncation() {
            return Err(Error::TruncationMismatch { left: f.truncation(), right: g.truncation() });
        }
        let alpha = f.coeff(1).clone();
        if *g.coeff(1) != alpha {
            return Err(Error::Hypothesis(format!("linear coefficients differ: {alpha} vs {}", g.coeff(1))));
        }
        check_alpha(&alpha, f.truncation())?;
        Ok(CommutingProblem { f, g, alpha, c })
    }

    pub fn f(&self) -> &TruncSeries<T> {
        &self.f
    }

    pub fn g(&self) -> &TruncSeries<T> {
        &self.g
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn c(&self) -> &T {
        &self.c
    }
}

/// The unique `h ≡ cx` with `h ∘ g = f ∘ h` mod `x^{n+1}`, solved degree by
/// degree in the fraction field of the coefficients.
pub fn lubin_solve<T: Coeff>(prob: &CommutingProblem<T>, n: usize) -> Result<TruncSeries<T>> {
    if n > prob.f.truncation() {
        return Err(Error::TruncationMismatch { left: n, right: prob.f.truncation() });
    }
    let f = prob.f.truncate(n);
    let g = prob.g.truncate(n);
    let zero = prob.alpha.zero_like();
    let mut h = vec![zero.clone(); n + 1];
    if n >= 1 {
        h[1] = prob.c.clone();
    }
    let mut alpha_j = prob.alpha.clone();
    for j in 2..=n {
        alpha_j = alpha_j.mul(&prob.alpha);
        // With h_j = 0 the degree-j defect is d; the true h_j adds (α^j − α)·h_j.
        let hs = TruncSeries::new(h.clone()).with_filtration(f.x_filtration());
        let d = hs.compose(&g)?.sub(&f.compose(&hs)?)?.coeff(j).clone();
        let inv = alpha_j
            .sub(&prob.alpha)
            .fraction_inverse()
            .ok_or_else(|| Error::Hypothesis(format!("alpha^{j} = alpha")))?;
        h[j] = d.neg().mul(&inv);
    }
    Ok(TruncSeries::new(h).with_filtration(f.x_filtration()))
}

/// Outcome of [`hasse_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HasseVerdict {
    /// The hypotheses fail; nothing is claimed.
    HypothesisViolation(String),
    /// `φ` does not commute with `ψ^{p₀}`.
    NotLambdaMap,
    /// `φ` commutes with every Adams operation of the window.
    AllPass,
    /// `φ` commutes with `ψ^{p₀}` but not with `ψ^p`.
    Counterexample(u64),
}

/// Verdict together with the per-prime checks behind it.
#[derive(Debug, Clone)]
pub struct HasseOutcome {
    pub verdict: HasseVerdict,
    pub report: Report,
}

fn commutes(
    phi: &TruncSeries<RingElement>,
    psi1: &TruncSeries<RingElement>,
    psi2: &TruncSeries<RingElement>,
) -> Result<(bool, String)> {
    let l = phi.compose(psi1)?;
    let r = psi2.compose(phi)?;
    let detail = if l == r { String::new() } else { format!("{l} vs {r}") };
    Ok((l == r, detail))
}

/// Checks `φ ∘ ψ^{p₀}_1 = ψ^{p₀}_2 ∘ φ` and then the same identity at every
/// other prime of the window.
pub fn hasse_check(
    s1: &LambdaStructure,
    s2: &LambdaStructure,
    phi: &TruncSeries<RingElement>,
    p0: u64,
) -> Result<HasseOutcome> {
    let mut report = Report::new(format!("Hasse check at p0 = {p0} on {}", s1.carrier()));
    if s1.carrier() != s2.carrier() || !matches!(s1.carrier(), Carrier::PowerSeries { .. } | Carrier::TruncPoly { .. }) {
        return Err(Error::Unsupported("both structures must live on the same series carrier".into()));
    }
    if s1.primes() != s2.primes() {
        return Err(Error::WindowMismatch);
    }
    if !s1.primes().contains(&p0) {
        return Err(Error::PrimeOutsideWindow(p0));
    }
    let n = s1.carrier().series_truncation().expect("series carrier");
    if phi.truncation() != n {
        return Err(Error::TruncationMismatch { left: phi.truncation(), right: n });
    }
    let violation = |report: &mut Report, reason: String| {
        report.fail("hypotheses", reason.clone());
        HasseVerdict::HypothesisViolation(reason)
    };
    if !s1.carrier().ground_ring().is_domain() {
        let v = violation(&mut report, format!("{} is not a domain", s1.carrier().ground_ring()));
        return Ok(HasseOutcome { verdict: v, report });
    }
    if !phi.coeff(0).is_zero() {
        let v = violation(&mut report, format!("phi(0) = {}", phi.coeff(0)));
        return Ok(HasseOutcome { verdict: v, report });
    }
    for &p in s1.primes() {
        let a1 = s1.series_for(p).expect("series data").coeff(1);
        let a2 = s2.series_for(p).expect("series data").coeff(1);
        if a1 != a2 {
            let v = violation(&mut report, format!("linear coefficients of psi^{p} differ: {a1} vs {a2}"));
            return Ok(HasseOutcome { verdict: v, report });
        }
        if let Err(e) = check_alpha(a1, n) {
            let v = violation(&mut report, format!("psi^{p}: {e}"));
            return Ok(HasseOutcome { verdict: v, report });
        }
    }
    report.pass("hypotheses");

    let check = |p: u64| commutes(phi, s1.series_for(p).expect("series"), s2.series_for(p).expect("series"));
    let (ok0, detail) = check(p0)?;
    report.push(format!("phi psi^{p0}_1 = psi^{p0}_2 phi"), ok0, detail);
    if !ok0 {
        return Ok(HasseOutcome { verdict: HasseVerdict::NotLambdaMap, report });
    }
    let mut verdict = HasseVerdict::AllPass;
    for &p in s1.primes().iter().filter(|&&p| p != p0) {
        let (ok, detail) = check(p)?;
        report.push(format!("phi psi^{p}_1 = psi^{p}_2 phi"), ok, detail);
        if !ok && verdict == HasseVerdict::AllPass {
            verdict = HasseVerdict::Counterexample(p);
        }
    }
    Ok(HasseOutcome { verdict, report })
}
