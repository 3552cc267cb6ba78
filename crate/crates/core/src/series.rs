//! Truncated univariate power series with the x-adic filtration.

use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{Coeff, Ideal, Rational};

/// `c_0 + c_1 x + … + c_N x^N` modulo `x^{N+1}`.
///
/// `x_filtration` is the filtration degree assigned to `x`; it only scales
/// valuations.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<T> {
    coeffs: Vec<T>,
    x_filtration: u32,
}

/// An x-adic valuation, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Binary series operations exposed by [`series_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
}

impl<T: Coeff> TruncSeries<T> {
    /// Builds a series from `c_0..c_N`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        TruncSeries { coeffs, x_filtration: 1 }
    }

    /// Coefficients padded with zeros (or truncated) to degree `n`.
    pub fn from_coeffs(template: &T, coeffs: &[T], n: usize) -> Self {
        let mut c: Vec<T> = coeffs.iter().take(n + 1).cloned().collect();
        c.resize(n + 1, template.zero_like());
        TruncSeries::new(c)
    }

    pub fn zero(template: &T, n: usize) -> Self {
        TruncSeries::new(vec![template.zero_like(); n + 1])
    }

    pub fn constant(c: T, n: usize) -> Self {
        let mut s = TruncSeries::zero(&c, n);
        s.coeffs[0] = c;
        s
    }

    /// `c·x^k`.
    pub fn monomial(c: T, k: usize, n: usize) -> Self {
        let mut s = TruncSeries::zero(&c, n);
        if k <= n {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(template: &T, n: usize) -> Self {
        TruncSeries::monomial(template.one_like(), 1, n)
    }

    pub fn with_filtration(mut self, d: u32) -> Self {
        assert!(d >= 1, "x filtration must be positive");
        self.x_filtration = d;
        self
    }

    /// The truncation order `N`.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn x_filtration(&self) -> u32 {
        self.x_filtration
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn template(&self) -> &T {
        &self.coeffs[0]
    }

    /// Reduces modulo `x^{n+1}` (or pads with zeros if `n` is larger).
    pub fn truncate(&self, n: usize) -> Self {
        let mut s = TruncSeries::from_coeffs(self.template(), &self.coeffs, n);
        s.x_filtration = self.x_filtration;
        s
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> TruncSeries<U> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect(), x_filtration: self.x_filtration }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch { left: self.truncation(), right: other.truncation() });
        }
        if !self.template().same_domain(other.template()) {
            return Err(Error::RingMismatch {
                left: format!("{:?}", self.template()),
                right: format!("{:?}", other.template()),
            });
        }
        Ok(())
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        TruncSeries { coeffs, x_filtration: self.x_filtration }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect();
        TruncSeries { coeffs, x_filtration: self.x_filtration }
    }

    /// Product truncated to the shorter of the two orders.
    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut coeffs = vec![self.template().zero_like(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        TruncSeries { coeffs, x_filtration: self.x_filtration }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale_by(&self, c: &T) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TruncSeries::constant(self.template().one_like(), self.truncation());
        acc.x_filtration = self.x_filtration;
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `self(g(x))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(self.compose_unchecked(g))
    }

    fn compose_unchecked(&self, g: &Self) -> Self {
        let n = self.truncation();
        let mut acc = TruncSeries::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul_unchecked(g);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        acc.x_filtration = self.x_filtration;
        acc
    }

    /// Compositional inverse: `f(g(x)) ≡ x ≡ g(f(x))`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.truncation();
        let zero = self.template().zero_like();
        if n == 0 {
            return Ok(TruncSeries::zero(&zero, 0));
        }
        let inv = self.coeffs[1]
            .unit_inverse()
            .ok_or_else(|| Error::NotAUnit(self.coeffs[1].to_string()))?;
        let mut g = TruncSeries::monomial(inv.clone(), 1, n);
        for k in 2..=n {
            let err = self.compose_unchecked(&g).coeffs[k].clone();
            if !err.is_zero() {
                g.coeffs[k] = g.coeffs[k].sub(&err.mul(&inv));
            }
        }
        g.x_filtration = self.x_filtration;
        Ok(g)
    }

    /// Whether `f − g` has every coefficient in `pR`.
    pub fn congruent_mod(&self, other: &Self, p: u64) -> Result<bool> {
        let diff = self.sub(other)?;
        for c in &diff.coeffs {
            match c.ideal_member(&Ideal::Multiple(p)) {
                Some(true) => {}
                Some(false) => return Ok(false),
                None => return Err(Error::Unsupported(format!("p-divisibility for {c:?}"))),
            }
        }
        Ok(true)
    }

    /// Smallest `k` with `c_k ≠ 0`, scaled by the x filtration.
    pub fn xadic_valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Valuation::Finite(k as u64 * self.x_filtration as u64),
            None => Valuation::Infinite,
        }
    }

    /// Order of vanishing in `x` itself, ignoring the filtration degree.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// Checked series addition or multiplication.
pub fn series_arith<T: Coeff>(op: SeriesOp, f: &TruncSeries<T>, g: &TruncSeries<T>) -> Result<TruncSeries<T>> {
    match op {
        SeriesOp::Add => f.add(g),
        SeriesOp::Mul => f.mul(g),
    }
}

impl<T: Coeff> fmt::Display for TruncSeries<T> {
    /// `c0 + c1*x + c2*x^2`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let simple = !s[1..].contains([' ', '+', '-']);
            let neg = simple && s.starts_with('-');
            if neg {
                s.remove(0);
            }
            if !simple {
                s = format!("({s})");
            }
            let body = match (k, s.as_str()) {
                (0, _) => s.clone(),
                (1, "1") => "x".to_string(),
                (1, _) => format!("{s}*x"),
                (_, "1") => format!("x^{k}"),
                _ => format!("{s}*x^{k}"),
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A truncated series is itself a ring (e.g. `ℤ[x]/x^{N+1}`). Operands of
/// different truncation meet at the smaller order.
impl<T: Coeff> Coeff for TruncSeries<T> {
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.template(), self.truncation()).with_filtration(self.x_filtration)
    }
    fn one_like(&self) -> Self {
        self.from_rational_like(&Rational::one())
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        TruncSeries::constant(self.template().from_rational_like(q), self.truncation())
            .with_filtration(self.x_filtration)
    }
    fn is_zero(&self) -> bool {
        TruncSeries::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.truncation().min(o.truncation());
        self.truncate(n).add_unchecked(&o.truncate(n))
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.truncation().min(o.truncation());
        self.truncate(n).sub_unchecked(&o.truncate(n))
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_unchecked(o)
    }
    fn neg(&self) -> Self {
        self.map(Coeff::neg)
    }
    fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }
    fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_integral)
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Coeff::is_zero) {
            self.coeffs[0].as_rational()
        } else {
            None
        }
    }
    fn same_domain(&self, o: &Self) -> bool {
        self.template().same_domain(o.template())
    }
    fn ideal_member(&self, ideal: &Ideal) -> Option<bool> {
        match ideal {
            Ideal::XPower(k) => Some(self.coeffs.iter().take(*k).all(Coeff::is_zero)),
            _ => {
                let mut all = true;
                for c in &self.coeffs {
                    all &= c.ideal_member(ideal)?;
                }
                Some(all)
            }
        }
    }
    fn fraction_inverse(&self) -> Option<Self> {
        // (c0 + x·h)⁻¹ by the geometric series
        let inv0 = self.coeffs[0].fraction_inverse()?;
        let n = self.truncation();
        let mut out = vec![self.template().zero_like(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = self.template().zero_like();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = acc.mul(&inv0).neg();
        }
        Some(TruncSeries { coeffs: out, x_filtration: self.x_filtration })
    }
}
