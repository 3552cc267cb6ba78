use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::{Coeff, GroundRing, Ideal, Rational, RingElement, Value};
use crate::series::{TruncSeries, Valuation};
use crate::sympoly::{var_list, MPoly};

/// The filtered ring underlying a structure.
#[derive(Debug, Clone, PartialEq)]
pub enum Carrier {
    /// The ground ring itself with the trivial filtration.
    Ground(Arc<GroundRing>),
    /// `B[ε]` filtered by `(ε)`.
    DualNumbers { base: Arc<GroundRing>, ring: Arc<GroundRing> },
    /// `A[x]/x^deg` with the x-adic filtration.
    TruncPoly { ring: Arc<GroundRing>, deg: usize },
    /// `R[[x]]` modulo `x^{n+1}`, with `x` in filtration degree `d`.
    PowerSeries { ring: Arc<GroundRing>, n: usize, d: u32 },
}

/// An element of a [`Carrier`].
#[derive(Debug, Clone, PartialEq)]
pub enum CarrierElem {
    Scalar(RingElement),
    Series(TruncSeries<RingElement>),
}

impl Carrier {
    pub fn ground(ring: GroundRing) -> Self {
        Carrier::Ground(Arc::new(ring))
    }

    pub fn dual(base: GroundRing) -> Result<Self> {
        let ring = Arc::new(GroundRing::dual(base.clone())?);
        Ok(Carrier::DualNumbers { base: Arc::new(base), ring })
    }

    pub fn trunc_poly(ring: GroundRing, deg: usize) -> Result<Self> {
        if deg < 2 {
            return Err(Error::InvalidRing(format!("A[x]/x^{deg} needs degree at least 2")));
        }
        if ring.is_dual() {
            return Err(Error::InvalidRing("series carriers need a domain".into()));
        }
        Ok(Carrier::TruncPoly { ring: Arc::new(ring), deg })
    }

    pub fn power_series(ring: GroundRing, n: usize, d: u32) -> Result<Self> {
        if n < 1 || d < 1 {
            return Err(Error::InvalidRing("power series need N >= 1 and d >= 1".into()));
        }
        if ring.is_dual() {
            return Err(Error::InvalidRing("series carriers need a domain".into()));
        }
        Ok(Carrier::PowerSeries { ring: Arc::new(ring), n, d })
    }

    /// The ground ring: coefficients of series, or the base of `B[ε]`.
    pub fn ground_ring(&self) -> &Arc<GroundRing> {
        match self {
            Carrier::Ground(r) => r,
            Carrier::DualNumbers { base, .. } => base,
            Carrier::TruncPoly { ring, .. } | Carrier::PowerSeries { ring, .. } => ring,
        }
    }

    /// The ring scalars of this carrier live in (`B[ε]` for dual numbers).
    pub fn scalar_ring(&self) -> &Arc<GroundRing> {
        match self {
            Carrier::DualNumbers { ring, .. } => ring,
            other => other.ground_ring(),
        }
    }

    /// Highest stored power of `x`, for series carriers.
    pub fn series_truncation(&self) -> Option<usize> {
        match self {
            Carrier::TruncPoly { deg, .. } => Some(deg - 1),
            Carrier::PowerSeries { n, .. } => Some(*n),
            _ => None,
        }
    }

    pub fn x_filtration(&self) -> u32 {
        match self {
            Carrier::PowerSeries { d, .. } => *d,
            _ => 1,
        }
    }

    pub fn is_series(&self) -> bool {
        self.series_truncation().is_some()
    }

    pub fn is_q_algebra(&self) -> bool {
        self.ground_ring().is_q_algebra()
    }

    pub fn is_between_z_and_q(&self) -> bool {
        self.ground_ring().is_between_z_and_q()
    }

    pub fn scalar(&self, q: &Rational) -> Result<RingElement> {
        RingElement::rational(self.ground_ring().clone(), q.clone())
    }

    pub fn from_rational(&self, q: &Rational) -> Result<CarrierElem> {
        let c = RingElement::rational(self.scalar_ring().clone(), q.clone())?;
        Ok(self.lift(c))
    }

    pub fn from_int(&self, n: i64) -> CarrierElem {
        self.lift(RingElement::int(self.scalar_ring(), n))
    }

    pub fn zero(&self) -> CarrierElem {
        self.from_int(0)
    }

    pub fn one(&self) -> CarrierElem {
        self.from_int(1)
    }

    /// Embeds a scalar of the scalar ring as a constant.
    fn lift(&self, c: RingElement) -> CarrierElem {
        match self.series_truncation() {
            Some(n) => CarrierElem::Series(TruncSeries::constant(c, n).with_filtration(self.x_filtration())),
            None => CarrierElem::Scalar(c),
        }
    }

    /// Wraps series coefficients `c_0..` as a carrier element.
    pub fn series(&self, coeffs: &[RingElement]) -> Result<CarrierElem> {
        let n = self
            .series_truncation()
            .ok_or_else(|| Error::Unsupported(format!("{self} has no variable x")))?;
        let zero = RingElement::int(self.ground_ring(), 0);
        if let Some(bad) = coeffs.iter().find(|c| !c.same_domain(&zero)) {
            return Err(Error::RingMismatch { left: bad.ring().to_string(), right: self.ground_ring().to_string() });
        }
        let s = TruncSeries::from_coeffs(&zero, coeffs, n).with_filtration(self.x_filtration());
        Ok(CarrierElem::Series(s))
    }

    /// The variable `x` of a series carrier.
    pub fn x(&self) -> Result<CarrierElem> {
        let r = self.ground_ring();
        self.series(&[RingElement::int(r, 0), RingElement::int(r, 1)])
    }

    /// `ε` of a dual-number carrier.
    pub fn epsilon(&self) -> Result<CarrierElem> {
        match self {
            Carrier::DualNumbers { base, ring } => {
                let zero = RingElement::int(base, 0).value().clone();
                let one = RingElement::int(base, 1).value().clone();
                Ok(CarrierElem::Scalar(RingElement::dual(ring.clone(), zero, one)?))
            }
            _ => Err(Error::Unsupported(format!("{self} has no epsilon"))),
        }
    }

    /// `α + βε`.
    pub fn dual_elem(&self, alpha: &RingElement, beta: &RingElement) -> Result<CarrierElem> {
        match self {
            Carrier::DualNumbers { ring, .. } => Ok(CarrierElem::Scalar(RingElement::dual(
                ring.clone(),
                alpha.value().clone(),
                beta.value().clone(),
            )?)),
            _ => Err(Error::Unsupported(format!("{self} is not a ring of dual numbers"))),
        }
    }

    /// Parses an element: ring syntax for scalars and dual numbers, and a
    /// polynomial in `x` over the ground ring for series carriers.
    pub fn parse_element(&self, s: &str) -> Result<CarrierElem> {
        match self {
            Carrier::Ground(r) => Ok(CarrierElem::Scalar(r.parse_element(s)?)),
            Carrier::DualNumbers { ring, .. } => Ok(CarrierElem::Scalar(ring.parse_element(s)?)),
            Carrier::TruncPoly { ring, .. } | Carrier::PowerSeries { ring, .. } => {
                let coeffs = parse_series_coeffs(ring, s)?;
                self.series(&coeffs)
            }
        }
    }

    /// Whether `r` lies in the first filtration ideal.
    pub fn in_filtration_ideal(&self, r: &CarrierElem) -> Option<bool> {
        match (self, r) {
            (Carrier::DualNumbers { .. }, CarrierElem::Scalar(c)) => c.ideal_member(&Ideal::Epsilon),
            (_, CarrierElem::Series(s)) => Some(s.coeff(0).is_zero()),
            _ => None,
        }
    }
}

/// Splits a polynomial in `x` over `ring` into coefficients.
pub fn parse_series_coeffs(ring: &Arc<GroundRing>, s: &str) -> Result<Vec<RingElement>> {
    let mut names: Vec<String> = match &**ring {
        GroundRing::RationalPoly(v) => v.clone(),
        _ => Vec::new(),
    };
    if names.iter().any(|v| v == "x") {
        return Err(Error::InvalidRing("ground variables may not be named x".into()));
    }
    names.push("x".into());
    let k = names.len() - 1;
    let p = MPoly::parse(s, var_list(&names))?;
    let deg = p.terms().map(|(m, _)| m[k]).max().unwrap_or(0) as usize;
    let ground_vars = var_list(&names[..k]);
    let mut parts: Vec<Vec<(Vec<u32>, Rational)>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        parts[m[k] as usize].push((m[..k].to_vec(), c.clone()));
    }
    parts
        .into_iter()
        .map(|terms| {
            let poly = MPoly::from_terms(ground_vars.clone(), terms);
            let value = match &**ring {
                GroundRing::RationalPoly(_) => Value::Poly(poly),
                _ => Value::Scalar(poly.as_rational().unwrap_or_default()),
            };
            RingElement::new(ring.clone(), value)
        })
        .collect()
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Ground(r) => write!(f, "{r}"),
            Carrier::DualNumbers { ring, .. } => write!(f, "{ring}"),
            Carrier::TruncPoly { ring, deg } => write!(f, "{ring}[x]/x^{deg}"),
            Carrier::PowerSeries { ring, n, d } => write!(f, "{ring}[[x]] mod x^{} (deg x = {d})", n + 1),
        }
    }
}

impl CarrierElem {
    pub fn as_scalar(&self) -> Option<&RingElement> {
        match self {
            CarrierElem::Scalar(c) => Some(c),
            CarrierElem::Series(_) => None,
        }
    }

    pub fn as_series(&self) -> Option<&TruncSeries<RingElement>> {
        match self {
            CarrierElem::Series(s) => Some(s),
            CarrierElem::Scalar(_) => None,
        }
    }

    /// x-adic valuation for series; scalars have valuation 0 unless zero.
    pub fn valuation(&self) -> Valuation {
        match self {
            CarrierElem::Series(s) => s.xadic_valuation(),
            CarrierElem::Scalar(c) if c.is_zero() => Valuation::Infinite,
            CarrierElem::Scalar(_) => Valuation::Finite(0),
        }
    }

    fn zip(&self, o: &Self, fs: impl Fn(&RingElement, &RingElement) -> RingElement, fp: impl Fn(&TruncSeries<RingElement>, &TruncSeries<RingElement>) -> TruncSeries<RingElement>) -> Self {
        match (self, o) {
            (CarrierElem::Scalar(a), CarrierElem::Scalar(b)) => CarrierElem::Scalar(fs(a, b)),
            (CarrierElem::Series(a), CarrierElem::Series(b)) => CarrierElem::Series(fp(a, b)),
            _ => panic!("carrier element kinds differ"),
        }
    }

    fn map(&self, fs: impl Fn(&RingElement) -> RingElement) -> Self {
        match self {
            CarrierElem::Scalar(a) => CarrierElem::Scalar(fs(a)),
            CarrierElem::Series(s) => CarrierElem::Series(s.map(fs)),
        }
    }
}

impl fmt::Display for CarrierElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarrierElem::Scalar(c) => write!(f, "{c}"),
            CarrierElem::Series(s) => write!(f, "{s}"),
        }
    }
}

impl Coeff for CarrierElem {
    fn zero_like(&self) -> Self {
        self.map(Coeff::zero_like)
    }
    fn one_like(&self) -> Self {
        match self {
            CarrierElem::Scalar(a) => CarrierElem::Scalar(a.one_like()),
            CarrierElem::Series(s) => CarrierElem::Series(s.one_like()),
        }
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        match self {
            CarrierElem::Scalar(a) => CarrierElem::Scalar(a.from_rational_like(q)),
            CarrierElem::Series(s) => CarrierElem::Series(s.from_rational_like(q)),
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            CarrierElem::Scalar(a) => a.is_zero(),
            CarrierElem::Series(s) => s.is_zero(),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.add(b), Coeff::add)
    }
    fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.sub(b), Coeff::sub)
    }
    fn mul(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.mul(b), Coeff::mul)
    }
    fn neg(&self) -> Self {
        self.map(Coeff::neg)
    }
    fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }
    fn is_integral(&self) -> bool {
        match self {
            CarrierElem::Scalar(a) => a.is_integral(),
            CarrierElem::Series(s) => s.is_integral(),
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        match self {
            CarrierElem::Scalar(a) => a.as_rational(),
            CarrierElem::Series(s) => s.as_rational(),
        }
    }
    fn same_domain(&self, o: &Self) -> bool {
        match (self, o) {
            (CarrierElem::Scalar(a), CarrierElem::Scalar(b)) => a.same_domain(b),
            (CarrierElem::Series(a), CarrierElem::Series(b)) => {
                a.truncation() == b.truncation() && a.same_domain(b)
            }
            _ => false,
        }
    }
    fn ideal_member(&self, ideal: &Ideal) -> Option<bool> {
        match self {
            CarrierElem::Scalar(a) => a.ideal_member(ideal),
            CarrierElem::Series(s) => s.ideal_member(ideal),
        }
    }
    fn fraction_inverse(&self) -> Option<Self> {
        match self {
            CarrierElem::Scalar(a) => a.fraction_inverse().map(CarrierElem::Scalar),
            CarrierElem::Series(s) => s.fraction_inverse().map(CarrierElem::Series),
        }
    }
}
