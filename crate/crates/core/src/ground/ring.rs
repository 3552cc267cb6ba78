//! Ground-ring descriptors and the tagged element type used at the API
//! boundary.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use super::coeff::{Coeff, Ideal};
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::sympoly::{var_list, MPoly};

/// Which primes are inverted in a localization `ℤ[S⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimeSet {
    /// Exactly these primes are inverted (the empty set gives ℤ).
    Finite(BTreeSet<u64>),
    /// Every prime except these is inverted (`{p}` gives ℤ₍ₚ₎).
    Cofinite(BTreeSet<u64>),
    /// Every prime is inverted: ℚ.
    All,
}

impl PrimeSet {
    pub fn inverts(&self, p: &BigInt) -> bool {
        let small = u64::try_from(p).ok();
        match self {
            PrimeSet::All => true,
            PrimeSet::Finite(s) => small.is_some_and(|p| s.contains(&p)),
            PrimeSet::Cofinite(s) => small.is_none_or(|p| !s.contains(&p)),
        }
    }

    fn normalized(self) -> Self {
        match self {
            PrimeSet::Cofinite(s) if s.is_empty() => PrimeSet::All,
            other => other,
        }
    }
}

/// Descriptor of a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroundRing {
    /// A ring between ℤ and ℚ.
    Localized(PrimeSet),
    /// ℚ[y₁..y_k] in the listed variables.
    RationalPoly(Vec<String>),
    /// `B[ε]` with ε² = 0; the base is never itself a ring of dual numbers.
    Dual(Box<GroundRing>),
}

impl GroundRing {
    pub fn integers() -> Self {
        GroundRing::Localized(PrimeSet::Finite(BTreeSet::new()))
    }

    pub fn rationals() -> Self {
        GroundRing::Localized(PrimeSet::All)
    }

    /// `ℤ[S⁻¹]`.
    pub fn inverting(primes: impl IntoIterator<Item = u64>) -> Self {
        GroundRing::Localized(PrimeSet::Finite(primes.into_iter().collect()))
    }

    /// `ℤ₍ₚ₎`-style localization: every prime outside `primes` is inverted.
    pub fn local_at(primes: impl IntoIterator<Item = u64>) -> Self {
        GroundRing::Localized(PrimeSet::Cofinite(primes.into_iter().collect()).normalized())
    }

    pub fn poly<S: AsRef<str>>(vars: &[S]) -> Self {
        GroundRing::RationalPoly(vars.iter().map(|v| v.as_ref().to_string()).collect())
    }

    pub fn dual(base: GroundRing) -> Result<Self> {
        if matches!(base, GroundRing::Dual(_)) {
            return Err(Error::InvalidRing("dual numbers over dual numbers".into()));
        }
        Ok(GroundRing::Dual(Box::new(base)))
    }

    pub fn is_dual(&self) -> bool {
        matches!(self, GroundRing::Dual(_))
    }

    pub fn base(&self) -> &GroundRing {
        match self {
            GroundRing::Dual(b) => b,
            other => other,
        }
    }

    /// ℚ or ℚ[y..].
    pub fn is_q_algebra(&self) -> bool {
        matches!(self, GroundRing::Localized(PrimeSet::All) | GroundRing::RationalPoly(_))
    }

    pub fn is_between_z_and_q(&self) -> bool {
        matches!(self, GroundRing::Localized(_))
    }

    pub fn is_domain(&self) -> bool {
        !self.is_dual()
    }

    /// Whether the prime `p` is a unit.
    pub fn inverts(&self, p: u64) -> bool {
        match self {
            GroundRing::Localized(s) => s.inverts(&BigInt::from(p)),
            GroundRing::RationalPoly(_) => true,
            GroundRing::Dual(b) => b.inverts(p),
        }
    }

    /// The smallest representable ring containing the fraction field
    /// scalars: ℚ for localizations; polynomial algebras are kept (only
    /// constant denominators are ever needed).
    pub fn fraction_field(&self) -> Result<GroundRing> {
        match self {
            GroundRing::Localized(_) => Ok(GroundRing::rationals()),
            GroundRing::RationalPoly(v) => Ok(GroundRing::RationalPoly(v.clone())),
            GroundRing::Dual(_) => Err(Error::Unsupported("dual numbers are not a domain".into())),
        }
    }

    /// Whether `q` lies in this ring (for polynomial algebras all rationals do).
    pub fn contains_rational(&self, q: &Rational) -> bool {
        match self {
            GroundRing::Localized(s) => q.denominator_primes().iter().all(|p| s.inverts(p)),
            GroundRing::RationalPoly(_) => true,
            GroundRing::Dual(b) => b.contains_rational(q),
        }
    }

    fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (GroundRing::Localized(_), Value::Scalar(q)) => self.contains_rational(q),
            (GroundRing::RationalPoly(_), Value::Poly(_)) => true,
            (GroundRing::Dual(b), Value::Dual(pair)) => b.contains(&pair.0) && b.contains(&pair.1),
            _ => false,
        }
    }

    fn poly_vars(&self) -> Arc<[String]> {
        match self {
            GroundRing::RationalPoly(v) => var_list(v),
            _ => var_list::<&str>(&[]),
        }
    }

    fn zero_value(&self) -> Value {
        self.embed(&Rational::zero())
    }

    fn embed(&self, q: &Rational) -> Value {
        match self {
            GroundRing::Localized(_) => Value::Scalar(q.clone()),
            GroundRing::RationalPoly(_) => Value::Poly(MPoly::constant(self.poly_vars(), q.clone())),
            GroundRing::Dual(b) => Value::Dual(Box::new((b.embed(q), b.zero_value()))),
        }
    }

    /// Parses the canonical text form of an element of this ring:
    /// `"num/den"` for scalars, polynomial syntax over the ring's
    /// variables, and `"a + b*eps"` for dual numbers.
    pub fn parse_element(self: &Arc<Self>, s: &str) -> Result<RingElement> {
        let value = self.parse_value(s)?;
        RingElement::new(self.clone(), value)
    }

    fn parse_value(&self, s: &str) -> Result<Value> {
        match self {
            GroundRing::Localized(_) => {
                let p = MPoly::parse(s, var_list::<&str>(&[]))?;
                Ok(Value::Scalar(p.as_rational().unwrap_or_default()))
            }
            GroundRing::RationalPoly(_) => Ok(Value::Poly(MPoly::parse(s, self.poly_vars())?)),
            GroundRing::Dual(b) => {
                let mut names: Vec<String> = b.poly_vars().to_vec();
                names.push("eps".into());
                let vars = var_list(&names);
                let k = names.len() - 1;
                let p = MPoly::parse(s, vars)?;
                let mut re = Vec::new();
                let mut eps = Vec::new();
                for (m, c) in p.terms() {
                    let mut rest = m.clone();
                    let e = rest.pop().unwrap_or(0);
                    match e {
                        0 => re.push((rest, c.clone())),
                        1 => eps.push((rest, c.clone())),
                        _ => return Err(Error::Parse(format!("eps^{e} in {s:?} (eps^2 = 0)"))),
                    }
                }
                let _ = k;
                let bv = b.poly_vars();
                let part = |terms: Vec<(Vec<u32>, Rational)>| -> Value {
                    let poly = MPoly::from_terms(bv.clone(), terms);
                    match **b {
                        GroundRing::RationalPoly(_) => Value::Poly(poly),
                        _ => Value::Scalar(poly.as_rational().unwrap_or_default()),
                    }
                };
                Ok(Value::Dual(Box::new((part(re), part(eps)))))
            }
        }
    }
}

impl fmt::Display for GroundRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundRing::Localized(PrimeSet::All) => write!(f, "Q"),
            GroundRing::Localized(PrimeSet::Finite(s)) if s.is_empty() => write!(f, "Z"),
            GroundRing::Localized(PrimeSet::Finite(s)) => {
                let inv: Vec<String> = s.iter().map(|p| format!("1/{p}")).collect();
                write!(f, "Z[{}]", inv.join(","))
            }
            GroundRing::Localized(PrimeSet::Cofinite(s)) => {
                let ps: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "Z_({})", ps.join(","))
            }
            GroundRing::RationalPoly(v) => write!(f, "Q[{}]", v.join(",")),
            GroundRing::Dual(b) => write!(f, "{b}[eps]"),
        }
    }
}

impl FromStr for GroundRing {
    type Err = Error;

    /// `Z`, `Q`, `Z[1/2,1/3]`, `Z_(2)`, `Q[y1,y2]`, and `<ring>[eps]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(base) = s.strip_suffix("[eps]") {
            return GroundRing::dual(base.parse()?);
        }
        let bad = || Error::Parse(format!("unknown ring {s:?}"));
        let primes = |body: &str, strip: bool| -> Result<BTreeSet<u64>> {
            body.split(',')
                .map(|t| {
                    let t = t.trim();
                    let t = if strip { t.strip_prefix("1/").ok_or_else(bad)? } else { t };
                    let p: u64 = t.parse().map_err(|_| bad())?;
                    if !super::primes::is_prime(p) {
                        return Err(Error::Parse(format!("{p} is not prime")));
                    }
                    Ok(p)
                })
                .collect()
        };
        match s {
            "Z" | "ZZ" => Ok(GroundRing::integers()),
            "Q" | "QQ" => Ok(GroundRing::rationals()),
            _ => {
                if let Some(body) = s.strip_prefix("Z[").and_then(|r| r.strip_suffix(']')) {
                    Ok(GroundRing::Localized(PrimeSet::Finite(primes(body, true)?)))
                } else if let Some(body) = s.strip_prefix("Z_(").and_then(|r| r.strip_suffix(')')) {
                    Ok(GroundRing::Localized(PrimeSet::Cofinite(primes(body, false)?).normalized()))
                } else if let Some(body) = s.strip_prefix("Q[").and_then(|r| r.strip_suffix(']')) {
                    let vars: Vec<String> = body.split(',').map(|v| v.trim().to_string()).collect();
                    let ok = vars.iter().all(|v| {
                        v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                            && v != "eps"
                    });
                    if !ok {
                        return Err(bad());
                    }
                    Ok(GroundRing::RationalPoly(vars))
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// Payload of a [`RingElement`], stored in the ring's rational envelope.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(Rational),
    Poly(MPoly),
    Dual(Box<(Value, Value)>),
}

impl Value {
    fn zip(&self, other: &Value, f: &dyn Fn(&Value, &Value) -> Value) -> Value {
        match (self, other) {
            (Value::Dual(a), Value::Dual(b)) => Value::Dual(Box::new((f(&a.0, &b.0), f(&a.1, &b.1)))),
            _ => unreachable!("shape mismatch"),
        }
    }

    fn add(&self, o: &Value) -> Value {
        match (self, o) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a.add(b)),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.add(b)),
            _ => self.zip(o, &Value::add),
        }
    }

    fn neg(&self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(a.neg()),
            Value::Poly(a) => Value::Poly(Coeff::neg(a)),
            Value::Dual(p) => Value::Dual(Box::new((p.0.neg(), p.1.neg()))),
        }
    }

    fn mul(&self, o: &Value) -> Value {
        match (self, o) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a.mul(b)),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.mul(b)),
            (Value::Dual(a), Value::Dual(b)) => {
                Value::Dual(Box::new((a.0.mul(&b.0), a.0.mul(&b.1).add(&a.1.mul(&b.0)))))
            }
            _ => unreachable!("shape mismatch"),
        }
    }

    fn scale(&self, q: &Rational) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(a.mul(q)),
            Value::Poly(a) => Value::Poly(a.scale(q)),
            Value::Dual(p) => Value::Dual(Box::new((p.0.scale(q), p.1.scale(q)))),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(a) => a.is_zero(),
            Value::Poly(a) => a.is_zero(),
            Value::Dual(p) => p.0.is_zero() && p.1.is_zero(),
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        match self {
            Value::Scalar(a) => Some(a.clone()),
            Value::Poly(a) => a.as_rational(),
            Value::Dual(p) if p.1.is_zero() => p.0.as_rational(),
            Value::Dual(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(q) => write!(f, "{q}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Dual(p) => {
                let (re, eps) = (&p.0, &p.1);
                let wrap = |v: &Value| {
                    let s = v.to_string();
                    if s.contains(' ') {
                        format!("({s})")
                    } else {
                        s
                    }
                };
                if eps.is_zero() {
                    write!(f, "{re}")
                } else if re.is_zero() {
                    write!(f, "{}*eps", wrap(eps))
                } else {
                    let e = wrap(eps);
                    match e.strip_prefix('-') {
                        Some(rest) => write!(f, "{re} - {rest}*eps"),
                        None => write!(f, "{re} + {e}*eps"),
                    }
                }
            }
        }
    }
}

/// An element of a [`GroundRing`].
///
/// Arithmetic through [`Coeff`] panics on ring mismatch; use
/// [`ring_arith`] for the checked form. Values produced by [`Coeff::scale`]
/// may leave the ring; [`Coeff::is_integral`] reports membership.
#[derive(Debug, Clone, PartialEq)]
pub struct RingElement {
    ring: Arc<GroundRing>,
    value: Value,
}

impl RingElement {
    /// Fails with a membership error if `value` is not in `ring`.
    pub fn new(ring: Arc<GroundRing>, value: Value) -> Result<Self> {
        if !shape_matches(&ring, &value) {
            return Err(Error::InvalidRing(format!("payload shape does not match {ring}")));
        }
        if !ring.contains(&value) {
            return Err(Error::NotAMember { value: value.to_string(), ring: ring.to_string() });
        }
        Ok(RingElement { ring, value })
    }

    pub fn rational(ring: Arc<GroundRing>, q: Rational) -> Result<Self> {
        let value = ring.embed(&q);
        RingElement::new(ring, value)
    }

    pub fn int(ring: &Arc<GroundRing>, n: i64) -> Self {
        RingElement { ring: ring.clone(), value: ring.embed(&Rational::from_int(n)) }
    }

    pub fn dual(ring: Arc<GroundRing>, re: Value, eps: Value) -> Result<Self> {
        RingElement::new(ring, Value::Dual(Box::new((re, eps))))
    }

    pub fn ring(&self) -> &Arc<GroundRing> {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    /// Reinterprets the payload in another ring with the same shape, e.g.
    /// moving an integer into ℚ.
    pub fn into_ring(self, ring: Arc<GroundRing>) -> Result<Self> {
        RingElement::new(ring, self.value)
    }

    /// `(re, eps)` parts of a dual number, as elements of the base ring.
    pub fn dual_parts(&self) -> Option<(RingElement, RingElement)> {
        match (&*self.ring, &self.value) {
            (GroundRing::Dual(b), Value::Dual(p)) => {
                let base = Arc::new((**b).clone());
                Some((
                    RingElement { ring: base.clone(), value: p.0.clone() },
                    RingElement { ring: base, value: p.1.clone() },
                ))
            }
            _ => None,
        }
    }

    fn same_ring(&self, other: &RingElement) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn with(&self, value: Value) -> RingElement {
        RingElement { ring: self.ring.clone(), value }
    }
}

fn shape_matches(ring: &GroundRing, v: &Value) -> bool {
    match (ring, v) {
        (GroundRing::Localized(_), Value::Scalar(_)) => true,
        (GroundRing::RationalPoly(vars), Value::Poly(p)) => p.vars().iter().eq(vars.iter()) || p.is_constant(),
        (GroundRing::Dual(b), Value::Dual(pair)) => shape_matches(b, &pair.0) && shape_matches(b, &pair.1),
        _ => false,
    }
}

/// The binary ring operations exposed by [`ring_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic: both operands must live in the same ring.
pub fn ring_arith(op: RingOp, a: &RingElement, b: &RingElement) -> Result<RingElement> {
    if !a.same_ring(b) {
        return Err(Error::RingMismatch { left: a.ring.to_string(), right: b.ring.to_string() });
    }
    Ok(match op {
        RingOp::Add => Coeff::add(a, b),
        RingOp::Sub => Coeff::sub(a, b),
        RingOp::Mul => Coeff::mul(a, b),
    })
}

/// True iff `a = p·b` for some `b` in the ring. Always true when `p` is a
/// unit (in particular over ℚ-algebras).
pub fn is_p_divisible<T: Coeff>(a: &T, p: u64) -> bool {
    a.scale(&Rational::new(1, p as i64)).is_integral()
}

/// `a(a−1)⋯(a−n+1)/n!` computed in the rational envelope, together with
/// whether the result lies in the ring.
pub fn binomial<T: Coeff>(a: &T, n: u32) -> (T, bool) {
    let mut acc = a.one_like();
    let mut fact = Rational::one();
    for k in 0..n {
        acc = acc.mul(&a.sub(&a.from_int_like(k as i64)));
        fact = fact.mul(&Rational::from_int(k as i64 + 1));
    }
    let out = acc.scale(&fact.recip().expect("n! is nonzero"));
    let member = out.is_integral();
    (out, member)
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coeff for RingElement {
    fn zero_like(&self) -> Self {
        self.with(self.ring.zero_value())
    }
    fn one_like(&self) -> Self {
        self.with(self.ring.embed(&Rational::one()))
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        self.with(self.ring.embed(q))
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        assert!(self.same_ring(o), "ring mismatch: {} vs {}", self.ring, o.ring);
        self.with(self.value.add(&o.value))
    }
    fn sub(&self, o: &Self) -> Self {
        assert!(self.same_ring(o), "ring mismatch: {} vs {}", self.ring, o.ring);
        self.with(self.value.add(&o.value.neg()))
    }
    fn mul(&self, o: &Self) -> Self {
        assert!(self.same_ring(o), "ring mismatch: {} vs {}", self.ring, o.ring);
        self.with(self.value.mul(&o.value))
    }
    fn neg(&self) -> Self {
        self.with(self.value.neg())
    }
    fn scale(&self, q: &Rational) -> Self {
        self.with(self.value.scale(q))
    }
    fn is_integral(&self) -> bool {
        self.ring.contains(&self.value)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.value.as_rational()
    }
    fn same_domain(&self, o: &Self) -> bool {
        self.same_ring(o)
    }
    fn ideal_member(&self, ideal: &Ideal) -> Option<bool> {
        match (ideal, &self.value) {
            (Ideal::Multiple(p), _) => Some(is_p_divisible(self, *p)),
            (Ideal::Epsilon, Value::Dual(pair)) => Some(pair.0.is_zero()),
            _ => None,
        }
    }
    fn fraction_inverse(&self) -> Option<Self> {
        match &self.value {
            Value::Dual(pair) => {
                let inv = pair.0.as_rational()?.recip()?;
                let re = self.ring.base().embed(&inv);
                let eps = pair.1.scale(&inv.mul(&inv)).neg();
                Some(self.with(Value::Dual(Box::new((re, eps)))))
            }
            v => v.as_rational()?.recip().map(|q| self.with(self.ring.embed(&q))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Arc<GroundRing> {
        Arc::new(s.parse().unwrap())
    }

    #[test]
    fn ring_text_forms() {
        for s in ["Z", "Q", "Z[1/2,1/3]", "Z_(2)", "Q[y1,y2]", "Z[eps]", "Q[y][eps]"] {
            assert_eq!(ring(s).to_string(), s);
        }
        assert!("Z[eps][eps]".parse::<GroundRing>().is_err());
        assert!("Z[1/4]".parse::<GroundRing>().is_err());
        assert!("R".parse::<GroundRing>().is_err());
    }

    #[test]
    fn rational_addition() {
        let q = ring("Q");
        let a = q.parse_element("1/2").unwrap();
        let b = q.parse_element("1/3").unwrap();
        assert_eq!(ring_arith(RingOp::Add, &a, &b).unwrap().to_string(), "5/6");
    }

    #[test]
    fn dual_multiplication_drops_eps_squared() {
        let r = ring("Z[eps]");
        let a = r.parse_element("2 + 3*eps").unwrap();
        let b = r.parse_element("5 + 7*eps").unwrap();
        assert_eq!(ring_arith(RingOp::Mul, &a, &b).unwrap().to_string(), "10 + 29*eps");
        assert!(r.parse_element("eps^2").is_err());
    }

    #[test]
    fn membership_error() {
        let r = ring("Z[1/2]");
        assert!(r.parse_element("1/4").is_ok());
        assert!(matches!(r.parse_element("1/3"), Err(Error::NotAMember { .. })));
        let local = ring("Z_(2)");
        assert!(local.parse_element("1/3").is_ok());
        assert!(local.parse_element("1/6").is_err());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = ring("Z").parse_element("1").unwrap();
        let b = ring("Q").parse_element("1").unwrap();
        assert!(matches!(ring_arith(RingOp::Add, &a, &b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn p_divisibility() {
        let z = ring("Z");
        assert!(is_p_divisible(&z.parse_element("6").unwrap(), 2));
        assert!(!is_p_divisible(&z.parse_element("3").unwrap(), 2));
        assert!(is_p_divisible(&ring("Q").parse_element("3").unwrap(), 2));
        assert!(is_p_divisible(&ring("Z[1/2]").parse_element("3").unwrap(), 2));
        let d = ring("Z[eps]");
        assert!(is_p_divisible(&d.parse_element("2 + 4*eps").unwrap(), 2));
        assert!(!is_p_divisible(&d.parse_element("2 + 3*eps").unwrap(), 2));
    }

    #[test]
    fn binomials() {
        let z = ring("Z");
        let (v, ok) = binomial(&z.parse_element("5").unwrap(), 2);
        assert_eq!((v.to_string(), ok), ("10".to_string(), true));
        let (v, ok) = binomial(&z.parse_element("-1").unwrap(), 3);
        assert_eq!((v.to_string(), ok), ("-1".to_string(), true));
        let (v, ok) = binomial(&ring("Q").parse_element("1/2").unwrap(), 2);
        assert_eq!((v.to_string(), ok), ("-1/8".to_string(), true));
        let (v, ok) = binomial(&ring("Z[eps]").parse_element("eps").unwrap(), 2);
        assert_eq!(v.to_string(), "-1/2*eps");
        assert!(!ok);
    }

    #[test]
    fn polynomial_ring_elements() {
        let r = ring("Q[y]");
        let a = r.parse_element("y + 1/2").unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq.to_string(), "y^2 + y + 1/4");
        assert!(is_p_divisible(&a, 7));
        let dual = ring("Q[y][eps]");
        let e = dual.parse_element("y + (2*y)*eps").unwrap();
        assert_eq!(e.to_string(), "y + 2*y*eps");
    }
}
