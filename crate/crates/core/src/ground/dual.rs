use std::fmt;

use super::coeff::{Coeff, Ideal};
use super::rational::Rational;

/// Dual number `re + eps·ε` with ε² = 0.
#[derive(Clone, PartialEq, Debug)]
pub struct Dual<T> {
    pub re: T,
    pub eps: T,
}

impl<T: Coeff> Dual<T> {
    pub fn new(re: T, eps: T) -> Self {
        Dual { re, eps }
    }

    /// The element ε over the domain of `template`.
    pub fn epsilon(template: &T) -> Self {
        Dual { re: template.zero_like(), eps: template.one_like() }
    }

    pub fn scalar(re: T) -> Self {
        let eps = re.zero_like();
        Dual { re, eps }
    }
}

impl<T: Coeff> Coeff for Dual<T> {
    fn zero_like(&self) -> Self {
        Dual::scalar(self.re.zero_like())
    }
    fn one_like(&self) -> Self {
        Dual::scalar(self.re.one_like())
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        Dual::scalar(self.re.from_rational_like(q))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Dual { re: self.re.add(&o.re), eps: self.eps.add(&o.eps) }
    }
    fn sub(&self, o: &Self) -> Self {
        Dual { re: self.re.sub(&o.re), eps: self.eps.sub(&o.eps) }
    }
    fn mul(&self, o: &Self) -> Self {
        Dual {
            re: self.re.mul(&o.re),
            eps: self.re.mul(&o.eps).add(&self.eps.mul(&o.re)),
        }
    }
    fn neg(&self) -> Self {
        Dual { re: self.re.neg(), eps: self.eps.neg() }
    }
    fn scale(&self, q: &Rational) -> Self {
        Dual { re: self.re.scale(q), eps: self.eps.scale(q) }
    }
    fn is_integral(&self) -> bool {
        self.re.is_integral() && self.eps.is_integral()
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.eps.is_zero() {
            self.re.as_rational()
        } else {
            None
        }
    }
    fn same_domain(&self, o: &Self) -> bool {
        self.re.same_domain(&o.re)
    }
    fn ideal_member(&self, ideal: &Ideal) -> Option<bool> {
        match ideal {
            Ideal::Epsilon => Some(self.re.is_zero()),
            Ideal::Multiple(_) => Some(self.re.ideal_member(ideal)? && self.eps.ideal_member(ideal)?),
            Ideal::XPower(_) => None,
        }
    }
    fn fraction_inverse(&self) -> Option<Self> {
        // (a + bε)⁻¹ = a⁻¹ − b·a⁻²·ε
        let inv = self.re.fraction_inverse()?;
        let eps = self.eps.mul(&inv).mul(&inv).neg();
        Some(Dual { re: inv, eps })
    }
}

impl<T: Coeff> fmt::Display for Dual<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*eps", paren(&self.eps))
        } else {
            write!(f, "{} + {}*eps", self.re, paren(&self.eps))
        }
    }
}

fn paren<T: fmt::Display>(v: &T) -> String {
    let s = v.to_string();
    if s.contains(['+', ' ']) || s[1..].contains('-') {
        format!("({s})")
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: i64, b: i64) -> Dual<Rational> {
        Dual::new(Rational::from_int(a), Rational::from_int(b))
    }

    #[test]
    fn epsilon_squares_to_zero() {
        assert_eq!(d(2, 3).mul(&d(5, 7)), d(10, 29));
        assert!(d(0, 1).mul(&d(0, 1)).is_zero());
    }

    #[test]
    fn inverse() {
        let x = Dual::new(Rational::from_int(2), Rational::from_int(3));
        let inv = x.fraction_inverse().unwrap();
        assert!(x.mul(&inv).is_one());
        assert_eq!(x.unit_inverse(), None);
        assert!(d(-1, 4).unit_inverse().is_some());
    }

    #[test]
    fn display() {
        assert_eq!(d(2, 3).to_string(), "2 + 3*eps");
        assert_eq!(d(0, -1).to_string(), "-1*eps");
        assert_eq!(d(4, 0).to_string(), "4");
    }
}
