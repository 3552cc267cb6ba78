//! The coefficient abstraction shared by every algorithm in the crate.
//!
//! All supported coefficient domains are torsionfree and embed in a
//! ℚ-algebra, so every value is stored in that rational envelope. Whether a
//! value actually lies in the ring it denotes is a separate question answered
//! by [`Coeff::is_integral`]; algorithms that divide by integers (ghost
//! solves, the Newton recursion, Fermat quotients) divide in the envelope and
//! then ask.

use std::fmt;

use super::rational::Rational;

/// A filtration or divisibility ideal understood by the membership
/// predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ideal {
    /// `pR` for a prime (or any positive integer) `p`.
    Multiple(u64),
    /// `(x^k)` in a series or truncated polynomial carrier.
    XPower(usize),
    /// `(ε)` in a ring of dual numbers.
    Epsilon,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::Multiple(p) => write!(f, "({p})"),
            Ideal::XPower(k) => write!(f, "(x^{k})"),
            Ideal::Epsilon => write!(f, "(eps)"),
        }
    }
}

/// Commutative ring element in a torsionfree, rationally embedded domain.
///
/// Constructors take a template (`*_like`) because some domains carry shape
/// data (variable lists, truncation orders) that a bare `zero()` could not
/// know.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by a rational scalar, computed in the rational envelope.
    fn scale(&self, q: &Rational) -> Self;
    /// Whether the value lies in the ring it denotes (as opposed to only in
    /// its rational envelope).
    fn is_integral(&self) -> bool;
    /// The value as a rational constant, if it is one.
    fn as_rational(&self) -> Option<Rational>;

    /// Whether `other` lives in the same coefficient domain, so that binary
    /// operations are meaningful.
    fn same_domain(&self, _other: &Self) -> bool {
        true
    }

    /// Ideal membership; `None` when the ideal is meaningless for the domain.
    fn ideal_member(&self, ideal: &Ideal) -> Option<bool> {
        match ideal {
            Ideal::Multiple(p) => Some(self.scale(&Rational::new(1, *p as i64)).is_integral()),
            _ => None,
        }
    }

    /// Inverse in the rational envelope, when one is representable.
    fn fraction_inverse(&self) -> Option<Self> {
        self.as_rational()
            .and_then(|q| q.recip())
            .map(|q| self.from_rational_like(&q))
    }

    /// Inverse inside the ring itself.
    fn unit_inverse(&self) -> Option<Self> {
        self.fraction_inverse().filter(Coeff::is_integral)
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.from_rational_like(&Rational::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn div_int(&self, n: i64) -> Self {
        self.scale(&Rational::new(1, n))
    }
}

/// A bare rational coefficient denotes an element of ℤ: it is integral iff
/// it is an integer. Use [`super::RingElement`] for other rings between ℤ
/// and ℚ.
impl Coeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Rational::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Rational::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Rational::mul(self, other)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn scale(&self, q: &Rational) -> Self {
        Rational::mul(self, q)
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn pow(&self, e: u32) -> Self {
        Rational::pow(self, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_semantics_of_bare_rationals() {
        let two = Rational::from_int(2);
        assert!(two.ideal_member(&Ideal::Multiple(2)).unwrap());
        assert!(!Rational::from_int(3).ideal_member(&Ideal::Multiple(2)).unwrap());
        assert_eq!(two.unit_inverse(), None);
        assert_eq!(Rational::from_int(-1).unit_inverse(), Some(Rational::from_int(-1)));
        assert_eq!(two.ideal_member(&Ideal::Epsilon), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Coeff::pow(&Rational::new(-2, 3), 5), Rational::new(-32, 243));
        assert_eq!(Coeff::pow(&Rational::from_int(7), 0), Rational::one());
    }
}
