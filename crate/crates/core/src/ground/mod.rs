//! Exact scalars, ground-ring descriptors and membership predicates.

mod coeff;
mod dual;
pub mod primes;
mod rational;
mod ring;

pub use coeff::{Coeff, Ideal};
pub use dual::Dual;
pub use rational::Rational;
pub use ring::{binomial, is_p_divisible, ring_arith, GroundRing, PrimeSet, RingElement, RingOp, Value};
