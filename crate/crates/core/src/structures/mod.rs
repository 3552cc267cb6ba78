//! Filtered λ-ring structures presented by Adams operations.

mod axioms;
mod carrier;
mod families;
mod structure;

pub use axioms::{axiom_check, default_samples};
pub use carrier::{parse_series_coeffs, Carrier, CarrierElem};
pub use families::{
    conjugate_structure, dual_iso_test, make_dual_structure, make_family_structure, multiplicative_structure,
    power_structure,
};
pub use structure::{AdamsData, LambdaStructure, DEFAULT_PRIMES};
