//! Λ(A) and W(A) at finite truncation.

mod coalgebra;
mod exp;
mod lambda;
mod witt;

pub use coalgebra::{coalgebra_check, LambdaOps};
pub use exp::{exp_iso, exp_iso_inv, filtration_member, Components};
pub use lambda::{counit, lambda_add, lambda_mul, lambda_neg, lambda_op, LambdaElem, PartialLambda};
pub use witt::{from_ghost, ghost, symbolic_pair, witt_add, witt_mul, witt_neg, WittPolynomials, WittVec};
