//! Exact computation with truncated big Witt vectors, the universal λ-ring
//! Λ, Adams-operation presentations of filtered λ-ring structures and the
//! universal ring that co-represents them.

pub mod error;
pub mod ground;
pub mod lambda_witt;
pub mod lubin;
pub mod report;
pub mod selftest;
pub mod series;
pub mod structures;
pub mod sympoly;
pub mod universal;

pub use error::{Error, Result};
