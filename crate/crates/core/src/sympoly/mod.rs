//! Polynomial engine and the universal λ-ring polynomials.

mod mpoly;
mod symmetric;
mod universal_polys;

pub use mpoly::{indexed_vars, var_list, MPoly, Monomial};
pub use symmetric::{elementary_of, elementary_symmetric, express_in_elementary, newton_elementary, newton_power_sums};
pub use universal_polys::{universal_p, universal_pcomp, UniversalPolyCache, DEFAULT_PCOMP_BOUND};
