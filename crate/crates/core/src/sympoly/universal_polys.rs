//! The universal polynomials `P_n` (products) and `P_{m,n}` (composites) of
//! the λ-ring axioms.
//!
//! Both are computed through power sums. For `P_n`, the power sums of the
//! products `x_i y_j` factor as `p_k(x)·p_k(y)`. For `P_{m,n}`, the power
//! sums of the monomials `x_S` (|S| = n) are `e_n(x^j)`, whose own power
//! sums are `p_{jk}(x)`. Newton's identities convert back and forth.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::mpoly::{indexed_vars, var_list, MPoly};
use super::symmetric::{newton_elementary, newton_power_sums};
use crate::error::{Error, Result};
use crate::ground::Coeff;

/// Default cap on `m·n` for `P_{m,n}`.
pub const DEFAULT_PCOMP_BOUND: usize = 6;

/// Thread-safe memo table for `P_n` and `P_{m,n}`.
#[derive(Debug)]
pub struct UniversalPolyCache {
    bound: usize,
    p: RwLock<BTreeMap<usize, Arc<MPoly>>>,
    pcomp: RwLock<BTreeMap<(usize, usize), Arc<MPoly>>>,
}

impl Default for UniversalPolyCache {
    fn default() -> Self {
        UniversalPolyCache::with_bound(DEFAULT_PCOMP_BOUND)
    }
}

impl UniversalPolyCache {
    pub fn with_bound(bound: usize) -> Self {
        UniversalPolyCache { bound, p: RwLock::default(), pcomp: RwLock::default() }
    }

    /// The process-wide cache with the default bound.
    pub fn global() -> &'static UniversalPolyCache {
        static CACHE: OnceLock<UniversalPolyCache> = OnceLock::new();
        CACHE.get_or_init(UniversalPolyCache::default)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `P_n(a1..an; b1..bn)`.
    pub fn p(&self, n: usize) -> Result<Arc<MPoly>> {
        if n == 0 {
            return Err(Error::OutOfRange { index: 0, max: usize::MAX });
        }
        if let Some(hit) = self.p.read().expect("cache lock").get(&n) {
            return Ok(hit.clone());
        }
        let all = compute_p_upto(n)?;
        let mut map = self.p.write().expect("cache lock");
        for (k, poly) in all.into_iter().enumerate() {
            map.entry(k + 1).or_insert_with(|| Arc::new(poly));
        }
        Ok(map[&n].clone())
    }

    /// `P_{m,n}(a1..a_{mn})`, for `m·n` within the bound.
    pub fn pcomp(&self, m: usize, n: usize) -> Result<Arc<MPoly>> {
        if m == 0 || n == 0 {
            return Err(Error::OutOfRange { index: 0, max: usize::MAX });
        }
        if m * n > self.bound {
            return Err(Error::BoundExceeded { m, n, bound: self.bound });
        }
        if let Some(hit) = self.pcomp.read().expect("cache lock").get(&(m, n)) {
            return Ok(hit.clone());
        }
        let poly = Arc::new(compute_pcomp(m, n)?);
        let mut map = self.pcomp.write().expect("cache lock");
        Ok(map.entry((m, n)).or_insert(poly).clone())
    }
}

/// `P_n` from the global cache.
pub fn universal_p(n: usize) -> Result<Arc<MPoly>> {
    UniversalPolyCache::global().p(n)
}

/// `P_{m,n}` from the global cache (bound [`DEFAULT_PCOMP_BOUND`]).
pub fn universal_pcomp(m: usize, n: usize) -> Result<Arc<MPoly>> {
    UniversalPolyCache::global().pcomp(m, n)
}

fn ensure_integral(what: String, poly: &MPoly) -> Result<()> {
    match poly.terms().find(|(_, c)| !c.is_integer()) {
        None => Ok(()),
        Some((_, c)) => Err(Error::NonIntegral { what, value: c.to_string() }),
    }
}

fn ab_vars(n: usize) -> Vec<String> {
    let mut names = indexed_vars("a", n);
    names.extend(indexed_vars("b", n));
    names
}

/// `P_1..P_n`, each over its own `a1..ak, b1..bk`.
fn compute_p_upto(n: usize) -> Result<Vec<MPoly>> {
    let vars = var_list(&ab_vars(n));
    let gens = MPoly::gens(&vars);
    let zero = MPoly::zero(vars);
    let pa = newton_power_sums(&gens[..n], n, &zero);
    let pb = newton_power_sums(&gens[n..], n, &zero);
    let pxy: Vec<MPoly> = pa.iter().zip(&pb).map(|(a, b)| a.mul(b)).collect();
    let e = newton_elementary(&pxy);
    e.into_iter()
        .enumerate()
        .map(|(k, poly)| {
            let k = k + 1;
            let poly = poly.with_vars(var_list(&ab_vars(k)))?;
            ensure_integral(format!("P_{k}"), &poly)?;
            Ok(poly)
        })
        .collect()
}

fn compute_pcomp(m: usize, n: usize) -> Result<MPoly> {
    let k = m * n;
    let vars = var_list(&indexed_vars("a", k));
    let gens = MPoly::gens(&vars);
    let zero = MPoly::zero(vars);
    let px = newton_power_sums(&gens, k, &zero);
    // q_j = e_n(x^j), the j-th power sum of the degree-n monomials
    let q: Vec<MPoly> = (1..=m)
        .map(|j| {
            let sums: Vec<MPoly> = (1..=n).map(|l| px[j * l - 1].clone()).collect();
            newton_elementary(&sums).pop().expect("n >= 1")
        })
        .collect();
    let poly = newton_elementary(&q).pop().expect("m >= 1");
    ensure_integral(format!("P_{{{m},{n}}}"), &poly)?;
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::Rational;

    #[test]
    fn small_products() {
        assert_eq!(universal_p(1).unwrap().to_string(), "a1*b1");
        assert_eq!(universal_p(2).unwrap().to_string(), "a1^2*b2 + a2*b1^2 - 2*a2*b2");
        let p2 = universal_p(2).unwrap();
        let r = |v: i64| Rational::from_int(v);
        assert!(p2.eval(&[r(5), r(0), r(7), r(0)], &r(0)).is_zero());
    }

    #[test]
    fn small_composites() {
        assert_eq!(universal_pcomp(1, 2).unwrap().to_string(), "a2");
        assert_eq!(universal_pcomp(2, 1).unwrap().to_string(), "a2");
        assert_eq!(universal_pcomp(1, 5).unwrap().to_string(), "a5");
        // λ²λ² = a1 a3 − a4
        assert_eq!(universal_pcomp(2, 2).unwrap().to_string(), "a1*a3 - a4");
        assert!(matches!(universal_pcomp(2, 4), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn larger_bound_cache() {
        let cache = UniversalPolyCache::with_bound(9);
        let p = cache.pcomp(3, 3).unwrap();
        assert!(p.has_integer_coefficients());
        assert!(Arc::ptr_eq(&p, &cache.pcomp(3, 3).unwrap()));
    }
}
