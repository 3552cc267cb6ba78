use super::lambda::{counit, lambda_op, LambdaElem};
use crate::error::{Error, Result};
use crate::ground::Coeff;
use crate::report::Report;
use crate::sympoly::UniversalPolyCache;

/// A source of λ-operations on a coefficient domain.
pub trait LambdaOps<T: Coeff> {
    fn lambda(&self, n: usize, r: &T) -> Result<T>;

    /// `λ_t(r) = 1 + Σ_{i≤n} λ^i(r) t^i`.
    fn lambda_t(&self, r: &T, n: usize) -> Result<LambdaElem<T>> {
        Ok(LambdaElem::new((1..=n).map(|i| self.lambda(i, r)).collect::<Result<_>>()?))
    }
}

/// Checks the counit law `η(λ_t(r)) = r` and coassociativity
/// `Λ(λ_t)(λ_t(r)) = Λ_t(λ_t(r))` for outer and inner degrees up to `m`.
///
/// Coefficient `(j, i)` of the two sides is `λ^i(λ^j(r))` and
/// `P_{i,j}(λ^1 r..λ^{ij} r)`, so `λ_t(r)` is formed to degree `m²` and the
/// cache must allow composites up to `m²`.
pub fn coalgebra_check<T: Coeff, S: LambdaOps<T>>(
    s: &S,
    samples: &[T],
    m: usize,
    cache: &UniversalPolyCache,
) -> Result<Report> {
    if m * m > cache.bound() {
        return Err(Error::BoundExceeded { m, n: m, bound: cache.bound() });
    }
    let mut report = Report::new(format!("coalgebra laws, M = {m}"));
    for r in samples {
        let lt = s.lambda_t(r, m * m)?;
        let eta = counit(&lt);
        report.push(format!("counit at {r}"), eta == *r, if eta == *r { String::new() } else { format!("got {eta}") });

        let mut bad = None;
        'outer: for j in 1..=m {
            let rhs = lambda_op(j, &lt, cache)?;
            let lj = lt.coeff(j);
            for i in 1..=m {
                let lhs = s.lambda(i, &lj)?;
                let want = rhs.coeffs[i - 1].as_ref().expect("ij <= m^2 is computed");
                if lhs != *want {
                    bad = Some(format!("outer {j}, inner {i}: {lhs} vs {want}"));
                    break 'outer;
                }
            }
        }
        let passed = bad.is_none();
        report.push(format!("coassociativity at {r}"), passed, bad.unwrap_or_default());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{binomial, Rational};

    struct Binom;

    impl LambdaOps<Rational> for Binom {
        fn lambda(&self, n: usize, r: &Rational) -> Result<Rational> {
            Ok(binomial(r, n as u32).0)
        }
    }

    /// λ^n(r) = r^n is not a λ-structure.
    struct Powers;

    impl LambdaOps<Rational> for Powers {
        fn lambda(&self, n: usize, r: &Rational) -> Result<Rational> {
            Ok(r.pow(n as u32))
        }
    }

    #[test]
    fn binomial_structure_is_a_coalgebra() {
        let cache = UniversalPolyCache::with_bound(9);
        let samples: Vec<Rational> = (-3..=3).map(Rational::from_int).collect();
        let report = coalgebra_check(&Binom, &samples, 3, &cache).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn a_non_structure_fails() {
        let cache = UniversalPolyCache::with_bound(4);
        let report = coalgebra_check(&Powers, &[Rational::from_int(2)], 2, &cache).unwrap();
        assert!(!report.all_passed());
        assert!(coalgebra_check(&Binom, &[Rational::one()], 3, &cache).is_err());
    }
}
