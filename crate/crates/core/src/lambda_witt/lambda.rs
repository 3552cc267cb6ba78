use std::fmt;

use crate::error::{Error, Result};
use crate::ground::Coeff;
use crate::sympoly::UniversalPolyCache;

/// `1 + a_1 t + … + a_N t^N` in Λ(A); the leading 1 is implicit.
#[derive(Clone, PartialEq, Debug)]
pub struct LambdaElem<T> {
    a: Vec<T>,
}

impl<T: Coeff> LambdaElem<T> {
    /// # Panics
    /// If `a` is empty (the truncation must be at least 1).
    pub fn new(a: Vec<T>) -> Self {
        assert!(!a.is_empty(), "truncation must be at least 1");
        LambdaElem { a }
    }

    /// The additive identity, the constant series 1.
    pub fn zero(template: &T, n: usize) -> Self {
        LambdaElem::new(vec![template.zero_like(); n])
    }

    /// The multiplicative identity, the line element `1 + t`.
    pub fn one(template: &T, n: usize) -> Self {
        let mut a = vec![template.zero_like(); n];
        a[0] = template.one_like();
        LambdaElem::new(a)
    }

    pub fn truncation(&self) -> usize {
        self.a.len()
    }

    /// `a_1..a_N`.
    pub fn coeffs(&self) -> &[T] {
        &self.a
    }

    /// `a_i` for `1 ≤ i ≤ N`; `a_0 = 1`.
    pub fn coeff(&self, i: usize) -> T {
        if i == 0 {
            self.a[0].one_like()
        } else {
            self.a[i - 1].clone()
        }
    }

    pub fn truncate(&self, n: usize) -> Self {
        let mut a: Vec<T> = self.a.iter().take(n).cloned().collect();
        a.resize(n, self.a[0].zero_like());
        LambdaElem::new(a)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> LambdaElem<U> {
        LambdaElem { a: self.a.iter().map(f).collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch { left: self.truncation(), right: other.truncation() });
        }
        if !self.a[0].same_domain(&other.a[0]) {
            return Err(Error::RingMismatch { left: format!("{:?}", self.a[0]), right: format!("{:?}", other.a[0]) });
        }
        Ok(())
    }
}

/// `f +_Λ g`, the product of the two series.
pub fn lambda_add<T: Coeff>(f: &LambdaElem<T>, g: &LambdaElem<T>) -> Result<LambdaElem<T>> {
    f.check(g)?;
    let n = f.truncation();
    let c = (1..=n)
        .map(|i| {
            let mut acc = f.a[i - 1].add(&g.a[i - 1]);
            for r in 1..i {
                acc = acc.add(&f.a[r - 1].mul(&g.a[i - r - 1]));
            }
            acc
        })
        .collect();
    Ok(LambdaElem::new(c))
}

/// Additive inverse: the reciprocal series.
pub fn lambda_neg<T: Coeff>(f: &LambdaElem<T>) -> LambdaElem<T> {
    let n = f.truncation();
    let mut c: Vec<T> = Vec::with_capacity(n);
    for i in 1..=n {
        let mut acc = f.a[i - 1].clone();
        for r in 1..i {
            acc = acc.add(&f.a[r - 1].mul(&c[i - r - 1]));
        }
        c.push(acc.neg());
    }
    LambdaElem::new(c)
}

/// `f ·_Λ g`, with `c_i = P_i(a_1..a_i; b_1..b_i)`.
pub fn lambda_mul<T: Coeff>(f: &LambdaElem<T>, g: &LambdaElem<T>, cache: &UniversalPolyCache) -> Result<LambdaElem<T>> {
    f.check(g)?;
    let template = &f.a[0];
    let c = (1..=f.truncation())
        .map(|i| {
            let p = cache.p(i)?;
            let mut vals: Vec<T> = f.a[..i].to_vec();
            vals.extend_from_slice(&g.a[..i]);
            Ok(p.eval(&vals, template))
        })
        .collect::<Result<_>>()?;
    Ok(LambdaElem::new(c))
}

/// A λ-operation output whose high coefficients may be unavailable.
#[derive(Clone, PartialEq, Debug)]
pub struct PartialLambda<T> {
    /// `c_1..c_N`; `None` marks a coefficient that was not computed.
    pub coeffs: Vec<Option<T>>,
}

impl<T: Coeff> PartialLambda<T> {
    /// Number of leading coefficients that were computed.
    pub fn computed(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_some()).count()
    }

    /// The computed prefix as an element of Λ truncated at that degree.
    pub fn known_prefix(&self) -> Option<LambdaElem<T>> {
        let k = self.computed();
        (k > 0).then(|| LambdaElem::new(self.coeffs[..k].iter().flatten().cloned().collect()))
    }
}

/// `λ^i(f)`, with `c_j = P_{j,i}(a_1..a_{ij})`.
///
/// Coefficient `j` needs `a_{ij}`, so it is computed only when `ij ≤ N`
/// and `ij` is within the cache bound; the rest are left as `None`.
pub fn lambda_op<T: Coeff>(i: usize, f: &LambdaElem<T>, cache: &UniversalPolyCache) -> Result<PartialLambda<T>> {
    if i == 0 {
        return Err(Error::OutOfRange { index: 0, max: usize::MAX });
    }
    let n = f.truncation();
    let template = &f.a[0];
    let coeffs = (1..=n)
        .map(|j| {
            if i * j > n || i * j > cache.bound() {
                return Ok(None);
            }
            let p = cache.pcomp(j, i)?;
            Ok(Some(p.eval(&f.a[..i * j], template)))
        })
        .collect::<Result<_>>()?;
    Ok(PartialLambda { coeffs })
}

/// The counit `η(f) = a_1`.
pub fn counit<T: Coeff>(f: &LambdaElem<T>) -> T {
    f.a[0].clone()
}

fn write_series<T: fmt::Display>(f: &mut fmt::Formatter<'_>, coeffs: &[Option<T>]) -> fmt::Result {
    write!(f, "1")?;
    for (k, c) in coeffs.iter().enumerate() {
        let k = k + 1;
        let t = if k == 1 { "t".to_string() } else { format!("t^{k}") };
        match c {
            None => write!(f, " + ?*{t}")?,
            Some(c) => {
                let s = c.to_string();
                if s == "0" {
                    continue;
                }
                let simple = !s[1..].contains([' ', '+', '-']);
                match (simple, s.strip_prefix('-')) {
                    (true, Some("1")) => write!(f, " - {t}")?,
                    (true, Some(rest)) => write!(f, " - {rest}*{t}")?,
                    (true, None) if s == "1" => write!(f, " + {t}")?,
                    (true, None) => write!(f, " + {s}*{t}")?,
                    (false, _) => write!(f, " + ({s})*{t}")?,
                }
            }
        }
    }
    Ok(())
}

impl<T: Coeff> fmt::Display for LambdaElem<T> {
    /// `1 + 5*t + 6*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<Option<&T>> = self.a.iter().map(Some).collect();
        write_series(f, &c)
    }
}

impl<T: Coeff> fmt::Display for PartialLambda<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<Option<&T>> = self.coeffs.iter().map(Option::as_ref).collect();
        write_series(f, &c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::Rational;
    use crate::sympoly::{var_list, MPoly};

    fn l(c: &[i64]) -> LambdaElem<Rational> {
        LambdaElem::new(c.iter().map(|&v| Rational::from_int(v)).collect())
    }

    #[test]
    fn addition_is_series_product() {
        assert_eq!(lambda_add(&l(&[2, 0]), &l(&[3, 0])).unwrap(), l(&[5, 6]));
        assert_eq!(lambda_add(&l(&[1, 0]), &l(&[-1, 0])).unwrap(), l(&[0, -1]));
        assert_eq!(lambda_add(&l(&[4, 7]), &l(&[0, 0])).unwrap(), l(&[4, 7]));
        let f = l(&[3, -1, 4]);
        assert_eq!(lambda_add(&f, &lambda_neg(&f)).unwrap(), l(&[0, 0, 0]));
    }

    #[test]
    fn multiplication_examples() {
        let cache = UniversalPolyCache::default();
        assert_eq!(lambda_mul(&l(&[2, 0]), &l(&[1, 0]), &cache).unwrap(), l(&[2, 0]));
        assert_eq!(lambda_mul(&l(&[2, 5]), &l(&[0, 0]), &cache).unwrap(), l(&[0, 0]));
        let vars = var_list(&["a", "b"]);
        let g = MPoly::gens(&vars);
        let z = MPoly::zero(vars);
        let f1 = LambdaElem::new(vec![g[0].clone(), z.clone()]);
        let f2 = LambdaElem::new(vec![g[1].clone(), z.clone()]);
        let prod = lambda_mul(&f1, &f2, &cache).unwrap();
        assert_eq!(prod.coeffs()[0].to_string(), "a*b");
        assert!(prod.coeffs()[1].is_zero());
    }

    #[test]
    fn lambda_operations() {
        let cache = UniversalPolyCache::default();
        let f = l(&[3, -2, 7, 1]);
        let one = lambda_op(1, &f, &cache).unwrap();
        assert_eq!(one.known_prefix().unwrap(), f);
        let two = lambda_op(2, &l(&[5, 0]), &cache).unwrap();
        assert_eq!(two.coeffs, vec![Some(Rational::zero()), None]);
        let vars = var_list(&["a1", "a2"]);
        let g = MPoly::gens(&vars);
        let sym = lambda_op(2, &LambdaElem::new(g), &cache).unwrap();
        assert_eq!(sym.coeffs[0].as_ref().unwrap().to_string(), "a2");
        assert_eq!(sym.to_string(), "1 + a2*t + ?*t^2");
    }

    #[test]
    fn display() {
        assert_eq!(l(&[5, 6]).to_string(), "1 + 5*t + 6*t^2");
        assert_eq!(l(&[0, -1]).to_string(), "1 - t^2");
    }
}
