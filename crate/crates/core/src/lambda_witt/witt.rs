use std::fmt;

use crate::error::{Error, Result};
use crate::ground::primes::divisors;
use crate::ground::{Coeff, Rational};
use crate::sympoly::{indexed_vars, var_list, MPoly};

/// Truncated big Witt vector `(a_1..a_N)`.
#[derive(Clone, PartialEq, Debug)]
pub struct WittVec<T> {
    a: Vec<T>,
}

impl<T: Coeff> WittVec<T> {
    /// # Panics
    /// If `a` is empty.
    pub fn new(a: Vec<T>) -> Self {
        assert!(!a.is_empty(), "truncation must be at least 1");
        WittVec { a }
    }

    pub fn zero(template: &T, n: usize) -> Self {
        WittVec::new(vec![template.zero_like(); n])
    }

    /// `(1, 0, 0, …)`, whose ghost components are all 1.
    pub fn one(template: &T, n: usize) -> Self {
        let mut a = vec![template.zero_like(); n];
        a[0] = template.one_like();
        WittVec::new(a)
    }

    pub fn truncation(&self) -> usize {
        self.a.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.a
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> WittVec<U> {
        WittVec { a: self.a.iter().map(f).collect() }
    }

    pub fn ghost_vector(&self) -> Vec<T> {
        (1..=self.truncation()).map(|n| ghost_unchecked(n, &self.a)).collect()
    }
}

impl<T: Coeff> fmt::Display for WittVec<T> {
    /// Comma-separated components.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn ghost_unchecked<T: Coeff>(n: usize, a: &[T]) -> T {
    let mut acc = a[0].zero_like();
    for d in divisors(n) {
        let term = a[d - 1].pow((n / d) as u32).scale(&Rational::from_int(d as i64));
        acc = acc.add(&term);
    }
    acc
}

/// `w_n(a) = Σ_{d|n} d·a_d^{n/d}`.
pub fn ghost<T: Coeff>(n: usize, a: &WittVec<T>) -> Result<T> {
    if n == 0 || n > a.truncation() {
        return Err(Error::OutOfRange { index: n, max: a.truncation() });
    }
    Ok(ghost_unchecked(n, &a.a))
}

/// The unique vector with the given ghost components, checked to lie in
/// the coefficient ring.
pub fn from_ghost<T: Coeff>(w: &[T], what: &str) -> Result<WittVec<T>> {
    let mut c: Vec<T> = Vec::with_capacity(w.len());
    for n in 1..=w.len() {
        // n c_n = w_n − Σ_{d|n, d<n} d c_d^{n/d}
        let mut rest = w[n - 1].clone();
        for d in divisors(n).into_iter().filter(|&d| d < n) {
            rest = rest.sub(&c[d - 1].pow((n / d) as u32).scale(&Rational::from_int(d as i64)));
        }
        let cn = rest.scale(&Rational::new(1, n as i64));
        if !cn.is_integral() {
            return Err(Error::NonIntegral { what: format!("{what}, component {n}"), value: cn.to_string() });
        }
        c.push(cn);
    }
    Ok(WittVec::new(c))
}

fn check<T: Coeff>(a: &WittVec<T>, b: &WittVec<T>) -> Result<()> {
    if a.truncation() != b.truncation() {
        return Err(Error::TruncationMismatch { left: a.truncation(), right: b.truncation() });
    }
    if !a.a[0].same_domain(&b.a[0]) {
        return Err(Error::RingMismatch { left: format!("{:?}", a.a[0]), right: format!("{:?}", b.a[0]) });
    }
    Ok(())
}

/// `a +_W b` by solving the ghost equations.
pub fn witt_add<T: Coeff>(a: &WittVec<T>, b: &WittVec<T>) -> Result<WittVec<T>> {
    check(a, b)?;
    let w: Vec<T> = a.ghost_vector().iter().zip(b.ghost_vector()).map(|(x, y)| x.add(&y)).collect();
    from_ghost(&w, "Witt sum")
}

/// `a ·_W b` by solving the ghost equations.
pub fn witt_mul<T: Coeff>(a: &WittVec<T>, b: &WittVec<T>) -> Result<WittVec<T>> {
    check(a, b)?;
    let w: Vec<T> = a.ghost_vector().iter().zip(b.ghost_vector()).map(|(x, y)| x.mul(&y)).collect();
    from_ghost(&w, "Witt product")
}

/// `−a`, the vector with negated ghost components.
pub fn witt_neg<T: Coeff>(a: &WittVec<T>) -> Result<WittVec<T>> {
    let w: Vec<T> = a.ghost_vector().iter().map(Coeff::neg).collect();
    from_ghost(&w, "Witt negation")
}

/// The universal sum and product polynomials `S_n, M_n ∈ ℤ[a_1..a_N, b_1..b_N]`,
/// obtained by running the ghost solve over the polynomial ring.
#[derive(Debug, Clone)]
pub struct WittPolynomials {
    pub sum: Vec<MPoly>,
    pub product: Vec<MPoly>,
}

impl WittPolynomials {
    pub fn new(n: usize) -> Result<Self> {
        let (a, b) = symbolic_pair(n);
        Ok(WittPolynomials { sum: witt_add(&a, &b)?.a, product: witt_mul(&a, &b)?.a })
    }

    pub fn truncation(&self) -> usize {
        self.sum.len()
    }

    fn eval<T: Coeff>(table: &[MPoly], a: &WittVec<T>, b: &WittVec<T>) -> Result<WittVec<T>> {
        check(a, b)?;
        if a.truncation() != table.len() {
            return Err(Error::TruncationMismatch { left: a.truncation(), right: table.len() });
        }
        let mut vals = a.a.clone();
        vals.extend_from_slice(&b.a);
        Ok(WittVec::new(table.iter().map(|p| p.eval(&vals, &a.a[0])).collect()))
    }

    pub fn add<T: Coeff>(&self, a: &WittVec<T>, b: &WittVec<T>) -> Result<WittVec<T>> {
        WittPolynomials::eval(&self.sum, a, b)
    }

    pub fn mul<T: Coeff>(&self, a: &WittVec<T>, b: &WittVec<T>) -> Result<WittVec<T>> {
        WittPolynomials::eval(&self.product, a, b)
    }
}

/// Generic vectors `(a_1..a_n)` and `(b_1..b_n)` over `ℤ[a, b]`.
pub fn symbolic_pair(n: usize) -> (WittVec<MPoly>, WittVec<MPoly>) {
    let mut names = indexed_vars("a", n);
    names.extend(indexed_vars("b", n));
    let gens = MPoly::gens(&var_list(&names));
    (WittVec::new(gens[..n].to_vec()), WittVec::new(gens[n..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> WittVec<Rational> {
        WittVec::new(c.iter().map(|&v| Rational::from_int(v)).collect())
    }

    #[test]
    fn ghost_formulas() {
        let vars = var_list(&indexed_vars("a", 6));
        let a = WittVec::new(MPoly::gens(&vars));
        assert_eq!(ghost(1, &a).unwrap().to_string(), "a1");
        assert_eq!(ghost(4, &a).unwrap().to_string(), "a1^4 + 2*a2^2 + 4*a4");
        assert_eq!(ghost(6, &a).unwrap().to_string(), "a1^6 + 2*a2^3 + 3*a3^2 + 6*a6");
        assert!(ghost(7, &a).is_err());
    }

    #[test]
    fn sum_and_product_examples() {
        assert_eq!(witt_add(&w(&[1, 0, 0, 0]), &w(&[1, 0, 0, 0])).unwrap(), w(&[2, -1, -2, -4]));
        assert_eq!(witt_add(&w(&[3, 1, -4]), &w(&[0, 0, 0])).unwrap(), w(&[3, 1, -4]));
        assert_eq!(witt_mul(&w(&[1, 0, 0, 0, 0]), &w(&[1, 0, 0, 0, 0])).unwrap(), w(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn polynomial_table_agrees_with_ghost_solve() {
        let table = WittPolynomials::new(4).unwrap();
        assert_eq!(table.sum[0].to_string(), "a1 + b1");
        assert_eq!(table.product[0].to_string(), "a1*b1");
        let a = w(&[2, -1, 3, 0]);
        let b = w(&[-5, 4, 1, 2]);
        assert_eq!(table.add(&a, &b).unwrap(), witt_add(&a, &b).unwrap());
        assert_eq!(table.mul(&a, &b).unwrap(), witt_mul(&a, &b).unwrap());
    }

    #[test]
    fn negation() {
        let a = w(&[2, -1, 3, 5]);
        assert_eq!(witt_add(&a, &witt_neg(&a).unwrap()).unwrap(), w(&[0, 0, 0, 0]));
    }
}
