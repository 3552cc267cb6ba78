//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::{Coeff, Rational};

/// Exponent vector, one entry per variable of the owning polynomial.
pub type Monomial = Vec<u32>;

/// Multivariate polynomial over ℚ in a fixed, ordered variable list.
///
/// Terms are kept in a `BTreeMap`, so iteration is lexicographic on the
/// exponent vectors with respect to the variable order; no zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

pub fn var_list<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// Names `prefix1 .. prefixN`.
pub fn indexed_vars(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl MPoly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<[String]>, c: Rational) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    /// The `idx`-th variable.
    pub fn var(vars: Arc<[String]>, idx: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[idx] = 1;
        let mut p = MPoly::zero(vars);
        p.terms.insert(m, Rational::one());
        p
    }

    pub fn var_named(vars: Arc<[String]>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
        Ok(MPoly::var(vars, idx))
    }

    /// All variables of `vars` as polynomials, in order.
    pub fn gens(vars: &Arc<[String]>) -> Vec<MPoly> {
        (0..vars.len()).map(|i| MPoly::var(vars.clone(), i)).collect()
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MPoly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), p.vars.len(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[u32]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Lexicographically largest monomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn coeff_of_one(&self) -> Rational {
        self.terms.values().next().cloned().unwrap_or_default()
    }

    /// Applies `f` after aligning variable lists. A constant may be lifted
    /// into any variable list; otherwise the lists must agree.
    fn binary(&self, other: &MPoly, f: impl Fn(&MPoly, &MPoly) -> MPoly) -> MPoly {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            f(self, other)
        } else if other.is_constant() {
            f(self, &MPoly::constant(self.vars.clone(), other.coeff_of_one()))
        } else if self.is_constant() {
            f(&MPoly::constant(other.vars.clone(), self.coeff_of_one()), other)
        } else {
            panic!("variable list mismatch: {:?} vs {:?}", self.vars, other.vars);
        }
    }

    fn add_same(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn mul_same(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1.mul(c2));
            }
        }
        out
    }

    /// Evaluates at `values` (one per variable), in any coefficient domain.
    pub fn eval<T: Coeff>(&self, values: &[T], template: &T) -> T {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let mut max_exp = vec![0u32; values.len()];
        for m in self.terms.keys() {
            for (slot, &e) in max_exp.iter_mut().zip(m) {
                *slot = (*slot).max(e);
            }
        }
        let powers: Vec<Vec<T>> = values
            .iter()
            .zip(&max_exp)
            .map(|(v, &top)| {
                let mut row = vec![template.one_like()];
                for k in 1..=top as usize {
                    let next = row[k - 1].mul(v);
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = template.zero_like();
        for (m, c) in &self.terms {
            let mut term = template.from_rational_like(c);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitutes a polynomial for every variable; all substitutes share
    /// one target variable list.
    pub fn substitute(&self, values: &[MPoly]) -> MPoly {
        let template = values
            .first()
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.vars.clone()));
        self.eval(values, &template.zero_like())
    }

    /// Re-expresses the polynomial over another variable list, matching
    /// variables by name. Fails if a used variable is absent from `vars`.
    pub fn with_vars(&self, vars: Arc<[String]>) -> Result<MPoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let pos = vars.iter().position(|w| w == v);
            let used = self.terms.keys().any(|m| m[i] > 0);
            match (pos, used) {
                (Some(p), _) => map.push(Some(p)),
                (None, false) => map.push(None),
                (None, true) => return Err(Error::Parse(format!("variable {v} not in target list"))),
            }
        }
        let mut out = MPoly::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut nm = vec![0; vars.len()];
            for (i, &e) in m.iter().enumerate() {
                if let Some(p) = map[i] {
                    nm[p] += e;
                }
            }
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    /// Swaps variables `i` and `j`.
    pub fn transpose(&self, i: usize, j: usize) -> MPoly {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut m = m.clone();
            m.swap(i, j);
            (m, c.clone())
        });
        MPoly::from_terms(self.vars.clone(), terms)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> MPoly {
        MPoly::from_terms(self.vars.clone(), self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Parses `"3*a1^2*b2 - 1/2*a2 + 4"` style input over `vars`.
    pub fn parse(s: &str, vars: Arc<[String]>) -> Result<MPoly> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, vars };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!("unexpected input at {} in {s:?}", p.pos)));
        }
        Ok(out)
    }

    fn fmt_monomial(&self, m: &[u32]) -> String {
        m.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.vars[i].clone()
                } else {
                    format!("{}^{}", self.vars[i], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for MPoly {
    /// Terms in descending lexicographic order, e.g. `a1^2*b2 + a2*b1^2 - 2*a2*b2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = self.fmt_monomial(m);
            let neg = c.is_negative();
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}*{mono}"),
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.vars.join(","), self)
    }
}

/// A polynomial denotes an element of ℤ[vars]: integral iff every
/// coefficient is an integer.
impl Coeff for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.vars.clone())
    }
    fn one_like(&self) -> Self {
        MPoly::constant(self.vars.clone(), Rational::one())
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        MPoly::constant(self.vars.clone(), q.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.binary(other, MPoly::add_same)
    }
    fn sub(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a.add_same(&b.neg()))
    }
    fn mul(&self, other: &Self) -> Self {
        self.binary(other, MPoly::mul_same)
    }
    fn neg(&self) -> Self {
        self.map_coeffs(Rational::neg)
    }
    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return self.zero_like();
        }
        self.map_coeffs(|c| c.mul(q))
    }
    fn is_integral(&self) -> bool {
        self.has_integer_coefficients()
    }
    fn same_domain(&self, o: &Self) -> bool {
        self.vars == o.vars || self.is_constant() || o.is_constant()
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coeff_of_one())
        } else {
            None
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Arc<[String]>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero(self.vars.clone());
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.err("bad exponent"))
    }

    fn factor(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let mut text = String::from_utf8_lossy(&self.src[start..self.pos]).to_string();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let dstart = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if dstart == self.pos {
                        return Err(self.err("expected denominator"));
                    }
                    text.push('/');
                    text.push_str(&String::from_utf8_lossy(&self.src[dstart..self.pos]));
                }
                let q: Rational = text.parse()?;
                let e = self.exponent()?;
                Ok(MPoly::constant(self.vars.clone(), q.pow(e)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() {
                    let c = self.src[self.pos];
                    if c.is_ascii_alphanumeric() || c == b'_' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).to_string();
                let v = MPoly::var_named(self.vars.clone(), &name)?;
                let e = self.exponent()?;
                Ok(v.pow(e))
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Arc<[String]> {
        var_list(&["a1", "a2", "b1", "b2"])
    }

    #[test]
    fn parse_and_print() {
        let p = MPoly::parse("a1^2*b2 + a2*b1^2 - 2*a2*b2", vars()).unwrap();
        assert_eq!(p.to_string(), "a1^2*b2 + a2*b1^2 - 2*a2*b2");
        let q = MPoly::parse("-(a1 + 1/2)^2", vars()).unwrap();
        assert_eq!(q.to_string(), "-a1^2 - a1 - 1/4");
        assert!(MPoly::parse("z", vars()).is_err());
        assert!(MPoly::parse("a1 +", vars()).is_err());
        assert_eq!(MPoly::parse("2 + -3*a1", vars()).unwrap().to_string(), "-3*a1 + 2");
    }

    #[test]
    fn no_zero_terms() {
        let a = MPoly::var(vars(), 0);
        let d = a.sub(&a);
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn eval_at_rationals() {
        let p = MPoly::parse("a1^2*b2 + a2*b1^2 - 2*a2*b2", vars()).unwrap();
        let vals: Vec<Rational> = [3, 1, 2, 5].iter().map(|&v| Rational::from_int(v)).collect();
        assert_eq!(p.eval(&vals, &Rational::zero()), Rational::from_int(45 + 4 - 10));
    }

    #[test]
    fn rename_variables() {
        let p = MPoly::parse("a1*b2", vars()).unwrap();
        let q = p.with_vars(var_list(&["b2", "a1"])).unwrap();
        assert_eq!(q.to_string(), "b2*a1");
        assert!(p.with_vars(var_list(&["a1"])).is_err());
    }

    #[test]
    fn constants_lift_across_variable_lists() {
        let p = MPoly::var(vars(), 1);
        let c = MPoly::constant(var_list::<&str>(&[]), Rational::from_int(3));
        assert_eq!(p.mul(&c).to_string(), "3*a2");
        assert_eq!(c.add(&p).to_string(), "a2 + 3");
    }
}
