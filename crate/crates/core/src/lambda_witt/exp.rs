use super::lambda::LambdaElem;
use super::witt::WittVec;
use crate::error::{Error, Result};
use crate::ground::{Coeff, Ideal};

/// `s_i = (−1)^{i+1}`, the sign of the `i`-th factor of the exponential map.
fn sign<T: Coeff>(i: usize, v: T) -> T {
    if i.is_multiple_of(2) {
        v.neg()
    } else {
        v
    }
}

/// Multiplies the truncated series `1 + c` (constant term implicit) by
/// `1 + r t^k`.
fn mul_factor<T: Coeff>(c: &mut [T], k: usize, r: &T) {
    let n = c.len();
    for d in (k..=n).rev() {
        // new c_d = c_d + r·c_{d−k}, with c_0 = 1
        let lower = if d == k { r.clone() } else { c[d - k - 1].mul(r) };
        c[d - 1] = c[d - 1].add(&lower);
    }
}

/// The exponential isomorphism `W(A) → Λ(A)`,
/// `(a_i) ↦ ∏ (1 + (−1)^{i+1} a_i t^i)` modulo `t^{N+1}`.
pub fn exp_iso<T: Coeff>(a: &WittVec<T>) -> LambdaElem<T> {
    let mut c = vec![a.coeffs()[0].zero_like(); a.truncation()];
    for (i, ai) in a.coeffs().iter().enumerate() {
        if !ai.is_zero() {
            mul_factor(&mut c, i + 1, &sign(i + 1, ai.clone()));
        }
    }
    LambdaElem::new(c)
}

/// Inverse of [`exp_iso`], peeling off one factor per degree.
pub fn exp_iso_inv<T: Coeff>(f: &LambdaElem<T>) -> WittVec<T> {
    let n = f.truncation();
    let mut partial = vec![f.coeffs()[0].zero_like(); n];
    let mut r: Vec<T> = Vec::with_capacity(n);
    for k in 1..=n {
        let rk = f.coeffs()[k - 1].sub(&partial[k - 1]);
        if !rk.is_zero() {
            mul_factor(&mut partial, k, &rk);
        }
        r.push(sign(k, rk));
    }
    WittVec::new(r)
}

/// Access to the stored coefficients of Λ or W elements.
pub trait Components<T> {
    fn components(&self) -> &[T];
}

impl<T: Coeff> Components<T> for LambdaElem<T> {
    fn components(&self) -> &[T] {
        self.coeffs()
    }
}

impl<T: Coeff> Components<T> for WittVec<T> {
    fn components(&self) -> &[T] {
        self.coeffs()
    }
}

/// Whether every stored coefficient lies in `ideal`, i.e. membership in
/// Λ(I) or W(I).
pub fn filtration_member<T: Coeff, X: Components<T>>(x: &X, ideal: &Ideal) -> Result<bool> {
    let mut all = true;
    for c in x.components() {
        match c.ideal_member(ideal) {
            Some(b) => all &= b,
            None => return Err(Error::Unsupported(format!("ideal {ideal} for {c:?}"))),
        }
    }
    Ok(all)
}
