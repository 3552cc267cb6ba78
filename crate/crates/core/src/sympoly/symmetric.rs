//! Elementary symmetric polynomials, Newton's identities and the
//! fundamental-theorem reduction.

use std::collections::HashMap;
use std::sync::Arc;

use super::mpoly::{indexed_vars, var_list, MPoly};
use crate::error::{Error, Result};
use crate::ground::{Coeff, Rational};

/// `e_k` of `xs`, by the recurrence on prefixes; `e_0 = 1`.
pub fn elementary_of<T: Coeff>(k: usize, xs: &[T], template: &T) -> T {
    if k > xs.len() {
        return template.zero_like();
    }
    // dp[j] = e_j of the prefix processed so far
    let mut dp = vec![template.zero_like(); k + 1];
    dp[0] = template.one_like();
    for (n, x) in xs.iter().enumerate() {
        for j in (1..=k.min(n + 1)).rev() {
            dp[j] = dp[j].add(&dp[j - 1].mul(x));
        }
    }
    dp.swap_remove(k)
}

/// `e_k` in the named variables.
pub fn elementary_symmetric<S: AsRef<str>>(k: usize, vars: &[S]) -> Result<MPoly> {
    if k > vars.len() {
        return Err(Error::OutOfRange { index: k, max: vars.len() });
    }
    let vars = var_list(vars);
    let gens = MPoly::gens(&vars);
    Ok(elementary_of(k, &gens, &MPoly::zero(vars)))
}

/// Power sums `p_1..p_n` from elementary symmetric values `e_1..` (missing
/// entries are zero).
pub fn newton_power_sums<T: Coeff>(e: &[T], n: usize, template: &T) -> Vec<T> {
    let e_at = |i: usize| e.get(i - 1).cloned().unwrap_or_else(|| template.zero_like());
    let mut p: Vec<T> = Vec::with_capacity(n);
    for k in 1..=n {
        // p_k = Σ_{i<k} (−1)^{i−1} e_i p_{k−i} + (−1)^{k−1} k e_k
        let mut acc = e_at(k).scale(&Rational::from_int(k as i64));
        if k % 2 == 0 {
            acc = acc.neg();
        }
        for i in 1..k {
            let t = e_at(i).mul(&p[k - i - 1]);
            acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        p.push(acc);
    }
    p
}

/// Elementary symmetric values `e_1..e_n` from power sums `p_1..p_n`.
/// Divides by `k` in the rational envelope.
pub fn newton_elementary<T: Coeff>(p: &[T]) -> Vec<T> {
    let mut e: Vec<T> = Vec::with_capacity(p.len());
    for k in 1..=p.len() {
        // k e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i
        let mut acc = p[k - 1].clone();
        if k % 2 == 0 {
            acc = acc.neg();
        }
        for i in 1..k {
            let t = e[k - i - 1].mul(&p[i - 1]);
            acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        e.push(acc.scale(&Rational::new(1, k as i64)));
    }
    e
}

/// Rewrites `f`, symmetric in `sym_vars`, as a polynomial in the elementary
/// symmetric polynomials of those variables.
///
/// The result lives over the remaining variables of `f` (in their original
/// order) followed by `e1..en`. Symmetry is checked exactly on the adjacent
/// transpositions, which generate the symmetric group.
pub fn express_in_elementary<S: AsRef<str>>(f: &MPoly, sym_vars: &[S]) -> Result<MPoly> {
    let idx: Vec<usize> = sym_vars
        .iter()
        .map(|v| {
            f.vars()
                .iter()
                .position(|w| w == v.as_ref())
                .ok_or_else(|| Error::Parse(format!("unknown variable {}", v.as_ref())))
        })
        .collect::<Result<_>>()?;
    let n = idx.len();
    for w in idx.windows(2) {
        if f.transpose(w[0], w[1]) != *f {
            let names: Vec<&str> = sym_vars.iter().map(AsRef::as_ref).collect();
            return Err(Error::NotSymmetric(names.join(",")));
        }
    }
    let rest: Vec<usize> = (0..f.vars().len()).filter(|i| !idx.contains(i)).collect();
    let e_names = indexed_vars("e", n);
    let mut out_names: Vec<String> = rest.iter().map(|&i| f.vars()[i].clone()).collect();
    if out_names.iter().any(|v| e_names.contains(v)) {
        return Err(Error::Parse("remaining variables clash with e1..en".into()));
    }
    out_names.extend(e_names);
    let out_vars: Arc<[String]> = var_list(&out_names);

    let gens = MPoly::gens(f.vars());
    let sym_gens: Vec<MPoly> = idx.iter().map(|&i| gens[i].clone()).collect();
    let zero = f.zero_like();
    let elem: Vec<MPoly> = (1..=n).map(|k| elementary_of(k, &sym_gens, &zero)).collect();
    let mut powers: HashMap<(usize, u32), MPoly> = HashMap::new();
    let mut power = |k: usize, d: u32| -> MPoly {
        powers.entry((k, d)).or_insert_with(|| elem[k].pow(d)).clone()
    };

    let mut g = MPoly::zero(out_vars);
    let mut rem = f.clone();
    while !rem.is_zero() {
        let (m, c) = rem
            .terms()
            .max_by(|(a, _), (b, _)| {
                let ka: Vec<u32> = idx.iter().map(|&i| a[i]).collect();
                let kb: Vec<u32> = idx.iter().map(|&i| b[i]).collect();
                ka.cmp(&kb)
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero");
        let alpha: Vec<u32> = idx.iter().map(|&i| m[i]).collect();
        // leading exponents of a symmetric polynomial are weakly decreasing
        let d: Vec<u32> = (0..n)
            .map(|k| alpha[k] - alpha.get(k + 1).copied().unwrap_or(0))
            .collect();
        let mut coeff_mono = vec![0; f.vars().len()];
        for &i in &rest {
            coeff_mono[i] = m[i];
        }
        let mut term = MPoly::from_terms(f.vars().clone(), [(coeff_mono, c.clone())]);
        for (k, &dk) in d.iter().enumerate() {
            if dk > 0 {
                term = term.mul(&power(k, dk));
            }
        }
        rem = rem.sub(&term);
        let mut out_mono: Vec<u32> = rest.iter().map(|&i| m[i]).collect();
        out_mono.extend(d);
        g.add_term(out_mono, c);
    }
    Ok(g)
}
