use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::carrier::{Carrier, CarrierElem};
use super::structure::LambdaStructure;
use crate::error::{Error, Result};
use crate::ground::{Coeff, GroundRing};
use crate::report::Report;
use crate::sympoly::UniversalPolyCache;

/// The documented sample set for a carrier, plus a few seeded random
/// elements: small integers; `x`, `x + x²` and small polynomials for series
/// carriers; `ε` and `α + βε` for dual numbers.
pub fn default_samples(carrier: &Carrier, seed: u64) -> Vec<CarrierElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parse = |s: &str| carrier.parse_element(s).expect("sample parses");
    let mut out: Vec<CarrierElem> = Vec::new();
    match carrier {
        Carrier::Ground(r) => {
            out.extend((-3..=3).map(|k| carrier.from_int(k)));
            if let GroundRing::RationalPoly(vars) = &**r {
                out.push(parse(&vars[0]));
                out.push(parse(&format!("{}^2 - 2", vars[0])));
            } else if r.is_q_algebra() {
                out.push(parse("1/2"));
            }
            for _ in 0..2 {
                out.push(carrier.from_int(rng.gen_range(-10..=10)));
            }
        }
        Carrier::DualNumbers { .. } => {
            for s in ["eps", "1 + eps", "2 - 3*eps", "3", "-1"] {
                out.push(parse(s));
            }
            for _ in 0..2 {
                let a: i64 = rng.gen_range(-5..=5);
                let b: i64 = rng.gen_range(-5..=5);
                out.push(parse(&format!("{a} + {b}*eps")));
            }
        }
        Carrier::TruncPoly { .. } | Carrier::PowerSeries { .. } => {
            for s in ["x", "x + x^2", "1 + x", "2", "x - x^3"] {
                out.push(parse(s));
            }
            for _ in 0..2 {
                let terms: Vec<String> = (0..=3)
                    .map(|k| format!("({})*x^{k}", rng.gen_range(-3i64..=3)))
                    .collect();
                out.push(parse(&terms.join(" + ")));
            }
        }
    }
    out.dedup();
    out
}

fn first_mismatch(lhs: &[CarrierElem], rhs: &[CarrierElem]) -> Option<String> {
    lhs.iter()
        .zip(rhs)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(k, (a, b))| format!("degree {}: {a} vs {b}", k + 1))
}

/// Evaluates the λ-ring axioms, with λ from the Newton recursion and the
/// universal polynomials from `cache`, on all samples and sample pairs:
/// `λ^0 = 1`, `λ^1 = id`, `λ^n(1) = 0`, additivity and products for
/// `n ≤ nmax`, composites `λ^m λ^n` for `m, n ≤ nmax`, and closure of the
/// first filtration ideal under `λ^i`.
pub fn axiom_check(
    s: &LambdaStructure,
    samples: &[CarrierElem],
    nmax: usize,
    cache: &UniversalPolyCache,
) -> Result<Report> {
    if nmax == 0 {
        return Err(Error::OutOfRange { index: 0, max: usize::MAX });
    }
    if nmax * nmax > cache.bound() {
        return Err(Error::BoundExceeded { m: nmax, n: nmax, bound: cache.bound() });
    }
    let c = s.carrier();
    let mut report = Report::new(format!("lambda-ring axioms on {}, n <= {nmax}", c));
    let one = c.one();
    let top = nmax * nmax;

    match s.newton_lambdas(nmax, &one) {
        Ok(l) => {
            let bad = l.iter().skip(2).position(|v| !v.is_zero());
            report.push("lambda^n(1) = 0", bad.is_none(), bad.map(|k| format!("n = {}", k + 2)).unwrap_or_default());
        }
        Err(e) => report.fail("lambda^n(1) = 0", e.to_string()),
    }

    let mut lams: Vec<Option<Vec<CarrierElem>>> = Vec::with_capacity(samples.len());
    for r in samples {
        match s.newton_lambdas(top, r) {
            Ok(l) => {
                report.push(format!("lambda^0({r}) = 1"), l[0] == one, "");
                report.push(format!("lambda^1({r}) = {r}"), l[1] == *r, "");
                lams.push(Some(l));
            }
            Err(e) => {
                report.fail(format!("lambda operations at {r}"), e.to_string());
                lams.push(None);
            }
        }
    }

    for (i, r) in samples.iter().enumerate() {
        let Some(lr) = &lams[i] else { continue };
        for (j, t) in samples.iter().enumerate().skip(i) {
            let Some(lt) = &lams[j] else { continue };
            let sum = r.add(t);
            let name = format!("lambda^n({r} + {t})");
            match s.newton_lambdas(nmax, &sum) {
                Ok(got) => {
                    let want: Vec<CarrierElem> = (1..=nmax)
                        .map(|n| {
                            (0..=n).fold(r.zero_like(), |acc, k| acc.add(&lr[k].mul(&lt[n - k])))
                        })
                        .collect();
                    let bad = first_mismatch(&got[1..], &want);
                    report.push(name, bad.is_none(), bad.unwrap_or_default());
                }
                Err(e) => report.fail(name, e.to_string()),
            }

            let prod = r.mul(t);
            let name = format!("lambda^n({r} * {t})");
            match s.newton_lambdas(nmax, &prod) {
                Ok(got) => {
                    let mut want = Vec::with_capacity(nmax);
                    for n in 1..=nmax {
                        let p = cache.p(n)?;
                        let mut vals = lr[1..=n].to_vec();
                        vals.extend_from_slice(&lt[1..=n]);
                        want.push(p.eval(&vals, r));
                    }
                    let bad = first_mismatch(&got[1..], &want);
                    report.push(name, bad.is_none(), bad.unwrap_or_default());
                }
                Err(e) => report.fail(name, e.to_string()),
            }
        }
    }

    for (i, r) in samples.iter().enumerate() {
        let Some(lr) = &lams[i] else { continue };
        let mut bad = None;
        'outer: for n in 1..=nmax {
            let inner = match s.newton_lambdas(nmax, &lr[n]) {
                Ok(v) => v,
                Err(e) => {
                    bad = Some(format!("lambda^m(lambda^{n}): {e}"));
                    break;
                }
            };
            for m in 1..=nmax {
                let want = cache.pcomp(m, n)?.eval(&lr[1..=m * n], r);
                if inner[m] != want {
                    bad = Some(format!("m = {m}, n = {n}: {} vs {want}", inner[m]));
                    break 'outer;
                }
            }
        }
        report.push(format!("lambda^m(lambda^n({r}))"), bad.is_none(), bad.unwrap_or_default());

        if c.in_filtration_ideal(r) == Some(true) {
            let v = r.valuation();
            let bad = (1..=top).find(|&k| {
                let lk = &lr[k];
                match c {
                    Carrier::DualNumbers { .. } => c.in_filtration_ideal(lk) != Some(true),
                    _ => lk.valuation() < v,
                }
            });
            let detail = bad.map(|k| format!("lambda^{k} = {}", lr[k])).unwrap_or_default();
            report.push(format!("filtration closed under lambda^i at {r}"), bad.is_none(), detail);
        }
    }
    Ok(report)
}
