//! Command-line front end for the `lambdaring` library.

pub mod json;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lambdaring::ground::{GroundRing, Rational, RingElement};
use lambdaring::lambda_witt::{
    coalgebra_check, exp_iso, exp_iso_inv, ghost, lambda_add, lambda_mul, lambda_op, witt_add, witt_mul,
    LambdaElem, WittVec,
};
use lambdaring::lubin::{hasse_check, lubin_solve, CommutingProblem, HasseVerdict};
use lambdaring::report::Report;
use lambdaring::selftest::{run_suite, SUITES};
use lambdaring::series::TruncSeries;
use lambdaring::structures::{
    axiom_check, default_samples, dual_iso_test, make_dual_structure, make_family_structure, multiplicative_structure,
    parse_series_coeffs, power_structure, Carrier, CarrierElem, LambdaStructure,
};
use lambdaring::sympoly::UniversalPolyCache;
use lambdaring::universal::{
    hom_from_structure, hom_roundtrip_check, relation_violations, roundtrip_check, structure_from_hom,
};
use lambdaring::Error;
use serde_json::{json, Value};

/// Failures surfaced by the command-line tool.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

impl CliError {
    /// 2 for malformed requests, 1 for mathematical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io { .. } | CliError::Json { .. } => 2,
            CliError::Core(e) => match e {
                Error::Parse(_)
                | Error::InvalidRing(_)
                | Error::Unsupported(_)
                | Error::OutOfRange { .. }
                | Error::BoundExceeded { .. }
                | Error::PrimeOutsideWindow(_)
                | Error::TruncationMismatch { .. }
                | Error::WindowMismatch
                | Error::RingMismatch { .. } => 2,
                _ => 1,
            },
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "lambdaring", version, about = "Exact computations with lambda-rings, Witt vectors and Adams operations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Ground ring, e.g. Z, Q, Z[1/2], Z_(3), Q[y1,y2].
    #[arg(long, global = true, default_value = "Z")]
    pub ring: String,
    /// Series truncation order.
    #[arg(short = 'N', global = true, default_value_t = 8)]
    pub n: usize,
    /// Prime window, comma separated.
    #[arg(long, global = true, default_value = "2,3,5,7")]
    pub primes: String,
    /// Tail depth for universal-ring generators.
    #[arg(long, global = true, default_value_t = 2)]
    pub depth: usize,
    /// Seed for every sampled element.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to a file.
    #[arg(short = 'o', global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Big Witt vector arithmetic.
    Witt {
        #[command(subcommand)]
        op: WittOp,
    },
    /// Arithmetic in the universal lambda-ring of series with constant term 1.
    Lambda {
        #[command(subcommand)]
        op: LambdaOp,
    },
    /// The exponential isomorphism from Witt vectors to Lambda.
    Exp {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// The inverse exponential isomorphism.
    Unexp {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Lambda operations of an element from the Adams operations of a structure.
    Lift {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Checks the Adams-operation conditions of a structure.
    Validate {
        #[arg(long)]
        structure: PathBuf,
    },
    /// Checks the lambda-ring axioms of a structure on sample elements.
    AxiomCheck {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
    /// Checks the counit and coassociativity laws on sample elements.
    CoalgebraCheck {
        #[arg(long)]
        structure: PathBuf,
        #[arg(short = 'M', default_value_t = 2)]
        m: usize,
    },
    /// Structures on dual numbers.
    Dual {
        #[command(subcommand)]
        op: DualOp,
    },
    /// Structures on series and truncated polynomial carriers.
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
    /// The correspondence between structures and assignments of the universal ring.
    Universal {
        #[command(subcommand)]
        op: UniversalOp,
    },
    /// Commuting power series.
    Lubin {
        #[command(subcommand)]
        op: LubinOp,
    },
    /// Hasse principle for Adams operations.
    Hasse {
        #[command(subcommand)]
        op: HasseOp,
    },
    /// Runs the verification suites.
    Selftest {
        /// Run only this suite (1-8).
        #[arg(long)]
        suite: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum WittOp {
    Add {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    Ghost {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Only this ghost component.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LambdaOp {
    Add {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    Op {
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Largest m·n for which composite polynomials are formed.
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum DualOp {
    Make {
        /// Coefficients a_p, e.g. 2=6,3=6.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    Iso {
        #[arg(long)]
        s1: PathBuf,
        #[arg(long)]
        s2: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyKind {
    /// psi^p(x) = (1+x)^p - 1.
    Multiplicative,
    /// psi^p(x) = x^p.
    Power,
    /// psi^p(x) = a_p x over a Q-algebra.
    Linear,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CarrierKind {
    Series,
    Trunc,
}

#[derive(Debug, Subcommand)]
pub enum FamilyOp {
    Make {
        #[arg(long, value_enum)]
        family: FamilyKind,
        /// Coefficients a_p for the linear family, e.g. 2=5,3=7.
        #[arg(long)]
        a: Option<String>,
        #[arg(long, value_enum, default_value = "series")]
        carrier: CarrierKind,
        /// Degree bound of R[x]/x^deg for truncated carriers.
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Filtration degree of x.
        #[arg(long, default_value_t = 1)]
        filtration: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum UniversalOp {
    ToHom {
        #[arg(long)]
        structure: PathBuf,
    },
    FromHom {
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long, default_value_t = 1)]
        filtration: u32,
    },
    Relations {
        #[arg(long)]
        assignment: PathBuf,
    },
    Roundtrip {
        #[arg(long)]
        structure: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum LubinOp {
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum HasseOp {
    Check {
        #[arg(long)]
        s1: PathBuf,
        #[arg(long)]
        s2: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
}

/// Rendered output and the exit status it implies.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let mut text = o.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.global.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, &text) {
                        let _ = writeln!(err, "error: {}: {e}", path.display());
                        return 2;
                    }
                }
                None => {
                    let _ = out.write_all(text.as_bytes());
                }
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn ring_of(g: &GlobalOpts) -> CliResult<Arc<GroundRing>> {
    Ok(Arc::new(g.ring.parse::<GroundRing>()?))
}

fn primes_of(g: &GlobalOpts) -> CliResult<Vec<u64>> {
    g.primes
        .split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("bad prime {s:?} in --primes"))))
        .collect()
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.display().to_string(), source })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// A comma-separated list, or a JSON file `{key: [...]}`.
fn read_vector(arg: &str, key: &str, ring: &Arc<GroundRing>) -> CliResult<Vec<RingElement>> {
    let path = Path::new(arg);
    let items: Vec<String> = if arg.ends_with(".json") && path.exists() {
        let v = read_json(path)?;
        v.get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::Input(format!("{arg}: expected {{\"{key}\": [...]}}")))?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| CliError::Input("entries must be strings".into())))
            .collect::<CliResult<_>>()?
    } else {
        arg.split(',').map(|s| s.trim().to_string()).collect()
    };
    if items.iter().any(String::is_empty) {
        return Err(CliError::Usage(format!("empty entry in {arg:?}")));
    }
    items.iter().map(|s| Ok(ring.parse_element(s)?)).collect()
}

fn read_structure(path: &Path) -> CliResult<LambdaStructure> {
    json::structure_from_json(&read_json(path)?)
}

fn parse_prime_map(s: &str) -> CliResult<BTreeMap<u64, Rational>> {
    s.split(',')
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected p=value, got {kv:?}")))?;
            let p = k.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("bad prime {k:?}")))?;
            let q = v.trim().parse::<Rational>()?;
            Ok((p, q))
        })
        .collect()
}

fn witt_out(g: &GlobalOpts, w: &WittVec<RingElement>) -> String {
    if g.json {
        pretty(&json!({"witt": json::strings(w.coeffs())}))
    } else {
        w.to_string()
    }
}

fn lambda_out(g: &GlobalOpts, f: &LambdaElem<RingElement>) -> String {
    if g.json {
        pretty(&json!({"lambda": json::strings(f.coeffs())}))
    } else {
        f.to_string()
    }
}

fn report_out(g: &GlobalOpts, r: &Report) -> Output {
    let text = if g.json { pretty(&json::report_to_json(r, g.seed)) } else { format!("seed: {}\n{r}", g.seed) };
    Output { text, code: if r.all_passed() { 0 } else { 1 } }
}

fn series_in(c: &Carrier, s: &str) -> CliResult<TruncSeries<RingElement>> {
    match c.parse_element(s)? {
        CarrierElem::Series(p) => Ok(p),
        CarrierElem::Scalar(_) => Err(CliError::Input(format!("{c} is not a series carrier"))),
    }
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Witt { op } => {
            let ring = ring_of(g)?;
            match op {
                WittOp::Add { a, b } | WittOp::Mul { a, b } => {
                    let a = WittVec::new(read_vector(a, "witt", &ring)?);
                    let b = WittVec::new(read_vector(b, "witt", &ring)?);
                    if a.truncation() != b.truncation() {
                        return Err(CliError::Usage("Witt vectors must have equal length".into()));
                    }
                    let r = if matches!(op, WittOp::Add { .. }) { witt_add(&a, &b)? } else { witt_mul(&a, &b)? };
                    Ok(Output::ok(witt_out(g, &r)))
                }
                WittOp::Ghost { a, n } => {
                    let a = WittVec::new(read_vector(a, "witt", &ring)?);
                    let comps = match n {
                        Some(n) => vec![ghost(*n, &a)?],
                        None => a.ghost_vector(),
                    };
                    let text = if g.json {
                        pretty(&json!({"ghost": json::strings(&comps)}))
                    } else {
                        comps.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                    };
                    Ok(Output::ok(text))
                }
            }
        }
        Command::Lambda { op } => {
            let ring = ring_of(g)?;
            match op {
                LambdaOp::Add { f, g: h } | LambdaOp::Mul { f, g: h } => {
                    let f = LambdaElem::new(read_vector(f, "lambda", &ring)?);
                    let h = LambdaElem::new(read_vector(h, "lambda", &ring)?);
                    if f.truncation() != h.truncation() {
                        return Err(CliError::Usage("Lambda elements must have equal length".into()));
                    }
                    let r = match op {
                        LambdaOp::Add { .. } => lambda_add(&f, &h)?,
                        _ => lambda_mul(&f, &h, UniversalPolyCache::global())?,
                    };
                    Ok(Output::ok(lambda_out(g, &r)))
                }
                LambdaOp::Op { i, f, bound } => {
                    let f = LambdaElem::new(read_vector(f, "lambda", &ring)?);
                    let cache = UniversalPolyCache::with_bound(*bound);
                    let r = lambda_op(*i, &f, &cache)?;
                    let text = if g.json {
                        let cs: Vec<Value> = r
                            .coeffs
                            .iter()
                            .map(|c| c.as_ref().map_or(Value::Null, |v| Value::String(v.to_string())))
                            .collect();
                        pretty(&json!({"lambda": cs}))
                    } else {
                        r.to_string()
                    };
                    Ok(Output::ok(text))
                }
            }
        }
        Command::Exp { a } => {
            let a = WittVec::new(read_vector(a, "witt", &ring_of(g)?)?);
            Ok(Output::ok(lambda_out(g, &exp_iso(&a))))
        }
        Command::Unexp { f } => {
            let f = LambdaElem::new(read_vector(f, "lambda", &ring_of(g)?)?);
            Ok(Output::ok(witt_out(g, &exp_iso_inv(&f))))
        }
        Command::Lift { structure, element, degree } => {
            let s = read_structure(structure)?;
            let r = s.carrier().parse_element(element)?;
            let lams = s.newton_lambdas(*degree, &r)?;
            let text = if g.json {
                pretty(&json!({"element": r.to_string(), "lambda": json::strings(&lams[1..])}))
            } else {
                (1..=*degree).map(|k| format!("lambda^{k}({r}) = {}", lams[k])).collect::<Vec<_>>().join("\n")
            };
            Ok(Output::ok(text))
        }
        Command::Validate { structure } => Ok(report_out(g, &read_structure(structure)?.validate())),
        Command::AxiomCheck { structure, nmax } => {
            let s = read_structure(structure)?;
            let cache = UniversalPolyCache::with_bound((nmax * nmax).max(6));
            let samples = default_samples(s.carrier(), g.seed);
            Ok(report_out(g, &axiom_check(&s, &samples, *nmax, &cache)?))
        }
        Command::CoalgebraCheck { structure, m } => {
            let s = read_structure(structure)?;
            let cache = UniversalPolyCache::with_bound((m * m).max(6));
            let samples = default_samples(s.carrier(), g.seed);
            Ok(report_out(g, &coalgebra_check(&s, &samples, *m, &cache)?))
        }
        Command::Dual { op } => match op {
            DualOp::Make { a } => {
                let base: GroundRing = g.ring.parse()?;
                let s = make_dual_structure(base, &parse_prime_map(a)?)?;
                Ok(Output::ok(pretty(&json::structure_to_json(&s))))
            }
            DualOp::Iso { s1, s2 } => {
                let iso = dual_iso_test(&read_structure(s1)?, &read_structure(s2)?)?;
                let text = if g.json {
                    pretty(&json!({"isomorphic": iso}))
                } else if iso {
                    "isomorphic".to_string()
                } else {
                    "not isomorphic".to_string()
                };
                Ok(Output::ok(text))
            }
        },
        Command::Family { op } => match op {
            FamilyOp::Make { family, a, carrier, degree, filtration } => {
                let ring: GroundRing = g.ring.parse()?;
                let c = match carrier {
                    CarrierKind::Series => Carrier::power_series(ring, g.n, *filtration)?,
                    CarrierKind::Trunc => Carrier::trunc_poly(ring, *degree)?,
                };
                let s = match family {
                    FamilyKind::Multiplicative => multiplicative_structure(c, &primes_of(g)?)?,
                    FamilyKind::Power => power_structure(c, &primes_of(g)?)?,
                    FamilyKind::Linear => {
                        let a = a.as_deref().ok_or_else(|| CliError::Usage("--a is required for the linear family".into()))?;
                        make_family_structure(c, &parse_prime_map(a)?)?
                    }
                };
                Ok(Output::ok(pretty(&json::structure_to_json(&s))))
            }
        },
        Command::Universal { op } => match op {
            UniversalOp::ToHom { structure } => {
                let h = hom_from_structure(&read_structure(structure)?, g.depth)?;
                Ok(Output::ok(pretty(&json::assignment_to_json(&h))))
            }
            UniversalOp::FromHom { assignment, filtration } => {
                let h = json::assignment_from_json(&read_json(assignment)?)?;
                let c = Carrier::power_series((**h.target()).clone(), h.truncation(), *filtration)?;
                let s = structure_from_hom(&h, &c)?;
                Ok(Output::ok(pretty(&json::structure_to_json(&s))))
            }
            UniversalOp::Relations { assignment } => {
                let h = json::assignment_from_json(&read_json(assignment)?)?;
                let mut r = Report::new(format!(
                    "relations of the universal ring, primes {:?}, N = {}, depth {}",
                    h.primes(),
                    h.truncation(),
                    h.depth()
                ));
                let bad = relation_violations(&h)?;
                let (w, v): (Vec<_>, Vec<_>) = bad.iter().partition(|s| s.starts_with('w'));
                r.push("w relations vanish", w.is_empty(), w.first().map(|s| s.to_string()).unwrap_or_default());
                r.push("V relations vanish", v.is_empty(), v.first().map(|s| s.to_string()).unwrap_or_default());
                Ok(report_out(g, &r))
            }
            UniversalOp::Roundtrip { structure } => {
                let s = read_structure(structure)?;
                let mut r = Report::new(format!("universal round trip on {}, depth {}", s.carrier(), g.depth));
                let h = hom_from_structure(&s, g.depth)?;
                let bad = relation_violations(&h)?;
                r.push("assignment kills the relations", bad.is_empty(), bad.first().cloned().unwrap_or_default());
                r.push("structure -> hom -> structure", roundtrip_check(&s, g.depth)?, "");
                r.push("hom -> structure -> hom", hom_roundtrip_check(&h, s.carrier())?, "");
                Ok(report_out(g, &r))
            }
        },
        Command::Lubin { op: LubinOp::Solve { f, g: gs, c } } => {
            let field = Arc::new(g.ring.parse::<GroundRing>()?.fraction_field()?);
            let zero = RingElement::int(&field, 0);
            let series = |s: &str| -> CliResult<TruncSeries<RingElement>> {
                let cs = parse_series_coeffs(&field, s)?;
                if cs.len() > g.n + 1 {
                    return Err(CliError::Usage(format!("{s:?} has degree above N = {}", g.n)));
                }
                Ok(TruncSeries::from_coeffs(&zero, &cs, g.n))
            };
            let prob = CommutingProblem::new(series(f)?, series(gs)?, field.parse_element(c)?)?;
            let h = lubin_solve(&prob, g.n)?;
            let text = if g.json { pretty(&json!({"h": json::strings(h.coeffs())})) } else { h.to_string() };
            Ok(Output::ok(text))
        }
        Command::Hasse { op: HasseOp::Check { s1, s2, phi, prime } } => {
            let (s1, s2) = (read_structure(s1)?, read_structure(s2)?);
            let phi = series_in(s1.carrier(), phi)?;
            let out = hasse_check(&s1, &s2, &phi, *prime)?;
            let verdict = match &out.verdict {
                HasseVerdict::HypothesisViolation(r) => format!("hypothesis violation: {r}"),
                HasseVerdict::NotLambdaMap => format!("not a lambda-map: fails at p = {prime}"),
                HasseVerdict::AllPass => "all window primes commute".to_string(),
                HasseVerdict::Counterexample(p) => format!("counterexample at p = {p}"),
            };
            let mut o = report_out(g, &out.report);
            o.text = if g.json {
                let mut v = json::report_to_json(&out.report, g.seed);
                v["verdict"] = Value::String(verdict);
                pretty(&v)
            } else {
                format!("{}verdict: {verdict}", o.text)
            };
            Ok(o)
        }
        Command::Selftest { suite } => {
            let ks: Vec<usize> = match suite {
                Some(k) if (1..=SUITES.len()).contains(k) => vec![*k],
                Some(k) => return Err(CliError::Usage(format!("no suite {k}; choose 1-{}", SUITES.len()))),
                None => (1..=SUITES.len()).collect(),
            };
            let reports: Vec<Report> = ks.iter().map(|&k| run_suite(k, g.seed)).collect();
            let all = reports.iter().all(Report::all_passed);
            let text = if g.json {
                let rs: Vec<Value> = reports.iter().map(|r| json::report_to_json(r, g.seed)).collect();
                pretty(&json!({"seed": g.seed, "passed": all, "suites": rs}))
            } else {
                let mut t = format!("seed: {}\n", g.seed);
                for r in &reports {
                    let status = if r.all_passed() { "PASS" } else { "FAIL" };
                    t.push_str(&format!("{status} {} ({} checks)\n", r.title, r.checks.len()));
                    for c in r.failures() {
                        t.push_str(&format!("  FAIL {}: {}\n", c.name, c.detail));
                    }
                }
                t
            };
            Ok(Output { text, code: if all { 0 } else { 1 } })
        }
    }
}
