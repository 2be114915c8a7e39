//! Command-line parsing and dispatch.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lodeg_core::budget::{Clock, Limits};
use lodeg_core::field::{PrimeField, Rationals, DEFAULT_PRIMES};
use lodeg_core::genericity::{Agreed, AgreementPolicy, Seed};
use lodeg_core::invariants::{
    alternating_sum, bidegrees_from_chern_mather, chern_mather_from_bidegrees, Analyzer, DegreeVector,
    VerificationReport,
};
use lodeg_core::parse::parse_polynomial;
use lodeg_core::poly::{PolyRing, Polynomial};
use lodeg_core::variety::Method;
use lodeg_core::Error;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::input::{read_variety, InputError, LoadedVariety};
use crate::report::RunReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INSTABILITY: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "lodeg", version, about = "Linear-optimization degrees of affine varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Args, Clone)]
pub struct Options {
    /// Prime for modular trials (repeatable; default: two primes near 2^31)
    #[arg(long = "prime", global = true)]
    pub primes: Vec<u32>,
    /// Base seed
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Seeds per trial
    #[arg(long, global = true, default_value_t = 2)]
    pub trials: usize,
    /// Fresh batches of seeds tried after a disagreement
    #[arg(long, global = true, default_value_t = 3)]
    pub retries: usize,
    /// Wall-clock budget per Groebner basis computation, in seconds
    #[arg(long, global = true, default_value_t = 120)]
    pub budget_secs: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Polynomial system used for conormal counts
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Record per-stage wall times (makes output run-dependent)
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Lagrange,
    Minors,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Auto => Method::Auto,
            MethodArg::Lagrange => Method::Lagrange,
            MethodArg::Minors => Method::Minors,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Lagrange => "lagrange",
            MethodArg::Minors => "minors",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// LO bidegrees b_0..b_d
    Bidegrees { file: PathBuf },
    /// LO degree (number of critical points of a generic linear function)
    Lodeg {
        file: PathBuf,
        /// Explicit covector, e.g. "10,5,17"
        #[arg(long)]
        covector: Option<String>,
    },
    /// Sectional LO degrees s_0..s_d
    Sectional { file: PathBuf },
    /// Polar degrees of the projective closure
    Polar { file: PathBuf },
    /// Chern-Mather coefficients from the bidegrees
    #[command(name = "chern_mather", alias = "chern-mather")]
    ChernMather { file: PathBuf },
    /// Local Euler obstruction at the vertex of a cone
    #[command(name = "euler_obstruction", alias = "euler-obstruction")]
    EulerObstruction { file: PathBuf },
    /// Whether the dual of the closure contains the hyperplane at infinity
    #[command(name = "dual_infinity", alias = "dual-infinity")]
    DualInfinity { file: PathBuf },
    /// Critical points on a slice versus conormal points over it
    Correspondence {
        file: PathBuf,
        /// Codimension of the slice (defaults to the number of --slice forms)
        #[arg(long = "i")]
        i: Option<usize>,
        #[arg(long)]
        covector: Option<String>,
        /// Affine-linear equation of the slice (repeatable)
        #[arg(long = "slice")]
        slices: Vec<String>,
    },
    /// Check every identity on the input
    Verify { file: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bidegrees { .. } => "bidegrees",
            Command::Lodeg { .. } => "lodeg",
            Command::Sectional { .. } => "sectional",
            Command::Polar { .. } => "polar",
            Command::ChernMather { .. } => "chern_mather",
            Command::EulerObstruction { .. } => "euler_obstruction",
            Command::DualInfinity { .. } => "dual_infinity",
            Command::Correspondence { .. } => "correspondence",
            Command::Verify { .. } => "verify",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Command::Bidegrees { file }
            | Command::Lodeg { file, .. }
            | Command::Sectional { file }
            | Command::Polar { file }
            | Command::ChernMather { file }
            | Command::EulerObstruction { file }
            | Command::DualInfinity { file }
            | Command::Correspondence { file, .. }
            | Command::Verify { file } => file,
        }
    }
}

/// Monotonic wall clock for budgets.
pub struct StdClock {
    origin: Instant,
}

impl StdClock {
    pub fn new() -> Self {
        StdClock { origin: Instant::now() }
    }
}

impl Default for StdClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for StdClock {
    fn now_ms(&self) -> u64 {
        self.origin.elapsed().as_millis() as u64
    }
}

/// What the process should print and return.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Instability { .. } | Error::DegenerateSlice { .. } | Error::CharacteristicHazard { .. } => {
            EXIT_INSTABILITY
        }
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Parse { .. }
        | Error::InvalidSpec(_)
        | Error::InvalidArgument(_)
        | Error::DenominatorVanishes { .. }
        | Error::NotACone { .. }
        | Error::NotZeroDimensional { .. }
        | Error::DimensionMismatch { .. } => EXIT_INPUT,
        Error::Overflow(_) => EXIT_FAILURE,
    }
}

fn fail(code: i32, msg: impl std::fmt::Display) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
        code,
    }
}

fn input_error(e: InputError) -> Outcome {
    fail(EXIT_INPUT, e)
}

fn parse_constants(ring: &PolyRing<Rationals>, text: &str) -> Result<Vec<BigRational>, Error> {
    text.split(',')
        .map(|part| {
            let p = parse_polynomial(ring, part.trim())?;
            if !p.is_constant() && !p.is_zero() {
                return Err(Error::InvalidArgument(format!("covector entry {part:?} is not a number")));
            }
            Ok(p.terms().first().map_or_else(|| BigRational::from_integer(0.into()), |t| t.0.clone()))
        })
        .collect()
}

fn vector_json(v: &DegreeVector) -> Value {
    json!(v.values)
}

fn trials_json<T>(a: &Agreed<T>) -> Value {
    json!({
        "seeds": a.seeds.iter().map(|s| s.0).collect::<Vec<_>>(),
        "primes": a.primes,
        "attempts": a.attempts,
    })
}

fn verification_json(r: &VerificationReport) -> Value {
    let notes: Map<String, Value> = r.notes.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    json!({
        "identity": r.identity,
        "passed": r.passed,
        "left": r.left,
        "right": r.right,
        "notes": notes,
    })
}

struct Runner<'a> {
    analyzer: Analyzer<'a>,
    timings: Map<String, Value>,
    record: bool,
}

impl Runner<'_> {
    fn stage<T>(&mut self, name: &str, f: impl FnOnce(&Analyzer<'_>) -> Result<T, Error>) -> Result<T, Error> {
        let t = Instant::now();
        let out = f(&self.analyzer);
        if self.record {
            self.timings.insert(name.into(), json!(t.elapsed().as_millis() as u64));
        }
        out
    }
}

/// Parse arguments and run; never exits the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let clock = StdClock::new();
    execute(&cli, &clock)
}

pub fn execute(cli: &Cli, clock: &dyn Clock) -> Outcome {
    let opts = &cli.opts;
    let primes = if opts.primes.is_empty() { DEFAULT_PRIMES.to_vec() } else { opts.primes.clone() };
    for &p in &primes {
        if let Err(e) = PrimeField::new(p) {
            return fail(EXIT_INPUT, e);
        }
    }
    if opts.trials == 0 {
        return fail(EXIT_INPUT, "--trials must be at least 1");
    }
    let path = cli.command.file();
    let loaded: LoadedVariety = match read_variety(path) {
        Ok(v) => v,
        Err(e) => return input_error(e),
    };
    let policy = AgreementPolicy {
        seeds_per_trial: opts.trials,
        primes: primes.clone(),
        max_retries: opts.retries,
    };
    let limits = Limits {
        clock,
        per_call_ms: Some(opts.budget_secs.saturating_mul(1000)),
    };
    let analyzer = Analyzer::new(loaded.spec.clone(), Seed(opts.seed), limits)
        .with_policy(policy)
        .with_method(opts.method.method());
    let mut warnings = Vec::new();
    if !loaded.file.assumed_irreducible {
        warnings.push("input is not assumed irreducible; counts are summed over components".to_string());
    }
    let mut runner = Runner {
        analyzer,
        timings: Map::new(),
        record: opts.timings,
    };
    let results = match dispatch(&cli.command, &mut runner, &loaded, &mut warnings) {
        Ok(r) => r,
        Err(e) => return fail(exit_code(&e), e),
    };
    let code = success_code(&cli.command, &results);
    let report = RunReport {
        command: cli.command.name().into(),
        input: json!({
            "path": path.display().to_string(),
            "sha256": loaded.sha256,
            "variables": loaded.file.variables,
            "polynomials": loaded.file.polynomials,
        }),
        config: json!({
            "primes": primes,
            "seed": opts.seed,
            "trials": opts.trials,
            "retries": opts.retries,
            "budget_secs": opts.budget_secs,
            "method": opts.method.name(),
        }),
        results,
        warnings,
        timings: runner.timings,
    };
    let stdout = match opts.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

/// Exit code of a run that produced `results`.
fn success_code(command: &Command, results: &Value) -> i32 {
    let failed = matches!(command, Command::Verify { .. })
        && results.get("passed").and_then(Value::as_bool) == Some(false);
    if failed {
        EXIT_VERIFY
    } else {
        EXIT_OK
    }
}

fn dispatch(
    command: &Command,
    r: &mut Runner<'_>,
    loaded: &LoadedVariety,
    warnings: &mut Vec<String>,
) -> Result<Value, Error> {
    let ring = loaded.spec.ring();
    let d = r.stage("dimension", |a| a.dimension())?.value;
    let n = loaded.spec.n();
    let mut out = Map::new();
    out.insert("n".into(), json!(n));
    out.insert("d".into(), json!(d));
    match command {
        Command::Bidegrees { .. } => {
            let b = r.stage("bidegrees", |a| a.bidegrees())?;
            out.insert("bidegrees".into(), vector_json(&b.value));
            out.insert("trials".into(), trials_json(&b));
        }
        Command::Lodeg { covector, .. } => {
            let u = covector.as_deref().map(|c| parse_constants(ring, c)).transpose()?;
            let v = r.stage("lo_degree", |a| a.lo_degree(u.as_deref()))?;
            out.insert("lo_degree".into(), json!(v.value));
            if let Some(c) = covector {
                out.insert("covector".into(), json!(c));
            }
            out.insert("trials".into(), trials_json(&v));
        }
        Command::Sectional { .. } => {
            let s = r.stage("sectional", |a| a.sectional_lo_degrees())?;
            out.insert("sectional".into(), vector_json(&s.value));
            out.insert("trials".into(), trials_json(&s));
        }
        Command::Polar { .. } => {
            let p = r.stage("polar", |a| a.polar_degrees())?;
            out.insert("polar".into(), vector_json(&p.value));
            out.insert("trials".into(), trials_json(&p));
        }
        Command::ChernMather { .. } => {
            let (b, a) = r.stage("chern_mather", |an| an.chern_mather())?;
            out.insert("bidegrees".into(), vector_json(&b.value));
            out.insert("chern_mather".into(), vector_json(&a));
            out.insert("trials".into(), trials_json(&b));
        }
        Command::EulerObstruction { .. } => {
            let (b, eu) = r.stage("euler_obstruction", |a| a.euler_obstruction_at_cone_point())?;
            out.insert("bidegrees".into(), vector_json(&b.value));
            out.insert("euler_obstruction".into(), json!(eu));
            out.insert("trials".into(), trials_json(&b));
        }
        Command::DualInfinity { .. } => {
            let v = r.stage("dual_infinity", |a| a.dual_contains_hyperplane_at_infinity())?;
            out.insert("dual_contains_hyperplane_at_infinity".into(), json!(v.value));
            out.insert("trials".into(), trials_json(&v));
        }
        Command::Correspondence { i, covector, slices, .. } => {
            let i = match (i, slices.len()) {
                (Some(i), _) => *i,
                (None, k) if k > 0 => k,
                _ => return Err(Error::InvalidArgument("give --i or at least one --slice".into())),
            };
            let u = covector.as_deref().map(|c| parse_constants(ring, c)).transpose()?;
            let forms: Option<Vec<Polynomial<BigRational>>> = if slices.is_empty() {
                None
            } else {
                Some(slices.iter().map(|s| parse_polynomial(ring, s)).collect::<Result<_, _>>()?)
            };
            let rep = r.stage("correspondence", |a| a.critical_correspondence(i, u.as_deref(), forms.as_deref()))?;
            out.insert("i".into(), json!(rep.i));
            out.insert("count_critical".into(), json!(rep.count_critical));
            out.insert("count_conormal".into(), json!(rep.count_conormal));
            out.insert("bidegree".into(), json!(rep.expected));
            out.insert("generic".into(), json!(rep.generic));
            out.insert("covector".into(), covector.as_ref().map_or(Value::Null, |c| json!(c)));
            out.insert("slice".into(), json!(slices));
            if rep.count_critical != rep.count_conormal {
                warnings.push(format!(
                    "critical count {} differs from conormal count {}",
                    rep.count_critical, rep.count_conormal
                ));
            }
        }
        Command::Verify { .. } => {
            let bs = r.stage("theorem_bs", |a| a.verify_theorem_bs())?;
            let polar = r.stage("polar_relation", |a| a.verify_polar_relation())?;
            let b = DegreeVector::new(lodeg_core::invariants::DegreeKind::Bidegree, bs.right.clone(), n)?;
            let a = chern_mather_from_bidegrees(&b)?;
            let back = bidegrees_from_chern_mather(&a)?;
            let roundtrip = VerificationReport {
                identity: "transform roundtrip".into(),
                passed: back.values == b.values,
                left: back.values.clone(),
                right: b.values.clone(),
                notes: vec![("chern_mather".into(), format!("{:?}", a.values))],
                seeds: bs.seeds.clone(),
                primes: bs.primes.clone(),
            };
            let alt = alternating_sum(&b)?;
            let euler = VerificationReport {
                identity: "alternating sum = a_0".into(),
                passed: alt == a.values[0],
                left: vec![alt],
                right: vec![a.values[0]],
                notes: vec![("cone".into(), loaded.spec.is_homogeneous().to_string())],
                seeds: bs.seeds.clone(),
                primes: bs.primes.clone(),
            };
            let checks = [bs, polar, roundtrip, euler];
            let passed = checks.iter().all(|c| c.passed);
            out.insert("checks".into(), Value::Array(checks.iter().map(verification_json).collect()));
            out.insert("passed".into(), json!(passed));
            out.insert(
                "trials".into(),
                json!({
                    "seeds": checks[0].seeds.iter().map(|s| s.0).collect::<Vec<_>>(),
                    "primes": checks[0].primes,
                }),
            );
        }
    }
    Ok(Value::Object(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    #[test]
    fn failed_verification_maps_to_its_own_code() {
        let verify = Command::Verify { file: PathBuf::from("x.json") };
        assert_eq!(success_code(&verify, &json!({"passed": false})), EXIT_VERIFY);
        assert_eq!(success_code(&verify, &json!({"passed": true})), EXIT_OK);
        let other = Command::Bidegrees { file: PathBuf::from("x.json") };
        assert_eq!(success_code(&other, &json!({"passed": false})), EXIT_OK);
    }
}
