//! Command-line front end. Every output embeds `schema_version` and the full
//! run configuration, and equal configurations give byte-identical output.
//!
//! Exit status: 0 success, 2 precondition violated, 3 numerics could not
//! certify the result, 64 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analytic::{self, default_precision, ProximityKind, Verdict};
use crate::error::{Error, Result};
use crate::exponents::{self, WVariant};
use crate::factor;
use crate::families::{self, Counterexample, FamilyIndex, FamilyKind, FamilySpec};
use crate::poly::IntPolynomial;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser, Serialize)]
#[command(name = "polycomb", version, about = "Irreducibility censuses and Diophantine exponent experiments")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Output format; census defaults to csv, everything else to json.
    #[arg(long = "out", global = true)]
    pub format: Option<Format>,
    /// Working precision in bits for root certification.
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Reducibility census of an S, R or M family.
    Census(CensusArgs),
    /// Smallest shift making a cubic irreducible.
    Szegedy(PolyArg),
    /// Factor a polynomial over the integers.
    Factor(PolyArg),
    /// Certified complex root disks.
    Roots(PolyArg),
    /// Minimum root gap against the kappa or theta threshold.
    Gap(GapArgs),
    /// Desk-scale exponent estimate at a witness.
    Exponent(ExponentArgs),
    /// Closed-form bounds and the comparison table.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct PolyArg {
    /// Polynomial as a JSON array of decimal strings, lowest degree first.
    #[arg(long = "P")]
    pub p: String,
}

#[derive(Debug, Args, Serialize)]
pub struct CensusArgs {
    #[arg(long)]
    pub kind: FamilyKind,
    #[arg(long = "P")]
    pub p: Option<String>,
    #[arg(long = "Q")]
    pub q: Option<String>,
    /// Use a named family instead of --P/--Q.
    #[arg(long)]
    pub counterexample: Option<Counterexample>,
    /// Draw a random hypothesis-satisfying pair from --seed.
    #[arg(long)]
    pub random: bool,
    /// Degree for --random and M_powers.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "H")]
    pub h: u64,
    #[arg(long, default_value_t = 0.5)]
    pub delta: f64,
    /// Skip the P(0) = 0, deg P = n, deg Q < n checks for S and R.
    #[arg(long)]
    pub no_hypotheses: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GapKind {
    Kappa,
    Theta,
}

#[derive(Debug, Args, Serialize)]
pub struct GapArgs {
    #[arg(long = "P")]
    pub p: String,
    #[arg(long = "Q")]
    pub q: String,
    /// Degree `n` of the threshold; defaults to the larger degree.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = GapKind::Theta)]
    pub kind: GapKind,
    #[arg(long, default_value_t = families::DEFAULT_PROXIMITY_EPS)]
    pub eps: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ExponentVariant {
    Any,
    ExactIrreducible,
    Monic,
    MonicUnit,
    Lambda,
}

#[derive(Debug, Args, Serialize)]
pub struct ExponentArgs {
    /// `p/q`, a decimal, `x+-r`, `liouville:b,k` or `cf:[a0,a1,...]`.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long)]
    pub n: u32,
    #[arg(long = "X")]
    pub x: u64,
    #[arg(long, value_enum, default_value_t = ExponentVariant::Any)]
    pub variant: ExponentVariant,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    #[arg(long, conflicts_with = "formula")]
    pub table: bool,
    /// One of wirsing, uniform, ds, german, jm, pr, equilibrium.
    #[arg(long, requires = "args")]
    pub formula: Option<String>,
    /// Comma-separated arguments of the formula.
    #[arg(long, allow_hyphen_values = true)]
    pub args: Option<String>,
}

/// Everything that determines an output file.
#[derive(Debug, Serialize)]
pub struct RunConfig<'a> {
    pub subcommand: &'static str,
    pub seed: u64,
    pub output: Option<&'a PathBuf>,
    pub format: Format,
    pub precision: u32,
    pub flags: &'a Command,
}

impl Cli {
    pub fn run_config(&self) -> RunConfig<'_> {
        let subcommand = match self.command {
            Command::Census(_) => "census",
            Command::Szegedy(_) => "szegedy",
            Command::Factor(_) => "factor",
            Command::Roots(_) => "roots",
            Command::Gap(_) => "gap",
            Command::Exponent(_) => "exponent",
            Command::Bounds(_) => "bounds",
        };
        let default = if subcommand == "census" { Format::Csv } else { Format::Json };
        RunConfig {
            subcommand,
            seed: self.seed,
            output: self.output.as_ref(),
            format: self.format.unwrap_or(default),
            precision: self.precision.unwrap_or_else(default_precision),
            flags: &self.command,
        }
    }
}

/// Rendered output with its exit status.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

fn poly(s: &str) -> Result<IntPolynomial> {
    IntPolynomial::from_json(s).map_err(|e| Error::Parse(format!("polynomial {s:?}: {e}")))
}

fn envelope(cfg: &RunConfig<'_>, key: &str, body: Value) -> Result<String> {
    let mut v = json!({ "schema_version": SCHEMA_VERSION, "run_config": cfg });
    v[key] = body;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn status_of(v: Verdict) -> i32 {
    if v == Verdict::Indeterminate {
        EXIT_INDETERMINATE
    } else {
        EXIT_OK
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let cfg = cli.run_config();
    if cfg.format == Format::Csv && !matches!(cli.command, Command::Census(_) | Command::Bounds(_)) {
        return Err(Error::Parse(format!("{} has no csv output", cfg.subcommand)));
    }
    match &cli.command {
        Command::Census(a) => census(&cfg, a),
        Command::Szegedy(a) => {
            let r = families::szegedy_shift(&poly(&a.p)?)?;
            ok(envelope(&cfg, "result", serde_json::to_value(r)?)?)
        }
        Command::Factor(a) => {
            let f = factor::factor(&poly(&a.p)?)?;
            ok(envelope(&cfg, "result", serde_json::to_value(f)?)?)
        }
        Command::Roots(a) => {
            let r = analytic::roots(&poly(&a.p)?, cfg.precision)?;
            let status = if r.degraded { EXIT_INDETERMINATE } else { EXIT_OK };
            Ok(Outcome { text: envelope(&cfg, "result", serde_json::to_value(r)?)?, status })
        }
        Command::Gap(a) => {
            let (p, q) = (poly(&a.p)?, poly(&a.q)?);
            let n = a.n.unwrap_or(p.deg().max(q.deg()));
            let kind = match a.kind {
                GapKind::Kappa => ProximityKind::Kappa,
                GapKind::Theta => ProximityKind::Theta,
            };
            let r = analytic::proximity_check(&p, &q, n, kind, a.eps, cfg.precision)?;
            let status = status_of(r.verdict);
            Ok(Outcome { text: envelope(&cfg, "result", serde_json::to_value(r)?)?, status })
        }
        Command::Exponent(a) => {
            let xi = exponents::parse_witness(&a.xi)?;
            let est = match a.variant {
                ExponentVariant::Lambda => exponents::estimate_lambda(&xi, a.n, a.x)?,
                v => {
                    let variant = match v {
                        ExponentVariant::Any => WVariant::Any,
                        ExponentVariant::ExactIrreducible => WVariant::ExactIrreducible,
                        ExponentVariant::Monic => WVariant::Monic,
                        _ => WVariant::MonicUnit,
                    };
                    exponents::estimate_w(&xi, a.n, a.x, variant)?
                }
            };
            let status = if est.indeterminate { EXIT_INDETERMINATE } else { EXIT_OK };
            Ok(Outcome { text: envelope(&cfg, "result", serde_json::to_value(est)?)?, status })
        }
        Command::Bounds(a) => bounds(&cfg, a),
    }
}

fn ok(text: String) -> Result<Outcome> {
    Ok(Outcome { text, status: EXIT_OK })
}

fn census_spec(cfg: &RunConfig<'_>, a: &CensusArgs) -> Result<FamilySpec> {
    if let Some(which) = a.counterexample {
        let fam = families::counterexample_family(which, a.h, a.delta, a.n.unwrap_or(2))?;
        if fam.spec.kind != a.kind {
            return Err(Error::Hypothesis(format!("{which:?} is a {} family, not {}", fam.spec.kind, a.kind)));
        }
        return Ok(fam.spec);
    }
    if a.random {
        let n = a.n.ok_or_else(|| Error::Parse("--random needs --n".into()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let (p, q) = families::random_pair(&mut rng, n, a.h);
        let mut spec = FamilySpec::new(a.kind, p, q, a.h, a.delta)?;
        spec.seed = Some(cfg.seed);
        return Ok(spec);
    }
    let (Some(p), Some(q)) = (&a.p, &a.q) else {
        return Err(Error::Parse("census needs --P and --Q, --counterexample, or --random".into()));
    };
    let (p, q) = (poly(p)?, poly(q)?);
    let mut spec = FamilySpec { hypotheses: false, ..FamilySpec::new(FamilyKind::M, p, q, a.h, a.delta)? };
    spec.kind = a.kind;
    if let Some(n) = a.n {
        spec.n = n;
    }
    spec.hypotheses = a.kind != FamilyKind::M && !a.no_hypotheses;
    spec.validate()?;
    Ok(spec)
}

fn census(cfg: &RunConfig<'_>, a: &CensusArgs) -> Result<Outcome> {
    let spec = census_spec(cfg, a)?;
    let report = families::census(&spec)?;
    let status = report.proximity.as_ref().map_or(EXIT_OK, |p| status_of(p.verdict));
    if cfg.format == Format::Json {
        let text = envelope(cfg, "report", serde_json::to_value(&report)?)?;
        return Ok(Outcome { text, status });
    }
    let mut out = String::new();
    let opt = |x: Option<f64>| x.map_or_else(|| "none".to_string(), |v| format!("{v}"));
    writeln!(out, "# schema_version={SCHEMA_VERSION}").ok();
    writeln!(out, "# run_config={}", serde_json::to_string(cfg)?).ok();
    writeln!(out, "# P={} Q={} n={}", spec.p.to_json(), spec.q.to_json(), spec.n).ok();
    writeln!(out, "# total_indices={} reducible_count={}", report.total_indices, report.reducible_count).ok();
    writeln!(
        out,
        "# gamma={} gamma_prime={} ratio={} ratio_basis={}",
        opt(report.gamma),
        opt(report.gamma_prime),
        opt(report.ratio),
        serde_json::to_string(&report.ratio_basis)?.trim_matches('"')
    )
    .ok();
    if let Some(p) = &report.proximity {
        writeln!(out, "# proximity kind={:?} threshold={:e} verdict={}", p.kind, p.threshold, p.verdict).ok();
    }
    for v in &report.violations {
        writeln!(out, "# violation: {v}").ok();
    }
    let pair = spec.kind == FamilyKind::M;
    out.push_str(if pair { "l1,l2" } else { "index" });
    out.push_str(",degree,reducible,factor_degrees\n");
    for r in &report.rows {
        let ix = match r.index {
            FamilyIndex::Single(l) => l.to_string(),
            FamilyIndex::Pair(a, b) => format!("{a},{b}"),
        };
        let degs: Vec<String> = r.factor_degrees.iter().map(|d| d.to_string()).collect();
        writeln!(out, "{ix},{},{},{}", r.degree, u8::from(r.reducible), degs.join(";")).ok();
    }
    Ok(Outcome { text: out, status })
}

fn bounds(cfg: &RunConfig<'_>, a: &BoundsArgs) -> Result<Outcome> {
    if a.table || a.formula.is_none() {
        let rows = exponents::comparison_table();
        if cfg.format == Format::Csv {
            let mut out = String::new();
            writeln!(out, "# schema_version={SCHEMA_VERSION}").ok();
            writeln!(out, "# run_config={}", serde_json::to_string(cfg)?).ok();
            out.push_str("n,exact_degree,exact_degree_stored,uniform_transfer,not_exact_degree\n");
            for r in &rows {
                writeln!(
                    out,
                    "{},{:.4},{},{},{}",
                    r.n, r.exact_degree, r.exact_degree_stored, r.uniform_transfer, r.not_exact_degree
                )
                .ok();
            }
            return ok(out);
        }
        return ok(envelope(cfg, "table", serde_json::to_value(rows)?)?);
    }
    let name = a.formula.as_deref().unwrap_or_default();
    let args: Vec<f64> = a
        .args
        .as_deref()
        .unwrap_or_default()
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad formula argument {s:?}"))))
        .collect::<Result<_>>()?;
    let need = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::Parse(format!("{name} takes {k} argument(s), got {}", args.len())))
        }
    };
    let degree = |x: f64| -> Result<u32> {
        if x >= 0.0 && x.fract() == 0.0 && x <= f64::from(u32::MAX) {
            Ok(x as u32)
        } else {
            Err(Error::Parse(format!("degree {x} is not a nonnegative integer")))
        }
    };
    let value = match name {
        "wirsing" => {
            need(1)?;
            json!(exponents::wirsing_exact_bound(degree(args[0])?)?)
        }
        "uniform" => {
            need(2)?;
            json!(exponents::uniform_exact_bound(args[0], degree(args[1])?)?)
        }
        "ds" => {
            need(1)?;
            json!(exponents::ds_bound(args[0])?)
        }
        "german" => {
            need(2)?;
            json!(exponents::german_transfer(args[0], degree(args[1])?)?)
        }
        "jm" => {
            need(1)?;
            json!(exponents::jm_bound(args[0])?)
        }
        "pr" => {
            need(1)?;
            json!(exponents::pr_asymptotic_bound(degree(args[0])?)?)
        }
        "equilibrium" => {
            need(1)?;
            let (w, b) = exponents::equilibrium(degree(args[0])?)?;
            json!({ "w_hat": w, "bound": b })
        }
        _ => return Err(Error::Parse(format!("unknown formula {name:?}"))),
    };
    ok(envelope(cfg, "result", json!({ "formula": name, "args": args, "value": value }))?)
}

/// Exit status for a library error.
pub fn error_status(e: &Error) -> i32 {
    match e {
        Error::Indeterminate(_) => EXIT_INDETERMINATE,
        Error::Parse(_) | Error::Json(_) => EXIT_USAGE,
        Error::Io(_) => 1,
        _ => EXIT_PRECONDITION,
    }
}

/// Parses `args` (program name first), runs, writes the output, and returns
/// the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return status;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(out.text.as_bytes())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 1;
            }
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            error_status(&e)
        }
    }
}
