//! The `genexp` command line: argument parsing, dispatch, output rendering
//! and the result cache.

pub mod cache;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::branching::{branching_sp, compare_rules, sundaram_tableaux, SUNDARAM_ROW_BOUND};
use crate::error::Error;
use crate::extremal::{extremal_report, max_power, min_power, sigma_min};
use crate::genexp::{
    genexp_a, genexp_a_multi, genexp_c, genexp_c_multi, genexp_c_sundaram, king_witnesses, stable_b, stable_c,
    stable_c_multi, stable_d, zero_weight_a,
};
use crate::oracle::{oracle_a, oracle_c};
use crate::partition::Partition;

use cache::Cache;
use verify::{run_suite, Suite};

/// The largest supported degree cutoff for the stable series.
pub const MAX_CUTOFF: u32 = 24;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 2;
    pub const MALFORMED_INPUT: u8 = 3;
    pub const INCOMPATIBLE: u8 = 4;
    pub const CUTOFF: u8 = 5;
    pub const VERIFY_FAILED: u8 = 6;
    pub const INTERNAL: u8 = 7;
    pub const IO: u8 = 8;
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Cutoff(String),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Cutoff(_) => exit::CUTOFF,
            CliError::Io(_) => exit::IO,
            CliError::Lib(e) => match e {
                Error::MalformedPartition(_) | Error::MalformedTableau(_) | Error::MalformedPolynomial(_) => {
                    exit::MALFORMED_INPUT
                }
                Error::TooManyParts { .. }
                | Error::IndexOutOfRange { .. }
                | Error::AlphabetSize(_)
                | Error::OddRank(_)
                | Error::Precondition(_)
                | Error::NonDominant(_) => exit::INCOMPATIBLE,
                Error::CutoffExceeded { .. } => exit::CUTOFF,
                Error::RuleMismatch { .. } | Error::NegativeCoefficient { .. } => exit::INTERNAL,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Cutoff(s) | CliError::Io(s) | CliError::Usage(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "genexp", version, about = "Generalized exponents and branching coefficients via crystals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Directory of cached results.
    #[arg(long, global = true, env = "GENEXP_CACHE")]
    pub cache_dir: Option<PathBuf>,

    /// Ignore the cache for this invocation.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct ShapeArgs {
    /// Partition, comma separated (e.g. `2,1,1`; empty string for the empty partition).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Rank `n`.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Zero-weight t-analogues from crystal statistics.
    Genexp {
        #[arg(value_enum)]
        kind: GenexpKind,
        #[command(flatten)]
        shape: ShapeArgs,
        /// Degree cutoff for the stable series.
        #[arg(long)]
        cutoff: Option<u32>,
        /// Multivariable version.
        #[arg(long)]
        multi: bool,
        /// Include the tableaux behind each term.
        #[arg(long)]
        witnesses: bool,
        /// Type C route.
        #[arg(long, value_enum, default_value_t = Route::King)]
        route: Route,
    },
    /// The Weyl-group alternating sum.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Branching coefficient `c_nu^lambda(sp_2n)`.
    Branch {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        witnesses: bool,
    },
    /// Side-by-side comparison of the branching rules.
    Compare {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Smallest and largest powers of `t` in type C.
    Extremal {
        #[arg(value_enum)]
        kind: ExtremalKind,
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also report the coefficients of the extremal powers.
        #[arg(long)]
        witnesses: bool,
    },
    /// Run an invariant sweep.
    Verify {
        /// One of the suite names, or `all`.
        suite: String,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenexpKind {
    A,
    C,
    StableB,
    StableC,
    StableD,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleKind {
    A,
    C,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremalKind {
    Min,
    Max,
    Sigma,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    King,
    Sundaram,
}

/// A fully resolved query; its serialization keys the cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    pub multi: bool,
    pub witnesses: bool,
}

impl JobSpec {
    fn new(command: &str, variant: Option<&str>) -> Self {
        JobSpec {
            command: command.to_string(),
            variant: variant.map(str::to_string),
            lambda: None,
            nu: None,
            rank: None,
            cutoff: None,
            multi: false,
            witnesses: false,
        }
    }
}

fn parse_partition(s: &str) -> CliResult<Partition> {
    Ok(s.parse::<Partition>()?)
}

fn kebab<T: Serialize>(v: T) -> String {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

/// Resolves parsed arguments into a job.
pub fn job_from_command(cmd: &Command) -> CliResult<JobSpec> {
    let need_rank = |s: &ShapeArgs| s.rank.ok_or_else(|| CliError::Usage("--rank is required".into()));
    let spec = match cmd {
        Command::Genexp {
            kind,
            shape,
            cutoff,
            multi,
            witnesses,
            route,
        } => {
            let stable = matches!(kind, GenexpKind::StableB | GenexpKind::StableC | GenexpKind::StableD);
            let mut variant = kebab(kind);
            if *kind == GenexpKind::C && *route == Route::Sundaram {
                variant.push_str("-sundaram");
            }
            let mut spec = JobSpec::new("genexp", Some(&variant));
            spec.lambda = Some(parse_partition(&shape.lambda)?);
            spec.multi = *multi;
            spec.witnesses = *witnesses;
            if stable {
                let c = cutoff.ok_or_else(|| CliError::Usage("--cutoff is required for the stable series".into()))?;
                if c > MAX_CUTOFF {
                    return Err(CliError::Cutoff(format!("cutoff {c} exceeds the supported maximum {MAX_CUTOFF}")));
                }
                if shape.rank.is_some() {
                    return Err(CliError::Usage("the stable series take --cutoff, not --rank".into()));
                }
                spec.cutoff = Some(c);
            } else {
                if cutoff.is_some() {
                    return Err(CliError::Cutoff("--cutoff only applies to the stable series".into()));
                }
                spec.rank = Some(need_rank(shape)?);
            }
            if *witnesses && (stable || *multi) {
                return Err(CliError::Usage("--witnesses is available for `a` and `c` only".into()));
            }
            if *multi && variant == "c-sundaram" {
                return Err(CliError::Usage("--multi is not available on the Sundaram route".into()));
            }
            spec
        }
        Command::Oracle { kind, shape } => {
            let mut spec = JobSpec::new("oracle", Some(&kebab(kind)));
            spec.lambda = Some(parse_partition(&shape.lambda)?);
            spec.rank = Some(need_rank(shape)?);
            spec
        }
        Command::Branch { shape, nu, witnesses } => {
            let mut spec = JobSpec::new("branch", None);
            spec.lambda = Some(parse_partition(&shape.lambda)?);
            spec.nu = Some(parse_partition(nu)?);
            spec.rank = Some(need_rank(shape)?);
            spec.witnesses = *witnesses;
            spec
        }
        Command::Compare { shape, nu } => {
            let mut spec = JobSpec::new("compare", None);
            spec.lambda = Some(parse_partition(&shape.lambda)?);
            spec.nu = Some(parse_partition(nu)?);
            spec.rank = Some(need_rank(shape)?);
            spec
        }
        Command::Extremal { kind, shape, witnesses } => {
            let mut spec = JobSpec::new("extremal", Some(&kebab(kind)));
            spec.lambda = Some(parse_partition(&shape.lambda)?);
            spec.rank = Some(need_rank(shape)?);
            spec.witnesses = *witnesses;
            spec
        }
        Command::Verify { suite } => {
            if suite != "all" {
                suite.parse::<Suite>().map_err(|e| CliError::Usage(e.to_string()))?;
            }
            JobSpec::new("verify", Some(suite))
        }
    };
    Ok(spec)
}

/// Conventions stamped into every output document.
pub fn conventions() -> Value {
    json!({
        "reading": "japanese-column",
        "sundaram-row-bound": SUNDARAM_ROW_BOUND,
        "barred-alphabet": "k -> 2k-1, k' -> 2k",
    })
}

fn provenance() -> Value {
    json!({
        "tool": "genexp",
        "version": env!("CARGO_PKG_VERSION"),
    })
}

/// Computes the output document for a job.
pub fn run(spec: &JobSpec) -> CliResult<Value> {
    let lambda = spec.lambda.clone().unwrap_or_default();
    let rank = spec.rank.unwrap_or(0);
    let variant = spec.variant.as_deref().unwrap_or("");
    let mut witnesses: Option<Value> = None;
    let result = match spec.command.as_str() {
        "genexp" => match variant {
            "a" if spec.multi => json!({ "multi": genexp_a_multi(&lambda, rank)? }),
            "a" => {
                if spec.witnesses {
                    let list: Vec<Value> = zero_weight_a(&lambda, rank)?
                        .iter()
                        .map(|b| {
                            let ep = b.eps_phi();
                            let e: u32 = ep.eps.iter().enumerate().map(|(k, &x)| (k as u32 + 1) * x).sum();
                            json!({ "tableau": b, "exponent": e })
                        })
                        .collect();
                    witnesses = Some(Value::Array(list));
                }
                json!({ "poly": genexp_a(&lambda, rank)? })
            }
            "c" if spec.multi => json!({ "multi": genexp_c_multi(&lambda, rank)? }),
            "c" => {
                if spec.witnesses {
                    witnesses = Some(serde_json::to_value(king_witnesses(&lambda, rank)?).expect("serializable"));
                }
                json!({ "poly": genexp_c(&lambda, rank)? })
            }
            "c-sundaram" => {
                let out = genexp_c_sundaram(&lambda, rank)?;
                if spec.witnesses {
                    witnesses = Some(json!({ "images": out.images, "rejected": out.rejected }));
                }
                json!({ "poly": out.poly })
            }
            "stable-c" | "stable-b" | "stable-d" => {
                let cutoff = spec.cutoff.unwrap_or(0);
                if spec.multi {
                    let base = if variant == "stable-c" { lambda.clone() } else { lambda.conjugate() };
                    json!({ "multi": stable_c_multi(&base, cutoff)?, "cutoff": cutoff })
                } else {
                    let s = match variant {
                        "stable-c" => stable_c(&lambda, cutoff)?,
                        "stable-b" => stable_b(&lambda, cutoff)?,
                        _ => stable_d(&lambda, cutoff)?,
                    };
                    json!({ "poly": s.poly(), "cutoff": cutoff })
                }
            }
            other => return Err(CliError::Usage(format!("unknown genexp kind `{other}`"))),
        },
        "oracle" => match variant {
            "a" => json!({ "poly": oracle_a(&lambda, rank)? }),
            _ => json!({ "poly": oracle_c(&lambda, rank)? }),
        },
        "branch" => {
            let nu = spec.nu.clone().unwrap_or_default();
            if spec.witnesses {
                witnesses = Some(serde_json::to_value(sundaram_tableaux(&lambda, &nu, rank)?).expect("serializable"));
            }
            json!({ "count": branching_sp(&lambda, &nu, rank)? })
        }
        "compare" => {
            let nu = spec.nu.clone().unwrap_or_default();
            json!({ "report": compare_rules(&lambda, &nu, rank)? })
        }
        "extremal" => {
            if spec.witnesses {
                witnesses = Some(serde_json::to_value(extremal_report(&lambda, rank, true)?).expect("serializable"));
            }
            match variant {
                "min" => json!({ "value": min_power(&lambda, rank)? }),
                "max" => json!({ "value": max_power(&lambda, rank)? }),
                _ => json!({ "tableau": sigma_min(&lambda, rank)? }),
            }
        }
        "verify" => {
            let suites: Vec<Suite> = if variant == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![variant.parse()?]
            };
            let reports: Vec<_> = suites.into_iter().map(run_suite).collect();
            if reports.len() == 1 {
                json!({ "report": reports[0] })
            } else {
                json!({ "report": { "passed": reports.iter().all(|r| r.passed), "suites": reports } })
            }
        }
        other => return Err(CliError::Usage(format!("unknown command `{other}`"))),
    };
    let mut doc = json!({
        "query": spec,
        "result": result,
        "conventions": conventions(),
        "provenance": provenance(),
    });
    if let Some(w) = witnesses {
        doc["witnesses"] = w;
    }
    Ok(doc)
}

/// Looks the job up in the cache, computing and storing it on a miss.
pub fn run_cached(spec: &JobSpec, cache: Option<&Cache>) -> CliResult<Value> {
    if let Some(c) = cache {
        if let Some(doc) = c.get(spec) {
            return Ok(doc);
        }
    }
    let doc = run(spec)?;
    if let Some(c) = cache {
        c.put(spec, &doc)
            .map_err(|e| CliError::Io(format!("cannot write cache in {}: {e}", c.dir().display())))?;
    }
    Ok(doc)
}

fn csv_rows(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders a document in the chosen format.
pub fn render(doc: &Value, format: Format) -> String {
    let result = &doc["result"];
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut rows = Vec::new();
            if let Some(p) = result.get("poly").and_then(Value::as_object) {
                rows.push(vec!["degree".into(), "coefficient".into()]);
                rows.extend(p.iter().map(|(k, v)| vec![k.clone(), scalar(v)]));
            } else if let Some(p) = result.get("multi").and_then(Value::as_object) {
                rows.push(vec!["monomial".into(), "coefficient".into()]);
                rows.extend(p.iter().map(|(k, v)| vec![k.clone(), scalar(v)]));
            } else if let Some(Value::Object(r)) = result.get("report") {
                rows.push(vec!["field".into(), "value".into()]);
                rows.extend(r.iter().map(|(k, v)| vec![k.clone(), scalar(v)]));
            } else if let Some(obj) = result.as_object() {
                let keys: Vec<String> = obj.keys().cloned().collect();
                rows.push(keys);
                rows.push(obj.values().map(scalar).collect());
            }
            csv_rows(rows)
        }
        Format::Text => {
            let mut out = String::new();
            if let Some(p) = result.get("poly") {
                let poly: crate::poly::Poly = serde_json::from_value(p.clone()).expect("documents hold valid polynomials");
                out.push_str(&poly.to_string());
                if let Some(c) = result.get("cutoff") {
                    out.push_str(&format!(" + O(t^{})", c.as_u64().unwrap_or(0) + 1));
                }
            } else if let Some(Value::Object(m)) = result.get("multi") {
                let terms: Vec<String> = m.iter().map(|(k, v)| format!("{}*{k}", scalar(v))).collect();
                let poly: crate::poly::MultiPoly = if terms.is_empty() {
                    crate::poly::MultiPoly::zero()
                } else {
                    terms.join(" + ").replace("+ -", "- ").parse().expect("documents hold valid polynomials")
                };
                out.push_str(&poly.to_string());
                if let Some(c) = result.get("cutoff") {
                    out.push_str(&format!(" + O(t^{})", c.as_u64().unwrap_or(0) + 1));
                }
            } else if let Some(t) = result.get("tableau") {
                out.push_str(&scalar(t).replace('/', "\n"));
            } else if let Some(r) = result.get("report") {
                out.push_str(&serde_json::to_string_pretty(r).expect("serializable"));
            } else if let Some(obj) = result.as_object() {
                let parts: Vec<String> = obj.values().map(scalar).collect();
                out.push_str(&parts.join(" "));
            }
            out.push('\n');
            if let Some(Value::Array(ws)) = doc.get("witnesses") {
                for w in ws {
                    out.push_str(&format!("  {}\n", serde_json::to_string(w).expect("serializable")));
                }
            }
            out
        }
    }
}

/// Whether a document records a failed verification.
pub fn failed_verification(doc: &Value) -> bool {
    doc["result"]["report"]["passed"] == Value::Bool(false)
}

/// Lets `genexp c --lambda ...` stand for `genexp genexp c --lambda ...`.
fn normalize_args(mut args: Vec<OsString>) -> Vec<OsString> {
    let shortcuts = ["a", "c", "stable-b", "stable-c", "stable-d"];
    if let Some(first) = args.get(1).and_then(|a| a.to_str()) {
        if shortcuts.contains(&first) {
            args.insert(1, OsString::from("genexp"));
        }
    }
    args
}

/// Runs the command line with the given arguments (including the program
/// name), writing to `out` and `err`, and returns the exit code.
pub fn main_with(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(normalize_args(args)) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            let _ = if code == exit::OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let outcome = job_from_command(&cli.command).and_then(|spec| {
        let cache = match (&cli.cache_dir, cli.no_cache) {
            (Some(dir), false) => Some(Cache::new(dir)),
            _ => None,
        };
        run_cached(&spec, cache.as_ref())
    });
    match outcome {
        Ok(doc) => {
            if write!(out, "{}", render(&doc, cli.format)).is_err() {
                return exit::IO;
            }
            if failed_verification(&doc) {
                exit::VERIFY_FAILED
            } else {
                exit::OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> ExitCode {
    let code = main_with(std::env::args_os().collect(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
