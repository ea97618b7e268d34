//! Command-line front end. [`run`] is the whole program; `main` only wires
//! it to the process streams.
//!
//! Exit codes: 0 success, 2 invalid parameters or I/O failure, 3 a
//! negacyclic query in characteristic 2, 4 engine and oracle disagree,
//! 5 corrupt catalog.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, Catalog, CatalogKey, CatalogRecord, CatalogResult, CATALOG_ENV};
use crate::claims::{self, ClaimsConfig};
use crate::codes::enumerate_selfdual;
use crate::cyclo::{factor_xn_minus_a, mult_order};
use crate::error::{Error, Result};
use crate::gf::{make_field, modulus_poly};
use crate::oracle;
use crate::poly::Shift;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CHAR_TWO: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_CORRUPT_CATALOG: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "selfdual", version, about = "Self-dual cyclic and negacyclic codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - a into irreducibles with the reciprocal pairing
    Factor(FactorArgs),
    /// Multiplicative order of q modulo m
    Order(OrderArgs),
    /// Whether a self-dual code exists
    Exists(CodeArgs),
    /// Number of self-dual codes
    Count(CodeArgs),
    /// List the generator of every self-dual code
    Enumerate(CodeArgs),
    /// Compare the engine with the brute-force oracle
    Verify(VerifyArgs),
    /// Evaluate every built-in claim instance
    Claims(ClaimsArgs),
    /// Classify a range of parameters into a catalog
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Characteristic
    #[arg(long)]
    p: u64,
    /// Extension degree
    #[arg(long, default_value_t = 1)]
    s: u32,
    /// Code length
    #[arg(long)]
    n: u64,
}

#[derive(Args, Debug)]
struct FactorArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Constant a in x^n - a (1 or -1)
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    constant: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OrderArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Constant a in x^n - a (1 or -1)
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    constant: i64,
    /// Cross-check against the brute-force oracle
    #[arg(long)]
    verify: bool,
    /// Record the result in this catalog (default: $SELFDUAL_CATALOG)
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    constant: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ClaimsArgs {
    /// Longest length in the per-length sweeps
    #[arg(long, default_value_t = 40)]
    max_n: usize,
    /// One JSON object per line instead of a table
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Comma-separated characteristics
    #[arg(long, value_delimiter = ',', required = true)]
    p_list: Vec<u64>,
    #[arg(long, default_value_t = 1)]
    s_max: u32,
    #[arg(long)]
    n_max: u64,
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    constant: i64,
    /// Catalog file (default: $SELFDUAL_CATALOG)
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Cross-check every record against the brute-force oracle
    #[arg(long)]
    verify: bool,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NegacyclicTrivialInCharTwo => EXIT_CHAR_TWO,
            Error::InvariantViolation(_) => EXIT_MISMATCH,
            Error::CorruptCatalog { .. } => EXIT_CORRUPT_CATALOG,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_INVALID, message: e.to_string() }
    }
}

type CliResult = std::result::Result<i32, Failure>;

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INVALID
                }
            };
        }
    };
    let env_catalog = std::env::var_os(CATALOG_ENV).map(PathBuf::from);
    let outcome = match cli.command {
        Command::Factor(a) => cmd_factor(&a, out),
        Command::Order(a) => cmd_order(&a, out),
        Command::Exists(a) => cmd_code(&a, Query::Exists, env_catalog, out),
        Command::Count(a) => cmd_code(&a, Query::Count, env_catalog, out),
        Command::Enumerate(a) => cmd_code(&a, Query::Enumerate, env_catalog, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Claims(a) => cmd_claims(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, env_catalog, out),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn shift_for(p: u64, constant: i64) -> Result<Shift> {
    let shift = Shift::from_constant(constant)?;
    if p == 2 && shift == Shift::Negacyclic {
        return Err(Error::NegacyclicTrivialInCharTwo);
    }
    Ok(shift)
}

fn length(n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    usize::try_from(n).map_err(|_| Error::InvalidInput("length too large".into()))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value).expect("output serializes"))
}

#[derive(Serialize)]
struct FieldJson {
    modulus: String,
    p: u64,
    s: u32,
}

#[derive(Serialize)]
struct FactorJson {
    mult: u64,
    pairing: String,
    poly: String,
}

#[derive(Serialize)]
struct FactorizationJson {
    factors: Vec<FactorJson>,
    field: FieldJson,
    pair_count: usize,
    self_reciprocal_count: usize,
    target: String,
}

fn cmd_factor(a: &FactorArgs, out: &mut dyn Write) -> CliResult {
    let shift = shift_for(a.field.p, a.constant)?;
    let field = make_field(a.field.p, a.field.s)?;
    length(a.field.n)?;
    let fz = factor_xn_minus_a(&field, a.field.n, shift)?;
    let report = FactorizationJson {
        factors: fz
            .factors()
            .iter()
            .enumerate()
            .map(|(i, f)| FactorJson { mult: f.multiplicity, pairing: fz.label(i), poly: f.poly.to_string() })
            .collect(),
        field: FieldJson { modulus: modulus_poly(&field)?.to_string(), p: field.p(), s: field.s() },
        pair_count: fz.pair_count(),
        self_reciprocal_count: fz.self_reciprocal_count(),
        target: fz.target().to_string(),
    };
    if a.json {
        emit_json(out, &report)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "field: {field} (modulus {})", report.field.modulus)?;
    writeln!(out, "target: {}", report.target)?;
    for f in &report.factors {
        writeln!(out, "{:<5} ({})^{}", f.pairing, f.poly, f.mult)?;
    }
    writeln!(out, "s={} t={}", report.self_reciprocal_count, report.pair_count)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct OrderJson {
    m: u64,
    order: u64,
    q: u64,
}

fn cmd_order(a: &OrderArgs, out: &mut dyn Write) -> CliResult {
    let order = mult_order(a.q, a.m)?;
    if a.json {
        emit_json(out, &OrderJson { m: a.m, order, q: a.q })?;
    } else {
        writeln!(out, "ord_{}({}) = {order}", a.m, a.q)?;
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Query {
    Exists,
    Count,
    Enumerate,
}

#[derive(Serialize)]
struct QueryJson<'a> {
    key: CatalogKey,
    oracle_checked: bool,
    result: &'a CatalogResult,
}

fn cmd_code(a: &CodeArgs, query: Query, env_catalog: Option<PathBuf>, out: &mut dyn Write) -> CliResult {
    let shift = shift_for(a.field.p, a.constant)?;
    let field = make_field(a.field.p, a.field.s)?;
    let n = length(a.field.n)?;
    let key = CatalogKey { a: a.constant, n: a.field.n, p: a.field.p, s: a.field.s };
    let mut record = catalog::build_record(key, a.verify)?;
    if query == Query::Enumerate && !record.result.generators_complete {
        record.result.generators = enumerate_selfdual(&field, n, shift)?.iter().map(ToString::to_string).collect();
        record.result.generators_complete = true;
    }
    if let Some(path) = a.catalog.clone().or(env_catalog) {
        let mut cat = Catalog::open(&path)?;
        if cat.needs(&key, a.verify) {
            let mut stored = record.clone();
            if stored.result.generators.len() as u128 > catalog::GENERATOR_LIMIT {
                stored.result.generators.clear();
                stored.result.generators_complete = false;
            }
            cat.upsert(&stored);
            cat.save()?;
        }
    }
    let r = &record.result;
    if a.json {
        emit_json(out, &QueryJson { key, oracle_checked: a.verify, result: r })?;
        return Ok(EXIT_OK);
    }
    match query {
        Query::Exists => {
            writeln!(out, "exists: {}", r.exists)?;
            writeln!(out, "count: {}", r.count)?;
        }
        Query::Count => writeln!(out, "count: {}", r.count)?,
        Query::Enumerate => {
            for g in &r.generators {
                writeln!(out, "{g}")?;
            }
        }
    }
    if query != Query::Enumerate {
        writeln!(out, "pairing: s={} t={}", r.pairing.s, r.pairing.t)?;
    }
    if a.verify {
        writeln!(out, "oracle: agrees")?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyJson {
    agree: bool,
    engine_count: u128,
    oracle_count: usize,
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let shift = shift_for(a.field.p, a.constant)?;
    let field = make_field(a.field.p, a.field.s)?;
    let n = length(a.field.n)?;
    let result = catalog::classify(&field, n, shift)?;
    let found = oracle::oracle_selfdual_search(&field, n, shift)?;
    let agree = catalog::oracle_check(&field, n, shift, &result).is_ok();
    let report = VerifyJson { agree, engine_count: result.count, oracle_count: found.len() };
    if a.json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "engine: {} codes", report.engine_count)?;
        writeln!(out, "oracle: {} codes", report.oracle_count)?;
        writeln!(out, "agree: {agree}")?;
    }
    Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_claims(a: &ClaimsArgs, out: &mut dyn Write) -> CliResult {
    let report = claims::run_claims_report(&ClaimsConfig { max_n: a.max_n, ..ClaimsConfig::default() });
    let text = if a.json { report.to_json_lines() } else { claims::render_table(&report.verdicts) };
    match &a.out {
        Some(path) => fs::write(path, text.as_bytes())
            .map_err(|e| Failure { code: EXIT_INVALID, message: format!("{}: {e}", path.display()) })?,
        None => out.write_all(text.as_bytes())?,
    }
    if report.mismatches.is_empty() {
        return Ok(EXIT_OK);
    }
    Err(Failure {
        code: EXIT_MISMATCH,
        message: format!("engine and oracle disagree: {}", report.mismatches.join("; ")),
    })
}

fn cmd_sweep(a: &SweepArgs, env_catalog: Option<PathBuf>, out: &mut dyn Write) -> CliResult {
    let path = a.catalog.clone().or(env_catalog).ok_or_else(|| Failure {
        code: EXIT_INVALID,
        message: format!("no catalog given (use --catalog or {CATALOG_ENV})"),
    })?;
    for &p in &a.p_list {
        shift_for(p, a.constant)?;
        make_field(p, 1)?;
    }
    let mut cat = Catalog::open(&path)?;
    let mut keys = Vec::new();
    for &p in &a.p_list {
        for s in 1..=a.s_max {
            for n in 1..=a.n_max {
                keys.push(CatalogKey { a: a.constant, n, p, s });
            }
        }
    }
    keys.sort();
    keys.dedup();
    let todo: Vec<CatalogKey> = keys.iter().copied().filter(|k| cat.needs(k, a.verify)).collect();
    let built: Vec<Result<CatalogRecord>> = todo.par_iter().map(|&k| catalog::build_record(k, a.verify)).collect();
    let mut computed = 0;
    let mut first_error = None;
    for record in built {
        match record {
            Ok(r) => {
                cat.upsert(&r);
                computed += 1;
            }
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    cat.save()?;
    if let Some(e) = first_error {
        return Err(e.into());
    }
    writeln!(out, "keys: {}", keys.len())?;
    writeln!(out, "computed: {computed}")?;
    writeln!(out, "catalog: {} ({} records)", cat.path().display(), cat.len())?;
    Ok(EXIT_OK)
}
