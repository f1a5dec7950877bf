use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use genstirling::identities::{run_suite, IdentityId, SuiteRanges};
use genstirling::oracle::{self, OracleConfig};
use genstirling::stirling::explicit_value;
use genstirling::{build_table, parse_rational, NumericTable, Profile};
use num_rational::BigRational;
use num_traits::Zero;

mod render;

use render::Format;

const MAX_POLY_N: usize = 40;
const MAX_NUMERIC_N: usize = 200;
const CAP_ENV: &str = "GENSTIRLING_ORACLE_CAP";

/// Exact generalized Stirling numbers L(n,k) in the symbols a, b.
#[derive(Debug, Parser)]
#[command(name = "genstirling", version)]
struct Cli {
    /// Worker threads for the parallel kernels. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the triangle for rows 0..=n.
    Table(TableArgs),
    /// Print a single entry.
    Value(ValueArgs),
    /// Brute-force a single entry by enumerating every weighted distribution.
    Oracle(OracleArgs),
    /// Run the identity suite and emit a JSON report.
    Check(CheckArgs),
    /// Write the triangle to a file.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
struct Point {
    /// Named specialization, e.g. `lah`, `stirling2`, `whitney2:3`.
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    profile: Option<String>,
    /// Value for a, as `p` or `p/q`.
    #[arg(long, requires = "beta", allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Value for b, as `p` or `p/q`.
    #[arg(long, requires = "alpha", allow_hyphen_values = true)]
    beta: Option<String>,
}

impl Point {
    fn resolve(&self) -> Result<Option<(BigRational, BigRational)>> {
        if let Some(p) = &self.profile {
            let p: Profile = p.parse()?;
            return Ok(Some((p.alpha(), p.beta())));
        }
        match (&self.alpha, &self.beta) {
            (Some(a), Some(b)) => Ok(Some((parse_rational(a)?, parse_rational(b)?))),
            _ => Ok(None),
        }
    }
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    point: Point,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    point: Point,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ValueArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    point: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleFormat {
    /// Total weight polynomial.
    Text,
    /// One JSON object per distribution.
    Json,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Largest n accepted (default 9, or $GENSTIRLING_ORACLE_CAP).
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = OracleFormat::Text)]
    format: OracleFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Largest row used by the per-entry checks.
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Restrict to these identities (repeatable). Defaults to every identity
    /// expected to hold.
    #[arg(long = "identity")]
    identities: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn check_limit(n: usize, numeric: bool) -> Result<()> {
    let limit = if numeric { MAX_NUMERIC_N } else { MAX_POLY_N };
    if n > limit {
        bail!("n = {n} exceeds the limit of {limit} for this triangle");
    }
    Ok(())
}

fn write_triangle(n: usize, point: &Point, format: Format, out: &mut dyn Write) -> Result<()> {
    match point.resolve()? {
        Some((alpha, beta)) => {
            check_limit(n, true)?;
            let table = NumericTable::from_recurrence(&alpha, &beta, n);
            render::numeric_table(&table, format, out)
        }
        None => {
            check_limit(n, false)?;
            render::poly_table(&build_table(n), format, out)
        }
    }
}

fn cmd_value(args: &ValueArgs, out: &mut dyn Write) -> Result<()> {
    if args.k > args.n {
        writeln!(out, "0")?;
        return Ok(());
    }
    check_limit(args.n, args.point.resolve()?.is_some())?;
    match args.point.resolve()? {
        Some((alpha, beta)) if !beta.is_zero() => {
            writeln!(out, "{}", explicit_value(args.n, args.k, &alpha, &beta)?)?
        }
        Some((alpha, beta)) => {
            let table = NumericTable::from_recurrence(&alpha, &beta, args.n);
            writeln!(out, "{}", table.get(args.n, args.k).unwrap_or_default())?
        }
        None => writeln!(out, "{}", build_table(args.n).entry(args.n, args.k)?)?,
    }
    Ok(())
}

fn oracle_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.parse().with_context(|| format!("{CAP_ENV}={v} is not an integer")),
        Err(_) => Ok(oracle::DEFAULT_CAP),
    }
}

fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write) -> Result<()> {
    let config = OracleConfig {
        cap: oracle_cap(args.cap)?,
        ..OracleConfig::default()
    };
    match args.format {
        OracleFormat::Text => {
            let w = oracle::enumerate_weight_with(args.n, args.k, &config)?;
            writeln!(out, "{w}")?;
        }
        OracleFormat::Json => {
            for o in oracle::enumerate_outcomes_with(args.n, args.k, &config)? {
                serde_json::to_writer(&mut *out, &o)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

/// Returns whether every check that is not an expected failure passed.
fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Result<bool> {
    check_limit(args.max_n, false)?;
    let mut ranges = SuiteRanges::up_to(args.max_n);
    if !args.identities.is_empty() {
        ranges.identities = args
            .identities
            .iter()
            .map(|s| s.parse::<IdentityId>())
            .collect::<Result<_, _>>()?;
    }
    let table = build_table(ranges.required_rows());
    let reports = run_suite(&ranges, &table)?;
    serde_json::to_writer_pretty(&mut *out, &reports)?;
    writeln!(out)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    let unexpected = reports.iter().filter(|r| r.is_unexpected_failure()).count();
    eprintln!(
        "{} checks, {} failed ({} expected)",
        reports.len(),
        failed,
        failed - unexpected
    );
    for r in reports.iter().filter(|r| !r.pass) {
        let tag = if r.expected_failure { "expected" } else { "FAIL" };
        eprintln!("  {tag}: {} {} residual {}", r.identity, r.params, r.residual);
    }
    Ok(unexpected == 0)
}

fn dispatch(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Table(args) => {
            let mut out = open_output(args.out.as_ref())?;
            write_triangle(args.n, &args.point, args.format, &mut out)?;
            out.flush()?;
        }
        Command::Export(args) => {
            let mut out = open_output(Some(&args.out))?;
            write_triangle(args.n, &args.point, args.format, &mut out)?;
            out.flush()?;
        }
        Command::Value(args) => {
            let mut out = open_output(None)?;
            cmd_value(args, &mut out)?;
            out.flush()?;
        }
        Command::Oracle(args) => {
            let mut out = open_output(args.out.as_ref())?;
            cmd_oracle(args, &mut out)?;
            out.flush()?;
        }
        Command::Check(args) => {
            let mut out = open_output(args.out.as_ref())?;
            let ok = cmd_check(args, &mut out)?;
            out.flush()?;
            return Ok(ok);
        }
    }
    Ok(true)
}

#[cfg(feature = "parallel")]
fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
fn with_pool<T: Send>(_threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    Ok(f())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match with_pool(cli.threads, || dispatch(&cli)).and_then(|r| r) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

