//! Command-line front end for the `dynatomic` crate.

pub mod args;
pub mod output;
pub mod scan;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::Parser;
use dynatomic::cycles::cycles_from_dynatomic;
use dynatomic::dynatomic::{check_degree_guard, dynatomic_poly, dynatomic_poly_generic, MapSpec};
use dynatomic::property_a::{check_aggregate_with, Interpretation};
use dynatomic::{factor_over_q, Error, RatPoly};

use args::{CheckArgs, Cli, Command, FactorArgs, Format, MapArgs, PhiArgs, ScanArgs};
use output::{CycleJson, FactorJson, PhiJson, ReportJson};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
    Io(io::Error),
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) | CliError::Io(_) => EXIT_COMPUTATION,
            CliError::Verification(_) => EXIT_VERIFICATION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Verification(n) => write!(f, "{n} verification item(s) failed"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidMapDegree(_)
            | Error::InvalidPeriod(_)
            | Error::ZeroArgument(_)
            | Error::Parse(_) => CliError::Usage(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn map_spec(map: &MapArgs) -> Result<MapSpec, CliError> {
    let c = map.c.clone().ok_or_else(|| usage("-c is required"))?;
    Ok(MapSpec::new(map.d, c)?)
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn reject_csv(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(usage(format!("{command} supports --format text or jsonl")));
    }
    Ok(())
}

fn cmd_phi(a: &PhiArgs, out: &mut dyn Write) -> Result<(), CliError> {
    reject_csv(a.format, "phi")?;
    let map = &a.map;
    if a.generic {
        check_degree_guard(map.d, map.n)?;
        let p = dynatomic_poly_generic(map.d, map.n)?;
        let degree = p.degree().unwrap_or(0);
        match a.format {
            Format::Jsonl => json_line(
                out,
                &PhiJson {
                    d: map.d,
                    n: map.n,
                    c: None,
                    degree,
                    polynomial: p.to_string(),
                },
            )?,
            _ => write!(out, "# degree {degree}\n{p}\n")?,
        }
        return Ok(());
    }
    let spec = map_spec(map)?;
    let p = dynatomic_poly(&spec, map.n)?;
    match a.format {
        Format::Jsonl => json_line(
            out,
            &PhiJson {
                d: map.d,
                n: map.n,
                c: Some(dynatomic::arith::format_rational(spec.c())),
                degree: p.degree().unwrap_or(0),
                polynomial: p.to_string(),
            },
        )?,
        _ => out.write_all(output::render_phi(&p).as_bytes())?,
    }
    Ok(())
}

fn cmd_factor(a: &FactorArgs, out: &mut dyn Write) -> Result<(), CliError> {
    reject_csv(a.format, "factor")?;
    let p = match &a.poly {
        Some(text) => text.parse::<RatPoly>().map_err(|e| usage(e.to_string()))?,
        None => {
            let (Some(n), Some(c)) = (a.n, a.c.clone()) else {
                return Err(usage("factor needs -N and -c, or --poly"));
            };
            dynatomic_poly(&MapSpec::new(a.d, c)?, n)?
        }
    };
    let f = factor_over_q(&p)?;
    match a.format {
        Format::Jsonl => json_line(out, &FactorJson::new(&f))?,
        _ => {
            writeln!(
                out,
                "# degree {}, {} distinct irreducible factor(s)",
                p.degree().unwrap_or(0),
                f.factors.len()
            )?;
            out.write_all(output::render_factorization(&f).as_bytes())?;
        }
    }
    Ok(())
}

fn cmd_cycles(a: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    reject_csv(a.format, "cycles")?;
    let spec = map_spec(&a.map)?;
    let records = cycles_from_dynatomic(&spec, a.map.n)?;
    for r in &records {
        match a.format {
            Format::Jsonl => json_line(out, &CycleJson::new(r))?,
            _ => out.write_all(output::render_cycle(r).as_bytes())?,
        }
    }
    if records.is_empty() && a.format == Format::Text {
        writeln!(out, "no cycles")?;
    }
    Ok(())
}

fn interpretation(include_rational_points: bool) -> Interpretation {
    if include_rational_points {
        Interpretation::RationalFalsifies
    } else {
        Interpretation::ExcludeRational
    }
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    reject_csv(a.format, "check")?;
    let spec = map_spec(&a.map)?;
    if a.map.n < 2 {
        return Err(usage("Property A needs N >= 2"));
    }
    let report = check_aggregate_with(&spec, a.map.n, interpretation(a.include_rational_points))?;
    match a.format {
        Format::Jsonl => json_line(out, &ReportJson::new(&report))?,
        _ => out.write_all(output::render_report(&report).as_bytes())?,
    }
    Ok(())
}

pub fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    if jobs == Some(0) {
        return Err(usage("--jobs must be positive"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Io(io::Error::other(e)))
}

fn cmd_scan(a: &ScanArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if a.max_height == 0 {
        return Err(usage("--max-height must be at least 1"));
    }
    if a.format == Format::Text {
        return Err(usage("scan supports --format jsonl or csv"));
    }
    for &n in &a.n {
        if n < 2 {
            return Err(usage("Property A needs N >= 2"));
        }
        check_degree_guard(a.d, n)?;
    }
    let pool = thread_pool(a.jobs)?;
    let config = scan::ScanConfig {
        d: a.d,
        periods: a.n.clone(),
        max_height: a.max_height,
        interpretation: interpretation(a.include_rational_points),
        timings: a.timings,
    };
    let mut file;
    let out: &mut dyn Write = match &a.output {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => stdout,
    };
    match a.format {
        Format::Csv => {
            let summary = scan::write_csv(&config, &pool, out)?;
            eprintln!("{}", serde_json::to_string(&summary)?);
        }
        _ => {
            scan::write_jsonl(&config, &pool, out)?;
        }
    }
    Ok(())
}

fn cmd_verify(a: &args::VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let pool = thread_pool(a.jobs)?;
    let items = verify::run_corpus(&pool);
    let failed = items.iter().filter(|i| !i.passed).count();
    for i in &items {
        writeln!(
            out,
            "{} {}: {} ({})",
            if i.passed { "PASS" } else { "FAIL" },
            i.id,
            i.claim,
            i.detail
        )?;
    }
    writeln!(
        out,
        "{} of {} items passed",
        items.len() - failed,
        items.len()
    )?;
    out.flush()?;
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Phi(a) => cmd_phi(a, &mut out),
        Command::Factor(a) => cmd_factor(a, &mut out),
        Command::Cycles(a) => cmd_cycles(a, &mut out),
        Command::Check(a) => cmd_check(a, &mut out),
        Command::Scan(a) => cmd_scan(a, &mut out),
        Command::VerifyPaper(a) => cmd_verify(a, &mut out),
    };
    let result = result.and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("dynatomic: {e}");
            e.exit_code()
        }
    }
}
