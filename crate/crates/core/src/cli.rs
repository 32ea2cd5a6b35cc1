//! Command-line front end. Exit codes: 0 when no check failed, 1 when a
//! check failed, 2 for usage errors, 3 for internal errors.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::complex::analysis::{abels_complex, Family};
use crate::error::Error;
use crate::report::{Report, Status};
use crate::ring::Ring;
use crate::suites::{run_suite, Suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "abelslab", version, about = "Exact checks for Chevalley models, Abels groups, presentations and coset complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// steinberg, commutators, forms, borel-iso, abels, presentations, complex, tits or all
        suite: String,
        #[command(flatten)]
        opts: Opts,
        /// Answer a single question instead of running the suite (complex: pi1, h1, connected).
        #[arg(long)]
        check: Option<String>,
    },
    /// Export an object as plain text.
    Export {
        #[command(subcommand)]
        what: ExportWhat,
    },
    /// Work with saved reports.
    Report {
        #[command(subcommand)]
        action: ReportAction,
    },
}

#[derive(Subcommand, Debug)]
enum ExportWhat {
    /// Coset complex of an Abels family, one simplex per line.
    Complex {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value = "zmod:2")]
        ring: String,
        /// H (horospherical) or Hu (contracting)
        #[arg(long, default_value = "H")]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ReportAction {
    /// Merge JSON reports into one.
    Merge {
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args, Debug)]
struct Opts {
    #[arg(long)]
    ring: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "type")]
    cartan: Option<String>,
    #[arg(long)]
    max_cosets: Option<usize>,
    #[arg(long)]
    max_order: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::VonDyckViolation(_) | Error::NotInvertible | Error::RingMismatch | Error::SizeMismatch(..) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn timestamp() -> String {
    let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    format!("unix:{secs}")
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Tsv => report.to_tsv(),
    }
}

fn verify(suite: &str, opts: Opts, check: Option<String>) -> Result<i32, Failure> {
    let suite: Suite = suite.parse()?;
    let mut config = SuiteConfig::from_env()?;
    config.ring = opts.ring;
    config.n = opts.n;
    config.cartan = opts.cartan;
    config.seed = opts.seed;
    if let Some(m) = opts.max_cosets {
        config.max_cosets = m;
    }
    if let Some(m) = opts.max_order {
        config.max_order = m;
    }
    config.validate()?;
    if let Some(q) = check {
        return query(suite, &config, &q);
    }
    let mut report = run_suite(suite, &config)?;
    report.timestamp = timestamp();
    match (&opts.out, opts.format) {
        (Some(path), f) => {
            emit(&render(&report, f.unwrap_or(Format::Json)), Some(path))?;
            print!("{}", report.summary());
        }
        (None, Some(f)) => emit(&render(&report, f), None)?,
        (None, None) => print!("{}", report.summary()),
    }
    let status = report.status();
    eprintln!("{}: {} checks, {status}", report.suite, report.checks.len());
    Ok(if status == Status::Fail { 1 } else { 0 })
}

/// Single answers about `CC(H(n,R))`.
fn query(suite: Suite, config: &SuiteConfig, q: &str) -> Result<i32, Failure> {
    if suite != Suite::Complex {
        return Err(Failure::Usage(format!("--check is only available for the complex suite, not {suite}")));
    }
    let ring = Ring::parse(config.ring.as_deref().unwrap_or("zmod:2"))?;
    let n = config.n.unwrap_or(4);
    let (_, cc) = abels_complex(n, &ring, Family::Horospherical, config.max_order)?;
    let c = &cc.complex;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    match q {
        "pi1" => println!("simply connected: {}", c.is_simply_connected(config.max_cosets)),
        "h1" if c.is_connected() => println!("H1: {}", c.homology_h1()),
        "h1" => println!("H1: undefined, complex is disconnected"),
        "connected" => println!("connected: {}", yes_no(c.is_connected())),
        other => return Err(Failure::Usage(format!("unknown check {other}; expected pi1, h1 or connected"))),
    }
    Ok(0)
}

fn export_complex(n: usize, ring: &str, family: &str, out: Option<PathBuf>) -> Result<i32, Failure> {
    let ring = Ring::parse(ring)?;
    let family = match family {
        "H" => Family::Horospherical,
        "Hu" => Family::Contracting,
        other => return Err(Failure::Usage(format!("unknown family {other}; expected H or Hu"))),
    };
    let (_, cc) = abels_complex(n, &ring, family, crate::suites::DEFAULT_MAX_ORDER)?;
    emit(&cc.complex.export(), out.as_ref())?;
    Ok(0)
}

fn merge(files: Vec<PathBuf>, out: Option<PathBuf>) -> Result<i32, Failure> {
    if files.is_empty() {
        return Err(Failure::Usage("report merge needs at least one file".into()));
    }
    let mut reports = Vec::new();
    for f in &files {
        let text = fs::read_to_string(f).map_err(io)?;
        let r: Report = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", f.display())))?;
        reports.push(r);
    }
    let mut merged = Report::merge(reports);
    merged.timestamp = timestamp();
    emit(&(merged.to_json() + "\n"), out.as_ref())?;
    Ok(if merged.status() == Status::Fail { 1 } else { 0 })
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify { suite, opts, check } => verify(&suite, opts, check),
        Command::Export { what: ExportWhat::Complex { n, ring, family, out } } => export_complex(n, &ring, &family, out),
        Command::Report { action: ReportAction::Merge { files, out } } => merge(files, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            3
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["abelslab", "verify", "steinberg", "--type", "B3", "--ring", "zmod:2"]), 2);
        assert_eq!(run(["abelslab", "verify", "nonsense"]), 2);
        assert_eq!(run(["abelslab", "verify", "forms", "--ring", "zmod:0"]), 2);
        assert_eq!(run(["abelslab", "frobnicate"]), 2);
    }

    #[test]
    fn forms_pass() {
        assert_eq!(run(["abelslab", "verify", "forms", "--type", "C2"]), 0);
    }
}
