//! `tautslope`: slope tables, single pushforwards and the verification
//! suite.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad usage or
//! parameters.

mod range;
mod slope;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tautslope::families::Report;
use tautslope::numeric::{int, parse_rational};
use tautslope::{push_combo, Combo, GrdParams, Rational};

use range::{Span, Triple};
use verify::{Suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "tautslope", version, about = "Exact pushforwards and divisor slopes on moduli of curves")]
struct Cli {
    /// Worker threads for grid and suite evaluation.
    #[arg(long, global = true, env = "TAUTSLOPE_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Slope table for one divisor family over a parameter grid.
    Slope {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Range `a..b` (inclusive) or a single value.
        #[arg(long)]
        r: Option<Span>,
        #[arg(long)]
        s: Span,
        /// Syzygy index.
        #[arg(long)]
        i: Option<Span>,
        /// Hypersurface degree.
        #[arg(long)]
        k: Option<Span>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Add an approximate decimal slope column (display only).
        #[arg(long)]
        decimal: bool,
    },
    /// Pushforward of `a`, `b`, `c` or a combination, as JSON.
    Push {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, conflicts_with = "combo", required_unless_present = "combo")]
        class: Option<ClassArg>,
        /// `p_a,p_b,p_c,p_lambda`; entries may be fractions.
        #[arg(long, allow_hyphen_values = true)]
        combo: Option<String>,
        /// Divide the result by the Castelnuovo number `N`.
        #[arg(long, value_enum)]
        normalize: Option<Normalize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run identity checks; exits 1 if any fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        max_g: u32,
        #[arg(long, default_value_t = 3)]
        r_max: u32,
        #[arg(long, default_value_t = 15)]
        d_max: u32,
        /// Largest Grassmannian dimension on which the Schubert oracle also
        /// multiplies out literally.
        #[arg(long, default_value_t = 64)]
        brute_dim: u32,
        /// Largest genus for the ε-matrix check.
        #[arg(long, default_value_t = 30)]
        eps_max: u32,
        /// Restrict triple-based suites to these `g,r,d` (repeatable).
        #[arg(long = "triples", value_delimiter = ';')]
        triples: Vec<Triple>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gp,
    Hypersurface,
    Syzygy,
}

impl FamilyArg {
    pub fn name(self) -> &'static str {
        match self {
            FamilyArg::Gp => "gp",
            FamilyArg::Hypersurface => "hypersurface",
            FamilyArg::Syzygy => "syzygy",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    A,
    B,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Normalize {
    #[value(name = "N")]
    N,
}

enum Failure {
    Usage(String),
    Verification,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| usage(format!("cannot create {}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_combo(s: &str) -> Result<Combo, Failure> {
    let parts = s.split(',').map(parse_rational).collect::<tautslope::Result<Vec<Rational>>>().map_err(usage)?;
    let [a, b, c, l]: [Rational; 4] = parts
        .try_into()
        .map_err(|v: Vec<Rational>| usage(format!("--combo needs 4 entries p_a,p_b,p_c,p_lambda, got {}", v.len())))?;
    Ok(Combo::new(a, b, c, l))
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(usage)?;
    }
    match cli.command {
        Command::Slope { family, r, s, i, k, format, output, decimal } => {
            let points = slope::expand(&slope::Grid { family, r, s, i, k }).map_err(usage)?;
            let rows = slope::compute(&points).map_err(usage)?;
            let mut out = sink(&output)?;
            slope::emit(&rows, format, decimal, &mut out)?;
            out.flush()?;
        }
        Command::Push { g, r, d, class, combo, normalize, output } => {
            let p = GrdParams::brill_noether_zero(g, r, d).map_err(usage)?;
            let combo = match (class, combo) {
                (Some(ClassArg::A), _) => Combo::from_ints(1, 0, 0, 0),
                (Some(ClassArg::B), _) => Combo::from_ints(0, 1, 0, 0),
                (Some(ClassArg::C), _) => Combo::from_ints(0, 0, 1, 0),
                (None, Some(s)) => parse_combo(&s)?,
                (None, None) => return Err(usage("one of --class or --combo is required")),
            };
            let mut dc = push_combo(&combo, &p).map_err(usage)?;
            if normalize.is_some() {
                let n = Rational::from_integer(p.n().map_err(usage)?);
                dc = dc.scale(&(int(1) / n));
            }
            let mut out = sink(&output)?;
            serde_json::to_writer_pretty(&mut out, &dc).map_err(|e| Failure::Io(e.into()))?;
            writeln!(out)?;
            out.flush()?;
        }
        Command::Verify { suite, max_g, r_max, d_max, brute_dim, eps_max, triples, format, output } => {
            let triples = triples
                .into_iter()
                .map(|Triple(g, r, d)| GrdParams::brill_noether_zero(g, r, d))
                .collect::<tautslope::Result<Vec<_>>>()
                .map_err(usage)?;
            let cfg = VerifyConfig { max_g, r_max, d_max, brute_dim, eps_max, triples };
            let reports = verify::run(suite, &cfg).map_err(usage)?;
            let mut out = sink(&output)?;
            emit_reports(&reports, format, &mut out)?;
            out.flush()?;
            let failures: Vec<&Report> = reports.iter().filter(|r| !r.pass).collect();
            if !failures.is_empty() {
                eprintln!("{} of {} checks failed:", failures.len(), reports.len());
                for f in failures {
                    eprintln!("  {f}");
                }
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn emit_reports(reports: &[Report], format: ReportFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        ReportFormat::Json => {
            for r in reports {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        ReportFormat::Pretty => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            writeln!(out, "{passed}/{} passed", reports.len())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
