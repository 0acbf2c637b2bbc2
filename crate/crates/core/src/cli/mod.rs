//! Command-line front end behind the `matperiod` binary.

mod matrix_io;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::algnum::{eigenvalues, AlgebraicNumber, DEFAULT_EXP_BOUND};
use crate::classify::{classify, default_r_bound, Witness};
use crate::error::Error;
use crate::growth::{entropy, gcd_power_stream, kronecker, ord_scan, small_period_sequence};
use crate::matcore::IntMatrix;
use crate::modorder::{order_mod, set_factor_seed};

pub use matrix_io::{matrix_json, parse_matrix, parse_matrix_str, MatrixFileError};
pub use report::{int_json, real_csv, real_json, sig6};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "matperiod", version, about = "Periods of integer matrices modulo N")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Report format; each command has its own default.
    #[arg(long, short = 'o', global = true, value_enum)]
    pub output: Option<OutputFormat>,
    /// Seed for the randomized factoring stages.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Working precision in bits for printed algebraic numbers.
    #[arg(long, global = true, default_value_t = 128)]
    pub prec_bits: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ord(A, N) with a certificate.
    Order {
        #[arg(short, long)]
        matrix: PathBuf,
        #[arg(short = 'N', long = "modulus", value_parser = parse_bigint)]
        modulus: BigInt,
    },
    /// gcd(A^n - I) for n = 1..n_max.
    #[command(name = "gcd-pow")]
    GcdPow {
        #[arg(short, long)]
        matrix: PathBuf,
        #[arg(long)]
        n_max: u64,
        /// Report the largest ratio over the last `tail` records.
        #[arg(long)]
        tail: Option<u64>,
    },
    /// Exceptionality verdict with witness.
    Classify {
        #[arg(short, long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXP_BOUND)]
        exp_bound: u64,
        #[arg(long)]
        r_bound: Option<u64>,
    },
    /// ord(A, N) / log N over a range of moduli.
    Scan {
        #[arg(short, long)]
        matrix: PathBuf,
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// Moduli gcd(A^(rk) - I) with small periods.
    Construct {
        #[arg(short, long)]
        matrix: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        r: u64,
        #[arg(long)]
        k_max: u64,
    },
    /// Sum of log|λ| over eigenvalues outside the unit circle.
    Entropy {
        #[arg(short, long)]
        matrix: PathBuf,
    },
    /// Kronecker product of two matrices.
    Kron {
        /// Two files, as `-m A -m B` or `-m A B`.
        #[arg(short, long, num_args = 1..=2, action = clap::ArgAction::Append, required = true)]
        matrix: Vec<PathBuf>,
    },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|_| format!("not an integer: {s}"))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidBound(_) | Error::InvalidModulus(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<MatrixFileError> for CliError {
    fn from(e: MatrixFileError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn positive(name: &str, v: u64) -> Result<(), CliError> {
    if v == 0 {
        return Err(CliError::Usage(format!("{name} must be positive")));
    }
    Ok(())
}

fn load(path: &Path) -> Result<IntMatrix, CliError> {
    Ok(parse_matrix(path)?)
}

fn refined(xs: Vec<AlgebraicNumber>, prec: u32) -> Result<Vec<AlgebraicNumber>, CliError> {
    Ok(xs.iter().map(|x| x.refine(prec)).collect::<Result<_, _>>()?)
}

/// Runs one command and writes its report to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    set_factor_seed(config.seed);
    positive("prec-bits", config.prec_bits as u64)?;
    let prec = config.prec_bits;
    let json_only = |name: &str| -> Result<(), CliError> {
        if config.output == Some(OutputFormat::Csv) {
            return Err(CliError::Usage(format!("{name} has no CSV form")));
        }
        Ok(())
    };
    let csv = config.output != Some(OutputFormat::Json);
    let text = match &config.command {
        Command::Order { matrix, modulus } => {
            json_only("order")?;
            let a = load(matrix)?;
            let r = order_mod(&a, modulus)?;
            report::order_json(&r).to_string()
        }
        Command::GcdPow { matrix, n_max, tail } => {
            positive("n-max", *n_max)?;
            let a = load(matrix)?;
            let s = gcd_power_stream(&a, *n_max)?;
            let window = tail.unwrap_or(*n_max).clamp(1, *n_max);
            let from = n_max - window + 1;
            if csv {
                let comment = format!("matrix={} n_max={n_max} tail={window}", matrix.display());
                return Ok(out.write_all(report::gcd_csv(&s, &comment, from).as_bytes())?);
            }
            report::gcd_json(&s, from).to_string()
        }
        Command::Classify {
            matrix,
            exp_bound,
            r_bound,
        } => {
            json_only("classify")?;
            positive("exp-bound", *exp_bound)?;
            let a = load(matrix)?;
            let r_bound = r_bound.unwrap_or_else(|| default_r_bound(a.dim()));
            positive("r-bound", r_bound)?;
            let mut v = classify(&a, *exp_bound, r_bound)?;
            let eigs = match &mut v.witness {
                Some(Witness::QuadraticUnit { generator, .. }) => {
                    *generator = generator.refine(prec)?;
                    refined(eigenvalues(&a)?, prec)?
                }
                Some(Witness::Independent { .. }) => refined(eigenvalues(&a)?, prec)?,
                _ => Vec::new(),
            };
            report::verdict_json(&v, &eigs).to_string()
        }
        Command::Scan { matrix, n_min, n_max } => {
            if *n_min < 2 || n_min > n_max {
                return Err(CliError::Usage(format!("need 2 <= n-min <= n-max, got {n_min}..{n_max}")));
            }
            let a = load(matrix)?;
            let s = ord_scan(&a, *n_min, *n_max)?;
            if csv {
                let comment = format!("matrix={} n_min={n_min} n_max={n_max}", matrix.display());
                return Ok(out.write_all(report::scan_csv(&s, &comment).as_bytes())?);
            }
            report::scan_json(&s).to_string()
        }
        Command::Construct { matrix, r, k_max } => {
            positive("r", *r)?;
            positive("k-max", *k_max)?;
            let a = load(matrix)?;
            let rows = small_period_sequence(&a, *r, *k_max)?;
            if csv {
                let comment = format!("matrix={} r={r} k_max={k_max}", matrix.display());
                return Ok(out.write_all(report::construct_csv(&rows, &comment).as_bytes())?);
            }
            report::construct_json(&rows).to_string()
        }
        Command::Entropy { matrix } => {
            json_only("entropy")?;
            let a = load(matrix)?;
            let mut e = entropy(&a)?;
            for r in &mut e.expanding_roots {
                r.root = r.root.refine(prec)?;
            }
            report::entropy_json(&e).to_string()
        }
        Command::Kron { matrix } => {
            json_only("kron")?;
            if matrix.len() != 2 {
                return Err(CliError::Usage(format!("kron needs two matrices, got {}", matrix.len())));
            }
            let (a, b) = (load(&matrix[0])?, load(&matrix[1])?);
            matrix_json(&kronecker(&a, &b)).to_string()
        }
    };
    out.write_all(text.as_bytes())?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Parses `args` (program name first), runs, and returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run(&config, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.to_string().replace('\n', " "));
            e.exit_code()
        }
    }
}
