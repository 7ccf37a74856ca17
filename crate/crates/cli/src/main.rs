//! `diaop`: derive, classify and check differential operators that act
//! diagonally on a simple polynomial basis.
//!
//! Exit codes: 0 success or verdict produced, 1 usage/parse error, 2 file
//! or schema error, 3 mathematical precondition violation.

mod render;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use diaop_core::classify::classify;
use diaop_core::hyperbolicity::ms_report;
use diaop_core::operator::{
    derive_diagonal, eigenvector_solve, verify_diagonal, DiagonalSpec, OperatorFile, OperatorMeta,
    OperatorRep,
};
use diaop_core::{BasisSpec, Polynomial, Rational, SequenceSpec};

const DEFAULT_MAX_ORDER: usize = 8;

#[derive(Parser)]
#[command(
    name = "diaop",
    version,
    about = "Exact workbench for diagonal differential operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the representation sum Q_k(x) D^k of a diagonal operator
    Derive {
        /// monomial|hermite|legendre|laguerre|chebyshev, or custom:PATH (a JSON basis file)
        #[arg(long)]
        basis: String,
        /// Sequence expression, e.g. poly:0,1 or recip-factorial
        #[arg(long)]
        eigen: String,
        #[arg(long = "max-order")]
        max_order: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the operator JSON here as well
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Classify an eigenvalue sequence and the order of its operator
    Classify {
        #[arg(long)]
        eigen: String,
        #[arg(long, default_value = "monomial")]
        basis: String,
        #[arg(long = "max-order")]
        max_order: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the multiplier-sequence necessary-condition checks
    CheckMs {
        #[arg(long)]
        eigen: String,
        #[arg(long, default_value = "monomial")]
        basis: String,
        #[arg(long = "max-order")]
        max_order: Option<usize>,
        /// Length of the eigenvalue prefix to examine
        #[arg(long, default_value_t = 24)]
        prefix: usize,
        /// Corpus seed (the DIAOP_SEED environment variable overrides this)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Compose two operators from files: (first) after (second)
    Compose {
        #[arg(long)]
        op: PathBuf,
        #[arg(long)]
        with: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply an operator file to a polynomial
    Apply {
        #[arg(long)]
        op: PathBuf,
        /// Ascending comma-separated coefficients, or "-" for stdin
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check an operator file against a basis/eigenvalue pair
    Verify {
        #[arg(long)]
        op: PathBuf,
        #[arg(long)]
        basis: String,
        #[arg(long)]
        eigen: String,
        /// Defaults to the operator's stored window
        #[arg(long = "max-order")]
        max_order: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Solve for the monic degree-m eigenvector of an operator file
    Eigenvector {
        #[arg(long)]
        op: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

enum CliError {
    Usage(String),
    File(String),
    Schema(String),
    Math(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::File(_) | CliError::Schema(_) => 2,
            CliError::Math(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::File(m) | CliError::Schema(m) | CliError::Math(m) => m,
        }
    }
}

impl From<diaop_core::Error> for CliError {
    fn from(e: diaop_core::Error) -> CliError {
        match e {
            diaop_core::Error::Parse { .. } => CliError::Usage(e.to_string()),
            diaop_core::Error::InvalidOperatorFile { .. } => CliError::Schema(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn parse_basis(s: &str) -> Result<BasisSpec, CliError> {
    if let Some(path) = s.strip_prefix("custom:") {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::File(format!("cannot read basis file {path}: {e}")))?;
        let polys: Vec<Polynomial> = serde_json::from_str(&text)
            .map_err(|e| CliError::Schema(format!("basis file {path}: {e}")))?;
        Ok(BasisSpec::Custom(polys))
    } else {
        BasisSpec::builtin(s).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown basis {s:?}; expected monomial|hermite|legendre|laguerre|chebyshev|custom:<path>"
            ))
        })
    }
}

fn parse_eigen(s: &str) -> Result<SequenceSpec, CliError> {
    SequenceSpec::parse(s).map_err(CliError::from)
}

fn parse_poly_arg(s: &str) -> Result<Polynomial, CliError> {
    let text = if s == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::File(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        s.to_string()
    };
    let coeffs = text
        .trim()
        .split(',')
        .map(|piece| {
            piece
                .parse::<Rational>()
                .map_err(|e| CliError::Usage(format!("invalid polynomial coefficient: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}

fn read_operator(path: &Path) -> Result<(OperatorRep, Option<OperatorMeta>), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::File(format!("cannot read {}: {e}", path.display())))?;
    let file: OperatorFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
    let meta = file.meta.clone();
    Ok((file.into_rep()?, meta))
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), CliError> {
    fs::write(path, to_json(value))
        .map_err(|e| CliError::File(format!("cannot write {}: {e}", path.display())))
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serialization is infallible");
    text.push('\n');
    text
}

/// The environment variable wins over the flag.
fn effective_seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var("DIAOP_SEED") {
        Ok(v) => v.parse::<u64>().map_err(|_| {
            CliError::Usage(format!("DIAOP_SEED must be an unsigned integer, got {v:?}"))
        }),
        Err(_) => Ok(flag),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Derive {
            basis,
            eigen,
            max_order,
            format,
            output,
        } => {
            let spec = DiagonalSpec::new(
                parse_basis(&basis)?,
                parse_eigen(&eigen)?,
                max_order.unwrap_or(DEFAULT_MAX_ORDER),
            );
            let rep = derive_diagonal(&spec)?;
            let file = OperatorFile::from_rep(
                &rep,
                Some(OperatorMeta {
                    basis: basis.clone(),
                    eigen: eigen.clone(),
                }),
            );
            if let Some(path) = &output {
                write_json(path, &file)?;
            }
            match format {
                Format::Table => print!("{}", render::operator_table(&rep)),
                Format::Json => print!("{}", to_json(&file)),
                Format::Latex => println!("{}", render::operator_latex(&rep)),
            }
            Ok(())
        }
        Command::Classify {
            eigen,
            basis,
            max_order,
            format,
        } => {
            let eigen = parse_eigen(&eigen)?;
            let requested = max_order.unwrap_or(DEFAULT_MAX_ORDER);
            let order = match eigen.window_len() {
                Some(len) => requested.min(len.saturating_sub(1)),
                None => requested,
            };
            let spec = DiagonalSpec::new(parse_basis(&basis)?, eigen, order);
            let report = classify(&spec)?;
            match format {
                Format::Table => print!("{}", render::classification_table(&report)),
                Format::Json => print!("{}", to_json(&report)),
                Format::Latex => print!("{}", render::classification_latex(&report)),
            }
            Ok(())
        }
        Command::CheckMs {
            eigen,
            basis,
            max_order,
            prefix,
            seed,
            format,
        } => {
            if prefix < 3 {
                return Err(CliError::Usage(format!(
                    "--prefix must be at least 3 for check-ms, got {prefix}"
                )));
            }
            let report = ms_report(
                &parse_eigen(&eigen)?,
                &parse_basis(&basis)?,
                max_order.unwrap_or(DEFAULT_MAX_ORDER),
                prefix,
                effective_seed(seed)?,
            )?;
            match format {
                Format::Table => print!("{}", render::ms_table(&report)),
                Format::Json => print!("{}", to_json(&report)),
                Format::Latex => print!("{}", render::ms_latex(&report)),
            }
            Ok(())
        }
        Command::Compose {
            op,
            with,
            format,
            output,
        } => {
            let (first, _) = read_operator(&op)?;
            let (second, _) = read_operator(&with)?;
            let composed = first.compose(&second);
            let file = OperatorFile::from_rep(&composed, None);
            if let Some(path) = &output {
                write_json(path, &file)?;
            }
            match format {
                Format::Table => print!("{}", render::operator_table(&composed)),
                Format::Json => print!("{}", to_json(&file)),
                Format::Latex => println!("{}", render::operator_latex(&composed)),
            }
            Ok(())
        }
        Command::Apply { op, poly, format } => {
            let (rep, _) = read_operator(&op)?;
            let p = parse_poly_arg(&poly)?;
            let image = rep.apply(&p)?;
            match format {
                Format::Table => println!("{}", render::poly_coeff_list(&image)),
                Format::Json => print!("{}", to_json(&image)),
                Format::Latex => println!("{}", render::poly_latex(&image)),
            }
            Ok(())
        }
        Command::Verify {
            op,
            basis,
            eigen,
            max_order,
            format,
        } => {
            let (rep, _) = read_operator(&op)?;
            let spec = DiagonalSpec::new(
                parse_basis(&basis)?,
                parse_eigen(&eigen)?,
                max_order.unwrap_or(rep.max_order()),
            );
            let report = verify_diagonal(&rep, &spec)?;
            match format {
                Format::Table | Format::Latex => print!("{}", render::verify_table(&report)),
                Format::Json => print!("{}", to_json(&report)),
            }
            Ok(())
        }
        Command::Eigenvector { op, m, format } => {
            let (rep, _) = read_operator(&op)?;
            let v = eigenvector_solve(&rep, m)?;
            match format {
                Format::Table => println!("{v}"),
                Format::Json => print!("{}", to_json(&v)),
                Format::Latex => println!("{}", render::poly_latex(&v)),
            }
            Ok(())
        }
    }
}
