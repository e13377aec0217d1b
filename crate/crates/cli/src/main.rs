//! `actkit`: classify finite acts, certify star and Morita contexts, compute
//! approximations and run the consistency sweeps.
//!
//! Exit status: 0 success, 1 a queried property is certified-no (or a
//! selftest criterion failed), 2 unreadable or invalid input, 3 theorem
//! violation.

mod cache;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use actkit::ActError;
use clap::{Parser, Subcommand, ValueEnum};

use commands::{ACT_PROPERTIES, E_PROPERTIES, M_PROPERTIES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "actkit",
    version,
    about = "Finite monoid acts and the hom/tensor adjunction"
)]
struct Cli {
    /// Size bound for universes of acts.
    #[arg(long, global = true, default_value_t = 3)]
    bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report only this property.
    #[arg(long, global = true)]
    property: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and check ACT/1 (or JSON) files.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Classify A (the first act) and every further act X in the file.
    Classify { file: PathBuf },
    /// Weak star and star report for A.
    Star { file: PathBuf },
    /// Certified Morita equivalences for the file's monoid.
    Morita { file: PathBuf },
    /// Approximations of every X from the colocal side.
    Cellular { file: PathBuf },
    /// All acts up to the bound over the file's monoid.
    Universe { file: PathBuf },
    /// Run every acceptance criterion at the bound.
    Selftest,
}

pub struct Options {
    pub bound: usize,
    pub format: Format,
    pub seed: u64,
    pub property: Option<String>,
}

pub enum Failure {
    Io { file: String, error: String },
    Input { file: String, error: ActError },
    Library(ActError),
    Usage(String),
    Selftest { report: String, detail: String },
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Library(ActError::TheoremViolation { .. }) | Failure::Selftest { .. } => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io { file, error } => format!("{file}: {error}"),
            Failure::Input {
                file,
                error: ActError::Parse { line, message },
            } => format!("{file}:{line}: {message}"),
            Failure::Input { file, error } => format!("{file}: {error}"),
            Failure::Library(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
            Failure::Selftest { detail, .. } => detail.clone(),
        }
    }
}

fn check_property(command: &Command, property: &Option<String>) -> Result<(), Failure> {
    let Some(p) = property else { return Ok(()) };
    let known: Vec<&str> = match command {
        Command::Classify { .. } => ACT_PROPERTIES
            .iter()
            .chain(&M_PROPERTIES)
            .chain(&E_PROPERTIES)
            .copied()
            .collect(),
        Command::Star { .. } => vec![
            "self-small",
            "weak-self-projective",
            "pullback-flat",
            "colocal-equals-generated",
            "unit-epi",
            "counit-mono-unit-epi",
            "weak-star",
            "star",
        ],
        _ => {
            return Err(Failure::Usage(
                "--property applies to classify and star only".into(),
            ))
        }
    };
    if known.contains(&p.as_str()) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "unknown property {p}; expected one of {}",
            known.join(", ")
        )))
    }
}

fn run(cli: Cli) -> Result<commands::Report, Failure> {
    check_property(&cli.command, &cli.property)?;
    let opts = Options {
        bound: cli.bound,
        format: cli.format,
        seed: cli.seed,
        property: cli.property,
    };
    match &cli.command {
        Command::Validate { files } => commands::validate(files, &opts),
        Command::Classify { file } => commands::classify(file, &opts),
        Command::Star { file } => commands::star(file, &opts),
        Command::Morita { file } => commands::morita(file, &opts),
        Command::Cellular { file } => commands::cellular(file, &opts),
        Command::Universe { file } => commands::universe(file, &opts),
        Command::Selftest => commands::run_selftest(&opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(report) => {
            let _ = stdout.write_all(report.text.as_bytes());
            ExitCode::from(u8::from(report.certified_no || report.failed))
        }
        Err(failure) => {
            if let Failure::Selftest { report, .. } = &failure {
                let _ = stdout.write_all(report.as_bytes());
            }
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
