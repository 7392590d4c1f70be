//! Command-line front end: facet files in, deterministic JSON reports out.

pub mod commands;
pub mod facets;
pub mod random;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chorded_core::FieldSpec;

pub use facets::{parse_facet_file, FacetFile, ParseError};
pub use report::Report;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}", path = .0.display(), source = .1)]
    Parse(PathBuf, ParseError),
    #[error("{path}: {source}", path = .0.display(), source = .1)]
    Io(PathBuf, std::io::Error),
    #[error(transparent)]
    Core(#[from] chorded_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(chorded_core::Error::CapExceeded { .. }) => EXIT_INCONCLUSIVE,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "chorded", version, about = "Cycles, chord sets and linear resolutions of simplicial complexes")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Dimension d. Commands that need it default to the dimension of the input.
    #[arg(short = 'd', long = "dim", global = true)]
    pub dim: Option<usize>,
    /// Coefficient field: gf2, gf<p> for an odd prime p, or q. Repeatable.
    #[arg(long = "field", global = true, value_parser = parse_field)]
    pub fields: Vec<FieldSpec>,
    /// Limit on enumerated GF(2) kernel vectors.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    /// Write the JSON report here; `-` prints it instead of the summary.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Seed for random corpus generation.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Record wall-clock time in the report. Off by default so reports stay
    /// byte-identical between runs.
    #[arg(long, global = true)]
    pub timing: bool,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: chorded_core::Error| e.to_string())
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    /// Stanley-Reisner ideal: the minimal non-faces.
    Sr,
    /// Facet ideal: one generator per facet.
    Facet,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Vertex set, facets, dimension and f-vector.
    Info { file: PathBuf },
    /// Pure d-skeleton.
    Skeleton { file: PathBuf },
    /// d-closure.
    Closure { file: PathBuf },
    /// d-complement.
    Complement { file: PathBuf },
    /// Reduced Betti numbers over each field.
    Homology { file: PathBuf },
    /// Every d-dimensional cycle among the d-faces, classified.
    Cycles { file: PathBuf },
    /// Whether the pure d-skeleton is an orientable d-dimensional cycle.
    Orientable { file: PathBuf },
    /// d-chordedness; every dimension when -d is absent.
    Chorded {
        file: PathBuf,
        /// Also emit a chord-set certificate for every face-minimal cycle.
        #[arg(long)]
        certificates: bool,
    },
    /// d-cycle-completeness, plain and orientable.
    CycleComplete { file: PathBuf },
    /// Whether the d-faces carry no cycle.
    Tree { file: PathBuf },
    /// Generators of the Stanley-Reisner (or facet) ideal.
    SrIdeal {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "sr")]
        ideal: IdealKind,
    },
    /// t-linear resolution test by the subset sweep.
    Linres {
        file: PathBuf,
        /// Generation degree; defaults to the common degree of the generators.
        #[arg(short = 't')]
        t: Option<usize>,
        /// Take the ideal of the d-closure of the input.
        #[arg(long)]
        closure: bool,
        #[arg(long, value_enum, default_value = "sr")]
        ideal: IdealKind,
    },
    /// Componentwise linearity over each field.
    Componentwise {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "sr")]
        ideal: IdealKind,
    },
    /// Runs every cross-module property on a corpus directory and on seeded
    /// random complexes.
    VerifyCorpus {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
        /// Number of random pure 2-complexes.
        #[arg(long, default_value_t = verify::DEFAULT_INSTANCES)]
        instances: usize,
    },
}

/// Parses `argv` (including the program name), runs the command, writes
/// output, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match commands::execute(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.common, &outcome, out) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INPUT;
            }
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(common: &Common, outcome: &commands::Outcome, out: &mut dyn Write) -> Result<(), CliError> {
    let json = outcome.report.to_json();
    match &common.json {
        Some(p) if p.as_os_str() == "-" => {
            out.write_all(json.as_bytes()).map_err(|e| CliError::Io(p.clone(), e))?;
        }
        Some(p) => {
            std::fs::write(p, json.as_bytes()).map_err(|e| CliError::Io(p.clone(), e))?;
            out.write_all(outcome.summary.as_bytes()).map_err(|e| CliError::Io(p.clone(), e))?;
        }
        None => {
            out.write_all(outcome.summary.as_bytes())
                .map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))?;
        }
    }
    Ok(())
}
