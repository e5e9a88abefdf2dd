//! The `finlift` command line.
//!
//! Exit codes: 0 success, 1 verification failed, 2 parse or validation
//! error, 3 search exhausted, 4 map ill-defined or not finite.

pub mod certificate;
pub mod problem;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::invariants::krull_dimension;
use crate::liftengine::{
    is_finite_map, lift_map, minimal_presentation, strong_sop, verify_lift, LiftError, PipelineConfig,
};
use crate::stdbasis::{compute_basis, Mode};
use problem::ProblemFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;
pub const EXIT_NOT_FINITE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("certificate line {line}: {message}")]
    Certificate { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Lift(#[from] LiftError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lift(LiftError::SearchExhausted { .. }) => EXIT_EXHAUSTED,
            CliError::Lift(LiftError::IllDefinedMap { .. } | LiftError::NotFinite { .. }) => EXIT_NOT_FINITE,
            _ => EXIT_INVALID,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "finlift", version, about = "Lift finite self maps of power series quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lift the problem's map and write a certificate.
    Lift {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate against the problem's map.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lift: PathBuf,
    },
    /// Krull dimension of the quotient.
    Dim {
        #[command(flatten)]
        input: Input,
    },
    /// Gröbner basis (graded) or standard basis (local) of the ideal.
    Gb {
        #[command(flatten)]
        input: Input,
    },
    /// A strong system of parameters of the quotient.
    Sop {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
    },
    /// Whether the problem's map is finite.
    Finite {
        #[command(flatten)]
        input: Input,
    },
    /// An isomorphic presentation in the fewest variables.
    Minpres {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Problem file.
    #[arg(long)]
    input: PathBuf,
    /// Override the file's mode.
    #[arg(long)]
    mode: Option<Mode>,
}

#[derive(Debug, Args)]
struct Search {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_attempts: usize,
    #[arg(long, default_value_t = 3)]
    coeff_bound: u64,
    #[arg(long, default_value_t = 2)]
    adjuster_degree_cap: u32,
}

impl Search {
    fn config(&self) -> PipelineConfig {
        PipelineConfig {
            seed: self.seed,
            max_attempts: self.max_attempts,
            coeff_bound: self.coeff_bound,
            adjuster_degree_cap: self.adjuster_degree_cap,
            ..PipelineConfig::default()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(input: &Input) -> Result<ProblemFile, CliError> {
    ProblemFile::parse(&read(&input.input)?)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    match command {
        Command::Lift { input, search, out: path } => {
            let m = load(&input)?.self_map(input.mode)?;
            let cert = lift_map(&m, &search.config())?;
            let text = certificate::render(&cert);
            match path {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    for (name, image) in m.presentation().context().names().iter().zip(cert.lift.images()) {
                        writeln!(out, "{name} -> {image}").map_err(io)?;
                    }
                    writeln!(out, "certificate written to {}", path.display()).map_err(io)?;
                }
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input, lift } => {
            let m = load(&input)?.self_map(input.mode)?;
            let parsed = certificate::parse(&read(&lift)?, m.presentation().context())?;
            let report = verify_lift(&m, &parsed.lift);
            for check in &report.checks {
                writeln!(out, "{}", certificate::check_line(check, &report)).map_err(io)?;
            }
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Dim { input } => {
            let pres = load(&input)?.presentation(input.mode)?;
            let report = krull_dimension(pres.ideal(), pres.mode()).map_err(LiftError::from)?;
            writeln!(
                out,
                "dimension: {}, witness: {{{}}}",
                report.dimension,
                report.witness_names().join(", ")
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Gb { input } => {
            let pres = load(&input)?.presentation(input.mode)?;
            let basis = compute_basis(pres.ideal(), pres.mode().order());
            writeln!(out, "order: {}", basis.order.name()).map_err(io)?;
            for g in &basis.elements {
                writeln!(out, "{g}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Sop { input, search } => {
            let pres = load(&input)?.presentation(input.mode)?;
            let sop = strong_sop(&pres, &search.config())?;
            writeln!(out, "dimension: {}", pres.dimension()).map_err(io)?;
            for (x, dim) in sop.elements.iter().zip(&sop.dimension_trace) {
                writeln!(out, "{x}, {dim}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Finite { input } => {
            let m = load(&input)?.self_map(input.mode)?;
            if is_finite_map(&m) {
                writeln!(out, "finite: true").map_err(io)?;
            } else {
                writeln!(out, "finite: false (images cut out dimension {})", m.image_dimension()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Minpres { input } => {
            let pres = load(&input)?.presentation(input.mode)?;
            let mp = minimal_presentation(&pres)?;
            let new = &mp.presentation;
            writeln!(out, "ring {}", new.context().names().join(" ")).map_err(io)?;
            let gens: Vec<String> = new.ideal().generators().iter().map(ToString::to_string).collect();
            writeln!(out, "ideal: {}", gens.join("; ")).map_err(io)?;
            let forward: Vec<String> = pres
                .context()
                .names()
                .iter()
                .zip(mp.forward.images())
                .map(|(v, p)| format!("{v} -> {p}"))
                .collect();
            writeln!(out, "forward: {}", forward.join("; ")).map_err(io)?;
            let backward: Vec<String> = new
                .context()
                .names()
                .iter()
                .zip(mp.backward.images())
                .map(|(v, p)| format!("{v} -> {p}"))
                .collect();
            writeln!(out, "backward: {}", backward.join("; ")).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}
