//! `p2gle`: digit codec, spectra and Gibbs sampling from the command line.
//!
//! Exit codes: 0 on success, 1 for usage, parse, domain and I/O errors, 2
//! when a numerical procedure fails to converge. Errors are reported on
//! stderr as a single JSON object `{"error": ..., "message": ...}`.

mod commands;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use p2gle::PotentialKind;

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(name = "p2gle", version, about = "Power-2-decaying Gauss-like expansions and their multifractal spectra")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Write the result to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format; defaults to csv for encode, decode and spectrum, json otherwise
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Newton residual tolerance
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,

    /// Newton iteration cap
    #[arg(long, global = true, default_value_t = 100)]
    pub max_iter: usize,

    /// Sampler seed
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailArg {
    AllOnes,
    Unspecified,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// First digits of x and the cylinder containing it
    Encode {
        /// "p/q", an integer or a finite decimal in (0, 1]
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Number of digits
        #[arg(long)]
        digits: usize,
    },
    /// Point or cylinder named by a digit prefix
    Decode {
        /// Comma-separated digits, e.g. 2,3
        #[arg(long)]
        digits: String,
        #[arg(long, value_enum, default_value_t = TailArg::Unspecified)]
        tail: TailArg,
    },
    /// Solve for (t, q) at one level xi
    Solve {
        #[arg(long)]
        potential: PotentialKind,
        /// A number, "xi0" (log-digit anchor) or "inf" (exp-digit only)
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Use the Newton solver even where a closed form exists
        #[arg(long)]
        newton: bool,
    },
    /// Spectrum on an equally spaced grid
    Spectrum {
        #[arg(long)]
        potential: PotentialKind,
        #[arg(long, allow_hyphen_values = true)]
        xi_min: String,
        #[arg(long, allow_hyphen_values = true)]
        xi_max: String,
        /// Number of grid points
        #[arg(long, default_value_t = 200)]
        steps: usize,
    },
    /// Inflection point of the Khintchine spectrum
    Inflection {
        /// Points in the sign scan of t''
        #[arg(long, default_value_t = 10_000)]
        scan_points: usize,
        #[arg(long, default_value_t = 1.01)]
        scan_lo: f64,
        #[arg(long, default_value_t = 50.0)]
        scan_hi: f64,
    },
    /// Sample the Gibbs measure at the solution for xi
    Sample {
        #[arg(long)]
        potential: PotentialKind,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, default_value_t = 1000)]
        n_points: usize,
        #[arg(long, default_value_t = 10_000)]
        depth: usize,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    let (output, default_format) = match cli.command {
        Command::Encode { x, digits } => (commands::encode(&x, digits)?, Format::Csv),
        Command::Decode { digits, tail } => (commands::decode(&digits, tail)?, Format::Csv),
        Command::Solve { potential, xi, newton } => (commands::solve(g, potential, &xi, newton)?, Format::Json),
        Command::Spectrum {
            potential,
            xi_min,
            xi_max,
            steps,
        } => (commands::spectrum(g, potential, &xi_min, &xi_max, steps)?, Format::Csv),
        Command::Inflection {
            scan_points,
            scan_lo,
            scan_hi,
        } => (commands::inflection(scan_lo, scan_hi, scan_points)?, Format::Json),
        Command::Sample {
            potential,
            xi,
            n_points,
            depth,
        } => (commands::sample(g, potential, &xi, n_points, depth)?, Format::Json),
    };
    emit(&output, g.format.unwrap_or(default_format), g.out.as_ref())
}

fn emit(output: &Output, format: Format, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = match format {
        Format::Csv => output.csv.clone(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&output.json).map_err(|e| CliError::Io(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(&CliError::Usage(e.to_string().trim_end().to_owned())),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> ExitCode {
    let body = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
    eprintln!("{body}");
    ExitCode::from(e.exit_code())
}
