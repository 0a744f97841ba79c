//! Thin command-line front end over the library: `sweep`, `audit` and
//! `bounds` subcommands.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation/audit failure,
//! 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use varbounds::catalog::{ExampleFamily, ExampleSpec};
use varbounds::optimize::{compare_report, GridSpec};
use varbounds::runner::{run_audit, run_sweep, AuditConfig, SweepSpec};
use varbounds::Error;

#[derive(Parser)]
#[command(
    name = "varbounds",
    version,
    about = "Variance-based sum uncertainty bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GridArgs {
    /// Smallest grid exponent (search starts at 2^min)
    #[arg(long = "grid-min-exp", default_value_t = -6)]
    grid_min_exp: i32,
    /// Largest grid exponent (search ends at 2^max)
    #[arg(long = "grid-max-exp", default_value_t = 6)]
    grid_max_exp: i32,
    /// Grid points per octave
    #[arg(long = "grid-density", default_value_t = 20)]
    grid_density: u32,
    /// Refine around the best grid point by golden section
    #[arg(long)]
    refine: bool,
}

impl GridArgs {
    fn to_spec(&self) -> GridSpec {
        GridSpec {
            min_exponent: self.grid_min_exp,
            max_exponent: self.grid_max_exp,
            points_per_octave: self.grid_density,
            refine: self.refine,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a worked example family over θ and write a CSV table
    Sweep {
        /// Example family id (1 qubit, 2 isotropic, 3 spin-1)
        #[arg(long)]
        example: u8,
        /// Sweep start (defaults to the family's natural range)
        #[arg(long)]
        theta_min: Option<f64>,
        /// Sweep end (defaults to the family's natural range)
        #[arg(long)]
        theta_max: Option<f64>,
        /// Number of θ samples
        #[arg(long, default_value_t = 201)]
        steps: usize,
        /// Fixed second angle for the spin-1 family
        #[arg(long)]
        phi: Option<f64>,
        /// Also report the one-parameter bound at this fixed weight
        #[arg(long)]
        alpha: Option<f64>,
        /// Also report the permutation-maximized bound
        #[arg(long)]
        permutations: bool,
        #[command(flatten)]
        grid: GridArgs,
        /// Output CSV path (a .manifest.json sidecar is written next to it)
        #[arg(long)]
        output: PathBuf,
    },
    /// Check every bound against the variance sum on random instances
    Audit {
        /// State dimensions to cycle through
        #[arg(long, value_delimiter = ',', default_values_t = vec![2usize, 3, 4])]
        dims: Vec<usize>,
        /// Observable counts to cycle through
        #[arg(long, value_delimiter = ',', default_values_t = vec![2usize, 3, 4])]
        nobs: Vec<usize>,
        /// Number of random instances
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Base seed; trial t uses seed + t
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        grid: GridArgs,
        /// Output JSON report path
        #[arg(long)]
        output: PathBuf,
    },
    /// Evaluate every bound at a single example point, as JSON on stdout
    Bounds {
        /// Example family id (1 qubit, 2 isotropic, 3 spin-1)
        #[arg(long)]
        example: u8,
        /// State parameter θ
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Second angle for the spin-1 family
        #[arg(long)]
        phi: Option<f64>,
        /// Also report the permutation-maximized bound
        #[arg(long)]
        permutations: bool,
        #[command(flatten)]
        grid: GridArgs,
    },
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Sweep {
            example,
            theta_min,
            theta_max,
            steps,
            phi,
            alpha,
            permutations,
            grid,
            output,
        } => {
            let family = ExampleFamily::from_id(example)?;
            let (default_min, default_max) = family.default_theta_range();
            let spec = SweepSpec {
                family,
                theta_min: theta_min.unwrap_or(default_min),
                theta_max: theta_max.unwrap_or(default_max),
                steps,
                phi,
                alpha_fixed: alpha,
                include_permutations: permutations,
            };
            let result = run_sweep(&spec, &grid.to_spec(), &output)?;
            eprintln!(
                "wrote {} rows to {} (+ manifest)",
                result.rows.len(),
                output.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit {
            dims,
            nobs,
            trials,
            seed,
            grid,
            output,
        } => {
            let config = AuditConfig {
                dims,
                n_obs: nobs,
                trials,
                seed,
                grid: grid.to_spec(),
            };
            let report = run_audit(&config, &output)?;
            eprintln!(
                "{} trials, {} violations, worst margin {:.3e}",
                report.trials, report.violations, report.worst_margin
            );
            if report.violations > 0 {
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds {
            example,
            theta,
            phi,
            permutations,
            grid,
        } => {
            let family = ExampleFamily::from_id(example)?;
            let point = ExampleSpec { family, theta, phi };
            let rho = point.state()?;
            let set = point.observables();
            let report = compare_report(&rho, &set, &grid.to_spec(), permutations)?;
            let json = serde_json::to_string_pretty(&report).map_err(std::io::Error::from)?;
            println!("{json}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Io(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
