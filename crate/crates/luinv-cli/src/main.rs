mod files;
mod run;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Compute and compare local-unitary invariants of multipartite states.
#[derive(Parser)]
#[command(name = "luinv", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a state's invariant fingerprint and print coefficient tables.
    Invariants {
        /// Input state file.
        state: std::path::PathBuf,
        /// Explicit subset, comma-separated 1-based indices (repeatable),
        /// e.g. --subsets 1,2 --subsets 1,3. Overrides --max-k.
        #[arg(long = "subsets")]
        subsets: Vec<String>,
        /// Compute every subset of size 2..=k.
        #[arg(long = "max-k", default_value_t = 2)]
        max_k: usize,
        /// Compute every unfolding position, not only position 1.
        #[arg(long)]
        all_positions: bool,
        /// Omit the literal coefficients from output and fingerprint.
        #[arg(long)]
        robust_only: bool,
        /// Write the fingerprint file here.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Compare two states or fingerprints; exit 0 if INCONCLUSIVE, 1 if
    /// certified NOT_EQUIVALENT.
    Compare {
        a: std::path::PathBuf,
        b: std::path::PathBuf,
        /// Absolute tolerance on spectra and coefficients
        /// (default 1e-8, or the LUINV_TOL environment variable).
        #[arg(long)]
        tol: Option<f64>,
        /// Emit the verdict as JSON instead of a text report.
        #[arg(long)]
        json: bool,
        /// Subset size bound when fingerprinting state inputs.
        #[arg(long = "max-k", default_value_t = 2)]
        max_k: usize,
        /// Every unfolding position when fingerprinting state inputs.
        #[arg(long)]
        all_positions: bool,
    },
    /// Emit a catalog state as a state file.
    Example {
        /// One of: ghz, w, qutrit-psi, example4-rho, example4-sigma, random.
        name: String,
        /// Parameter assignment key=value (repeatable), e.g. --param theta=0.5.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Seed for the random generators.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants { state, subsets, max_k, all_positions, robust_only, out } => {
            run::invariants(&state, &subsets, max_k, all_positions, robust_only, out.as_deref())
        }
        Command::Compare { a, b, tol, json, max_k, all_positions } => {
            run::compare(&a, &b, tol, json, max_k, all_positions)
        }
        Command::Example { name, params, seed, out } => {
            run::example(&name, &params, seed, out.as_deref())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
