//! `stdbasis`: Groebner and standard bases of linear-code ideals from the
//! command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

mod commands;
mod input;
mod trace;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use commands::{Method, RandomBatch};
use stdbasis::MonomialOrder;

#[derive(Debug)]
pub enum CliError {
    Input(String),
}

impl From<stdbasis::Error> for CliError {
    fn from(e: stdbasis::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "stdbasis",
    version,
    about = "Groebner and standard bases of linear-code ideals over GF(p)"
)]
struct Cli {
    /// Dump reduction steps (pairs, divisions, Mora L-appends) to stderr.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of the code ideal.
    Groebner {
        matrix: PathBuf,
        #[arg(long, default_value = "lex", value_parser = parse_order)]
        order: MonomialOrder,
    },
    /// Standard basis of the translated code ideal.
    StandardBasis {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "closed-form")]
        method: Method,
        #[arg(long, default_value = "negdeglex", value_parser = parse_order)]
        order: MonomialOrder,
    },
    /// Check the closed form: generation, standard-basis criterion, leading terms.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        matrix: Option<PathBuf>,
        /// Drop basis element INDEX (one-based) before checking.
        #[arg(long, value_name = "INDEX", num_args = 0..=1, default_missing_value = "1")]
        inject_drop: Option<usize>,
        /// Verify N random standard-form matrices instead of a file.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Prime for random matrices (default: one of 2, 3, 5 per instance).
        #[arg(long, requires = "random")]
        prime: Option<u64>,
        #[arg(short, long = "rows", requires = "random")]
        k: Option<usize>,
        #[arg(short, long = "cols", requires = "random")]
        n: Option<usize>,
        #[arg(long, default_value = "negdeglex", value_parser = parse_order)]
        order: MonomialOrder,
    },
    /// Normal form of a polynomial: remainder (global order) or weak normal
    /// form with unit certificate (local order).
    Nf {
        poly: String,
        /// `p=..`, `n=..`, then one polynomial per line; or a matrix file.
        basis: PathBuf,
        #[arg(long, default_value = "lex", value_parser = parse_order)]
        order: MonomialOrder,
    },
    /// Row-reduce a matrix to standard form `(I_k | M)`.
    StandardForm { matrix: PathBuf },
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse::<MonomialOrder>()
        .map_err(|_| "expected one of lex, deglex, degrevlex, negdeglex".to_string())
}

fn check_random(count: usize, prime: Option<u64>, k: Option<usize>, n: Option<usize>) -> Result<(), CliError> {
    if let Some(p) = prime {
        if !stdbasis::field::is_prime(p) {
            return Err(CliError::Input(format!("--prime {p} is not a prime")));
        }
    }
    if let (Some(k), Some(n)) = (k, n) {
        if k > n {
            return Err(CliError::Input(format!("k={k} exceeds n={n}")));
        }
    }
    if count == 0 {
        return Err(CliError::Input("--random needs at least one instance".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let tracing = cli.trace;
    match cli.command {
        Command::Groebner { matrix, order } => {
            let g = input::read_matrix(&matrix)?;
            Ok((commands::groebner(&g, order, tracing)?, true))
        }
        Command::StandardBasis { matrix, method, order } => {
            let g = input::read_matrix(&matrix)?;
            Ok((commands::standard_basis(&g, method, order, tracing)?, true))
        }
        Command::Verify {
            matrix,
            inject_drop,
            random,
            seed,
            prime,
            k,
            n,
            order,
        } => {
            if order.is_global() {
                return Err(CliError::Input(format!(
                    "{order} is a global order; verify needs negdeglex"
                )));
            }
            let out = match (matrix, random) {
                (_, Some(count)) => {
                    check_random(count, prime, k, n)?;
                    let batch = RandomBatch {
                        count,
                        seed,
                        p: prime,
                        k,
                        n,
                    };
                    commands::verify_random(&batch, inject_drop, tracing)?
                }
                (Some(path), None) => commands::verify_matrix(&input::read_matrix(&path)?, inject_drop)?,
                (None, None) => unreachable!("clap requires a matrix or --random"),
            };
            Ok((out.text, out.passed))
        }
        Command::Nf { poly, basis, order } => {
            let b = input::read_basis(&basis, order)?;
            Ok((commands::nf(&poly, &b, tracing)?, true))
        }
        Command::StandardForm { matrix } => {
            let raw = input::read_raw_matrix(&matrix)?;
            Ok((commands::standard_form_cmd(&raw)?, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, passed)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
