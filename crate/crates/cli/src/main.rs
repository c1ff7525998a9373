use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasiarr::builtin::BuiltinSpec;
use quasiarr::error::CliError;
use quasiarr::format::{parse_matrix, write_matrix, write_quasi};
use quasiarr::parallel::{par_brute_force_count, par_divisor_table, par_lcm_period};
use quasiarr::report::{run_verify, Verdict};
use quasiarr_core::counting::{interpolate_quasi_with, DEFAULT_BUDGET};
use quasiarr_core::IntMatrix;

#[derive(Parser)]
#[command(name = "quasiarr", version, about = "Characteristic quasi-polynomials of integral hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// A, B, C, D, Adeform or Ddeform
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    /// Divisibility chain, comma separated, e.g. `4,2`
    #[arg(long, value_delimiter = ',')]
    s: Option<Vec<u64>>,
    /// Number of leading even entries of s (Ddeform only)
    #[arg(long)]
    r: Option<usize>,
}

impl SpecArgs {
    fn is_empty(&self) -> bool {
        self.family.is_none() && self.m.is_none() && self.s.is_none() && self.r.is_none()
    }

    fn resolve(&self) -> Result<BuiltinSpec, CliError> {
        let family = self.family.as_deref().ok_or_else(|| CliError::usage("--family is required"))?;
        let m = self.m.ok_or_else(|| CliError::usage("--m is required"))?;
        BuiltinSpec::from_parts(family, m, self.s.as_deref(), self.r)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    Brute,
    Snf,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuasiMethod {
    Interpolate,
    ClosedForm,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix of a built-in arrangement
    Gen(SpecArgs),
    /// Compute the lcm period of a matrix file
    Period {
        file: PathBuf,
        /// Only consider column subsets up to this size (gives a lower bound)
        #[arg(long)]
        max_subset_size: Option<usize>,
    },
    /// Count points of (Z/qZ)^m off every hyperplane
    Count {
        file: PathBuf,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "snf")]
        method: CountMethod,
        /// Maximum number of points for the brute-force method
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print the characteristic quasi-polynomial
    Quasi {
        file: Option<PathBuf>,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "interpolate")]
        method: QuasiMethod,
        /// Counting method feeding the interpolation
        #[arg(long, value_enum, default_value = "snf")]
        counter: CountMethod,
    },
    /// Compare brute force, SNF counting and the closed form for q = 1..=qmax
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        qmax: u64,
        #[arg(long)]
        json: bool,
        /// Maximum number of points for the brute-force column
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn read_matrix(path: &Path) -> Result<IntMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_matrix(&text)
}

fn interpolate(matrix: &IntMatrix, counter: CountMethod) -> Result<String, CliError> {
    let rho = par_lcm_period(matrix, None)?
        .to_u64()
        .ok_or_else(|| CliError::usage("period too large to interpolate"))?;
    let qp = match counter {
        CountMethod::Snf => {
            let table = par_divisor_table(matrix)?;
            interpolate_quasi_with(matrix.rows(), rho, |q| table.count(q))?
        }
        CountMethod::Brute => {
            interpolate_quasi_with(matrix.rows(), rho, |q| par_brute_force_count(matrix, q, DEFAULT_BUDGET))?
        }
    };
    Ok(write_quasi(&qp))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen(spec) => print!("{}", write_matrix(&spec.resolve()?.matrix()?)),
        Command::Period { file, max_subset_size } => {
            let period = par_lcm_period(&read_matrix(&file)?, max_subset_size)?;
            if period.is_lower_bound() {
                println!("rho = {} (lower-bound)", period.rho);
            } else {
                println!("rho = {}", period.rho);
            }
        }
        Command::Count { file, q, method, budget } => {
            let matrix = read_matrix(&file)?;
            let count = match method {
                CountMethod::Brute => par_brute_force_count(&matrix, q, budget)?,
                CountMethod::Snf => par_divisor_table(&matrix)?.count(q)?,
            };
            println!("{count}");
        }
        Command::Quasi { file, spec, method, counter } => {
            let out = match (file, method) {
                (Some(_), _) if !spec.is_empty() => {
                    return Err(CliError::usage("give either a matrix file or --family, not both"));
                }
                (Some(_), QuasiMethod::ClosedForm) => {
                    return Err(CliError::usage("--method closed-form needs a --family spec"));
                }
                (Some(path), QuasiMethod::Interpolate) => interpolate(&read_matrix(&path)?, counter)?,
                (None, QuasiMethod::Interpolate) => interpolate(&spec.resolve()?.matrix()?, counter)?,
                (None, QuasiMethod::ClosedForm) => write_quasi(&spec.resolve()?.closed_form()?),
            };
            print!("{out}");
        }
        Command::Verify { spec, qmax, json, budget } => {
            let report = run_verify(&spec.resolve()?, qmax, budget)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.verdict == Verdict::Fail {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
