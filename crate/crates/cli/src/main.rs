//! `polycomp`: eigenstructure, completion feasibility, realization and the
//! exhaustive oracle from the command line.
//!
//! Exit codes: 0 feasible or success, 1 infeasible or not found, 2 input
//! error, 3 domain error, 4 budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use polycomp::algebra::FieldTag;
use polycomp::feasibility::{check, check_existence, Theorem};
use polycomp::io::{
    eigenstructure_from_json, eigenstructure_to_json, matrix_from_json, matrix_to_json, target_from_json,
};
use polycomp::polymatrix::eigenstructure;
use polycomp::realize::oracle::{run_grid, Grid};
use polycomp::realize::{realize_low_degree, search_matrix, SearchBudget};
use polycomp::Error;

#[derive(Parser)]
#[command(
    name = "polycomp",
    version,
    about = "Row completion of polynomial matrices with prescribed eigenstructure"
)]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenstructure of a matrix.
    Eig {
        /// Matrix JSON file.
        matrix: PathBuf,
    },
    /// Whether rows can be added to P to reach a (partial) target.
    Check {
        /// Matrix JSON file for P.
        matrix: PathBuf,
        /// Number of rows to add.
        #[arg(short = 'z', long)]
        add_rows: usize,
        /// Target JSON file; absent components are unprescribed.
        #[arg(short, long)]
        target: PathBuf,
        /// full, hom+cols, hom+rows, hom, finite, infinite or exists.
        #[arg(long, default_value = "full")]
        theorem: Theorem,
    },
    /// A matrix with a given eigenstructure.
    Realize {
        /// Eigenstructure JSON file.
        #[arg(short, long)]
        target: PathBuf,
        /// Field when the target file has none: Q, gf2, GF(3), ...
        #[arg(long)]
        field: Option<FieldTag>,
        /// Exhaustive search instead of the degree <= 1 construction.
        #[arg(long)]
        search: bool,
        /// Largest entry degree searched; the target degree by default.
        #[arg(long)]
        max_deg: Option<usize>,
        /// Largest enumeration accepted.
        #[arg(long, env = "POLYCOMP_BUDGET")]
        budget: Option<u128>,
    },
    /// Every checker against exhaustive search over a grid of matrices.
    Oracle {
        /// For example "gf2 n=1 m=1 z=1 d=1".
        #[arg(long)]
        grid: Grid,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Restrict to one theorem; all completion theorems by default.
        #[arg(long)]
        theorem: Option<Theorem>,
        /// Largest number of (P, W) pairs accepted.
        #[arg(long, env = "POLYCOMP_BUDGET")]
        budget: Option<u128>,
    },
}

/// A JSON result and the exit code it carries.
struct Outcome {
    body: Value,
    code: u8,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Self { body, code: 0 }
    }

    fn verdict(body: Value, success: bool) -> Self {
        Self {
            body,
            code: if success { 0 } else { 1 },
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible(_) => 1,
        Error::ZeroMatrix | Error::ConstantMatrix | Error::ZeroPolynomial(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse(text: &str) -> Value {
    serde_json::from_str(text).expect("library output is valid JSON")
}

fn budget(max: Option<u128>) -> SearchBudget {
    SearchBudget::new(max.unwrap_or(SearchBudget::DEFAULT_MAX))
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Eig { matrix } => {
            let p = matrix_from_json(&read(&matrix)?)?;
            Ok(Outcome::ok(parse(&eigenstructure_to_json(&eigenstructure(&p)?))))
        }
        Command::Check {
            matrix,
            add_rows,
            target,
            theorem,
        } => {
            let p = matrix_from_json(&read(&matrix)?)?;
            let t = target_from_json(&read(&target)?, add_rows, Some(p.field()))?;
            let report = check(theorem, &eigenstructure(&p)?, &t)?;
            let feasible = report.feasible;
            Ok(Outcome::verdict(serde_json::to_value(report).unwrap(), feasible))
        }
        Command::Realize {
            target,
            field,
            search,
            max_deg,
            budget: max,
        } => {
            let t = eigenstructure_from_json(&read(&target)?, field)?;
            let existence = check_existence(&t)?;
            if !existence.feasible {
                let body = json!({"status": "infeasible", "violations": existence.violations});
                return Ok(Outcome::verdict(body, false));
            }
            if !search {
                return Ok(Outcome::ok(parse(&matrix_to_json(&realize_low_degree(&t)?))));
            }
            let (rows, cols) = t.dims;
            let found = search_matrix(
                t.field,
                rows,
                cols,
                max_deg.unwrap_or(t.degree),
                |es| *es == t,
                &budget(max),
            );
            match found {
                Ok(Some(m)) => Ok(Outcome::ok(parse(&matrix_to_json(&m)))),
                Ok(None) => Ok(Outcome::verdict(json!({"status": "not found"}), false)),
                Err(Error::BudgetExceeded { needed, budget }) => Ok(Outcome {
                    body: json!({
                        "status": "not found within budget",
                        "needed": needed.to_string(),
                        "budget": budget.to_string(),
                    }),
                    code: 4,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Oracle {
            grid,
            jobs,
            theorem,
            budget: max,
        } => {
            let mut b = budget(max);
            if let Some(j) = jobs {
                b = b.with_parallel(j);
            }
            let theorems = theorem.map_or(Theorem::COMPLETION.to_vec(), |t| vec![t]);
            if theorems.contains(&Theorem::Exists) {
                return Err(Error::InvalidParameter(
                    "the oracle compares completion theorems only".into(),
                ));
            }
            let report = run_grid(&grid, &theorems, &b)?;
            let clean = report.is_clean();
            Ok(Outcome::verdict(serde_json::to_value(report).unwrap(), clean))
        }
    }
}

fn emit(output: Option<&Path>, body: &Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(body).unwrap();
    match output {
        Some(path) => fs::write(path, text + "\n"),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if let Err(e) = emit(cli.output.as_deref(), &out.body) {
                eprintln!("{}", json!({"error": e.to_string()}));
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string(), "exit": exit_code(&e)}));
            ExitCode::from(exit_code(&e))
        }
    }
}
