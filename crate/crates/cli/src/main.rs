//! Command-line front end: compute individual objects, run identity checks
//! and suites, and emit human-readable or machine-readable reports.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use clap::{Parser, Subcommand};
use schurpf::combinat::Partition;
use schurpf::symfun::{schur, weighted_sum, WeightKind};
use schurpf::verify::suite::run_suite_with;
use schurpf::verify::{run_check, CheckParams, SuiteLevel, VerificationReport};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "schurpf",
    about = "Exact verification of symmetric-function and Pfaffian identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the four-parameter row weight of a partition as a monomial in a, b, c, d.
    Omega {
        /// Comma-separated weakly decreasing parts, e.g. "5,4,4,1"; empty for the empty partition.
        #[arg(default_value = "")]
        partition: String,
    },
    /// Print a Schur polynomial in a given number of variables.
    Schur {
        #[arg(default_value = "")]
        partition: String,
        /// Number of variables x1..xM.
        #[arg(long)]
        vars: usize,
    },
    /// Print a weighted truncated sum of Schur-type polynomials.
    Expand {
        /// Weight/basis kind: stanley-omega, even-even, big-schur, macdonald.
        #[arg(long)]
        kind: String,
        /// Index n; the sum uses 2n variables.
        #[arg(long)]
        n: u32,
        /// Degree cap D.
        #[arg(long)]
        degree: u32,
        /// Retained power of q (macdonald only).
        #[arg(long, default_value_t = 3)]
        q_order: u32,
    },
    /// Run one registered identity check.
    Check {
        /// Check id, e.g. "msf" or "zn-pfaffian".
        id: String,
        #[arg(long)]
        n: Option<u32>,
        /// Column count N (minor summation only).
        #[arg(long)]
        big_n: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        trials: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_size: Option<u32>,
        #[arg(long)]
        q_order: Option<u32>,
        /// Emit the report record as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run every registered check at the smoke or full parameter grid.
    Suite {
        #[arg(long, default_value = "smoke")]
        level: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the report array as JSON on stdout.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report array to a file.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

fn fail_usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// JSON with the timing normalized, so equal runs are byte-identical.
/// Serialized straight from the struct to keep the schema field order.
fn report_json(r: &VerificationReport) -> String {
    serde_json::to_string(&r.normalized()).expect("reports serialize")
}

fn reports_json(reports: &[VerificationReport]) -> String {
    let items: Vec<String> = reports.iter().map(report_json).collect();
    format!("[{}]", items.join(","))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Omega { partition } => match Partition::parse(&partition) {
            Ok(lam) => {
                println!("{}", lam.omega_weight());
                ExitCode::SUCCESS
            }
            Err(e) => fail_usage(&e.to_string()),
        },
        Command::Schur { partition, vars } => {
            let lam = match Partition::parse(&partition) {
                Ok(l) => l,
                Err(e) => return fail_usage(&e.to_string()),
            };
            match schur(&lam, vars) {
                Ok(p) => {
                    println!("{p}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail_usage(&e.to_string()),
            }
        }
        Command::Expand {
            kind,
            n,
            degree,
            q_order,
        } => {
            let Some(kind) = WeightKind::parse(&kind) else {
                return fail_usage(
                    "unknown kind; expected stanley-omega, even-even, big-schur or macdonald",
                );
            };
            if n == 0 {
                return fail_usage("n must be positive");
            }
            match weighted_sum(kind, 2 * n as usize, degree, q_order) {
                Ok(sum) => {
                    println!("{}", sum.value);
                    ExitCode::SUCCESS
                }
                Err(e) => fail_usage(&e.to_string()),
            }
        }
        Command::Check {
            id,
            n,
            big_n,
            degree,
            trials,
            seed,
            max_size,
            q_order,
            json,
        } => {
            let params = CheckParams {
                n,
                big_n,
                degree,
                trials,
                seed,
                max_size,
                q_order,
            };
            match run_check(&id, &params) {
                Ok(report) => {
                    if json {
                        println!("{}", report_json(&report));
                    } else {
                        println!("{}", report.human_line());
                    }
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail_usage(&e.to_string()),
            }
        }
        Command::Suite {
            level,
            seed,
            json,
            out,
        } => {
            let Some(level) = SuiteLevel::parse(&level) else {
                return fail_usage("unknown level; expected smoke or full");
            };
            let reports = run_suite_with(level, seed, None);
            let json_array = reports_json(&reports);
            if let Some(path) = &out {
                let mut file = match std::fs::File::create(path) {
                    Ok(f) => f,
                    Err(e) => return fail_usage(&format!("cannot write {}: {e}", path.display())),
                };
                if let Err(e) = writeln!(file, "{json_array}") {
                    return fail_usage(&format!("cannot write {}: {e}", path.display()));
                }
            }
            if json {
                println!("{json_array}");
            } else {
                for r in &reports {
                    println!("{}", r.human_line());
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                println!("{} / {} checks passed", passed, reports.len());
            }
            if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
