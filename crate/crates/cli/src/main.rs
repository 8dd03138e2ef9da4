//! `curv`: curvature reports for metric charts, the identity verification suite and oracle benchmarks.

mod bench;
mod compute;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use curv_core::geometry::MODEL_NAMES;
use curv_core::verify::{run_suite, with_thread_cap, ModeSelection, SuiteConfig};
use curv_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "curv",
    version,
    about = "Double duals of curvature tensors, Lovelock tensors and their verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Curvature report for one metric at one point.
    Compute {
        /// Inline JSON, a path to a JSON file, or `name[:key=value,...]`.
        #[arg(long)]
        model: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ScalarMode::Float)]
        mode: ScalarMode,
        /// Coordinates of the evaluation point, comma separated (default: the model's base point).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Option<Vec<f64>>,
        /// Derivative engine: analytic, dual or fd.
        #[arg(long, default_value = "dual")]
        engine: String,
    },
    /// Run the identity verification suite.
    Verify {
        /// Regular expression matched against whole check ids.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t = VerifyMode::Rational)]
        mode: VerifyMode,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append a deliberately failing check (harness self-test).
        #[arg(long)]
        self_test_corrupt: bool,
    },
    /// Time brute-force oracles against the optimized routes, after asserting equality.
    Bench {
        /// A dimension or an inclusive range such as `4..6`.
        #[arg(long, default_value = "4..6")]
        n: String,
        #[arg(long)]
        json: bool,
    },
    /// Model catalog.
    Models {
        #[command(subcommand)]
        action: ModelsAction,
    },
}

#[derive(Subcommand, Debug)]
enum ModelsAction {
    List,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ScalarMode {
    Float,
    Rational,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyMode {
    Float,
    Rational,
    Both,
}

impl From<VerifyMode> for ModeSelection {
    fn from(m: VerifyMode) -> Self {
        match m {
            VerifyMode::Float => ModeSelection::Float,
            VerifyMode::Rational => ModeSelection::Rational,
            VerifyMode::Both => ModeSelection::Both,
        }
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_numeric() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute {
            model,
            out,
            mode,
            point,
            engine,
        } => {
            let report = compute::run(
                &model,
                mode == ScalarMode::Rational,
                point.as_deref(),
                &engine,
            )?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
            write_output(out.as_deref(), &text)
        }
        Command::Verify {
            filter,
            mode,
            seed,
            out,
            self_test_corrupt,
        } => {
            let config = SuiteConfig {
                seed,
                modes: mode.into(),
                filter,
                corrupt: self_test_corrupt,
            };
            let report = with_thread_cap(|| run_suite(&config))??;
            write_output(out.as_deref(), &report.to_json())?;
            let s = &report.summary;
            eprintln!(
                "{} checks: {} passed, {} failed, {} reported",
                s.total, s.passed, s.failed, s.reported
            );
            for f in report.failures() {
                eprintln!(
                    "FAIL {} [{}] residual {:?}",
                    f.id,
                    f.mode.name(),
                    f.residual
                );
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: format!("{} check(s) failed", s.failed),
                })
            }
        }
        Command::Bench { n, json } => {
            let (lo, hi) = bench::parse_range(&n)?;
            let rows = bench::run(lo, hi)?;
            let text = if json {
                serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"
            } else {
                bench::table(&rows)
            };
            print!("{text}");
            if rows.iter().all(|r| r.equal) {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: "oracle and optimized routes disagree".into(),
                })
            }
        }
        Command::Models {
            action: ModelsAction::List,
        } => {
            for (name, params) in MODEL_NAMES {
                println!("{name:<18} {params}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
