use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zakgabor_core::error::Error;
use zakgabor_core::frame_analysis::AnalysisOptions;
use zakgabor_core::report::{run_analyze, run_construct, run_oracle, AnalysisReport, ProblemSpec};
use zakgabor_core::zak::ThetaGrid;

/// Gabor frame analysis on discrete periodic sets.
#[derive(Parser)]
#[command(name = "zakgabor", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Problem description (JSON)
    spec: PathBuf,
    /// Theta-grid sample count
    #[arg(long = "grid", default_value_t = 256)]
    grid: usize,
    /// Relative singular-value cutoff for numerical rank
    #[arg(long = "rank-tol", default_value_t = 1e-10)]
    rank_tol: f64,
    /// Tolerance on |A - 1| and |B - 1| for the Parseval decision
    #[arg(long = "parseval-tol", default_value_t = 1e-9)]
    parseval_tol: f64,
    /// Write the report here instead of stdout
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Admissibility flags, and the full frame verdict when windows are given
    Analyze(CommonFlags),
    /// Construct Parseval windows and self-verify them
    ConstructWindows(CommonFlags),
    /// Brute-force truncated frame-operator cross-check
    OracleCheck {
        #[command(flatten)]
        common: CommonFlags,
        /// Translation truncation range
        #[arg(long = "n-max", default_value_t = 32)]
        n_max: usize,
    },
}

fn options(flags: &CommonFlags) -> AnalysisOptions {
    AnalysisOptions {
        grid: ThetaGrid::new(flags.grid.max(1)),
        rank_tol: flags.rank_tol,
        parseval_tol: flags.parseval_tol,
        ..AnalysisOptions::default()
    }
}

fn load_spec(flags: &CommonFlags) -> Result<ProblemSpec, String> {
    let text = fs::read_to_string(&flags.spec)
        .map_err(|e| format!("cannot read {}: {e}", flags.spec.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON spec: {e}"))
}

fn emit(report: &AnalysisReport, out: &Option<PathBuf>) -> Result<(), String> {
    let json = report.to_json();
    match out {
        Some(path) => fs::write(path, json + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Inadmissible { .. } => 3,
        _ => 2,
    }
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("ZAKGABOR_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
    let (flags, n_max) = match &cli.command {
        Command::Analyze(f) | Command::ConstructWindows(f) => (f, None),
        Command::OracleCheck { common, n_max } => (common, Some(*n_max)),
    };
    let opts = options(flags);
    let spec = load_spec(flags).map_err(|m| (2, m))?;
    let problem = spec.validate().map_err(|e| (exit_code_for(&e), e.to_string()))?;
    let report = match &cli.command {
        Command::Analyze(_) => run_analyze(&problem, &opts),
        Command::ConstructWindows(_) => run_construct(&problem, &opts),
        Command::OracleCheck { .. } => run_oracle(&problem, &opts, n_max.unwrap()),
    }
    .map_err(|e| (exit_code_for(&e), e.to_string()))?;
    emit(&report, &flags.out).map_err(|m| (2, m))
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
