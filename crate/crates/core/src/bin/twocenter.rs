use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twocenter::io_cli::{
    read_instance, render_svg, run_bench, run_check, run_solver, CheckReport, Mode, Problem,
    RunReport, Suite,
};
use twocenter::one_center::DEFAULT_SEED;

#[derive(Parser)]
#[command(name = "twocenter", about = "Two-center problems on planar disks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Pierce,
    CoverGeneral,
    CoverRestricted,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Pierce => Problem::Pierce,
            ProblemArg::CoverGeneral => Problem::CoverGeneral,
            ProblemArg::CoverRestricted => Problem::CoverRestricted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Bipartition,
    Approx,
    Gonzalez,
    Sixapprox,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Bipartition => Mode::Bipartition,
            ModeArg::Approx => Mode::Approx,
            ModeArg::Gonzalez => Mode::Gonzalez,
            ModeArg::Sixapprox => Mode::Sixapprox,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ratios,
    Agreement,
    Scaling,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Ratios => Suite::Ratios,
            SuiteArg::Agreement => Suite::Agreement,
            SuiteArg::Scaling => Suite::Scaling,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print a CSV report
    Solve {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Append a wall_ms column
        #[arg(long)]
        timing: bool,
    },
    /// Run a benchmark suite and write <suite>.csv into the output directory
    Bench {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Instances (ratios, agreement) or repetitions per size (scaling)
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Compare an exact solver with its brute-force oracle
    Check {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let ok = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    match cli.command {
        Command::Solve {
            problem,
            mode,
            eps,
            input,
            svg,
            tol,
            seed,
            timing,
        } => {
            let instance = match read_instance(&input) {
                Ok(i) => i,
                Err(e) => {
                    eprintln!("error: {}: {e}", input.display());
                    return ExitCode::from(2);
                }
            };
            let report = match run_solver(&instance, problem.into(), mode.into(), eps, tol, seed, timing) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(if e.is_usage() { 1 } else { 2 });
                }
            };
            println!("{}", RunReport::csv_header(timing));
            println!("{}", report.csv_row());
            if let Some(path) = svg {
                let svg = render_svg(&instance, report.c1, report.c2, report.radius);
                if let Err(e) = std::fs::write(&path, svg) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Command::Bench {
            suite,
            seed,
            out,
            count,
        } => match run_bench(suite.into(), seed, count, &out) {
            Ok(path) => {
                println!("{}", path.display());
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Check {
            problem,
            input,
            tol,
        } => {
            let instance = match read_instance(&input) {
                Ok(i) => i,
                Err(e) => {
                    eprintln!("error: {}: {e}", input.display());
                    return ExitCode::from(2);
                }
            };
            match run_check(&instance, problem.into(), tol) {
                Ok(report) => {
                    println!("{}", CheckReport::csv_header());
                    println!("{}", report.csv_row());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
