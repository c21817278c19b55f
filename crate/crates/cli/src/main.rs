use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use forge_cli::commands::{self, Over};
use forge_cli::{run_demo, Report, RunConfig, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "forge", version, about = "Exact checks for minimal A-infinity structures on a graded field")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full pipeline.
    Demo {
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Defaults to 2n + 3.
        #[arg(long)]
        max_arity: Option<usize>,
        #[arg(long, default_value_t = 17)]
        seed: u64,
        /// JSON config; its keys override the flags.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Record wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
        /// Write every operation of the extended structure to this file.
        #[arg(long)]
        structure_dump: Option<PathBuf>,
    },
    /// Hochschild cohomology of a small algebra by brute force.
    Hh {
        algebra: PathBuf,
        #[arg(long, default_value_t = 3)]
        imax: usize,
    },
    /// Compare HH of a tensor product with the tensor product of HH.
    Kunneth {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 3)]
        imax: usize,
    },
    /// Hochschild cohomology of the Laurent polynomials.
    Laurent {
        #[arg(long, default_value_t = 4)]
        imax: usize,
        #[arg(long, default_value_t = 17)]
        seed: u64,
    },
    /// Obstruction certificate for an automorphism spec.
    Obstruction {
        #[arg(long)]
        f1: PathBuf,
    },
    /// Twisted complex tools.
    Tw {
        #[command(subcommand)]
        cmd: TwCmd,
    },
}

#[derive(Subcommand)]
enum TwCmd {
    /// Check the Maurer-Cartan equation.
    Check {
        complex: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Over::Deformed)]
        over: Over,
    },
}

/// Runs the command; also returns the report path a config file asked for.
fn run(cli: &Cli) -> Result<(Report, Option<PathBuf>)> {
    let report = match &cli.cmd {
        Cmd::Demo { n, max_arity, seed, config, timings, structure_dump } => {
            let mut cfg = RunConfig {
                n: *n,
                max_arity: *max_arity,
                seed: *seed,
                timings: *timings,
                structure_dump: structure_dump.clone(),
                ..RunConfig::default()
            };
            cfg.report = cli.report.clone();
            if let Some(p) = config {
                let src = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                cfg = cfg.overlay_json(&src)?;
            }
            return Ok((run_demo(&cfg)?, cfg.report));
        }
        Cmd::Hh { algebra, imax } => commands::cmd_hh(algebra, *imax),
        Cmd::Kunneth { a, b, imax } => commands::cmd_kunneth(a, b, *imax),
        Cmd::Laurent { imax, seed } => commands::cmd_laurent(*imax, *seed),
        Cmd::Obstruction { f1 } => commands::cmd_obstruction(f1),
        Cmd::Tw { cmd: TwCmd::Check { complex, n, over } } => commands::cmd_tw_check(complex, *n, *over),
    };
    Ok((report?, None))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (report, report_path) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let target = report_path.or_else(|| cli.report.clone());
    let text = report.to_json();
    match target {
        Some(p) => {
            if let Err(e) = fs::write(&p, &text) {
                eprintln!("error: writing {}: {e}", p.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{text}"),
    }
    match &report.failed_step {
        Some(step) => eprintln!("{}: failed at {step}", report.command),
        None => eprintln!("{}: all checks passed", report.command),
    }
    ExitCode::from(report.exit_code() as u8)
}
