use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bkm_bench::config::SweepSection;
use bkm_bench::output::write_csv;
use bkm_bench::{
    builtin_problems, convergence_sweep, run, BenchError, BoundaryCounts, ConfigFile, ExperimentConfig,
    ExperimentResult, Precision, Result,
};
use bkm_core::Scheme;
use clap::{Args, Parser, Subcommand};

/// Boundary knot method experiments on the built-in test problems.
#[derive(Parser)]
#[command(name = "bkm-bench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in problems and their defaults.
    ListProblems,
    /// Run one experiment and write a single CSV row.
    Run(RunArgs),
    /// Run a convergence sweep over boundary knot counts.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    inner_knots: Option<usize>,
    #[arg(long)]
    eval_knots: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML file with experiment settings and the domain description.
    #[arg(long)]
    domain_config: Option<PathBuf>,
    #[arg(long, value_enum)]
    precision: Option<Precision>,
    /// Write NaN for wall_ms so that repeated runs give identical files.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// unsym or sym
    #[arg(long)]
    scheme: Option<Scheme>,
    /// Total count, or comma-separated counts per boundary component.
    #[arg(long)]
    boundary_knots: Option<BoundaryCounts>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated schemes; both when omitted.
    #[arg(long, value_delimiter = ',')]
    scheme: Vec<Scheme>,
    /// Comma-separated total boundary knot counts.
    #[arg(long, value_delimiter = ',')]
    boundary_knots: Vec<usize>,
}

impl CommonArgs {
    fn config_file(&self) -> Result<ConfigFile> {
        let base = match &self.domain_config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        Ok(base.merge(ConfigFile {
            problem: self.problem.clone(),
            inner_knots: self.inner_knots,
            eval_knots: self.eval_knots,
            seed: self.seed,
            out: self.out.clone(),
            precision: self.precision,
            timing: self.no_timing.then_some(false),
            ..ConfigFile::default()
        }))
    }
}

fn emit(out: Option<&PathBuf>, results: &[ExperimentResult]) -> Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|source| BenchError::Io { context: format!("creating {}", path.display()), source })?;
            write_csv(BufWriter::new(file), results)
        }
        None => write_csv(io::stdout().lock(), results),
    }
}

fn list_problems() -> Result<()> {
    let mut out = io::stdout().lock();
    let write = |out: &mut io::StdoutLock, line: String| {
        writeln!(out, "{line}").map_err(|source| BenchError::Io { context: "writing output".into(), source })
    };
    write(&mut out, format!("{:<20} {:>3} {:>8} {:>6} {:>6} {:>5}  description", "name", "dim", "boundary", "inner", "eval", "prec"))?;
    for p in builtin_problems() {
        let precision = format!("{:?}", Precision::default_for(&p)).to_lowercase();
        write(
            &mut out,
            format!(
                "{:<20} {:>3} {:>8} {:>6} {:>6} {:>5}  {}",
                p.name,
                p.dim(),
                p.default_boundary_knots,
                p.default_inner_knots,
                p.default_eval_knots,
                precision,
                p.description
            ),
        )?;
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::ListProblems => list_problems(),
        Command::Run(args) => {
            let file = args.common.config_file()?.merge(ConfigFile {
                scheme: args.scheme,
                boundary_knots: args.boundary_knots,
                ..ConfigFile::default()
            });
            let cfg = ExperimentConfig::from_file(&file)?;
            let result = run(&cfg)?;
            emit(cfg.out.as_ref(), &[result])
        }
        Command::Sweep(args) => {
            let file = args.common.config_file()?;
            let section = file.sweep.clone().unwrap_or_default();
            let SweepSection { boundary_knots, schemes } = section;
            let counts = if args.boundary_knots.is_empty() { boundary_knots.unwrap_or_default() } else { args.boundary_knots };
            let schemes = if !args.scheme.is_empty() {
                args.scheme
            } else {
                schemes.unwrap_or_else(|| vec![Scheme::Unsymmetric, Scheme::Symmetric])
            };
            let cfg = ExperimentConfig::from_file(&file)?;
            let results = convergence_sweep(&cfg, &schemes, &counts)?;
            emit(cfg.out.as_ref(), &results)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
