use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eur_core::bounds::BoundOptions;
use eur_core::complementarity::{AdmixtureMode, QVariant};
use eur_core::harness::{
    self, figure4_scatter, io as files, run_example1, run_example2, run_figure3, run_figure4, Example1Config,
    Example2Config, FigureConfig, FigureRun, Table,
};
use eur_core::Error;

/// Entropic uncertainty bounds with quantum memory.
#[derive(Parser)]
#[command(name = "eur", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Three-qutrit GHZ example: bounds and their differences as JSON.
    Example1 {
        #[arg(long, default_value_t = 0.95)]
        a: f64,
        #[arg(long, default_value_t = std::f64::consts::PI)]
        phi: f64,
        #[arg(long, default_value_t = QVariant::Tilde)]
        q_variant: QVariant,
    },
    /// Sweep of the tilt parameter `a` over [0, 1] as CSV.
    Example2 {
        /// Number of grid intervals (the grid has N + 1 points).
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = std::f64::consts::PI)]
        phi: f64,
        #[arg(long, default_value_t = QVariant::Tilde)]
        q_variant: QVariant,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random three-qutrit states with random measurements, as CSV.
    Fig3(FigureArgs),
    /// Coherence sums of random two-qutrit states against their bound, as CSV.
    Fig4 {
        #[command(flatten)]
        figure: FigureArgs,
        /// Also write a scatter plot.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Bound report for a state and measurements read from JSON files.
    Bound {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        measurements: PathBuf,
        /// Measurement groups per memory, e.g. "0,1;2".
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        options: OptionArgs,
    },
    /// Key-rate bounds for a two-party state.
    Qkd {
        #[arg(long)]
        state: PathBuf,
        /// Alice's two measurements.
        #[arg(long)]
        alice: PathBuf,
        /// Bob's two measurements.
        #[arg(long)]
        bob: PathBuf,
        #[arg(long, default_value_t = QVariant::Tilde)]
        q_variant: QVariant,
    },
    /// Unilateral coherence sum and its lower bound.
    Coherence {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        measurements: PathBuf,
        /// Required when the state has more than one memory subsystem.
        #[arg(long)]
        partition: Option<String>,
        #[command(flatten)]
        options: OptionArgs,
    },
}

#[derive(Args)]
struct FigureArgs {
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = QVariant::Tilde)]
    q_variant: QVariant,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OptionArgs {
    #[arg(long, default_value_t = QVariant::Tilde)]
    q_variant: QVariant,
    #[arg(long, default_value_t = AdmixtureMode::MubOnly)]
    admixture: AdmixtureMode,
}

impl OptionArgs {
    fn options(&self) -> BoundOptions {
        BoundOptions::new(self.q_variant, self.admixture)
    }
}

impl FigureArgs {
    fn config(&self) -> FigureConfig {
        FigureConfig { samples: self.samples, master_seed: self.seed, q_variant: self.q_variant }
    }
}

enum Failure {
    Validation(String),
    Numeric(String),
}

impl Failure {
    fn input(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant { .. } | Error::NoConvergence(_) => Failure::Numeric(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Validation(e.to_string())
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
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    io::stdout().write_all(files::to_json(value).as_bytes())?;
    Ok(())
}

fn emit_table(table: &Table, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => table.write_csv(fs::File::create(path)?)?,
        None => table.write_csv(io::stdout().lock())?,
    }
    Ok(())
}

fn check_figure(run: &FigureRun, column: &str, fatal: bool) -> Result<(), Failure> {
    let bad = run.negatives(column);
    if bad == 0 {
        return Ok(());
    }
    let msg = format!("{bad} of {} samples have {column} < 0", run.records.len());
    if fatal {
        return Err(Failure::Numeric(msg));
    }
    eprintln!("warning: {msg}");
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Example1 { a, phi, q_variant } => {
            let config = Example1Config { a, phi, q_variant, ..Example1Config::default() };
            emit_json(&run_example1(&config)?)
        }
        Command::Example2 { steps, phi, q_variant, out } => {
            let config = Example2Config { steps, phi, q_variant, ..Example2Config::default() };
            let result = run_example2(&config)?;
            emit_table(&result.to_table(), out.as_deref())?;
            let failing = result.rows.iter().filter(|r| !r.ordering_holds()).count();
            if failing > 0 {
                eprintln!("warning: ordering LB2 >= lb2 >= LB1 >= lb1 fails at {failing} of {} points", result.rows.len());
            }
            Ok(())
        }
        Command::Fig3(args) => {
            let result = run_figure3(&args.config())?;
            emit_table(&result.to_table(), args.out.as_deref())?;
            check_figure(&result, "LB2-lb2", false)?;
            check_figure(&result, "LB1-lb1", true)?;
            check_figure(&result, "lhs-optimal", true)
        }
        Command::Fig4 { figure, svg } => {
            let result = run_figure4(&figure.config())?;
            emit_table(&result.to_table(), figure.out.as_deref())?;
            if let Some(path) = svg {
                fs::write(path, figure4_scatter(&result).to_svg())?;
            }
            check_figure(&result, "printed_slack", false)?;
            check_figure(&result, "slack", true)
        }
        Command::Bound { state, measurements, partition, options } => {
            let rho = files::read_state(&state).map_err(Failure::input)?;
            let ms = files::read_projective_measurements(&measurements).map_err(Failure::input)?;
            emit_json(&harness::run_bound(&rho, &ms, &partition, options.options())?)
        }
        Command::Qkd { state, alice, bob, q_variant } => {
            let rho = files::read_state(&state).map_err(Failure::input)?;
            let alice = files::read_projective_measurements(&alice).map_err(Failure::input)?;
            let bob = files::read_projective_measurements(&bob).map_err(Failure::input)?;
            emit_json(&harness::run_qkd(&rho, &alice, &bob, q_variant)?)
        }
        Command::Coherence { state, measurements, partition, options } => {
            let rho = files::read_state(&state).map_err(Failure::input)?;
            let ms = files::read_projective_measurements(&measurements).map_err(Failure::input)?;
            emit_json(&harness::run_coherence(&rho, &ms, partition.as_deref(), options.options())?)
        }
    }
}
