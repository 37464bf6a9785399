use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use creator_game::{GameTable, SweepAxis};
use creator_game_cli::commands::{self, parse_axis};
use creator_game_cli::presets::Preset;
use creator_game_cli::reproduce::reproduce;
use creator_game_cli::scenario::{self, Scenario, ScenarioFile};
use creator_game_cli::CliError;

#[derive(Parser)]
#[command(name = "creator-game", version, about = "Algorithm/creator Stackelberg game solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Scenario file (JSON).
    #[arg(required_unless_present = "preset")]
    scenario: Option<PathBuf>,
    /// Use a built-in scenario instead of a file.
    #[arg(long, value_enum, conflicts_with = "scenario")]
    preset: Option<Preset>,
}

impl Source {
    fn load(&self) -> Result<Scenario, CliError> {
        match (&self.scenario, self.preset) {
            (Some(path), _) => scenario::load(path),
            (None, Some(p)) => ScenarioFile::parse(p.json())?.validate(),
            (None, None) => Err(CliError::Usage("no scenario given".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print each strategy's creator utility and the utility gap.
    Eval(Source),
    /// Print the creator's best response and the switching delta.
    BestResponse(Source),
    /// Solve for the leader's optimal weights over the scenario's domain.
    Equilibrium(Source),
    /// Solve the single-creator game at each of several delta values.
    Sensitivity {
        #[command(flatten)]
        source: Source,
        /// Comma-separated delta values.
        #[arg(long, value_delimiter = ',', required = true)]
        deltas: Vec<f64>,
    },
    /// Sweep one or two parameters and write CSV (and optionally SVG).
    Sweep {
        #[command(flatten)]
        source: Source,
        /// name:lo:hi:steps, name one of alpha|beta|gamma|delta.
        #[arg(long, value_parser = parse_axis)]
        axis1: SweepAxis,
        #[arg(long, value_parser = parse_axis)]
        axis2: Option<SweepAxis>,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        /// SVG heatmap output path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Re-run the three worked examples and check the published numbers.
    ReproducePaper {
        /// Replace the built-in engagement table (JSON `table` section).
        #[arg(long, hide = true)]
        table: Option<PathBuf>,
    },
    /// Print a built-in scenario as JSON.
    Preset {
        #[arg(value_enum)]
        name: Preset,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Eval(src) => commands::eval(&src.load()?, &mut out),
        Command::BestResponse(src) => commands::best(&src.load()?, &mut out),
        Command::Equilibrium(src) => commands::equilibrium(&src.load()?, &mut out),
        Command::Sensitivity { source, deltas } => commands::sensitivity(&source.load()?, &deltas, &mut out),
        Command::Sweep {
            source,
            axis1,
            axis2,
            out: csv,
            svg,
        } => commands::sweep(&source.load()?, axis1, axis2, &csv, svg.as_deref(), &mut out),
        Command::ReproducePaper { table } => {
            let table = match table {
                Some(path) => scenario::load_table(&path)?,
                None => GameTable::illustrative(),
            };
            reproduce(&table, &mut out)
        }
        Command::Preset { name } => writeln!(out, "{}", name.json()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
