use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use eo_entangler::harness::{
    cooperativity_grid, entanglement_dataset, fidelity_dataset, figure_command, load_config, rates_dataset, run_sweep, spectrum_dataset,
    Dataset, Exec, Format, RunConfig, RunError,
};

#[derive(Parser)]
#[command(name = "eo-entangler", version, about = "Electro-optic entanglement source calculator")]
struct Cli {
    /// JSON run configuration (or a bare system-parameter object). Defaults to the reference device.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format; overrides the configuration.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Evaluate sweep points on a worker pool (size capped by EO_ENTANGLER_THREADS).
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Loss rates, cooperativity, occupations and bandwidths.
    Rates,
    /// Output photon-flux spectra of both ports.
    Spectrum {
        /// Half width of the frequency window in Hz (default: 4 emission bandwidths).
        #[arg(long)]
        half_span_hz: Option<f64>,
        #[arg(long, default_value_t = 1001)]
        points: usize,
    },
    /// E_N, band-averaged E_F, bandwidth and ebit rate over a cooperativity grid.
    Entanglement {
        #[arg(long, default_value_t = 0.01)]
        c_min: f64,
        #[arg(long, default_value_t = 0.99)]
        c_max: f64,
        #[arg(long, default_value_t = 99)]
        points: usize,
    },
    /// Teleportation and conversion fidelities for the configured states.
    Fidelity {
        #[arg(long, default_value_t = 0.01)]
        c_min: f64,
        #[arg(long, default_value_t = 0.99)]
        c_max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// Bath temperatures in K (default: the configured one).
        #[arg(long, value_delimiter = ',')]
        temps: Vec<f64>,
    },
    /// Evaluate the configured outputs over the configured sweep.
    Sweep,
    /// Dataset behind one figure: fig4a, fig4b, fig5a, fig5b, fig6b, fig6d, fig6e.
    Figure { name: String },
}

fn grid(c_min: f64, c_max: f64, points: usize) -> Result<Vec<f64>, RunError> {
    if points < 2 {
        return Err(RunError::validation("points", "need at least 2 points"));
    }
    if !(c_min >= 0.0 && c_max >= c_min) {
        return Err(RunError::validation("c_min", "need 0 <= c_min <= c_max"));
    }
    Ok(cooperativity_grid(c_min, c_max, points))
}

fn run(cli: Cli) -> Result<(), RunError> {
    let cfg = match &cli.config {
        Some(path) => load_config(path)?,
        None => RunConfig::reference(),
    };
    let exec = if cli.parallel { Exec::Parallel } else { Exec::Serial };
    let ds: Dataset = match cli.command {
        Command::Rates => rates_dataset(&cfg)?,
        Command::Spectrum { half_span_hz, points } => spectrum_dataset(&cfg, half_span_hz, points)?,
        Command::Entanglement { c_min, c_max, points } => entanglement_dataset(&cfg, &grid(c_min, c_max, points)?, exec)?,
        Command::Fidelity {
            c_min,
            c_max,
            points,
            temps,
        } => {
            let temps = if temps.is_empty() { vec![cfg.system.bath_temp] } else { temps };
            fidelity_dataset(&cfg, &grid(c_min, c_max, points)?, &temps, exec)?
        }
        Command::Sweep => run_sweep(&cfg, exec)?,
        Command::Figure { name } => figure_command(&name, &cfg, exec)?,
    };
    let format = cli.format.unwrap_or(cfg.format);
    match &cli.output {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| RunError::Runtime(format!("{}: {e}", path.display())))?;
            ds.write_to(std::io::BufWriter::new(file), format)
        }
        None => ds.write_to(std::io::stdout().lock(), format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
