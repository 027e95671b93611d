//! `unruh` — rates, relaxation curves, and radiative shifts for a two-level
//! atom on stationary relativistic worldlines.
//!
//! Subcommands: `rates`, `evolve`, `lambshift`, `sweep`, `electron`,
//! `verify`.  Scenario parameters come from flags or a JSON config file
//! (flags override); every output embeds the resolved configuration.
//! Exit codes: 0 success, 1 verification failure, 2 configuration error,
//! 3 numeric failure.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use unruh_core::{dynamics, lambshift, spectral, CoreError, Level, SweepMode};

use config::{ConfigFile, Scenario, ScenarioOverrides};
use output::{emit, render_csv, render_json, Cell, Table};

#[derive(Parser)]
#[command(
    name = "unruh",
    version,
    about = "Vacuum rates, relaxation, and radiative shifts for atoms on stationary worldlines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct ScenarioArgs {
    /// JSON config file; flags override its fields
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worldline kind: inertial, uniform, or circular
    #[arg(long)]
    worldline: Option<String>,
    /// Orbit radius (circular)
    #[arg(long)]
    radius: Option<f64>,
    /// Speed v in (0,1) (inertial, circular)
    #[arg(long)]
    speed: Option<f64>,
    /// Proper acceleration (uniform, or circular instead of --radius)
    #[arg(long)]
    accel: Option<f64>,
    /// Atomic level gap omega0 > 0
    #[arg(long)]
    omega0: Option<f64>,
    /// Coupling constant mu > 0
    #[arg(long)]
    mu: Option<f64>,
    /// Spectral method: closed or numeric
    #[arg(long)]
    method: Option<String>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Output path (atomic write); stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Relative quadrature tolerance
    #[arg(long)]
    tol: Option<f64>,
}

impl ScenarioArgs {
    fn overrides(&self) -> ScenarioOverrides {
        ScenarioOverrides {
            worldline: self.worldline.clone(),
            speed: self.speed,
            radius: self.radius,
            accel: self.accel,
            omega0: self.omega0,
            mu: self.mu,
            method: self.method.clone(),
            format: self.format.clone(),
            out: self.out.clone(),
            tol: self.tol,
        }
    }

    fn scenario(&self) -> Result<Scenario, CmdError> {
        let file = match &self.config {
            Some(path) => ConfigFile::load(path).map_err(CmdError::config)?,
            None => ConfigFile::default(),
        };
        Scenario::build(file, &self.overrides()).map_err(CmdError::config)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Per-level vacuum-fluctuation / radiation-reaction / total energy rates
    Rates(ScenarioArgs),
    /// Relaxation of the mean atomic energy towards equilibrium
    Evolve {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Initial mean energy in [-omega0/2, omega0/2]
        #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
        h0: f64,
        /// Proper-time span; defaults to 20 relaxation times
        #[arg(long)]
        tau_max: Option<f64>,
        /// Number of samples
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Radiative shift: finite correction D, divergent inertial part tagged
    /// by its cutoff, and the per-level radiation-reaction shift
    Lambshift {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Frequency cutoff for the divergent inertial part (>= 10 omega0)
        #[arg(long)]
        cutoff: Option<f64>,
    },
    /// D/Gamma_inert over a grid of a/omega0 (two-column CSV for plotting)
    Sweep {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(long, default_value_t = 0.1)]
        grid_start: f64,
        #[arg(long, default_value_t = 10.0)]
        grid_end: f64,
        #[arg(long, default_value_t = 60)]
        grid_points: usize,
        /// Derive the expansion constants from this orbital speed instead of
        /// the ultrarelativistic A = B = 1
        #[arg(long)]
        at_speed: Option<f64>,
    },
    /// Electron in a uniform magnetic field: gap, proper acceleration, and
    /// shift ratio
    Electron {
        /// Magnetic field in tesla
        #[arg(long)]
        b_field: f64,
        /// Electron speed in (0,1)
        #[arg(long, default_value_t = 0.999)]
        speed: f64,
        /// Gyromagnetic factor
        #[arg(long, default_value_t = 2.0)]
        g_factor: f64,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the numerical verification suite (model identity checks)
    Verify {
        /// fast (seconds) or full (dense grids)
        #[arg(long, default_value = "fast")]
        level: String,
    },
}

struct CmdError {
    code: u8,
    msg: String,
}

impl CmdError {
    fn config(msg: impl Into<String>) -> Self {
        CmdError {
            code: 2,
            msg: msg.into(),
        }
    }

    fn numeric(err: CoreError) -> Self {
        let code = match err {
            CoreError::Domain(_) | CoreError::CutoffTooSmall(_) => 2,
            _ => 3,
        };
        CmdError {
            code,
            msg: err.to_string(),
        }
    }

    fn io(err: std::io::Error) -> Self {
        CmdError {
            code: 3,
            msg: format!("io error: {err}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<u8, CmdError> {
    match command {
        Command::Rates(args) => cmd_rates(&args),
        Command::Evolve {
            scenario,
            h0,
            tau_max,
            samples,
        } => cmd_evolve(&scenario, h0, tau_max, samples),
        Command::Lambshift { scenario, cutoff } => cmd_lambshift(&scenario, cutoff),
        Command::Sweep {
            scenario,
            grid_start,
            grid_end,
            grid_points,
            at_speed,
        } => cmd_sweep(&scenario, grid_start, grid_end, grid_points, at_speed),
        Command::Electron {
            b_field,
            speed,
            g_factor,
            format,
            out,
        } => cmd_electron(b_field, speed, g_factor, format, out),
        Command::Verify { level } => cmd_verify(&level),
    }
}

fn emit_table(scenario: &Scenario, table: &Table, extras: &[(&str, f64)]) -> Result<(), CmdError> {
    let mut config = serde_json::to_value(&scenario.resolved).expect("serializable config");
    for (k, v) in extras {
        config[k] = serde_json::json!(v);
    }
    let text = match scenario.format.as_str() {
        "json" => render_json(table, config),
        _ => render_csv(
            table,
            &serde_json::to_string(&config).expect("compact json"),
        ),
    };
    emit(scenario.out.as_deref(), &text).map_err(CmdError::io)
}

fn cmd_rates(args: &ScenarioArgs) -> Result<u8, CmdError> {
    let scenario = args.scenario()?;
    let s = scenario.spectral().map_err(CmdError::config)?;
    let mut table = Table::new(&["level", "gamma_vf", "gamma_rr", "gamma_total"]);
    for level in [Level::Minus, Level::Plus] {
        let r = spectral::total_rate(&scenario.atom, &s, level).map_err(CmdError::numeric)?;
        table.push(vec![
            Cell::Text(
                match level {
                    Level::Minus => "minus",
                    Level::Plus => "plus",
                }
                .into(),
            ),
            Cell::Num(r.gamma_vf),
            Cell::Num(r.gamma_rr),
            Cell::Num(r.gamma_total),
        ]);
    }
    emit_table(&scenario, &table, &[])?;
    Ok(0)
}

fn cmd_evolve(
    args: &ScenarioArgs,
    h0: f64,
    tau_max: Option<f64>,
    samples: usize,
) -> Result<u8, CmdError> {
    let scenario = args.scenario()?;
    let s = scenario.spectral().map_err(CmdError::config)?;
    let gamma = dynamics::decay_rate(&scenario.atom, &s).map_err(CmdError::numeric)?;
    let span = tau_max.unwrap_or(20.0 / gamma);
    let curve = dynamics::relaxation_curve(&scenario.atom, &s, h0, span, samples.max(2))
        .map_err(CmdError::numeric)?;
    let mut table = Table::new(&["tau", "mean_energy", "mean_energy_rk4"]);
    for ((tau, h), (_, h_rk4)) in curve.samples.iter().zip(&curve.rk4_samples) {
        table.push(vec![Cell::Num(*tau), Cell::Num(*h), Cell::Num(*h_rk4)]);
    }
    emit_table(
        &scenario,
        &table,
        &[
            ("gamma", curve.decay_rate),
            ("h_eq", curve.equilibrium),
            ("rk4_max_deviation", curve.max_rk4_deviation),
        ],
    )?;
    Ok(0)
}

fn cmd_lambshift(args: &ScenarioArgs, cutoff: Option<f64>) -> Result<u8, CmdError> {
    let scenario = args.scenario()?;
    let s = scenario.spectral().map_err(CmdError::config)?;
    let cutoff = cutoff.unwrap_or(100.0 * scenario.atom.omega0());
    let shift = lambshift::relative_shift_vf(&scenario.atom, &s, cutoff, scenario.resolved.tol)
        .map_err(CmdError::numeric)?;
    let mut table = Table::new(&[
        "d_correction",
        "d_over_gamma_inert",
        "delta_inert",
        "delta_vf_relative",
        "cutoff",
        "delta_rr_per_level",
    ]);
    table.push(vec![
        Cell::Num(shift.d_correction),
        Cell::Num(shift.d_over_gamma_inert),
        Cell::Num(shift.delta_inert),
        Cell::Num(shift.delta_vf_relative),
        Cell::Num(shift.cutoff),
        Cell::Num(shift.delta_rr_per_level),
    ]);
    emit_table(&scenario, &table, &[])?;
    Ok(0)
}

fn cmd_sweep(
    args: &ScenarioArgs,
    grid_start: f64,
    grid_end: f64,
    grid_points: usize,
    at_speed: Option<f64>,
) -> Result<u8, CmdError> {
    let scenario = args.scenario()?;
    if !(grid_start > 0.0 && grid_end > grid_start) {
        return Err(CmdError::config(format!(
            "sweep grid requires 0 < start < end, got [{grid_start}, {grid_end}]"
        )));
    }
    if grid_points < 2 {
        return Err(CmdError::config("sweep needs at least two grid points"));
    }
    let grid: Vec<f64> = (0..grid_points)
        .map(|k| grid_start * (grid_end / grid_start).powf(k as f64 / (grid_points - 1) as f64))
        .collect();
    let mode = match at_speed {
        Some(v) => SweepMode::AtSpeed(v),
        None => SweepMode::UltraRelativistic,
    };

    let threads = std::env::var("UNRUH_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .min(grid.len());

    let atom = scenario.atom;
    let chunk = grid.len().div_ceil(threads);
    let mut points = Vec::with_capacity(grid.len());
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = grid
            .chunks(chunk)
            .map(|part| scope.spawn(move || lambshift::sweep_fig1(&atom, part, mode)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for r in results {
        points.extend(r.map_err(CmdError::numeric)?);
    }

    let mut table = Table::new(&["a_over_omega0", "d_over_gamma_inert"]);
    for p in &points {
        table.push(vec![
            Cell::Num(p.a_over_omega0),
            Cell::Num(p.d_over_gamma_inert),
        ]);
    }
    emit_table(&scenario, &table, &[])?;
    Ok(0)
}

fn cmd_electron(
    b_field: f64,
    speed: f64,
    g_factor: f64,
    format: Option<String>,
    out: Option<PathBuf>,
) -> Result<u8, CmdError> {
    let e = lambshift::electron_scenario(b_field, speed, g_factor).map_err(CmdError::numeric)?;
    let mut table = Table::new(&[
        "gamma",
        "omega0_per_second",
        "accel_per_second",
        "accel_si",
        "a_over_omega0",
        "d_over_gamma_inert",
    ]);
    table.push(vec![
        Cell::Num(e.gamma),
        Cell::Num(e.omega0_per_second),
        Cell::Num(e.accel_per_second),
        Cell::Num(e.accel_si),
        Cell::Num(e.a_over_omega0),
        Cell::Num(e.d_over_gamma_inert),
    ]);
    let config = serde_json::json!({
        "scenario": "electron",
        "b_field_tesla": b_field,
        "speed": speed,
        "g_factor": g_factor,
        "e_over_m": lambshift::ELECTRON_E_OVER_M,
    });
    let text = match format.as_deref() {
        Some("json") => render_json(&table, config),
        Some("csv") | None => render_csv(
            &table,
            &serde_json::to_string(&config).expect("compact json"),
        ),
        Some(other) => {
            return Err(CmdError::config(format!(
                "unknown format '{other}' (expected csv or json)"
            )))
        }
    };
    emit(out.as_deref(), &text).map_err(CmdError::io)?;
    Ok(0)
}

fn cmd_verify(level: &str) -> Result<u8, CmdError> {
    let level = match level {
        "fast" => unruh_core::VerifyLevel::Fast,
        "full" => unruh_core::VerifyLevel::Full,
        other => {
            return Err(CmdError::config(format!(
                "unknown verify level '{other}' (expected fast or full)"
            )))
        }
    };
    let report = unruh_core::verify::run(level).map_err(CmdError::numeric)?;
    print!("{}", report.render());
    if report.passed() {
        println!("verification passed");
        Ok(0)
    } else {
        println!("verification FAILED");
        Ok(1)
    }
}
