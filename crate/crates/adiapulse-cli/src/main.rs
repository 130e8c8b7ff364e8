//! Command-line front end: simulations, frame traces, parameter maps,
//! named figure presets, adiabaticity reports, and lab-unit calculators.
//!
//! Exit codes: 0 on success, 1 on parameter/usage errors, 2 on numerical
//! failure. On any error, files that did not exist before the run are not
//! left behind.

mod manifest;
mod out;
mod units;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use adiapulse::adiabaticity::{
    classify_detunings, theta_extrema_check, two_level_adiabatic, DetuningKind,
    DEFAULT_CLASSIFY_TOL,
};
use adiapulse::config::SimConfig;
use adiapulse::frame::frame_trajectory;
use adiapulse::labcalc::{
    self, doppler_temperature_limit, intensity_for_two_photon_rabi, intensity_from_rabi,
    presets as lab, rabi_from_intensity, two_photon_rabi, TransitionSpec,
};
use adiapulse::output::{frame_csv, map_csv, trajectory2_csv, trajectory3_csv};
use adiapulse::propagator::{propagate_lambda, propagate_two_level, DEFAULT_REL_TOL};
use adiapulse::sweep::{
    detuning_map, figure_preset, rabi_map, FigureOutput, FigurePreset, GridAxes, GridSpec,
    Observable,
};
use manifest::RunManifest;
use out::OutputBatch;

#[derive(Parser)]
#[command(
    name = "adiapulse",
    version,
    about = "Adiabatic excitation dynamics toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemKind {
    TwoLevel,
    Lambda,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapObservable {
    #[value(name = "p2-p3-final")]
    P2P3Final,
    #[value(name = "p2-peak")]
    P2Peak,
    #[value(name = "p1-minus-p3-peak")]
    P1MinusP3Peak,
    #[value(name = "p2-peak-inset")]
    P2PeakInset,
}

impl From<MapObservable> for Observable {
    fn from(m: MapObservable) -> Self {
        match m {
            MapObservable::P2P3Final => Observable::P2PlusP3Final,
            MapObservable::P2Peak => Observable::P2AtPeak,
            MapObservable::P1MinusP3Peak => Observable::P1MinusP3AtPeak,
            MapObservable::P2PeakInset => Observable::P2AtPeakInset,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapAxes {
    Detunings,
    Rabis,
}

#[derive(Subcommand)]
enum Command {
    /// Propagate a two-level or Λ system and write the trajectory CSV.
    Simulate {
        /// Flat key-value config file.
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "lambda")]
        system: SystemKind,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
        /// Time-unit label recorded in the manifest (no conversion).
        #[arg(long, default_value = "arb")]
        time_unit: String,
        /// Override the config's pump peak Rabi frequency.
        #[arg(long)]
        omega0_p: Option<f64>,
        /// Override the config's Stokes peak Rabi frequency.
        #[arg(long)]
        omega0_s: Option<f64>,
        #[arg(long)]
        tau_p: Option<f64>,
        #[arg(long)]
        tau_s: Option<f64>,
        #[arg(long)]
        delta_p: Option<f64>,
        #[arg(long)]
        delta_s: Option<f64>,
        /// Integrator relative tolerance.
        #[arg(long, default_value_t = DEFAULT_REL_TOL)]
        rel_tol: f64,
    },
    /// Adiabatic-frame trajectory (eigenvalues, axis/angle, couplings,
    /// projections) of a Λ system.
    Frame {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "arb")]
        time_unit: String,
        /// Finite-difference step; defaults to τ/1000.
        #[arg(long)]
        h_step: Option<f64>,
    },
    /// Scalar observable over a detuning or peak-Rabi grid.
    Map {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        observable: MapObservable,
        #[arg(long, value_enum, default_value = "detunings")]
        axes: MapAxes,
        #[arg(long, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, allow_hyphen_values = true)]
        y_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        y_max: f64,
        /// Points per axis.
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, default_value = "arb")]
        time_unit: String,
    },
    /// Run a named figure preset
    /// (fig1, fig4, fig5, fig6, fig7, fig8_10, fig11_12).
    Figure {
        name: String,
        #[arg(long)]
        out: PathBuf,
        /// Grid resolution override for the map presets.
        #[arg(long)]
        points: Option<usize>,
    },
    /// Classify a detuning pair and report its gap structure.
    Adiabaticity {
        #[arg(long, allow_hyphen_values = true)]
        delta_p: f64,
        #[arg(long, allow_hyphen_values = true)]
        delta_s: f64,
        /// Pulse duration for the two-level condition |Δ| ≥ 1/T.
        #[arg(long)]
        duration: Option<f64>,
        /// Write the report here as well as to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Laser-parameter calculators for the Ba and Xe schemes.
    Labcalc {
        #[command(subcommand)]
        calc: LabCommand,
        /// Write the JSON report here as well as to stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LabCommand {
    /// Ba 553.7 nm pump transition (μ = 8 D).
    BaPump(Drive),
    /// Ba 1500.4 nm Stokes transition (μ = 0.2 D).
    BaStokes(Drive),
    /// Xe 256 nm two-photon pump (calibrated 0.1 ns⁻¹ per MW/cm²).
    XePump(Drive),
    /// Xe 908 nm Stokes transition (μ = 5 D).
    XeStokes(Drive),
    /// Any one-photon transition given wavelength and dipole moment.
    Custom {
        /// Wavelength, e.g. `553.7nm`.
        #[arg(long)]
        wavelength: String,
        /// Dipole moment, e.g. `8D`.
        #[arg(long)]
        dipole: String,
        #[command(flatten)]
        drive: Drive,
    },
    /// Doppler temperature bound for a detuning on a transition.
    Doppler {
        /// `ba`, `xe`, or `custom` (then give --wavelength and --mass).
        #[arg(long, default_value = "ba")]
        target: String,
        #[arg(long)]
        wavelength: Option<String>,
        /// Particle mass, e.g. `137.327u`.
        #[arg(long)]
        mass: Option<String>,
        /// Detuning, e.g. `10ns-1`.
        #[arg(long)]
        detuning: String,
    },
    /// Photon threshold for emission of a massive pair.
    Renp {
        /// Level gap (any energy unit).
        #[arg(long)]
        e_eg: f64,
        #[arg(long)]
        m_i: f64,
        #[arg(long)]
        m_j: f64,
    },
}

/// Exactly one of --rabi / --intensity.
#[derive(clap::Args)]
struct Drive {
    /// Target Rabi frequency, e.g. `20ns-1`.
    #[arg(long, conflicts_with = "intensity")]
    rabi: Option<String>,
    /// Peak intensity, e.g. `1.6MW/cm2`.
    #[arg(long)]
    intensity: Option<String>,
}

enum RunError {
    Usage(anyhow::Error),
    Numerical(anyhow::Error),
}

fn usage<E: Into<anyhow::Error>>(e: E) -> RunError {
    RunError::Usage(e.into())
}

fn numerical<E: Into<anyhow::Error>>(e: E) -> RunError {
    RunError::Numerical(e.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(RunError::Numerical(e)) => {
            eprintln!("numerical failure: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn env_threads() -> Option<usize> {
    std::env::var("ADIAPULSE_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n > 0)
}

fn load_config(path: &Path) -> Result<SimConfig, RunError> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))
        .map_err(usage)?;
    SimConfig::parse(&text).map_err(usage)
}

fn config_json(cfg: &SimConfig, time_unit: &str) -> Value {
    json!({
        "omega0_p": cfg.omega0_p,
        "omega0_s": cfg.omega0_s,
        "tau_p": cfg.tau_p,
        "tau_s": cfg.tau_s,
        "delta_p": cfg.delta_p,
        "delta_s": cfg.delta_s,
        "t_start": cfg.t_start,
        "t_end": cfg.t_end,
        "n_samples": cfg.n_samples,
        "time_unit": time_unit,
    })
}

#[allow(clippy::too_many_arguments)]
fn run(command: Command) -> Result<(), RunError> {
    match command {
        Command::Simulate {
            config,
            system,
            out,
            time_unit,
            omega0_p,
            omega0_s,
            tau_p,
            tau_s,
            delta_p,
            delta_s,
            rel_tol,
        } => {
            let mut cfg = load_config(&config)?;
            if let Some(v) = omega0_p {
                cfg.omega0_p = Some(v);
            }
            if let Some(v) = omega0_s {
                cfg.omega0_s = Some(v);
            }
            if let Some(v) = tau_p {
                cfg.tau_p = Some(v);
            }
            if let Some(v) = tau_s {
                cfg.tau_s = Some(v);
            }
            if let Some(v) = delta_p {
                cfg.delta_p = Some(v);
            }
            if let Some(v) = delta_s {
                cfg.delta_s = Some(v);
            }

            let (csv, params) = match system {
                SystemKind::TwoLevel => {
                    let sys = cfg.two_level_system().map_err(usage)?;
                    let grid = cfg.time_grid(sys.pulse.width_tau()).map_err(usage)?;
                    let traj = propagate_two_level(&sys, &grid, rel_tol).map_err(numerical)?;
                    (trajectory2_csv(&traj), config_json(&cfg, &time_unit))
                }
                SystemKind::Lambda => {
                    let sys = cfg.lambda_system().map_err(usage)?;
                    let grid = cfg.time_grid(sys.max_width()).map_err(usage)?;
                    let traj = propagate_lambda(&sys, &grid, rel_tol).map_err(numerical)?;
                    (trajectory3_csv(&traj), config_json(&cfg, &time_unit))
                }
            };

            let mut batch = OutputBatch::new(&out).map_err(usage)?;
            batch.stage("trajectory.csv", &csv).map_err(usage)?;
            batch
                .stage("manifest.json", &RunManifest::new(params).render())
                .map_err(usage)?;
            batch.commit().map_err(usage)?;
            Ok(())
        }

        Command::Frame {
            config,
            out,
            time_unit,
            h_step,
        } => {
            let cfg = load_config(&config)?;
            let sys = cfg.lambda_system().map_err(usage)?;
            let grid = cfg.time_grid(sys.max_width()).map_err(usage)?;
            let frames = frame_trajectory(&sys, &grid, h_step).map_err(numerical)?;
            let mut params = config_json(&cfg, &time_unit);
            params["h_step"] = json!(h_step);

            let mut batch = OutputBatch::new(&out).map_err(usage)?;
            batch
                .stage("frames.csv", &frame_csv(&frames))
                .map_err(usage)?;
            batch
                .stage("manifest.json", &RunManifest::new(params).render())
                .map_err(usage)?;
            batch.commit().map_err(usage)?;
            Ok(())
        }

        Command::Map {
            config,
            out,
            observable,
            axes,
            x_min,
            x_max,
            y_min,
            y_max,
            points,
            time_unit,
        } => {
            let cfg = load_config(&config)?;
            let template = cfg.lambda_system().map_err(usage)?;
            let axes = match axes {
                MapAxes::Detunings => GridAxes::Detunings,
                MapAxes::Rabis => GridAxes::PeakRabis,
            };
            let grid =
                GridSpec::linspace(axes, (x_min, x_max), (y_min, y_max), points).map_err(usage)?;
            let observable: Observable = observable.into();
            let map = match axes {
                GridAxes::Detunings => {
                    detuning_map(observable, &template, &grid, env_threads()).map_err(numerical)?
                }
                GridAxes::PeakRabis => {
                    let (main, inset) =
                        rabi_map(&template, &grid, env_threads()).map_err(numerical)?;
                    if observable == Observable::P2AtPeakInset {
                        inset
                    } else {
                        main
                    }
                }
            };
            let mut params = config_json(&cfg, &time_unit);
            params["observable"] = json!(map.observable.name());
            params["x_name"] = json!(grid.x_name());
            params["y_name"] = json!(grid.y_name());
            params["x_range"] = json!([x_min, x_max]);
            params["y_range"] = json!([y_min, y_max]);
            params["points"] = json!(points);
            params["n_missing"] = json!(map.n_missing());

            let mut batch = OutputBatch::new(&out).map_err(usage)?;
            batch.stage("map.csv", &map_csv(&map)).map_err(usage)?;
            batch
                .stage(
                    "map.params.json",
                    &format!("{}\n", serde_json::to_string_pretty(&params).unwrap()),
                )
                .map_err(usage)?;
            batch
                .stage("manifest.json", &RunManifest::new(params).render())
                .map_err(usage)?;
            batch.commit().map_err(usage)?;
            Ok(())
        }

        Command::Figure { name, out, points } => {
            let fig = FigurePreset::parse(&name).map_err(usage)?;
            let output = figure_preset(fig, points, env_threads()).map_err(numerical)?;
            let stem = fig.name();
            let mut params = figure_parameters(fig);
            params["figure"] = json!(stem);
            if let Some(p) = points {
                params["points"] = json!(p);
            }

            let mut batch = OutputBatch::new(&out).map_err(usage)?;
            match &output {
                FigureOutput::TwoLevelTrajectories(list) => {
                    for (label, traj) in list {
                        batch
                            .stage(&format!("{stem}_{label}.csv"), &trajectory2_csv(traj))
                            .map_err(usage)?;
                    }
                }
                FigureOutput::LambdaTrajectories(list) => {
                    for (label, traj) in list {
                        batch
                            .stage(&format!("{stem}_{label}.csv"), &trajectory3_csv(traj))
                            .map_err(usage)?;
                    }
                }
                FigureOutput::Map(map) => {
                    batch
                        .stage(&format!("{stem}.csv"), &map_csv(map))
                        .map_err(usage)?;
                }
                FigureOutput::Maps(maps) => {
                    for map in maps {
                        batch
                            .stage(
                                &format!("{stem}_{}.csv", map.observable.name()),
                                &map_csv(map),
                            )
                            .map_err(usage)?;
                    }
                }
                FigureOutput::Frames(frames) => {
                    batch
                        .stage(&format!("{stem}_frames.csv"), &frame_csv(frames))
                        .map_err(usage)?;
                }
            }
            batch
                .stage("manifest.json", &RunManifest::new(params).render())
                .map_err(usage)?;
            batch.commit().map_err(usage)?;
            Ok(())
        }

        Command::Adiabaticity {
            delta_p,
            delta_s,
            duration,
            out,
        } => {
            let class = classify_detunings(delta_p, delta_s, DEFAULT_CLASSIFY_TOL);
            let gaps =
                adiapulse::adiabaticity::small_rabi_gaps(delta_p, delta_s).map_err(numerical)?;
            let residuals = theta_extrema_check(delta_p, delta_s);
            let kind = match class.kind {
                DetuningKind::Minimum => "minimum",
                DetuningKind::Maximum => "maximum",
                DetuningKind::Generic => "generic",
            };
            let mut report = json!({
                "delta_p": delta_p,
                "delta_s": delta_s,
                "classification": {
                    "kind": kind,
                    "limit_gap": if class.limit_gap.is_nan() { Value::Null } else { json!(class.limit_gap) },
                },
                "small_rabi_gaps": { "gap_12": gaps.0, "gap_32": gaps.1 },
                "extremum_residuals": {
                    "closing_12": residuals.closing_12,
                    "closing_32": residuals.closing_32,
                    "peak": residuals.peak,
                },
            });
            if let Some(t) = duration {
                if t <= 0.0 {
                    return Err(usage(anyhow!("duration must be positive, got {t}")));
                }
                report["two_level"] = json!({
                    "duration": t,
                    "adiabatic": two_level_adiabatic(delta_p, t),
                });
            }
            emit_report(&report, out.as_deref(), "adiabaticity.json")
        }

        Command::Labcalc { calc, out } => {
            let report = labcalc_report(calc).map_err(RunError::Usage)?;
            emit_report(&report, out.as_deref(), "labcalc.json")
        }
    }
}

/// Full resolved parameter set of a figure preset, for provenance.
fn figure_parameters(fig: FigurePreset) -> Value {
    use adiapulse::sweep::preset::*;
    match fig {
        FigurePreset::Fig1 => json!({
            "tau": FIG1_TAU,
            "delta": FIG1_DELTA,
            "ratios": FIG1_RATIOS,
            "samples": TRAJECTORY_SAMPLES,
        }),
        FigurePreset::Fig4 | FigurePreset::Fig5 => json!({
            "tau": FIG45_TAU,
            "omega0": FIG45_OMEGA0,
            "delta_range": FIG45_DELTA_RANGE,
            "default_points": MAP_POINTS,
        }),
        FigurePreset::Fig6 => json!({
            "tau": FIG6_TAU,
            "delta_p": FIG6_DELTA_P,
            "delta_s": 2.0 * FIG6_DELTA_P,
            "ratios": FIG6_RATIOS,
            "samples": TRAJECTORY_SAMPLES,
        }),
        FigurePreset::Fig7 => json!({
            "tau": FIG7_TAU,
            "delta_p": FIG7_DELTA_P,
            "delta_s": 2.0 * FIG7_DELTA_P,
            "rabi_range": FIG7_RABI_RANGE,
            "default_points": MAP_POINTS,
        }),
        FigurePreset::Fig8To10 => json!({
            "tau": FIG8_10_TAU,
            "delta_p": FIG8_10_DELTA_P,
            "delta_s": 14.0 / 9.0 * FIG8_10_DELTA_P,
            "omega0": 50.0 / 9.0 * FIG8_10_DELTA_P,
            "samples": TRAJECTORY_SAMPLES,
        }),
        FigurePreset::Fig11And12 => json!({
            "tau": FIG11_12_TAU,
            "delta_p": FIG11_12_DELTA_P,
            "delta_s": 2.0 * FIG11_12_DELTA_P,
            "omega0": 4.0 * FIG11_12_DELTA_P,
            "samples": TRAJECTORY_SAMPLES,
        }),
    }
}

fn emit_report(report: &Value, out: Option<&Path>, name: &str) -> Result<(), RunError> {
    let text = format!("{}\n", serde_json::to_string_pretty(report).unwrap());
    print!("{text}");
    if let Some(dir) = out {
        let mut batch = OutputBatch::new(dir).map_err(usage)?;
        batch.stage(name, &text).map_err(usage)?;
        batch
            .stage("manifest.json", &RunManifest::new(report.clone()).render())
            .map_err(usage)?;
        batch.commit().map_err(usage)?;
    }
    Ok(())
}

/// One-photon drive report: given Ω get I, or given I get Ω.
fn one_photon_report(tr: &TransitionSpec, drive: &Drive) -> Result<Value> {
    let (rabi, intensity) = match (&drive.rabi, &drive.intensity) {
        (Some(r), None) => {
            let rabi = units::parse_rabi(r)?;
            (rabi, intensity_from_rabi(tr, rabi)?)
        }
        (None, Some(i)) => {
            let intensity = units::parse_intensity(i)?;
            (rabi_from_intensity(tr, intensity)?, intensity)
        }
        _ => anyhow::bail!("give exactly one of --rabi or --intensity"),
    };
    Ok(json!({
        "input": {
            "transition": tr.label,
            "wavelength_nm": tr.wavelength * 1e9,
            "dipole_debye": tr.dipole_moment / labcalc::constants::DEBYE,
        },
        "si": {
            "rabi_rad_per_s": rabi,
            "intensity_w_per_m2": intensity,
        },
        "practical": {
            "rabi_ns_inv": rabi / 1e9,
            "intensity_w_per_cm2": labcalc::w_per_m2_to_w_per_cm2(intensity),
            "intensity_kw_per_cm2": labcalc::w_per_m2_to_w_per_cm2(intensity) / 1e3,
            "intensity_mw_per_cm2": labcalc::w_per_m2_to_w_per_cm2(intensity) / 1e6,
        },
    }))
}

fn labcalc_report(calc: LabCommand) -> Result<Value> {
    match calc {
        LabCommand::BaPump(drive) => one_photon_report(&lab::ba_pump(), &drive),
        LabCommand::BaStokes(drive) => one_photon_report(&lab::ba_stokes(), &drive),
        LabCommand::XeStokes(drive) => one_photon_report(&lab::xe_stokes(), &drive),
        LabCommand::XePump(drive) => {
            let table = lab::xe_pump_two_photon();
            let (rabi, intensity) = match (&drive.rabi, &drive.intensity) {
                (Some(r), None) => {
                    let rabi = units::parse_rabi(r)?;
                    (rabi, intensity_for_two_photon_rabi(&table, rabi)?)
                }
                (None, Some(i)) => {
                    let intensity = units::parse_intensity(i)?;
                    (two_photon_rabi(&table, intensity)?, intensity)
                }
                _ => anyhow::bail!("give exactly one of --rabi or --intensity"),
            };
            Ok(json!({
                "input": {
                    "transition": "Xe 5p6 1S0 <-> 6p[5/2]2 (two-photon, 256 nm)",
                    "calibration_ns_inv_per_mw_cm2": 0.1,
                },
                "si": {
                    "rabi_rad_per_s": rabi,
                    "intensity_w_per_m2": intensity,
                },
                "practical": {
                    "rabi_ns_inv": rabi / 1e9,
                    "intensity_mw_per_cm2": labcalc::w_per_m2_to_w_per_cm2(intensity) / 1e6,
                    "intensity_gw_per_cm2": labcalc::w_per_m2_to_w_per_cm2(intensity) / 1e9,
                },
            }))
        }
        LabCommand::Custom {
            wavelength,
            dipole,
            drive,
        } => {
            let tr = TransitionSpec::new(
                units::parse_wavelength(&wavelength)?,
                units::parse_dipole(&dipole)?,
                "custom",
            )?;
            one_photon_report(&tr, &drive)
        }
        LabCommand::Doppler {
            target,
            wavelength,
            mass,
            detuning,
        } => {
            let (tr, m) = match target.as_str() {
                "ba" => (lab::ba_pump(), lab::ba_mass()),
                "xe" => (lab::xe_stokes(), lab::xe_mass()),
                "custom" => {
                    let wl = wavelength
                        .as_deref()
                        .ok_or_else(|| anyhow!("--wavelength required with --target custom"))?;
                    let ms = mass
                        .as_deref()
                        .ok_or_else(|| anyhow!("--mass required with --target custom"))?;
                    (
                        TransitionSpec::new(units::parse_wavelength(wl)?, 0.0, "custom")?,
                        units::parse_mass(ms)?,
                    )
                }
                other => anyhow::bail!("unknown target `{other}` (use ba, xe, or custom)"),
            };
            let delta = units::parse_rabi(&detuning)?;
            let bound = doppler_temperature_limit(&tr, m, delta)?;
            Ok(json!({
                "input": {
                    "target": target,
                    "wavelength_nm": tr.wavelength * 1e9,
                    "particle_mass_kg": m,
                    "detuning_rad_per_s": delta,
                },
                "si": { "temperature_limit_k": bound },
                "practical": {
                    "temperature_limit_k": bound,
                    "note": "operate far below this bound",
                },
            }))
        }
        LabCommand::Renp { e_eg, m_i, m_j } => {
            let threshold = labcalc::renp_threshold(e_eg, m_i, m_j)?;
            Ok(json!({
                "input": { "e_eg": e_eg, "m_i": m_i, "m_j": m_j },
                "si": { "photon_threshold": threshold },
                "practical": {
                    "photon_threshold": threshold,
                    "fraction_of_half_gap": threshold / (e_eg / 2.0),
                },
            }))
        }
    }
}
