//! Gridded parameter sweeps and named figure presets.
//!
//! Each grid point is an independent propagation; points fan out over a
//! rayon pool and are gathered back in row-major order, so the output is
//! deterministic regardless of worker count.

use rayon::prelude::*;
use thiserror::Error;

use crate::frame::{frame_trajectory, FrameError, FrameTrajectory};
use crate::propagator::{propagate_lambda, propagate_two_level, Trajectory, DEFAULT_REL_TOL};
use crate::pulse::{LambdaSystem, ParamError, PulseEnvelope, TimeGrid, TwoLevelSystem};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("unknown figure preset `{0}`")]
    UnknownFigure(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

/// Scalar observable extracted from each per-point trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    /// P₂ + P₃ at the last sample.
    P2PlusP3Final,
    /// P₂ at the envelope-peak sample.
    P2AtPeak,
    /// P₁ − P₃ at the envelope-peak sample.
    P1MinusP3AtPeak,
    /// P₂ at the peak, labeled as the companion map of the Rabi sweep.
    P2AtPeakInset,
}

impl Observable {
    pub fn name(&self) -> &'static str {
        match self {
            Observable::P2PlusP3Final => "P2_plus_P3_final",
            Observable::P2AtPeak => "P2_at_peak",
            Observable::P1MinusP3AtPeak => "P1_minus_P3_at_peak",
            Observable::P2AtPeakInset => "P2_at_peak_inset",
        }
    }

    fn extract(&self, traj: &Trajectory<3>) -> f64 {
        match self {
            Observable::P2PlusP3Final => traj.final_population(1) + traj.final_population(2),
            Observable::P2AtPeak | Observable::P2AtPeakInset => traj.population_at_peak(1),
            Observable::P1MinusP3AtPeak => traj.population_at_peak(0) - traj.population_at_peak(2),
        }
    }
}

/// Which pair of system parameters a grid scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridAxes {
    /// x = Δ_P, y = Δ_S.
    Detunings,
    /// x = pump peak Rabi, y = Stokes peak Rabi.
    PeakRabis,
}

/// Rectangular sweep grid: strictly monotone sample arrays on two named
/// axes, all other parameters fixed by a template system.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub axes: GridAxes,
    pub x_values: Vec<f64>,
    pub y_values: Vec<f64>,
}

impl GridSpec {
    pub fn new(axes: GridAxes, x_values: Vec<f64>, y_values: Vec<f64>) -> Result<Self, SweepError> {
        for (name, vals) in [("x", &x_values), ("y", &y_values)] {
            if vals.is_empty() {
                return Err(SweepError::InvalidGrid(format!("{name} axis is empty")));
            }
            if vals.iter().any(|v| !v.is_finite())
                || (vals.len() > 1 && vals.windows(2).any(|w| w[1] <= w[0]))
            {
                return Err(SweepError::InvalidGrid(format!(
                    "{name} axis must be strictly increasing"
                )));
            }
        }
        Ok(Self {
            axes,
            x_values,
            y_values,
        })
    }

    /// n evenly spaced values per axis over [x0, x1] × [y0, y1].
    pub fn linspace(
        axes: GridAxes,
        x_range: (f64, f64),
        y_range: (f64, f64),
        n: usize,
    ) -> Result<Self, SweepError> {
        if n < 2 {
            return Err(SweepError::InvalidGrid(
                "need at least 2 points per axis".into(),
            ));
        }
        let lin = |(a, b): (f64, f64)| -> Vec<f64> {
            (0..n)
                .map(|k| a + (b - a) * k as f64 / (n - 1) as f64)
                .collect()
        };
        Self::new(axes, lin(x_range), lin(y_range))
    }

    pub fn x_name(&self) -> &'static str {
        match self.axes {
            GridAxes::Detunings => "delta_p",
            GridAxes::PeakRabis => "omega0_p",
        }
    }

    pub fn y_name(&self) -> &'static str {
        match self.axes {
            GridAxes::Detunings => "delta_s",
            GridAxes::PeakRabis => "omega0_s",
        }
    }
}

/// Gridded observable values, row-major over (y, x). Failed points are
/// `None` and reported separately; they do not abort the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct MapResult {
    pub grid: GridSpec,
    pub observable: Observable,
    /// values[iy][ix] corresponds to (x_values[ix], y_values[iy]).
    pub values: Vec<Vec<Option<f64>>>,
}

impl MapResult {
    pub fn value_at(&self, ix: usize, iy: usize) -> Option<f64> {
        self.values[iy][ix]
    }

    pub fn n_missing(&self) -> usize {
        self.values
            .iter()
            .flat_map(|row| row.iter())
            .filter(|v| v.is_none())
            .count()
    }
}

fn apply_point(
    template: &LambdaSystem,
    axes: GridAxes,
    x: f64,
    y: f64,
) -> Result<LambdaSystem, ParamError> {
    let mut sys = *template;
    match axes {
        GridAxes::Detunings => {
            sys.delta_p = x;
            sys.delta_s = y;
        }
        GridAxes::PeakRabis => {
            sys.pump = PulseEnvelope::with_center(
                x,
                template.pump.width_tau(),
                template.pump.center_t0(),
            )?;
            sys.stokes = PulseEnvelope::with_center(
                y,
                template.stokes.width_tau(),
                template.stokes.center_t0(),
            )?;
        }
    }
    Ok(sys)
}

fn run_grid<T, F>(grid: &GridSpec, threads: Option<usize>, point: F) -> Vec<Vec<Option<T>>>
where
    T: Send,
    F: Fn(f64, f64) -> Option<T> + Sync,
{
    let eval = || {
        grid.y_values
            .par_iter()
            .map(|&y| {
                grid.x_values
                    .iter()
                    .map(|&x| point(x, y))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    match threads {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("worker pool")
            .install(eval),
        _ => eval(),
    }
}

/// Default sampling for per-point propagations: enough samples to resolve
/// the peak readout, with the endpoints at ±5τ.
fn point_grid(sys: &LambdaSystem) -> TimeGrid {
    TimeGrid::symmetric_window(sys.max_width(), 401).expect("valid window")
}

/// One observable over a detuning grid, one Λ propagation per point.
pub fn detuning_map(
    observable: Observable,
    template: &LambdaSystem,
    grid: &GridSpec,
    threads: Option<usize>,
) -> Result<MapResult, SweepError> {
    if grid.axes != GridAxes::Detunings {
        return Err(SweepError::InvalidGrid(
            "detuning map needs detuning axes".into(),
        ));
    }
    let values = run_grid(grid, threads, |x, y| {
        let sys = apply_point(template, GridAxes::Detunings, x, y).ok()?;
        let traj = propagate_lambda(&sys, &point_grid(&sys), DEFAULT_REL_TOL).ok()?;
        Some(observable.extract(&traj))
    });
    Ok(MapResult {
        grid: grid.clone(),
        observable,
        values,
    })
}

/// P₁ − P₃ and P₂ at the peak over a pump/Stokes peak-Rabi grid; both maps
/// come from the same propagation per point.
pub fn rabi_map(
    template: &LambdaSystem,
    grid: &GridSpec,
    threads: Option<usize>,
) -> Result<(MapResult, MapResult), SweepError> {
    if grid.axes != GridAxes::PeakRabis {
        return Err(SweepError::InvalidGrid(
            "Rabi map needs peak-Rabi axes".into(),
        ));
    }
    let results: Vec<Vec<Option<(f64, f64)>>> = run_grid(grid, threads, |x, y| {
        let sys = apply_point(template, GridAxes::PeakRabis, x, y).ok()?;
        let traj = propagate_lambda(&sys, &point_grid(&sys), DEFAULT_REL_TOL).ok()?;
        Some((
            Observable::P1MinusP3AtPeak.extract(&traj),
            Observable::P2AtPeakInset.extract(&traj),
        ))
    });
    let main = MapResult {
        grid: grid.clone(),
        observable: Observable::P1MinusP3AtPeak,
        values: results
            .iter()
            .map(|row| row.iter().map(|v| v.map(|p| p.0)).collect())
            .collect(),
    };
    let inset = MapResult {
        grid: grid.clone(),
        observable: Observable::P2AtPeakInset,
        values: results
            .iter()
            .map(|row| row.iter().map(|v| v.map(|p| p.1)).collect())
            .collect(),
    };
    Ok((main, inset))
}

/// Named figure presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurePreset {
    /// Two-level transient excitation and return, τ = 8, Δ = 1,
    /// Ω₀/Δ ∈ {1, 4, 10}.
    Fig1,
    /// P₂+P₃ after the pulse over the detuning plane, τ = 6.5, Ω₀ = 20.
    Fig4,
    /// P₂ at the peak over the detuning plane, τ = 6.5, Ω₀ = 20.
    Fig5,
    /// Λ population dynamics, τ = 6, Δ_S = 2Δ_P, Ω₀p/Δ_P ∈ {2, 4, 10}.
    Fig6,
    /// P₁−P₃ (and P₂) at the peak over the Rabi plane, τ = 6.5, Δ_P = 5,
    /// Δ_S = 10.
    Fig7,
    /// Adiabatic-basis projections, τ = 6, Δ_S = (14/9)Δ_P,
    /// Ω₀p/Δ_P = 50/9.
    Fig8To10,
    /// Rotation axis and angle traces, τ = 6, Δ_S = 2Δ_P, Ω₀p/Δ_P = 4.
    Fig11And12,
}

impl FigurePreset {
    pub fn parse(name: &str) -> Result<Self, SweepError> {
        match name {
            "fig1" => Ok(Self::Fig1),
            "fig4" => Ok(Self::Fig4),
            "fig5" => Ok(Self::Fig5),
            "fig6" => Ok(Self::Fig6),
            "fig7" => Ok(Self::Fig7),
            "fig8_10" => Ok(Self::Fig8To10),
            "fig11_12" => Ok(Self::Fig11And12),
            other => Err(SweepError::UnknownFigure(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Fig1 => "fig1",
            Self::Fig4 => "fig4",
            Self::Fig5 => "fig5",
            Self::Fig6 => "fig6",
            Self::Fig7 => "fig7",
            Self::Fig8To10 => "fig8_10",
            Self::Fig11And12 => "fig11_12",
        }
    }

    pub fn all() -> [Self; 7] {
        [
            Self::Fig1,
            Self::Fig4,
            Self::Fig5,
            Self::Fig6,
            Self::Fig7,
            Self::Fig8To10,
            Self::Fig11And12,
        ]
    }
}

/// Output of a figure preset run.
#[derive(Debug, Clone, PartialEq)]
pub enum FigureOutput {
    TwoLevelTrajectories(Vec<(String, Trajectory<2>)>),
    LambdaTrajectories(Vec<(String, Trajectory<3>)>),
    Map(MapResult),
    Maps(Vec<MapResult>),
    Frames(FrameTrajectory),
}

/// Preset parameter sets behind the figure names. Absolute values not fixed
/// by the captions (Δ of the two-level runs, Δ_P of the Λ trajectory and
/// frame runs) are preset choices documented here:
/// Fig1 uses Δ = 1 (Δ·τ = 8); Fig6 uses Δ_P = 2.5 (Δ_P·τ = 15);
/// Fig8To10 uses Δ_P = 4.5 (so Ω₀ = 25); Fig11And12 uses Δ_P = 5.
pub mod preset {
    use super::*;

    pub const FIG1_TAU: f64 = 8.0;
    pub const FIG1_DELTA: f64 = 1.0;
    pub const FIG1_RATIOS: [f64; 3] = [1.0, 4.0, 10.0];

    pub const FIG45_TAU: f64 = 6.5;
    pub const FIG45_OMEGA0: f64 = 20.0;
    pub const FIG45_DELTA_RANGE: (f64, f64) = (-20.0, 20.0);

    pub const FIG6_TAU: f64 = 6.0;
    pub const FIG6_DELTA_P: f64 = 2.5;
    pub const FIG6_RATIOS: [f64; 3] = [2.0, 4.0, 10.0];

    pub const FIG7_TAU: f64 = 6.5;
    pub const FIG7_DELTA_P: f64 = 5.0;
    pub const FIG7_RABI_RANGE: (f64, f64) = (0.0, 40.0);

    pub const FIG8_10_TAU: f64 = 6.0;
    pub const FIG8_10_DELTA_P: f64 = 4.5;

    pub const FIG11_12_TAU: f64 = 6.0;
    pub const FIG11_12_DELTA_P: f64 = 5.0;

    /// Default resolution of the map presets.
    pub const MAP_POINTS: usize = 101;
    /// Default samples per trajectory preset.
    pub const TRAJECTORY_SAMPLES: usize = 1201;

    pub fn fig6_system(ratio: f64) -> LambdaSystem {
        LambdaSystem::symmetric(
            ratio * FIG6_DELTA_P,
            FIG6_TAU,
            FIG6_DELTA_P,
            2.0 * FIG6_DELTA_P,
        )
        .expect("valid preset")
    }

    pub fn fig8_10_system() -> LambdaSystem {
        LambdaSystem::symmetric(
            50.0 / 9.0 * FIG8_10_DELTA_P,
            FIG8_10_TAU,
            FIG8_10_DELTA_P,
            14.0 / 9.0 * FIG8_10_DELTA_P,
        )
        .expect("valid preset")
    }

    pub fn fig11_12_system() -> LambdaSystem {
        LambdaSystem::symmetric(
            4.0 * FIG11_12_DELTA_P,
            FIG11_12_TAU,
            FIG11_12_DELTA_P,
            2.0 * FIG11_12_DELTA_P,
        )
        .expect("valid preset")
    }

    pub fn fig45_template() -> LambdaSystem {
        LambdaSystem::symmetric(FIG45_OMEGA0, FIG45_TAU, 0.0, 0.0).expect("valid preset")
    }

    pub fn fig7_template() -> LambdaSystem {
        LambdaSystem::symmetric(20.0, FIG7_TAU, FIG7_DELTA_P, 2.0 * FIG7_DELTA_P)
            .expect("valid preset")
    }
}

/// Runs a figure preset. `map_points` overrides the default grid
/// resolution of the map presets; `threads` caps the worker pool.
pub fn figure_preset(
    fig: FigurePreset,
    map_points: Option<usize>,
    threads: Option<usize>,
) -> Result<FigureOutput, SweepError> {
    let n_map = map_points.unwrap_or(preset::MAP_POINTS);
    match fig {
        FigurePreset::Fig1 => {
            let grid = TimeGrid::symmetric_window(preset::FIG1_TAU, preset::TRAJECTORY_SAMPLES)?;
            let mut out = Vec::new();
            for ratio in preset::FIG1_RATIOS {
                let sys = TwoLevelSystem::new(
                    PulseEnvelope::new(ratio * preset::FIG1_DELTA, preset::FIG1_TAU)?,
                    preset::FIG1_DELTA,
                );
                let traj = propagate_two_level(&sys, &grid, DEFAULT_REL_TOL)
                    .map_err(|e| SweepError::InvalidGrid(e.to_string()))?;
                out.push((format!("ratio_{ratio:.0}"), traj));
            }
            Ok(FigureOutput::TwoLevelTrajectories(out))
        }
        FigurePreset::Fig4 | FigurePreset::Fig5 => {
            let grid = GridSpec::linspace(
                GridAxes::Detunings,
                preset::FIG45_DELTA_RANGE,
                preset::FIG45_DELTA_RANGE,
                n_map,
            )?;
            let observable = if fig == FigurePreset::Fig4 {
                Observable::P2PlusP3Final
            } else {
                Observable::P2AtPeak
            };
            Ok(FigureOutput::Map(detuning_map(
                observable,
                &preset::fig45_template(),
                &grid,
                threads,
            )?))
        }
        FigurePreset::Fig6 => {
            let grid = TimeGrid::symmetric_window(preset::FIG6_TAU, preset::TRAJECTORY_SAMPLES)?;
            let mut out = Vec::new();
            for ratio in preset::FIG6_RATIOS {
                let sys = preset::fig6_system(ratio);
                let traj = propagate_lambda(&sys, &grid, DEFAULT_REL_TOL)
                    .map_err(|e| SweepError::InvalidGrid(e.to_string()))?;
                out.push((format!("ratio_{ratio:.0}"), traj));
            }
            Ok(FigureOutput::LambdaTrajectories(out))
        }
        FigurePreset::Fig7 => {
            let grid = GridSpec::linspace(
                GridAxes::PeakRabis,
                preset::FIG7_RABI_RANGE,
                preset::FIG7_RABI_RANGE,
                n_map,
            )?;
            let (main, inset) = rabi_map(&preset::fig7_template(), &grid, threads)?;
            Ok(FigureOutput::Maps(vec![main, inset]))
        }
        FigurePreset::Fig8To10 => {
            let sys = preset::fig8_10_system();
            let grid = TimeGrid::symmetric_window(preset::FIG8_10_TAU, preset::TRAJECTORY_SAMPLES)?;
            Ok(FigureOutput::Frames(frame_trajectory(&sys, &grid, None)?))
        }
        FigurePreset::Fig11And12 => {
            let sys = preset::fig11_12_system();
            let grid =
                TimeGrid::symmetric_window(preset::FIG11_12_TAU, preset::TRAJECTORY_SAMPLES)?;
            Ok(FigureOutput::Frames(frame_trajectory(&sys, &grid, None)?))
        }
    }
}
