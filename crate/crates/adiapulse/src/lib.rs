//! Desk-scale simulations of adiabatic excitation in driven two-level and
//! Λ-type three-level systems.
//!
//! The crate covers the full chain from pulse parameters to observables:
//!
//! * [`pulse`] — Gaussian envelopes, system parameter records, sampling
//!   grids, and the shared unit conventions;
//! * [`hamiltonian`] — instantaneous RWA Hamiltonians (divided by ħ);
//! * [`frame`] — the analytic adiabatic frame: trigonometric eigenvalues,
//!   closed-form eigenvectors, the basis-change rotation with its axis and
//!   angle, and finite-difference non-adiabatic couplings;
//! * [`propagator`] — adaptive Runge-Kutta integration of the Schrödinger
//!   equation with population trajectories;
//! * [`adiabaticity`] — the detuning condition, eigenvalue-gap functions,
//!   and the classification of detuning pairs where gaps close or peak;
//! * [`sweep`] — parallel parameter maps and named figure presets;
//! * [`labcalc`] — laser intensity ↔ Rabi frequency conversions,
//!   two-photon couplings, Doppler temperature bounds, and pair-emission
//!   thresholds for the Ba and Xe level schemes;
//! * [`config`] / [`output`] — flat key-value run configs and
//!   deterministic CSV rendering.
//!
//! Frequencies are angular frequencies in inverse time units throughout;
//! pick any time unit and stay with it for a run. All simulation results
//! are deterministic functions of their parameters.

pub mod adiabaticity;
pub mod config;
pub mod frame;
pub mod hamiltonian;
pub mod labcalc;
pub mod output;
pub mod propagator;
pub mod pulse;
pub mod sweep;

pub use frame::{
    adiabatic_basis, cubic_coefficients, lambda_eigenvalues, nonadiabatic_couplings,
    rotation_closed_forms, two_level_frame, CouplingMatrix, CubicCoefficients, FrameError,
    LambdaFrame, TwoLevelFrame,
};
pub use hamiltonian::{h_lambda, h_two_level};
pub use propagator::{
    cpr_population_analytic, propagate_lambda, propagate_two_level, PropagationError, Trajectory,
};
pub use pulse::{
    LambdaSystem, ParamError, PulseEnvelope, TimeGrid, TwoLevelSystem, INFINITY_SIGMA,
};
pub use sweep::{
    detuning_map, figure_preset, rabi_map, FigureOutput, FigurePreset, GridAxes, GridSpec,
    MapResult, Observable, SweepError,
};
