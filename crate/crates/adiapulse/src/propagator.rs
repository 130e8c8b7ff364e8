//! Time-dependent Schrödinger propagation for the two-level and Λ systems.
//!
//! The integrator is an adaptive embedded Runge-Kutta 5(4) pair stepping
//! exactly onto every requested sample time. The state norm is never
//! renormalized: its drift away from 1 is a diagnostic of integration
//! quality and is bounded by the tests.

use nalgebra::SMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::hamiltonian::{h_lambda, h_two_level};
use crate::pulse::{LambdaSystem, TimeGrid, TwoLevelSystem};

/// Default relative tolerance of the propagator.
pub const DEFAULT_REL_TOL: f64 = 1e-9;
/// Default absolute tolerance, two decades below the relative one.
pub const DEFAULT_ABS_TOL_RATIO: f64 = 1e-2;

const MAX_STEPS: usize = 50_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PropagationError {
    #[error("integrator cannot satisfy the tolerance near t = {t} (step {h} below minimum)")]
    ToleranceNotMet { t: f64, h: f64 },
    #[error("integrator exceeded the step budget")]
    StepLimitExceeded,
    #[error("the adiabatic excitation formula requires a nonzero detuning")]
    ZeroDetuning,
}

/// Sampled quantum trajectory with N complex amplitudes per sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<const N: usize> {
    pub times: Vec<f64>,
    pub states: Vec<[Complex64; N]>,
    /// Index of the sample nearest the driving-intensity peak.
    pub peak_index: usize,
}

impl<const N: usize> Trajectory<N> {
    /// |c_i|² at sample k.
    pub fn populations(&self, k: usize) -> [f64; N] {
        let mut out = [0.0; N];
        for (o, c) in out.iter_mut().zip(self.states[k].iter()) {
            *o = c.norm_sqr();
        }
        out
    }

    pub fn population(&self, state: usize, k: usize) -> f64 {
        self.states[k][state].norm_sqr()
    }

    /// Population of state i at the sample nearest the envelope peak.
    pub fn population_at_peak(&self, state: usize) -> f64 {
        self.population(state, self.peak_index)
    }

    pub fn final_population(&self, state: usize) -> f64 {
        self.population(state, self.states.len() - 1)
    }

    /// Coherence c₁·c₂* for two-level states, c₁·c₃* for three-level ones.
    pub fn coherence(&self, k: usize) -> Complex64 {
        let c = &self.states[k];
        c[0] * c[N - 1].conj()
    }

    /// Largest deviation of Σ|c_i|² from 1 over all samples.
    pub fn max_norm_deviation(&self) -> f64 {
        (0..self.times.len())
            .map(|k| (self.populations(k).iter().sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

// Dormand-Prince 5(4) tableau. E is the difference between the 5th- and
// 4th-order weights, used for the embedded error estimate. The scheme is
// FSAL: the last stage of an accepted step seeds the next one.
const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const A7: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

type State<const N: usize> = [Complex64; N];

fn axpy<const N: usize>(y: &State<N>, h: f64, coeffs: &[f64], ks: &[State<N>]) -> State<N> {
    let mut out = *y;
    for (c, k) in coeffs.iter().zip(ks.iter()) {
        if *c == 0.0 {
            continue;
        }
        let hc = h * c;
        for i in 0..N {
            out[i] += hc * k[i];
        }
    }
    out
}

/// dc/dt = −i·(H/ħ)·c with a real symmetric H/ħ.
fn schroedinger_rhs<const N: usize>(h: &SMatrix<f64, N, N>, c: &State<N>) -> State<N> {
    let mut out = [Complex64::ZERO; N];
    for i in 0..N {
        let mut acc = Complex64::ZERO;
        for j in 0..N {
            acc += h[(i, j)] * c[j];
        }
        out[i] = Complex64::new(acc.im, -acc.re);
    }
    out
}

struct Dopri5<'a, const N: usize, F: Fn(f64) -> SMatrix<f64, N, N>> {
    hamiltonian: &'a F,
    rel_tol: f64,
    abs_tol: f64,
    t: f64,
    y: State<N>,
    k1: State<N>,
    h: f64,
    // PI step-control memory
    err_old: f64,
    steps: usize,
}

impl<'a, const N: usize, F: Fn(f64) -> SMatrix<f64, N, N>> Dopri5<'a, N, F> {
    fn new(hamiltonian: &'a F, t0: f64, y0: State<N>, rel_tol: f64, abs_tol: f64, h0: f64) -> Self {
        let k1 = schroedinger_rhs(&hamiltonian(t0), &y0);
        Self {
            hamiltonian,
            rel_tol,
            abs_tol,
            t: t0,
            y: y0,
            k1,
            h: h0,
            err_old: 1e-4,
            steps: 0,
        }
    }

    fn rhs(&self, t: f64, y: &State<N>) -> State<N> {
        schroedinger_rhs(&(self.hamiltonian)(t), y)
    }

    /// Advance to exactly t_target.
    fn advance_to(&mut self, t_target: f64) -> Result<(), PropagationError> {
        while self.t < t_target {
            let h = self.h.min(t_target - self.t);
            let h_min = 16.0 * f64::EPSILON * self.t.abs().max(t_target.abs()).max(1.0);
            if h < h_min {
                return Err(PropagationError::ToleranceNotMet { t: self.t, h });
            }
            self.steps += 1;
            if self.steps > MAX_STEPS {
                return Err(PropagationError::StepLimitExceeded);
            }

            let t = self.t;
            let y = self.y;
            let k1 = self.k1;
            let k2 = self.rhs(t + C[1] * h, &axpy(&y, h, &A2, &[k1]));
            let k3 = self.rhs(t + C[2] * h, &axpy(&y, h, &A3, &[k1, k2]));
            let k4 = self.rhs(t + C[3] * h, &axpy(&y, h, &A4, &[k1, k2, k3]));
            let k5 = self.rhs(t + C[4] * h, &axpy(&y, h, &A5, &[k1, k2, k3, k4]));
            let k6 = self.rhs(t + C[5] * h, &axpy(&y, h, &A6, &[k1, k2, k3, k4, k5]));
            let y_new = axpy(&y, h, &A7, &[k1, k2, k3, k4, k5, k6]);
            let k7 = self.rhs(t + h, &y_new);

            let ks = [k1, k2, k3, k4, k5, k6, k7];
            let mut err_sq = 0.0;
            for i in 0..N {
                let mut e = Complex64::ZERO;
                for (c, k) in E.iter().zip(ks.iter()) {
                    e += h * c * k[i];
                }
                let scale = self.abs_tol + self.rel_tol * self.y[i].norm().max(y_new[i].norm());
                err_sq += (e.norm() / scale).powi(2);
            }
            let err = (err_sq / N as f64).sqrt();
            // an overflowed or NaN right-hand side must shrink the step,
            // not poison the controller
            let err = if err.is_finite() { err } else { f64::INFINITY };

            // PI step control with β = 0.04 damping against oscillation
            if err <= 1.0 {
                self.t = t + h;
                self.y = y_new;
                self.k1 = k7;
                let factor = if err == 0.0 {
                    10.0
                } else {
                    (0.9 * err.powf(-0.2) * self.err_old.powf(0.04)).clamp(0.2, 10.0)
                };
                self.err_old = err.max(1e-4);
                self.h = (h * factor).max(f64::MIN_POSITIVE);
            } else {
                let factor = (0.9 * err.powf(-0.2)).clamp(0.2, 1.0);
                self.h = (h * factor).max(f64::MIN_POSITIVE);
            }
        }
        Ok(())
    }
}

fn integrate_sampled<const N: usize, F>(
    hamiltonian: F,
    y0: State<N>,
    grid: &TimeGrid,
    rel_tol: f64,
    peak_time: f64,
) -> Result<Trajectory<N>, PropagationError>
where
    F: Fn(f64) -> SMatrix<f64, N, N>,
{
    let times = grid.times();
    // Step acceptance admits up to the local tolerance per step; the
    // safety factor keeps the accumulated error over a pulse-scale window
    // within the advertised rel_tol.
    let safety = 0.125;
    let rel_eff = rel_tol * safety;
    let abs_eff = rel_tol * DEFAULT_ABS_TOL_RATIO * safety;
    let h0 = (grid.t_end() - grid.t_start()) / 1e4;
    let mut stepper = Dopri5::new(&hamiltonian, times[0], y0, rel_eff, abs_eff, h0);

    let mut states = Vec::with_capacity(times.len());
    states.push(y0);
    for &t in &times[1..] {
        stepper.advance_to(t)?;
        states.push(stepper.y);
    }

    let peak_index = times
        .iter()
        .enumerate()
        .min_by(|a, b| {
            (a.1 - peak_time)
                .abs()
                .partial_cmp(&(b.1 - peak_time).abs())
                .unwrap()
        })
        .map(|(k, _)| k)
        .unwrap_or(0);

    Ok(Trajectory {
        times,
        states,
        peak_index,
    })
}

/// Ground state of an N-level system.
pub fn ground_state<const N: usize>() -> [Complex64; N] {
    let mut c = [Complex64::ZERO; N];
    c[0] = Complex64::ONE;
    c
}

/// Propagate the driven two-level system from the ground state ψ₁.
pub fn propagate_two_level(
    sys: &TwoLevelSystem,
    grid: &TimeGrid,
    rel_tol: f64,
) -> Result<Trajectory<2>, PropagationError> {
    propagate_two_level_from(sys, grid, rel_tol, ground_state())
}

/// Same with an explicit initial state.
pub fn propagate_two_level_from(
    sys: &TwoLevelSystem,
    grid: &TimeGrid,
    rel_tol: f64,
    initial: [Complex64; 2],
) -> Result<Trajectory<2>, PropagationError> {
    let s = *sys;
    integrate_sampled(
        move |t| h_two_level(&s, t),
        initial,
        grid,
        rel_tol,
        s.pulse.center_t0(),
    )
}

/// Propagate the Λ system from the ground state ψ₁.
pub fn propagate_lambda(
    sys: &LambdaSystem,
    grid: &TimeGrid,
    rel_tol: f64,
) -> Result<Trajectory<3>, PropagationError> {
    propagate_lambda_from(sys, grid, rel_tol, ground_state())
}

/// Same with an explicit initial state.
pub fn propagate_lambda_from(
    sys: &LambdaSystem,
    grid: &TimeGrid,
    rel_tol: f64,
    initial: [Complex64; 3],
) -> Result<Trajectory<3>, PropagationError> {
    let s = *sys;
    integrate_sampled(
        move |t| h_lambda(&s, t),
        initial,
        grid,
        rel_tol,
        s.peak_time(),
    )
}

/// Adiabatic excited-state population of the two-level system,
/// ½ − 1/(2√((Ω/Δ)² + 1)). Requires Δ ≠ 0.
pub fn cpr_population_analytic(omega: f64, delta: f64) -> Result<f64, PropagationError> {
    if delta == 0.0 {
        return Err(PropagationError::ZeroDetuning);
    }
    let r = omega / delta;
    Ok(0.5 - 0.5 / (r * r + 1.0).sqrt())
}
