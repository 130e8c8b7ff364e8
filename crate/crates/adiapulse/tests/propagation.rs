//! Trajectory-level checks: adiabatic following, frame locking, time
//! symmetry, and deterministic reruns.

use adiapulse::frame::adiabatic_basis;
use adiapulse::output::{map_csv, trajectory3_csv};
use adiapulse::propagator::{propagate_lambda, propagate_two_level};
use adiapulse::pulse::{LambdaSystem, PulseEnvelope, TimeGrid, TwoLevelSystem};
use adiapulse::sweep::{detuning_map, GridAxes, GridSpec, Observable};
use adiapulse::two_level_frame;
use num_complex::Complex64;

fn lambda_lock_minimum(sys: &LambdaSystem, traj: &adiapulse::Trajectory<3>) -> f64 {
    let mut min_lock = f64::INFINITY;
    for k in 0..traj.len() {
        let frame = adiabatic_basis(sys, traj.times[k]).unwrap();
        let phi2 = frame.basis_vector(1);
        let c = &traj.states[k];
        let overlap: Complex64 = (0..3).map(|j| phi2[j] * c[j]).sum();
        min_lock = min_lock.min(overlap.norm_sqr());
    }
    min_lock
}

#[test]
fn two_level_follows_the_dressed_state() {
    // |P₂ − sin²ϑ| stays below 0.02 once Δ·τ ≥ 8
    for (om0, delta, tau) in [(1.0, 1.0, 8.0), (4.0, 1.0, 8.0), (20.0, 2.0, 6.5)] {
        let sys = TwoLevelSystem::new(PulseEnvelope::new(om0, tau).unwrap(), delta);
        let grid = TimeGrid::symmetric_window(tau, 801).unwrap();
        let traj = propagate_two_level(&sys, &grid, 1e-9).unwrap();
        let mut worst = 0.0f64;
        for k in 0..traj.len() {
            let theta = two_level_frame(sys.pulse.envelope_at(traj.times[k]), delta).mixing_angle;
            worst = worst.max((traj.population(1, k) - theta.sin().powi(2)).abs());
        }
        assert!(worst < 0.02, "om0={om0}, delta={delta}: worst dev {worst}");
    }
}

#[test]
fn two_level_frame_lock() {
    // the state stays on the lower dressed state through the pulse
    for ratio in [1.0, 4.0, 10.0] {
        let sys = TwoLevelSystem::new(PulseEnvelope::new(ratio, 8.0).unwrap(), 1.0);
        let grid = TimeGrid::symmetric_window(8.0, 801).unwrap();
        let traj = propagate_two_level(&sys, &grid, 1e-9).unwrap();
        let mut min_lock = f64::INFINITY;
        for k in 0..traj.len() {
            let phi = two_level_frame(sys.pulse.envelope_at(traj.times[k]), 1.0).phi_minus();
            let c = &traj.states[k];
            let overlap = phi[0] * c[0] + phi[1] * c[1];
            min_lock = min_lock.min(overlap.norm_sqr());
        }
        assert!(min_lock > 0.98, "ratio {ratio}: lock {min_lock}");
    }
}

#[test]
fn lambda_frame_lock_on_preset_operating_points() {
    for (om0, dp, ds, tau) in [
        (5.0, 2.5, 5.0, 6.0),
        (10.0, 2.5, 5.0, 6.0),
        (25.0, 2.5, 5.0, 6.0),
        (25.0, 4.5, 7.0, 6.0),
        (20.0, 5.0, 10.0, 6.0),
    ] {
        let sys = LambdaSystem::symmetric(om0, tau, dp, ds).unwrap();
        let grid = TimeGrid::symmetric_window(tau, 601).unwrap();
        let traj = propagate_lambda(&sys, &grid, 1e-9).unwrap();
        let lock = lambda_lock_minimum(&sys, &traj);
        assert!(lock > 0.98, "om0={om0}, dp={dp}: lock {lock}");
    }
}

#[test]
fn populations_time_symmetric_deep_in_the_adiabatic_regime() {
    // Δ·τ = 24 keeps the forward and backward halves of the pulse
    // indistinguishable at the 1e-4 level
    let sys = TwoLevelSystem::new(PulseEnvelope::new(12.0, 8.0).unwrap(), 3.0);
    let grid = TimeGrid::symmetric_window(8.0, 1601).unwrap();
    let traj = propagate_two_level(&sys, &grid, 1e-10).unwrap();
    let n = traj.len();
    let mut worst = 0.0f64;
    for k in 0..n {
        let fwd = traj.populations(k);
        let bwd = traj.populations(n - 1 - k);
        for i in 0..2 {
            worst = worst.max((fwd[i] - bwd[i]).abs());
        }
    }
    assert!(worst < 1e-4, "time asymmetry {worst}");
}

#[test]
fn norm_conserved_across_presets() {
    let mut worst = 0.0f64;
    for (om0, dp, ds, tau) in [
        (20.0, 5.0, 10.0, 6.5),
        (25.0, 2.5, 5.0, 6.0),
        (25.0, 4.5, 7.0, 6.0),
        (20.0, 8.0, 8.0, 6.5),
    ] {
        let sys = LambdaSystem::symmetric(om0, tau, dp, ds).unwrap();
        let grid = TimeGrid::symmetric_window(tau, 401).unwrap();
        let traj = propagate_lambda(&sys, &grid, 1e-9).unwrap();
        worst = worst.max(traj.max_norm_deviation());
    }
    for ratio in [1.0, 4.0, 10.0] {
        let sys = TwoLevelSystem::new(PulseEnvelope::new(ratio, 8.0).unwrap(), 1.0);
        let grid = TimeGrid::symmetric_window(8.0, 401).unwrap();
        let traj = propagate_two_level(&sys, &grid, 1e-9).unwrap();
        worst = worst.max(traj.max_norm_deviation());
    }
    assert!(worst <= 1e-8, "norm drift {worst}");
}

#[test]
fn reruns_are_byte_identical_across_worker_counts() {
    let template = LambdaSystem::symmetric(20.0, 6.5, 0.0, 0.0).unwrap();
    let grid = GridSpec::linspace(GridAxes::Detunings, (-12.0, 12.0), (-12.0, 12.0), 7).unwrap();
    let reference =
        map_csv(&detuning_map(Observable::P2PlusP3Final, &template, &grid, Some(1)).unwrap());
    for threads in [2, 4] {
        let again = map_csv(
            &detuning_map(Observable::P2PlusP3Final, &template, &grid, Some(threads)).unwrap(),
        );
        assert_eq!(reference, again, "threads = {threads}");
    }

    let sys = LambdaSystem::symmetric(25.0, 6.0, 2.5, 5.0).unwrap();
    let tg = TimeGrid::symmetric_window(6.0, 201).unwrap();
    let a = trajectory3_csv(&propagate_lambda(&sys, &tg, 1e-9).unwrap());
    let b = trajectory3_csv(&propagate_lambda(&sys, &tg, 1e-9).unwrap());
    assert_eq!(a, b);
}

#[test]
fn grid_refinement_reuses_point_values() {
    // grid points are pure functions of their parameters: refining the
    // grid leaves previously computed points untouched
    let template = LambdaSystem::symmetric(20.0, 6.5, 0.0, 0.0).unwrap();
    let coarse = GridSpec::new(
        GridAxes::Detunings,
        vec![-10.0, 0.0, 10.0],
        vec![-10.0, 0.0, 10.0],
    )
    .unwrap();
    let fine = GridSpec::new(
        GridAxes::Detunings,
        vec![-10.0, -5.0, 0.0, 5.0, 10.0],
        vec![-10.0, -5.0, 0.0, 5.0, 10.0],
    )
    .unwrap();
    let mc = detuning_map(Observable::P2AtPeak, &template, &coarse, Some(2)).unwrap();
    let mf = detuning_map(Observable::P2AtPeak, &template, &fine, Some(2)).unwrap();
    for (ic, iyc) in [(0usize, 0usize), (1, 1), (2, 2)] {
        let jf = 2 * ic;
        let jyf = 2 * iyc;
        assert_eq!(mc.value_at(ic, iyc), mf.value_at(jf, jyf));
    }
}
