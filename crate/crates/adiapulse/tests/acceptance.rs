//! Acceptance suite. One test per criterion; each prints a single
//! `criterion N (<name>): PASS|FAIL` line (visible with `--nocapture`,
//! and in the captured output of failing tests) and then asserts.
//!
//! Criteria 1, 3, and 6 contain sub-assertions that the measured physics
//! of the stated parameter sets cannot satisfy; they are implemented
//! exactly as stated and fail honestly with the measured values in the
//! message. The analysis lives alongside the test in each failure string.

// bound checks are written negated so a NaN measurement fails the
// criterion instead of passing it
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::time::Instant;

use adiapulse::adiabaticity::gap_functions;
use adiapulse::frame::{
    adiabatic_basis, cubic_coefficients_at, frame_trajectory, lambda_eigenvalues,
    nonadiabatic_product,
};
use adiapulse::hamiltonian::h_lambda_at;
use adiapulse::labcalc::{
    doppler_temperature_limit, intensity_for_two_photon_rabi, intensity_from_rabi,
    per_ns_to_rad_per_s, presets as lab_presets, w_per_m2_to_w_per_cm2,
};
use adiapulse::output::{map_csv, trajectory2_csv};
use adiapulse::propagator::{
    cpr_population_analytic, propagate_lambda, propagate_two_level, DEFAULT_REL_TOL,
};
use adiapulse::pulse::{LambdaSystem, PulseEnvelope, TimeGrid, TwoLevelSystem};
use adiapulse::sweep::{detuning_map, preset, GridAxes, GridSpec, Observable};
use nalgebra::SymmetricEigen;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn verdict(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {id} ({name}): PASS");
    } else {
        println!("criterion {id} ({name}): FAIL");
        for f in failures {
            println!("  - {f}");
        }
    }
}

#[test]
fn criterion_1_cpr_return() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let tau = 8.0;
    let delta = 1.0;
    let grid = TimeGrid::symmetric_window(tau, 1601).unwrap();
    for ratio in [1.0, 4.0, 10.0] {
        let sys = TwoLevelSystem::new(PulseEnvelope::new(ratio * delta, tau).unwrap(), delta);
        let traj = propagate_two_level(&sys, &grid, DEFAULT_REL_TOL).unwrap();

        let p1_final = traj.final_population(0);
        if !(p1_final > 0.99) {
            failures.push(format!("ratio {ratio}: final P1 = {p1_final} ≤ 0.99"));
        }

        let expected = cpr_population_analytic(ratio * delta, delta).unwrap();
        let p2_peak = traj.population_at_peak(1);
        if !((p2_peak - expected).abs() <= 0.01) {
            failures.push(format!(
                "ratio {ratio}: peak P2 = {p2_peak:.6} vs adiabatic value {expected:.6} \
                 (|diff| = {:.4} > 0.01; the Δ·τ = 8 preset carries physical non-adiabatic \
                 beats of this size at ratio 10, so the stated tolerance is unattainable \
                 for these exact parameters)",
                (p2_peak - expected).abs()
            ));
        }
    }

    let elapsed = started.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("runtime {elapsed:?} ≥ 1 s"));
    }

    verdict(1, "CPR return", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_2_double_cpr_coherence() {
    let started = Instant::now();
    let mut failures = Vec::new();

    // Δ_P·τ = 15 ≥ 8, Ω₀p/Δ_P = 10
    let sys = preset::fig6_system(10.0);
    assert!(sys.delta_p * preset::FIG6_TAU >= 8.0);
    let grid = TimeGrid::symmetric_window(preset::FIG6_TAU, 1201).unwrap();
    let traj = propagate_lambda(&sys, &grid, DEFAULT_REL_TOL).unwrap();

    let p = traj.populations(traj.peak_index);
    if !(p[1] < 0.05) {
        failures.push(format!("peak P2 = {} ≥ 0.05", p[1]));
    }
    if !((p[0] - p[2]).abs() < 0.05) {
        failures.push(format!(
            "|P1 − P3| at peak = {} ≥ 0.05",
            (p[0] - p[2]).abs()
        ));
    }
    let released = traj.final_population(1) + traj.final_population(2);
    if !(released < 0.02) {
        failures.push(format!("P2+P3 at 5τ = {released} ≥ 0.02"));
    }

    let elapsed = started.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("runtime {elapsed:?} ≥ 1 s"));
    }

    verdict(2, "double-CPR coherence", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_3_detuning_maps() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let template = preset::fig45_template();
    let tau = preset::FIG45_TAU;
    let grid = GridSpec::linspace(GridAxes::Detunings, (-20.0, 20.0), (-20.0, 20.0), 51).unwrap();
    let final_map = detuning_map(Observable::P2PlusP3Final, &template, &grid, Some(4)).unwrap();
    let peak_map = detuning_map(Observable::P2AtPeak, &template, &grid, Some(4)).unwrap();

    // two-photon resonant diagonal with |Δ_P| ≥ 2/τ
    let threshold = 2.0 / tau;
    let mut diag_final_worst: (f64, f64) = (0.0, 0.0);
    let mut diag_peak_worst: (f64, f64) = (0.0, 0.0);
    for (i, &d) in grid.x_values.iter().enumerate() {
        if d.abs() < threshold {
            continue;
        }
        let fin = final_map.value_at(i, i).unwrap();
        let pk = peak_map.value_at(i, i).unwrap();
        if fin > diag_final_worst.1 {
            diag_final_worst = (d, fin);
        }
        if pk > diag_peak_worst.1 {
            diag_peak_worst = (d, pk);
        }
    }
    if !(diag_final_worst.1 < 0.02) {
        failures.push(format!(
            "diagonal Δ_P = Δ_S = {:.1}: final P2+P3 = {:.4} ≥ 0.02 (the dark state is exact \
             on the diagonal and the bright branch re-interferes with it, leaving \
             P2+P3(∞) = sin²(φ/2) with a large dynamical phase φ; full return on this line \
             holds only at isolated phase zeros, so the stated region-wide bound is \
             unattainable — the robust return line is Δ_S = 2Δ_P)",
            diag_final_worst.0, diag_final_worst.1
        ));
    }
    if !(diag_peak_worst.1 < 0.05) {
        failures.push(format!(
            "diagonal Δ_P = Δ_S = {:.1}: peak P2 = {:.4} ≥ 0.05 (half the initial state \
             rides the bright branch on the diagonal, contributing ~½·sin²ϑ_eff of transient \
             excited population)",
            diag_peak_worst.0, diag_peak_worst.1
        ));
    }

    // the Δ_P = 0 line and the nearest off-zero (near-resonant) lines must
    // fail the return criterion somewhere
    let zero_col = grid.x_values.iter().position(|&x| x == 0.0).unwrap();
    for col in [zero_col, zero_col - 1, zero_col + 1] {
        let worst = (0..grid.y_values.len())
            .filter_map(|iy| final_map.value_at(col, iy))
            .fold(0.0f64, f64::max);
        if !(worst > 0.1) {
            failures.push(format!(
                "Δ_P = {} line never exceeds P2+P3 = 0.1 (max {worst})",
                grid.x_values[col]
            ));
        }
    }

    let elapsed = started.elapsed();
    if elapsed.as_secs_f64() >= 120.0 {
        failures.push(format!("runtime {elapsed:?} ≥ 2 min on 4 workers"));
    }

    verdict(3, "detuning maps", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_4_eigen_oracle() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1ab_5eed);

    let mut worst_match = 0.0f64;
    let mut worst_residual = 0.0f64;
    for _ in 0..1000 {
        let dp = rng.random_range(-20.0..20.0);
        let ds = rng.random_range(-20.0..20.0);
        let omp = rng.random_range(0.0..40.0);
        let oms = rng.random_range(0.0..40.0);

        let coeffs = cubic_coefficients_at(omp, oms, dp, ds).unwrap();
        let mut trig = lambda_eigenvalues(&coeffs);
        trig.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut dense: Vec<f64> = SymmetricEigen::new(h_lambda_at(omp, oms, dp, ds))
            .eigenvalues
            .iter()
            .copied()
            .collect();
        dense.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let scale = dense.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (t, d) in trig.iter().zip(dense.iter()) {
            worst_match = worst_match.max((t - d).abs() / scale);
        }
        for z in trig {
            let res = (z.powi(3) + coeffs.a * z * z + coeffs.b * z + coeffs.c).abs()
                / z.abs().powi(3).max(1.0);
            worst_residual = worst_residual.max(res);
        }
    }
    if !(worst_match <= 1e-9) {
        failures.push(format!(
            "worst eigenvalue mismatch {worst_match:.2e} > 1e-9"
        ));
    }
    if !(worst_residual <= 1e-8) {
        failures.push(format!(
            "worst polynomial residual {worst_residual:.2e} > 1e-8"
        ));
    }

    verdict(4, "eigen-oracle", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_5_frame_properties() {
    let mut failures = Vec::new();

    let sys = preset::fig8_10_system();
    let tau = preset::FIG8_10_TAU;
    let grid = TimeGrid::symmetric_window(tau, 601).unwrap();
    let traj = frame_trajectory(&sys, &grid, Some(tau / 1000.0)).unwrap();

    let mut worst_orth = 0.0f64;
    let mut worst_det = 0.0f64;
    let mut worst_axis_norm = 0.0f64;
    let mut worst_axis_fix = 0.0f64;
    for s in &traj.samples {
        let r = &s.frame.r;
        let gram = r.transpose() * r;
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                worst_orth = worst_orth.max((gram[(i, j)] - expect).abs());
            }
        }
        worst_det = worst_det.max((r.determinant() - 1.0).abs());
        worst_axis_norm = worst_axis_norm.max((s.frame.axis.norm() - 1.0).abs());
        worst_axis_fix = worst_axis_fix.max((r.transpose() * s.frame.axis - s.frame.axis).norm());
    }
    if !(worst_orth <= 1e-10) {
        failures.push(format!("RᵀR − I up to {worst_orth:.2e} > 1e-10"));
    }
    if !(worst_det <= 1e-10) {
        failures.push(format!("det R off by {worst_det:.2e} > 1e-10"));
    }
    if !(worst_axis_norm <= 1e-12) {
        failures.push(format!("|u| off by {worst_axis_norm:.2e} > 1e-12"));
    }
    if !(worst_axis_fix <= 1e-9) {
        failures.push(format!("Rᵀu − u up to {worst_axis_fix:.2e} > 1e-9"));
    }

    // antisymmetry and zero diagonal of RᵀṘ at h = τ/1000
    let mut worst_antisym = 0.0f64;
    let mut worst_diag = 0.0f64;
    for k in 0..=120 {
        let t = -5.0 * tau + 10.0 * tau * k as f64 / 120.0;
        let a = nonadiabatic_product(&sys, t, tau / 1000.0).unwrap();
        let defect = a + a.transpose();
        for i in 0..3 {
            for j in 0..3 {
                worst_antisym = worst_antisym.max(defect[(i, j)].abs());
            }
            worst_diag = worst_diag.max(a[(i, i)].abs());
        }
    }
    if !(worst_antisym <= 1e-7) {
        failures.push(format!(
            "RᵀṘ antisymmetry defect {worst_antisym:.2e} > 1e-7"
        ));
    }
    if !(worst_diag <= 1e-7) {
        failures.push(format!("RᵀṘ diagonal up to {worst_diag:.2e} > 1e-7"));
    }

    // boundary projections at t = ±5τ
    let expect = nalgebra::Matrix3::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0);
    for s in [traj.samples.first().unwrap(), traj.samples.last().unwrap()] {
        let proj = s.frame.projections();
        for i in 0..3 {
            for j in 0..3 {
                let dev = (proj[(i, j)] - expect[(i, j)]).abs();
                if !(dev <= 1e-6) {
                    failures.push(format!(
                        "t = {}: projection ({i},{j}) off the asymptotic permutation by {dev:.2e}",
                        s.t
                    ));
                }
            }
        }
    }

    verdict(5, "frame properties", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_6_gap_conditions() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a9_5eed);

    let mut worst_half_line: Option<(f64, f64)> = None;
    for _ in 0..100 {
        let magnitude = rng.random_range(0.5..20.0);
        let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let ds: f64 = sign * magnitude;
        let omega = |dp: f64| 1e-6 * dp.abs().max(ds.abs()).max(1.0);

        // crossing lines: the closing gap vanishes
        for dp in [0.0, ds] {
            let c = cubic_coefficients_at(omega(dp), omega(dp), dp, ds).unwrap();
            let (g12, g32) = gap_functions(&c);
            if !(g12.min(g32) < 1e-5 * ds.abs()) {
                failures.push(format!(
                    "Δ_P={dp}, Δ_S={ds}: min gap {:.3e} not < 1e-5·|Δ_S|",
                    g12.min(g32)
                ));
            }
        }

        // gap-peak lines: both gaps must equal |Δ_S|
        for dp in [2.0 * ds, 0.5 * ds, -ds] {
            let c = cubic_coefficients_at(omega(dp), omega(dp), dp, ds).unwrap();
            let (g12, g32) = gap_functions(&c);
            for g in [g12, g32] {
                let rel = (g - ds.abs()).abs() / ds.abs();
                if rel > 1e-6 {
                    if dp == 0.5 * ds {
                        // record the systematic offset once for the verdict
                        worst_half_line = Some((ds, g));
                    } else {
                        failures.push(format!(
                            "Δ_P={dp}, Δ_S={ds}: gap {g:.6} differs from |Δ_S| by {rel:.2e}"
                        ));
                    }
                }
            }
        }
    }
    if let Some((ds, g)) = worst_half_line {
        failures.push(format!(
            "Δ_P = Δ_S/2 line (e.g. Δ_S = {ds:.3}): both gaps equal |Δ_P| = |Δ_S|/2 = {g:.3}, \
             not |Δ_S| (the dense eigensolver confirms the spectrum {{Δ_S/2, 0, −Δ_S/2}} on \
             this line, so the stated |Δ_S| value is unattainable there; it holds on the \
             Δ_P = 2Δ_S and Δ_P = −Δ_S lines)"
        ));
    }

    verdict(6, "gap conditions", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_7_lab_values() {
    let mut failures = Vec::new();
    let rabi20 = per_ns_to_rad_per_s(20.0);

    let mut timed = |name: &str, target: f64, band: f64, f: &dyn Fn() -> f64| {
        let t0 = Instant::now();
        let value = f();
        let elapsed = t0.elapsed();
        if !((value - target).abs() <= band * target) {
            failures.push(format!(
                "{name}: {value:.4} outside {target} ± {:.0}%",
                band * 100.0
            ));
        }
        if elapsed.as_secs_f64() >= 1e-3 {
            failures.push(format!("{name}: took {elapsed:?} ≥ 1 ms"));
        }
    };

    timed("Ba pump intensity (kW/cm²)", 1.0, 0.3, &|| {
        w_per_m2_to_w_per_cm2(intensity_from_rabi(&lab_presets::ba_pump(), rabi20).unwrap()) / 1e3
    });
    timed("Ba Stokes intensity (MW/cm²)", 1.6, 0.3, &|| {
        w_per_m2_to_w_per_cm2(intensity_from_rabi(&lab_presets::ba_stokes(), rabi20).unwrap()) / 1e6
    });
    timed("Xe pump intensity (GW/cm²)", 0.2, 0.3, &|| {
        w_per_m2_to_w_per_cm2(
            intensity_for_two_photon_rabi(&lab_presets::xe_pump_two_photon(), rabi20).unwrap(),
        ) / 1e9
    });
    timed("Xe Stokes intensity (kW/cm²)", 2.0, 0.3, &|| {
        w_per_m2_to_w_per_cm2(intensity_from_rabi(&lab_presets::xe_stokes(), rabi20).unwrap()) / 1e3
    });
    timed("Ba Doppler bound (K)", 4400.0, 0.1, &|| {
        doppler_temperature_limit(
            &lab_presets::ba_pump(),
            lab_presets::ba_mass(),
            per_ns_to_rad_per_s(10.0),
        )
        .unwrap()
    });

    verdict(7, "lab quantities", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_8_numerical_hygiene() {
    let mut failures = Vec::new();

    // norm conservation across the trajectory presets
    let mut worst_norm = 0.0f64;
    let fig1_grid = TimeGrid::symmetric_window(8.0, 801).unwrap();
    let mut fig1_trajs = Vec::new();
    for ratio in preset::FIG1_RATIOS {
        let sys = TwoLevelSystem::new(
            PulseEnvelope::new(ratio * preset::FIG1_DELTA, 8.0).unwrap(),
            preset::FIG1_DELTA,
        );
        let traj = propagate_two_level(&sys, &fig1_grid, DEFAULT_REL_TOL).unwrap();
        worst_norm = worst_norm.max(traj.max_norm_deviation());
        fig1_trajs.push((sys, traj));
    }

    let lambda_presets: Vec<LambdaSystem> = vec![
        preset::fig6_system(2.0),
        preset::fig6_system(4.0),
        preset::fig6_system(10.0),
        preset::fig8_10_system(),
        preset::fig11_12_system(),
        preset::fig7_template(),
    ];
    let mut lambda_trajs = Vec::new();
    for sys in &lambda_presets {
        let grid = TimeGrid::symmetric_window(sys.max_width(), 801).unwrap();
        let traj = propagate_lambda(sys, &grid, DEFAULT_REL_TOL).unwrap();
        worst_norm = worst_norm.max(traj.max_norm_deviation());
        lambda_trajs.push(traj);
    }
    if !(worst_norm <= 1e-8) {
        failures.push(format!("norm drift {worst_norm:.2e} > 1e-8"));
    }

    // adiabatic-frame lock on the adiabatic presets
    let mut worst_lock = f64::INFINITY;
    for (sys, traj) in &fig1_trajs {
        for k in 0..traj.len() {
            let phi =
                adiapulse::two_level_frame(sys.pulse.envelope_at(traj.times[k]), sys.detuning)
                    .phi_minus();
            let c = &traj.states[k];
            let overlap = phi[0] * c[0] + phi[1] * c[1];
            worst_lock = worst_lock.min(overlap.norm_sqr());
        }
    }
    for (sys, traj) in lambda_presets.iter().zip(lambda_trajs.iter()) {
        for k in 0..traj.len() {
            let phi2 = adiabatic_basis(sys, traj.times[k]).unwrap().basis_vector(1);
            let c = &traj.states[k];
            let overlap: Complex64 = (0..3).map(|j| phi2[j] * c[j]).sum();
            worst_lock = worst_lock.min(overlap.norm_sqr());
        }
    }
    if !(worst_lock > 0.98) {
        failures.push(format!("frame lock dropped to {worst_lock:.4} ≤ 0.98"));
    }

    // byte-identical reruns, including across worker counts
    let (sys, traj) = &fig1_trajs[2];
    let again = propagate_two_level(sys, &fig1_grid, DEFAULT_REL_TOL).unwrap();
    if trajectory2_csv(traj) != trajectory2_csv(&again) {
        failures.push("trajectory rerun differs".into());
    }
    let template = preset::fig45_template();
    let small = GridSpec::linspace(GridAxes::Detunings, (-10.0, 10.0), (-10.0, 10.0), 9).unwrap();
    let m1 = map_csv(&detuning_map(Observable::P2PlusP3Final, &template, &small, Some(1)).unwrap());
    let m4 = map_csv(&detuning_map(Observable::P2PlusP3Final, &template, &small, Some(4)).unwrap());
    if m1 != m4 {
        failures.push("map output depends on the worker count".into());
    }

    verdict(8, "numerical hygiene", &failures);
    assert!(failures.is_empty(), "{failures:#?}");
}
