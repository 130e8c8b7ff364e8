//! Instantaneous RWA Hamiltonians, reported divided by ħ.
//!
//! Laser phases are gauged to zero so all couplings are real and the
//! matrices come out symmetric. With H/ħ in angular-frequency units the
//! Schrödinger equation reads dc/dt = −i·(H/ħ)·c, with no ħ bookkeeping
//! anywhere downstream.

use nalgebra::{Matrix2, Matrix3};

use crate::pulse::{LambdaSystem, TwoLevelSystem};

/// Two-level RWA Hamiltonian over ħ at time t:
/// (1/2)·[[0, Ω(t)], [Ω(t), 2Δ]].
pub fn h_two_level(sys: &TwoLevelSystem, t: f64) -> Matrix2<f64> {
    let half_omega = 0.5 * sys.pulse.envelope_at(t);
    Matrix2::new(0.0, half_omega, half_omega, sys.detuning)
}

/// Λ-system RWA Hamiltonian over ħ at time t:
/// (1/2)·[[0, Ω_P, 0], [Ω_P, 2Δ_P, Ω_S], [0, Ω_S, 2(Δ_P−Δ_S)]].
pub fn h_lambda(sys: &LambdaSystem, t: f64) -> Matrix3<f64> {
    h_lambda_at(sys.pump_at(t), sys.stokes_at(t), sys.delta_p, sys.delta_s)
}

/// Same matrix from instantaneous Rabi frequencies instead of a pulse pair.
pub fn h_lambda_at(omega_p: f64, omega_s: f64, delta_p: f64, delta_s: f64) -> Matrix3<f64> {
    let hp = 0.5 * omega_p;
    let hs = 0.5 * omega_s;
    Matrix3::new(0.0, hp, 0.0, hp, delta_p, hs, 0.0, hs, delta_p - delta_s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pulse::PulseEnvelope;
    use approx::assert_relative_eq;

    #[test]
    fn two_level_diagonal_limit() {
        let sys = TwoLevelSystem::new(PulseEnvelope::new(0.0, 1.0).unwrap(), 3.0);
        let h = h_two_level(&sys, 0.0);
        assert_eq!(h, Matrix2::new(0.0, 0.0, 0.0, 3.0));
    }

    #[test]
    fn two_level_resonance() {
        let sys = TwoLevelSystem::new(PulseEnvelope::new(4.0, 1.0).unwrap(), 0.0);
        let h = h_two_level(&sys, 0.0);
        assert_eq!(h, Matrix2::new(0.0, 2.0, 2.0, 0.0));
    }

    #[test]
    fn two_level_composes_with_envelope() {
        let sys = TwoLevelSystem::new(PulseEnvelope::new(20.0, 8.0).unwrap(), 2.0);
        let h = h_two_level(&sys, 8.0);
        let expected = 10.0 / std::f64::consts::E;
        assert_relative_eq!(h[(0, 1)], expected, max_relative = 1e-15);
        assert_relative_eq!(h[(1, 0)], expected, max_relative = 1e-15);
        assert_eq!(h[(1, 1)], 2.0);
        assert_eq!(h[(0, 0)], 0.0);
    }

    #[test]
    fn lambda_bare_limit() {
        let sys = LambdaSystem::symmetric(0.0, 1.0, 5.0, 10.0).unwrap();
        let h = h_lambda(&sys, 0.0);
        assert_eq!(
            h,
            Matrix3::from_diagonal(&nalgebra::Vector3::new(0.0, 5.0, -5.0))
        );
    }

    #[test]
    fn lambda_two_photon_resonance_zero_detuning() {
        let sys = LambdaSystem::symmetric(2.0, 1.0, 0.0, 0.0).unwrap();
        let h = h_lambda(&sys, 0.0);
        assert_eq!(h, Matrix3::new(0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0));
    }

    #[test]
    fn lambda_direct_substitution() {
        let sys = LambdaSystem::symmetric(20.0, 1.0, 5.0, 10.0).unwrap();
        let h = h_lambda(&sys, 0.0);
        assert_eq!(
            h,
            Matrix3::new(0.0, 10.0, 0.0, 10.0, 5.0, 10.0, 0.0, 10.0, -5.0)
        );
    }

    #[test]
    fn symmetry_is_exact() {
        let sys = LambdaSystem::symmetric(17.3, 2.7, -4.1, 9.9).unwrap();
        let h = h_lambda(&sys, 0.83);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h[(i, j)], h[(j, i)]);
            }
        }
    }

    #[test]
    fn lambda_without_stokes_reduces_to_two_level() {
        let pump = PulseEnvelope::new(7.0, 3.0).unwrap();
        let stokes = PulseEnvelope::new(0.0, 3.0).unwrap();
        let lam = LambdaSystem::new(pump, stokes, 1.7, 0.4);
        let two = TwoLevelSystem::new(pump, 1.7);
        for t in [-2.0, 0.0, 1.3] {
            let h3 = h_lambda(&lam, t);
            let h2 = h_two_level(&two, t);
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(h3[(i, j)], h2[(i, j)]);
                }
            }
        }
    }
}
