//! Analytic adiabaticity criteria.
//!
//! The two-level criterion is the detuning condition |Δ| ≥ 1/T. For the Λ
//! system the relevant quantities are the eigenvalue gaps around the
//! middle adiabatic state, available in closed form from the cubic
//! solution, and the detuning-space classification of where those gaps
//! close or peak as the pulses vanish.

use crate::frame::{nonadiabatic_couplings, CubicCoefficients, FrameError};
use crate::pulse::LambdaSystem;

/// Default factor by which a gap must exceed its coupling to count as
/// adiabatic.
pub const DEFAULT_ADIABATIC_MARGIN: f64 = 10.0;

/// Default relative tolerance for detuning-line classification.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-6;

/// Relative Rabi amplitude standing in for the Ω → 0 limit. Keeps the
/// trigonometric path non-degenerate instead of switching code paths.
pub const SMALL_RABI_REL: f64 = 1e-6;

/// Two-level adiabatic-following condition |Δ| ≥ 1/T.
pub fn two_level_adiabatic(delta: f64, duration: f64) -> bool {
    assert!(duration > 0.0, "pulse duration must be positive");
    delta.abs() >= 1.0 / duration
}

/// Closed-form eigenvalue gaps (|Z₁−Z₂|, |Z₃−Z₂|):
/// |Z₁−Z₂| = |p(cos θ/3 − (√3/3)·sin θ/3)| and |Z₃−Z₂| = |(2√3/3)·p·sin θ/3|.
/// Degenerate coefficients give (0, 0).
pub fn gap_functions(coeffs: &CubicCoefficients) -> (f64, f64) {
    if coeffs.degenerate {
        return (0.0, 0.0);
    }
    let third = coeffs.theta / 3.0;
    let sqrt3_over_3 = 3.0_f64.sqrt() / 3.0;
    let gap_12 = (coeffs.p * (third.cos() - sqrt3_over_3 * third.sin())).abs();
    let gap_32 = (2.0 * sqrt3_over_3 * coeffs.p * third.sin()).abs();
    (gap_12, gap_32)
}

/// Where a detuning pair sits relative to the gap-extremum lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetuningKind {
    /// On a gap-closing line (level crossing as Ω → 0).
    Minimum,
    /// On a gap-maximum line.
    Maximum,
    /// On neither.
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetuningClass {
    pub kind: DetuningKind,
    /// Limiting gap value on the classified line: 0 on minimum lines,
    /// |Δ_S| on maximum lines, undefined (NaN) for generic pairs.
    pub limit_gap: f64,
}

/// Classifies a detuning pair against the crossing lines Δ_P ∈ {0, Δ_S}
/// (minimum) and the gap-peak lines Δ_P ∈ {2Δ_S, Δ_S/2, −Δ_S} (maximum),
/// with a relative tolerance on max(|Δ_P|, |Δ_S|). Minimum takes
/// precedence where lines intersect (only at the origin).
pub fn classify_detunings(delta_p: f64, delta_s: f64, tol: f64) -> DetuningClass {
    let scale = delta_p.abs().max(delta_s.abs());
    let near = |x: f64| x.abs() <= tol * scale;
    if near(delta_p) || near(delta_p - delta_s) {
        DetuningClass {
            kind: DetuningKind::Minimum,
            limit_gap: 0.0,
        }
    } else if near(delta_p - 2.0 * delta_s)
        || near(delta_s - 2.0 * delta_p)
        || near(delta_p + delta_s)
    {
        DetuningClass {
            kind: DetuningKind::Maximum,
            limit_gap: delta_s.abs(),
        }
    } else {
        DetuningClass {
            kind: DetuningKind::Generic,
            limit_gap: f64::NAN,
        }
    }
}

/// Residuals of the polynomial identities that locate the gap extrema in
/// detuning space at vanishing Rabi frequency. Each residual is zero
/// exactly on its classified line; all scale as detuning³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaExtremaResiduals {
    /// 2a³ − 9ab − 2p³: zero where the |Z₁−Z₂| gap closes (θ = π).
    pub closing_12: f64,
    /// 2a³ − 9ab + 2p³: zero where the |Z₃−Z₂| gap closes (θ = 0).
    pub closing_32: f64,
    /// 2a³ − 9ab: zero on the gap-maximum lines (θ = π/2).
    pub peak: f64,
    /// (Δ_P − 2Δ_S)(2Δ_P − Δ_S)(Δ_P + Δ_S): factored form of `peak`.
    pub peak_factored: f64,
}

impl ThetaExtremaResiduals {
    /// Smallest closing-branch residual magnitude.
    pub fn min_closing(&self) -> f64 {
        self.closing_12.abs().min(self.closing_32.abs())
    }
}

/// Evaluates the extremum identities at Ω_P = Ω_S = 0.
pub fn theta_extrema_check(delta_p: f64, delta_s: f64) -> ThetaExtremaResiduals {
    let a = -(2.0 * delta_p - delta_s);
    let b = delta_p * (delta_p - delta_s);
    let p = (a * a - 3.0 * b).max(0.0).sqrt();
    let core = 2.0 * a.powi(3) - 9.0 * a * b;
    ThetaExtremaResiduals {
        closing_12: core - 2.0 * p.powi(3),
        closing_32: core + 2.0 * p.powi(3),
        peak: core,
        peak_factored: (delta_p - 2.0 * delta_s) * (2.0 * delta_p - delta_s) * (delta_p + delta_s),
    }
}

/// Gap-versus-coupling assessment of one instant of a Λ trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport {
    pub gap_12: f64,
    pub gap_32: f64,
    pub coupling_12: f64,
    pub coupling_32: f64,
    pub adiabatic_12: bool,
    pub adiabatic_32: bool,
}

impl GapReport {
    pub fn adiabatic(&self) -> bool {
        self.adiabatic_12 && self.adiabatic_32
    }
}

/// Compares both eigenvalue gaps against their driving couplings at time t,
/// declaring a gap adiabatic when gap ≥ margin × |coupling|.
pub fn assess(
    sys: &LambdaSystem,
    t: f64,
    h_step: f64,
    margin: f64,
) -> Result<GapReport, FrameError> {
    let coeffs = crate::frame::cubic_coefficients(sys, t)?;
    let (gap_12, gap_32) = gap_functions(&coeffs);
    let couplings = nonadiabatic_couplings(sys, t, h_step)?;
    let coupling_12 = couplings.a12.abs();
    let coupling_32 = couplings.a23.abs();
    Ok(GapReport {
        gap_12,
        gap_32,
        coupling_12,
        coupling_32,
        adiabatic_12: gap_12 >= margin * coupling_12,
        adiabatic_32: gap_32 >= margin * coupling_32,
    })
}

/// Gap functions in the Ω → 0 limit, realized with a tiny relative Rabi
/// amplitude.
pub fn small_rabi_gaps(delta_p: f64, delta_s: f64) -> Result<(f64, f64), FrameError> {
    let omega = SMALL_RABI_REL * delta_p.abs().max(delta_s.abs()).max(1.0);
    let coeffs = crate::frame::cubic_coefficients_at(omega, omega, delta_p, delta_s)?;
    Ok(gap_functions(&coeffs))
}
