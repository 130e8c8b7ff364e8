//! Pulse envelopes and system parameter records.
//!
//! All frequencies (Rabi amplitudes and detunings) are angular frequencies in
//! inverse time units; the time unit itself is arbitrary but must be
//! consistent within a run. Nanosecond-scale lab parameters map onto this by
//! reading frequencies in ns⁻¹ and times in ns.

use thiserror::Error;

/// Number of Gaussian widths beyond which a pulse is treated as switched off.
///
/// At `t = t0 ± INFINITY_SIGMA·τ` the envelope has fallen below 2e-10 of its
/// peak, which stands in for t = ±∞ in asymptotic readouts and default
/// integration windows.
pub const INFINITY_SIGMA: f64 = 5.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

fn ensure(ok: bool, name: &'static str, reason: String) -> Result<(), ParamError> {
    if ok {
        Ok(())
    } else {
        Err(ParamError::InvalidParameter { name, reason })
    }
}

/// Gaussian Rabi envelope Ω(t) = Ω₀·exp(−(t−t₀)²/τ²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseEnvelope {
    peak_rabi: f64,
    width_tau: f64,
    center_t0: f64,
}

impl PulseEnvelope {
    /// Pulse centered at t = 0. Requires Ω₀ ≥ 0 and τ > 0.
    pub fn new(peak_rabi: f64, width_tau: f64) -> Result<Self, ParamError> {
        Self::with_center(peak_rabi, width_tau, 0.0)
    }

    pub fn with_center(peak_rabi: f64, width_tau: f64, center_t0: f64) -> Result<Self, ParamError> {
        ensure(
            peak_rabi.is_finite() && peak_rabi >= 0.0,
            "peak_rabi",
            format!("must be finite and non-negative, got {peak_rabi}"),
        )?;
        ensure(
            width_tau.is_finite() && width_tau > 0.0,
            "width_tau",
            format!("must be finite and positive, got {width_tau}"),
        )?;
        ensure(
            center_t0.is_finite(),
            "center_t0",
            format!("must be finite, got {center_t0}"),
        )?;
        Ok(Self {
            peak_rabi,
            width_tau,
            center_t0,
        })
    }

    pub fn peak_rabi(&self) -> f64 {
        self.peak_rabi
    }

    pub fn width_tau(&self) -> f64 {
        self.width_tau
    }

    pub fn center_t0(&self) -> f64 {
        self.center_t0
    }

    /// Instantaneous Rabi frequency Ω(t).
    pub fn envelope_at(&self, t: f64) -> f64 {
        let s = (t - self.center_t0) / self.width_tau;
        self.peak_rabi * (-s * s).exp()
    }

    /// The pulse duration T entering the adiabatic criterion |Δ| ≥ 1/T,
    /// identified with the Gaussian width τ.
    pub fn effective_duration(&self) -> f64 {
        self.width_tau
    }

    /// Default asymptotic window edge t₀ ± 5τ.
    pub fn switch_off_time(&self) -> f64 {
        self.center_t0 + INFINITY_SIGMA * self.width_tau
    }
}

/// Driven two-level system: one pulse plus the laser detuning Δ = E₂₁ − ω_L.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelSystem {
    pub pulse: PulseEnvelope,
    pub detuning: f64,
}

impl TwoLevelSystem {
    pub fn new(pulse: PulseEnvelope, detuning: f64) -> Self {
        Self { pulse, detuning }
    }
}

/// Λ scheme: pump and Stokes pulses with their one-photon detunings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaSystem {
    pub pump: PulseEnvelope,
    pub stokes: PulseEnvelope,
    pub delta_p: f64,
    pub delta_s: f64,
}

impl LambdaSystem {
    pub fn new(pump: PulseEnvelope, stokes: PulseEnvelope, delta_p: f64, delta_s: f64) -> Self {
        Self {
            pump,
            stokes,
            delta_p,
            delta_s,
        }
    }

    /// Both envelopes share peak, width, and center; the common case in which
    /// pump and Stokes are split off one laser system.
    pub fn symmetric(
        peak_rabi: f64,
        width_tau: f64,
        delta_p: f64,
        delta_s: f64,
    ) -> Result<Self, ParamError> {
        let p = PulseEnvelope::new(peak_rabi, width_tau)?;
        Ok(Self::new(p, p, delta_p, delta_s))
    }

    pub fn pump_at(&self, t: f64) -> f64 {
        self.pump.envelope_at(t)
    }

    pub fn stokes_at(&self, t: f64) -> f64 {
        self.stokes.envelope_at(t)
    }

    /// Time of maximum combined intensity Ω_P² + Ω_S². Coincides with the
    /// shared center when both pulses are centered together; otherwise found
    /// by golden-section search between the two centers.
    pub fn peak_time(&self) -> f64 {
        if self.pump.center_t0 == self.stokes.center_t0 {
            return self.pump.center_t0;
        }
        let combined = |t: f64| -(self.pump_at(t).powi(2) + self.stokes_at(t).powi(2));
        let (mut a, mut b) = (
            self.pump.center_t0.min(self.stokes.center_t0),
            self.pump.center_t0.max(self.stokes.center_t0),
        );
        let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
        for _ in 0..120 {
            let c = b - phi * (b - a);
            let d = a + phi * (b - a);
            if combined(c) < combined(d) {
                b = d;
            } else {
                a = c;
            }
        }
        0.5 * (a + b)
    }

    /// Largest switch-off time of the two pulses.
    pub fn switch_off_time(&self) -> f64 {
        self.pump
            .switch_off_time()
            .max(self.stokes.switch_off_time())
    }

    pub fn max_width(&self) -> f64 {
        self.pump.width_tau().max(self.stokes.width_tau())
    }
}

/// Output sampling grid. Controls where trajectories are reported, not the
/// integrator's internal steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_start: f64,
    t_end: f64,
    n_samples: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, t_end: f64, n_samples: usize) -> Result<Self, ParamError> {
        ensure(
            t_start.is_finite() && t_end.is_finite() && t_start < t_end,
            "t_start/t_end",
            format!("need t_start < t_end, got [{t_start}, {t_end}]"),
        )?;
        ensure(
            n_samples >= 2,
            "n_samples",
            format!("need at least 2 samples, got {n_samples}"),
        )?;
        Ok(Self {
            t_start,
            t_end,
            n_samples,
        })
    }

    /// Symmetric window [−5τ, +5τ] around a pulse center at 0.
    pub fn symmetric_window(tau_max: f64, n_samples: usize) -> Result<Self, ParamError> {
        let half = INFINITY_SIGMA * tau_max;
        Self::new(-half, half, n_samples)
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn times(&self) -> Vec<f64> {
        let n = self.n_samples;
        let dt = (self.t_end - self.t_start) / (n - 1) as f64;
        (0..n)
            .map(|k| {
                if k == n - 1 {
                    self.t_end
                } else {
                    self.t_start + k as f64 * dt
                }
            })
            .collect()
    }
}
