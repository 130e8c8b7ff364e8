//! Physical-unit calculators connecting the dimensionless simulations to
//! lab parameters: Rabi frequency ↔ laser intensity, effective two-photon
//! Rabi frequency, Doppler temperature bounds, and pair-emission photon
//! thresholds.
//!
//! Core quantities are SI throughout: angular frequencies in rad/s,
//! intensities in W/m², lengths in meters, dipole moments in C·m.

use thiserror::Error;

pub mod constants {
    //! CODATA values.

    /// Reduced Planck constant (J·s).
    pub const HBAR: f64 = 1.054_571_817e-34;
    /// Vacuum permittivity (F/m).
    pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
    /// Speed of light in vacuum (m/s).
    pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;
    /// Boltzmann constant (J/K).
    pub const BOLTZMANN: f64 = 1.380_649e-23;
    /// Unified atomic mass unit (kg).
    pub const ATOMIC_MASS: f64 = 1.660_539_066_60e-27;
    /// One Debye in C·m. The extra digits beyond 3.33e-30 matter for
    /// round-trip accuracy.
    pub const DEBYE: f64 = 3.335_64e-30;
}

use constants::*;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabcalcError {
    #[error("transition dipole moment must be positive for this conversion")]
    ZeroDipole,
    #[error("two-photon table needs intermediate-state rows or a calibration")]
    EmptyTable,
    #[error("a nonzero detuning is required")]
    ZeroDetuning,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// One-photon transition: wavelength plus transition dipole moment.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionSpec {
    /// Wavelength (m).
    pub wavelength: f64,
    /// Transition dipole moment (C·m).
    pub dipole_moment: f64,
    pub label: String,
}

impl TransitionSpec {
    pub fn new(wavelength: f64, dipole_moment: f64, label: &str) -> Result<Self, LabcalcError> {
        if !wavelength.is_finite() || wavelength <= 0.0 {
            return Err(LabcalcError::InvalidInput(format!(
                "wavelength must be positive, got {wavelength}"
            )));
        }
        if !dipole_moment.is_finite() || dipole_moment < 0.0 {
            return Err(LabcalcError::InvalidInput(format!(
                "dipole moment must be non-negative, got {dipole_moment}"
            )));
        }
        Ok(Self {
            wavelength,
            dipole_moment,
            label: label.to_string(),
        })
    }

    pub fn from_nm_debye(nm: f64, debye: f64, label: &str) -> Result<Self, LabcalcError> {
        Self::new(nm * 1e-9, debye * DEBYE, label)
    }
}

/// Intermediate-state data for an effective two-photon coupling, or a
/// measured calibration coefficient that stands in for the sum.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPhotonTable {
    rows: Vec<TwoPhotonRow>,
    /// Rabi frequency per intensity (rad/s per W/m²); overrides the sum.
    calibration: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPhotonRow {
    /// Dipole moment ground → intermediate (C·m).
    pub mu_1i: f64,
    /// Dipole moment intermediate → target (C·m).
    pub mu_i2: f64,
    /// One-photon detuning to the intermediate state (rad/s).
    pub delta_1i: f64,
}

impl TwoPhotonTable {
    pub fn from_rows(rows: Vec<TwoPhotonRow>) -> Result<Self, LabcalcError> {
        if rows.is_empty() {
            return Err(LabcalcError::EmptyTable);
        }
        if rows.iter().any(|r| r.delta_1i == 0.0) {
            return Err(LabcalcError::ZeroDetuning);
        }
        Ok(Self {
            rows,
            calibration: None,
        })
    }

    /// Calibration in rad/s of two-photon Rabi frequency per W/m².
    pub fn from_calibration(rabi_per_intensity: f64) -> Result<Self, LabcalcError> {
        if !(rabi_per_intensity.is_finite() && rabi_per_intensity != 0.0) {
            return Err(LabcalcError::InvalidInput(format!(
                "calibration must be finite and nonzero, got {rabi_per_intensity}"
            )));
        }
        Ok(Self {
            rows: Vec::new(),
            calibration: Some(rabi_per_intensity),
        })
    }

    /// Calibration quoted as Ω (ns⁻¹) per intensity (MW/cm²).
    pub fn from_calibration_ns_mwcm2(rabi_ns_per_mwcm2: f64) -> Result<Self, LabcalcError> {
        Self::from_calibration(rabi_ns_per_mwcm2 * 1e9 / mw_per_cm2_to_w_per_m2(1.0))
    }
}

/// Thermal gas: particle mass and temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasSpec {
    /// Particle mass (kg).
    pub particle_mass: f64,
    /// Temperature (K).
    pub temperature: f64,
}

impl GasSpec {
    pub fn new(particle_mass: f64, temperature: f64) -> Result<Self, LabcalcError> {
        if !(particle_mass.is_finite() && temperature.is_finite())
            || particle_mass <= 0.0
            || temperature <= 0.0
        {
            return Err(LabcalcError::InvalidInput(
                "mass and temperature must be positive".into(),
            ));
        }
        Ok(Self {
            particle_mass,
            temperature,
        })
    }

    /// RMS thermal speed √(3kT/m).
    pub fn thermal_speed(&self) -> f64 {
        (3.0 * BOLTZMANN * self.temperature / self.particle_mass).sqrt()
    }
}

/// Peak intensity producing Rabi frequency Ω on a one-photon transition:
/// E = ħΩ/μ, I = ½ε₀cE².
pub fn intensity_from_rabi(tr: &TransitionSpec, rabi: f64) -> Result<f64, LabcalcError> {
    if tr.dipole_moment <= 0.0 {
        return Err(LabcalcError::ZeroDipole);
    }
    let field = HBAR * rabi / tr.dipole_moment;
    Ok(0.5 * EPSILON_0 * SPEED_OF_LIGHT * field * field)
}

/// Inverse of [`intensity_from_rabi`]: Ω = μE/ħ with E = √(2I/ε₀c).
pub fn rabi_from_intensity(tr: &TransitionSpec, intensity: f64) -> Result<f64, LabcalcError> {
    if tr.dipole_moment <= 0.0 {
        return Err(LabcalcError::ZeroDipole);
    }
    if intensity < 0.0 {
        return Err(LabcalcError::InvalidInput(format!(
            "intensity must be non-negative, got {intensity}"
        )));
    }
    let field = (2.0 * intensity / (EPSILON_0 * SPEED_OF_LIGHT)).sqrt();
    Ok(tr.dipole_moment * field / HBAR)
}

/// Effective two-photon Rabi frequency at a given peak intensity:
/// Ω⁽²⁾ = Σᵢ μ₁ᵢμᵢ₂/(2ħ²Δ₁ᵢ)·E² with E² = 2I/(ε₀c), unless a calibration
/// coefficient stands in for the sum.
pub fn two_photon_rabi(table: &TwoPhotonTable, intensity: f64) -> Result<f64, LabcalcError> {
    if let Some(cal) = table.calibration {
        return Ok(cal * intensity);
    }
    if table.rows.is_empty() {
        return Err(LabcalcError::EmptyTable);
    }
    let e_squared = 2.0 * intensity / (EPSILON_0 * SPEED_OF_LIGHT);
    Ok(table
        .rows
        .iter()
        .map(|r| r.mu_1i * r.mu_i2 / (2.0 * HBAR * HBAR * r.delta_1i) * e_squared)
        .sum())
}

/// Intensity required for a target two-photon Rabi frequency.
pub fn intensity_for_two_photon_rabi(
    table: &TwoPhotonTable,
    rabi: f64,
) -> Result<f64, LabcalcError> {
    let per_unit = two_photon_rabi(table, 1.0)?;
    if per_unit == 0.0 {
        return Err(LabcalcError::InvalidInput(
            "two-photon coupling coefficient is zero".into(),
        ));
    }
    Ok((rabi / per_unit).abs())
}

/// Doppler shift (2πv/λ)·cos φ seen by a particle moving at speed v at
/// angle φ to the beam.
pub fn doppler_shift(wavelength: f64, speed: f64, angle: f64) -> f64 {
    2.0 * std::f64::consts::PI * speed / wavelength * angle.cos()
}

/// Temperature at which the worst-case (copropagating) Doppler shift of a
/// thermal particle equals the given detuning:
/// T = m·(Δλ/2π)²/(3k). Operating temperatures must stay far below this.
pub fn doppler_temperature_limit(
    tr: &TransitionSpec,
    particle_mass: f64,
    detuning: f64,
) -> Result<f64, LabcalcError> {
    if detuning == 0.0 {
        return Err(LabcalcError::ZeroDetuning);
    }
    if !particle_mass.is_finite() || particle_mass <= 0.0 {
        return Err(LabcalcError::InvalidInput(format!(
            "particle mass must be positive, got {particle_mass}"
        )));
    }
    let v = detuning.abs() * tr.wavelength / (2.0 * std::f64::consts::PI);
    Ok(particle_mass * v * v / (3.0 * BOLTZMANN))
}

/// Photon energy threshold below which emission of the (i, j) massive pair
/// opens: ω_ij = E_eg/2 − (m_i + m_j)²/(2E_eg). All arguments share one
/// energy unit.
pub fn renp_threshold(e_eg: f64, m_i: f64, m_j: f64) -> Result<f64, LabcalcError> {
    if !e_eg.is_finite() || e_eg <= 0.0 {
        return Err(LabcalcError::InvalidInput(format!(
            "level gap must be positive, got {e_eg}"
        )));
    }
    if m_i < 0.0 || m_j < 0.0 {
        return Err(LabcalcError::InvalidInput(
            "masses must be non-negative".into(),
        ));
    }
    let m = m_i + m_j;
    Ok(e_eg / 2.0 - m * m / (2.0 * e_eg))
}

// unit helpers

pub fn w_per_cm2_to_w_per_m2(x: f64) -> f64 {
    x * 1e4
}

pub fn w_per_m2_to_w_per_cm2(x: f64) -> f64 {
    x * 1e-4
}

pub fn mw_per_cm2_to_w_per_m2(x: f64) -> f64 {
    x * 1e10
}

pub fn gw_per_cm2_to_w_per_m2(x: f64) -> f64 {
    x * 1e13
}

/// ns⁻¹ → rad/s.
pub fn per_ns_to_rad_per_s(x: f64) -> f64 {
    x * 1e9
}

pub mod presets {
    //! Level-scheme data for the barium and xenon implementations.

    use super::*;

    /// Ba atomic mass (kg).
    pub fn ba_mass() -> f64 {
        137.327 * ATOMIC_MASS
    }

    /// Xe atomic mass (kg).
    pub fn xe_mass() -> f64 {
        131.293 * ATOMIC_MASS
    }

    /// Ba pump transition 6s² ¹S₀ → 6s6p ¹P₁ at 553.7 nm, μ = 8 D.
    pub fn ba_pump() -> TransitionSpec {
        TransitionSpec::from_nm_debye(553.7, 8.0, "Ba 6s2 1S0 <-> 6s6p 1P1").unwrap()
    }

    /// Ba Stokes transition 6s6p ¹P₁ → 6s5d ¹D₂ at 1500.4 nm, μ = 0.2 D.
    pub fn ba_stokes() -> TransitionSpec {
        TransitionSpec::from_nm_debye(1500.4, 0.2, "Ba 6s6p 1P1 <-> 6s5d 1D2").unwrap()
    }

    /// Xe two-photon pump at 256 nm, calibrated at 0.1 ns⁻¹ per MW/cm².
    pub fn xe_pump_two_photon() -> TwoPhotonTable {
        TwoPhotonTable::from_calibration_ns_mwcm2(0.1).unwrap()
    }

    /// Xe Stokes transition at 908 nm, μ = 5 D.
    pub fn xe_stokes() -> TransitionSpec {
        TransitionSpec::from_nm_debye(908.0, 5.0, "Xe 6p[5/2]2 <-> 6s[3/2]2").unwrap()
    }
}
