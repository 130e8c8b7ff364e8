//! Parsing of quantities with practical unit suffixes.

use anyhow::{bail, Result};

fn split_suffix<'a>(text: &'a str, suffixes: &[&'static str]) -> (&'a str, Option<&'static str>) {
    for s in suffixes {
        if let Some(head) = text.strip_suffix(s) {
            return (head, Some(s));
        }
    }
    (text, None)
}

fn number(text: &str, what: &str) -> Result<f64> {
    let t = text.trim();
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => bail!("cannot parse {what} value `{text}`"),
    }
}

/// Angular frequency in rad/s. Bare numbers are read as ns⁻¹.
pub fn parse_rabi(text: &str) -> Result<f64> {
    let (head, suffix) = split_suffix(text.trim(), &["ns-1", "ns^-1", "/ns", "rad/s"]);
    let v = number(head, "frequency")?;
    Ok(match suffix {
        Some("rad/s") => v,
        _ => v * 1e9,
    })
}

/// Wavelength in meters. Bare numbers are read as nm.
pub fn parse_wavelength(text: &str) -> Result<f64> {
    let (head, suffix) = split_suffix(text.trim(), &["nm", "m"]);
    let v = number(head, "wavelength")?;
    Ok(match suffix {
        Some("m") => v,
        _ => v * 1e-9,
    })
}

/// Dipole moment in C·m. Bare numbers are read as Debye.
pub fn parse_dipole(text: &str) -> Result<f64> {
    let (head, suffix) = split_suffix(text.trim(), &["D", "C.m", "Cm"]);
    let v = number(head, "dipole moment")?;
    Ok(match suffix {
        Some("D") | None => v * adiapulse::labcalc::constants::DEBYE,
        _ => v,
    })
}

/// Particle mass in kg. Bare numbers are read as unified atomic mass units.
pub fn parse_mass(text: &str) -> Result<f64> {
    let (head, suffix) = split_suffix(text.trim(), &["u", "kg"]);
    let v = number(head, "mass")?;
    Ok(match suffix {
        Some("kg") => v,
        _ => v * adiapulse::labcalc::constants::ATOMIC_MASS,
    })
}

/// Intensity in W/m². Bare numbers are read as W/cm².
pub fn parse_intensity(text: &str) -> Result<f64> {
    let t = text.trim();
    let (head, suffix) = split_suffix(t, &["GW/cm2", "MW/cm2", "kW/cm2", "W/cm2", "W/m2"]);
    let v = number(head, "intensity")?;
    Ok(match suffix {
        Some("GW/cm2") => v * 1e13,
        Some("MW/cm2") => v * 1e10,
        Some("kW/cm2") => v * 1e7,
        Some("W/m2") => v,
        _ => v * 1e4,
    })
}
