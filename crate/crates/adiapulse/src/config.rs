//! Flat key-value run configuration.
//!
//! The format is one `key = value` pair per line, `#` comments, blank
//! lines ignored. Recognized keys: `omega0_p`, `omega0_s`, `tau_p`,
//! `tau_s`, `delta_p`, `delta_s`, `t_start`, `t_end`, `n_samples`.
//! Unknown keys are rejected so typos cannot silently change a run.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::pulse::{LambdaSystem, ParamError, PulseEnvelope, TimeGrid, TwoLevelSystem};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("key `{key}`: cannot parse `{value}` as a number")]
    BadNumber { key: String, value: String },
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error(transparent)]
    Param(#[from] ParamError),
}

const KEYS: [&str; 9] = [
    "omega0_p",
    "omega0_s",
    "tau_p",
    "tau_s",
    "delta_p",
    "delta_s",
    "t_start",
    "t_end",
    "n_samples",
];

/// Parsed simulation configuration. Field presence mirrors the file; the
/// accessors assemble validated domain objects.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SimConfig {
    pub omega0_p: Option<f64>,
    pub omega0_s: Option<f64>,
    pub tau_p: Option<f64>,
    pub tau_s: Option<f64>,
    pub delta_p: Option<f64>,
    pub delta_s: Option<f64>,
    pub t_start: Option<f64>,
    pub t_end: Option<f64>,
    pub n_samples: Option<usize>,
}

impl SimConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut seen: BTreeMap<String, f64> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stripped = raw.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let Some((key, value)) = stripped.split_once('=') else {
                return Err(ConfigError::Malformed {
                    line,
                    text: raw.trim().to_string(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            if !KEYS.contains(&key) {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                });
            }
            if seen.contains_key(key) {
                return Err(ConfigError::DuplicateKey {
                    line,
                    key: key.to_string(),
                });
            }
            let number: f64 = value.parse().map_err(|_| ConfigError::BadNumber {
                key: key.to_string(),
                value: value.to_string(),
            })?;
            seen.insert(key.to_string(), number);
        }

        let mut cfg = SimConfig::default();
        for (key, value) in seen {
            match key.as_str() {
                "omega0_p" => cfg.omega0_p = Some(value),
                "omega0_s" => cfg.omega0_s = Some(value),
                "tau_p" => cfg.tau_p = Some(value),
                "tau_s" => cfg.tau_s = Some(value),
                "delta_p" => cfg.delta_p = Some(value),
                "delta_s" => cfg.delta_s = Some(value),
                "t_start" => cfg.t_start = Some(value),
                "t_end" => cfg.t_end = Some(value),
                "n_samples" => {
                    if value.fract() != 0.0 || value < 0.0 {
                        return Err(ConfigError::BadNumber {
                            key,
                            value: value.to_string(),
                        });
                    }
                    cfg.n_samples = Some(value as usize);
                }
                _ => unreachable!("key list is closed"),
            }
        }
        Ok(cfg)
    }

    /// Serializes back to the flat format with keys in canonical order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut emit = |key: &str, v: Option<f64>| {
            if let Some(v) = v {
                let _ = writeln!(out, "{key} = {v}");
            }
        };
        emit("omega0_p", self.omega0_p);
        emit("omega0_s", self.omega0_s);
        emit("tau_p", self.tau_p);
        emit("tau_s", self.tau_s);
        emit("delta_p", self.delta_p);
        emit("delta_s", self.delta_s);
        emit("t_start", self.t_start);
        emit("t_end", self.t_end);
        if let Some(n) = self.n_samples {
            let _ = writeln!(out, "n_samples = {n}");
        }
        out
    }

    fn require(v: Option<f64>, key: &'static str) -> Result<f64, ConfigError> {
        v.ok_or(ConfigError::MissingKey(key))
    }

    /// Two-level system from the pump-side keys.
    pub fn two_level_system(&self) -> Result<TwoLevelSystem, ConfigError> {
        let pulse = PulseEnvelope::new(
            Self::require(self.omega0_p, "omega0_p")?,
            Self::require(self.tau_p, "tau_p")?,
        )?;
        Ok(TwoLevelSystem::new(
            pulse,
            Self::require(self.delta_p, "delta_p")?,
        ))
    }

    pub fn lambda_system(&self) -> Result<LambdaSystem, ConfigError> {
        let pump = PulseEnvelope::new(
            Self::require(self.omega0_p, "omega0_p")?,
            Self::require(self.tau_p, "tau_p")?,
        )?;
        let stokes = PulseEnvelope::new(
            Self::require(self.omega0_s, "omega0_s")?,
            Self::require(self.tau_s, "tau_s")?,
        )?;
        Ok(LambdaSystem::new(
            pump,
            stokes,
            Self::require(self.delta_p, "delta_p")?,
            Self::require(self.delta_s, "delta_s")?,
        ))
    }

    /// Sampling grid; defaults to ±5·max(τ) with 1201 samples when the
    /// window keys are absent.
    pub fn time_grid(&self, tau_max: f64) -> Result<TimeGrid, ConfigError> {
        let n = self.n_samples.unwrap_or(1201);
        match (self.t_start, self.t_end) {
            (Some(a), Some(b)) => Ok(TimeGrid::new(a, b, n)?),
            (None, None) => Ok(TimeGrid::symmetric_window(tau_max, n)?),
            (a, _) => {
                let key = if a.is_none() { "t_start" } else { "t_end" };
                Err(ConfigError::MissingKey(key))
            }
        }
    }
}
