//! Run manifests: everything needed to reproduce an invocation.
//!
//! The manifest is the only output that carries a timestamp; data files
//! are pure functions of the recorded command and parameters.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct RunManifest {
    /// The exact invocation, argv joined by spaces.
    pub command: String,
    /// Full resolved parameter set of the run.
    pub parameters: Value,
    pub tool_version: &'static str,
    pub tolerances: Tolerances,
    /// Seconds since the Unix epoch at write time.
    pub timestamp_unix: u64,
}

#[derive(Debug, Serialize)]
pub struct Tolerances {
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl RunManifest {
    pub fn new(parameters: Value) -> Self {
        let command = std::env::args().collect::<Vec<_>>().join(" ");
        Self {
            command,
            parameters,
            tool_version: env!("CARGO_PKG_VERSION"),
            tolerances: Tolerances {
                rel_tol: adiapulse::propagator::DEFAULT_REL_TOL,
                abs_tol: adiapulse::propagator::DEFAULT_REL_TOL
                    * adiapulse::propagator::DEFAULT_ABS_TOL_RATIO,
            },
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        text
    }
}
