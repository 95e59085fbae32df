//! The machine-readable report printed by every subcommand.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::search::SearchStats;

/// Tri-state outcome of a run, mapped onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Refuted,
    Inconclusive,
    /// Generators and plain computations: nothing to refute.
    Computed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Holds | Outcome::Computed => 0,
            Outcome::Refuted => 1,
            Outcome::Inconclusive => 2,
        }
    }

    pub fn holds(self) -> Option<bool> {
        match self {
            Outcome::Holds => Some(true),
            Outcome::Refuted => Some(false),
            Outcome::Inconclusive | Outcome::Computed => None,
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Outcome::Holds
        } else {
            Outcome::Refuted
        }
    }
}

/// What a subcommand hands back before it is wrapped into a [`RunReport`].
#[derive(Clone, Debug)]
pub struct Run {
    pub verdict: String,
    pub outcome: Outcome,
    pub result: Value,
    pub certificate: Option<Value>,
    pub stats: SearchStats,
}

impl Run {
    pub fn new(verdict: impl Into<String>, outcome: Outcome, result: Value) -> Self {
        Run {
            verdict: verdict.into(),
            outcome,
            result,
            certificate: None,
            stats: SearchStats::default(),
        }
    }

    pub fn with_certificate(mut self, cert: Value) -> Self {
        self.certificate = Some(cert);
        self
    }

    pub fn with_stats(mut self, stats: SearchStats) -> Self {
        self.stats = stats;
        self
    }
}

/// Everything but `timings_ms` is a function of the input, seed and budget.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub verdict: String,
    pub holds: Option<bool>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_path: Option<PathBuf>,
    pub timings_ms: f64,
    pub stats: SearchStats,
    pub seed: u64,
    pub budget: u64,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Writes the certificate to `<dir>/<command>-<digest prefix>.json`.
pub fn write_certificate(dir: &Path, command: &str, digest: &str, cert: &Value) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{command}-{}.json", &digest[..12]));
    let mut text = serde_json::to_string_pretty(cert).map_err(std::io::Error::other)?;
    text.push('\n');
    std::fs::write(&path, text)?;
    Ok(path)
}
