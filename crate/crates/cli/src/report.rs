use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Machine-readable result of one command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub input_sha256: String,
    pub command: String,
    pub values: BTreeMap<String, String>,
    pub checks: BTreeMap<String, bool>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(input: &str, command: impl Into<String>) -> Self {
        Self {
            input_sha256: hex::encode(Sha256::digest(input.as_bytes())),
            command: command.into(),
            values: BTreeMap::new(),
            checks: BTreeMap::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn value(&mut self, name: &str, v: impl Display) {
        self.values.insert(name.to_string(), v.to_string());
    }

    pub fn check(&mut self, name: &str, ok: bool) {
        self.checks.insert(name.to_string(), ok);
    }

    /// Runs `f`, recording its wall time under `stage`.
    pub fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(stage.to_string(), start.elapsed().as_millis() as u64);
        out
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, ok) in &self.checks {
            out.push_str(&format!("{k}: {ok}\n"));
        }
        for (k, v) in &self.values {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }
}
