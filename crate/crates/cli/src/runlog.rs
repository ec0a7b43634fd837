//! Append-only run records: enough to reproduce a run from its config
//! alone and to diff results across runs in review.

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::fs::OpenOptions;
use std::io::Write;
use std::time::Instant;

#[derive(Serialize)]
pub struct RunRecord {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub config: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    pub input_lines: usize,
    pub wall_ms: u128,
    pub summary: Value,
    pub results: Vec<Value>,
}

pub struct RunLog {
    started: Instant,
    config: Value,
    input_sha256: Option<String>,
    input_lines: usize,
}

impl RunLog {
    pub fn start(config: Value, input_raw: Option<&str>, input_lines: usize) -> RunLog {
        RunLog {
            started: Instant::now(),
            config,
            input_sha256: input_raw.map(|raw| hex::encode(Sha256::digest(raw.as_bytes()))),
            input_lines,
        }
    }

    /// Appends the record as a single line; one write call keeps
    /// concurrent appenders from interleaving.
    pub fn append(self, path: Option<&str>, summary: Value, results: Vec<Value>) -> Result<()> {
        let Some(path) = path else {
            return Ok(());
        };
        let record = RunRecord {
            tool: "critlab",
            version: env!("CARGO_PKG_VERSION"),
            command: std::env::args().collect(),
            config: self.config,
            input_sha256: self.input_sha256,
            input_lines: self.input_lines,
            wall_ms: self.started.elapsed().as_millis(),
            summary,
            results,
        };
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("opening run log {path}"))?;
        file.write_all(line.as_bytes())
            .with_context(|| format!("appending run log {path}"))?;
        Ok(())
    }
}
