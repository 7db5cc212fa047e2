//! JSON report envelope: stable field order, tool version, input file
//! digests. No timestamps, so identical inputs give byte-identical
//! reports.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub data: T,
}

pub fn digest_file(path: &Path) -> anyhow::Result<InputDigest> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(InputDigest {
        path: path.display().to_string(),
        sha256: format!("{:x}", hasher.finalize()),
    })
}

pub fn make<T: Serialize>(command: &str, inputs: Vec<InputDigest>, data: T) -> Report<T> {
    Report {
        tool: "cvt",
        version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        inputs,
        data,
    }
}

pub fn render<T: Serialize>(report: &Report<T>) -> anyhow::Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(report)?))
}
