use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::args::Command;

pub const TOOL: &str = "truncnorm";

/// Rendered command output, not yet written anywhere.
pub struct Rendered {
    pub bytes: Vec<u8>,
    pub summary: Value,
    /// Print the summary to stderr when the output goes to stdout.
    pub echo_summary: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OutputRecord {
    pub path: PathBuf,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: Option<u64>,
    pub parameters: Command,
    #[serde(default)]
    pub outputs: Vec<OutputRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Value>,
}

impl RunManifest {
    pub fn new(cmd: &Command) -> Self {
        Self {
            tool: TOOL.to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            command: cmd.name().to_owned(),
            seed: cmd.seed(),
            parameters: cmd.clone(),
            outputs: Vec::new(),
            summary: None,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

/// 17 significant digits.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_owned()
    } else if x > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

pub fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.into_inner().context("flushing CSV")
}

pub fn json_bytes(cmd: &Command, summary: &Value, draws: Option<Value>) -> Result<Vec<u8>> {
    let mut doc = serde_json::Map::new();
    doc.insert("manifest".into(), serde_json::to_value(RunManifest::new(cmd))?);
    doc.insert("summary".into(), summary.clone());
    if let Some(d) = draws {
        doc.insert("draws".into(), d);
    }
    let mut bytes = serde_json::to_vec_pretty(&Value::Object(doc))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Writes the output and its sidecar manifest, or streams to stdout.
pub fn emit(cmd: &Command, rendered: Rendered) -> Result<()> {
    match cmd.out() {
        Some(path) => {
            fs::write(path, &rendered.bytes)
                .with_context(|| format!("writing {}", path.display()))?;
            let mut manifest = RunManifest::new(cmd);
            manifest.outputs.push(OutputRecord {
                path: path.clone(),
                sha256: sha256_hex(&rendered.bytes),
            });
            manifest.summary = Some(rendered.summary);
            let side = sidecar_path(path);
            let mut text = serde_json::to_vec_pretty(&manifest)?;
            text.push(b'\n');
            fs::write(&side, text).with_context(|| format!("writing {}", side.display()))?;
        }
        None => {
            std::io::stdout().lock().write_all(&rendered.bytes)?;
            if rendered.echo_summary {
                eprintln!("{}", serde_json::to_string(&rendered.summary)?);
            }
        }
    }
    Ok(())
}
