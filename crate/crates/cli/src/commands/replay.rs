use std::fs;

use anyhow::{bail, Context, Result};

use crate::args::{Command, Replay};
use crate::output::{sha256_hex, RunManifest, TOOL};

/// Re-renders the recorded command in memory and compares checksums.
pub fn run(args: &Replay) -> Result<()> {
    let text = fs::read_to_string(&args.manifest)
        .with_context(|| format!("reading {}", args.manifest.display()))?;
    let manifest: RunManifest = serde_json::from_str(&text)
        .map_err(|e| crate::invalid(format!("{} is not a run manifest: {e}", args.manifest.display())))?;
    if manifest.tool != TOOL {
        return Err(crate::invalid(format!("manifest was written by '{}'", manifest.tool)));
    }
    if matches!(manifest.parameters, Command::Replay(_)) {
        return Err(crate::invalid("manifest records a replay"));
    }
    if manifest.version != env!("CARGO_PKG_VERSION") {
        eprintln!(
            "warning: manifest written by version {}, replaying with {}",
            manifest.version,
            env!("CARGO_PKG_VERSION")
        );
    }
    let rendered = super::render(&manifest.parameters)?;
    let digest = sha256_hex(&rendered.bytes);
    let mut mismatches = 0;
    for out in &manifest.outputs {
        if out.sha256 == digest {
            println!("match {} {digest}", out.path.display());
        } else {
            println!("MISMATCH {} recorded {} replayed {digest}", out.path.display(), out.sha256);
            mismatches += 1;
        }
    }
    if manifest.outputs.is_empty() {
        bail!("manifest lists no outputs to compare");
    }
    if mismatches > 0 {
        bail!("{mismatches} output(s) did not reproduce");
    }
    Ok(())
}
