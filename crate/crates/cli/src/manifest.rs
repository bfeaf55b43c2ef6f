use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::CliError;

/// The run configuration, echoed into every manifest and hashed.
pub struct Run {
    pub command: String,
    pub config: Value,
    pub hash: String,
    started: Instant,
}

impl Run {
    pub fn new(command: &str, config: Value) -> Run {
        // serde_json maps are ordered by key, so this serialization is canonical
        let canonical = json!({ "command": command, "config": config }).to_string();
        let hash = hex::encode(Sha256::digest(canonical.as_bytes()));
        Run { command: command.to_string(), config, hash, started: Instant::now() }
    }

    /// Writes the artifact and `<path>.manifest.json` beside it.
    pub fn write_artifact(&self, path: &Path, content: &str) -> Result<(), CliError> {
        std::fs::write(path, content).map_err(|e| CliError::Validation(format!("cannot write {}: {e}", path.display())))?;
        let manifest = json!({
            "tool": "shapedecomp",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "config": self.config,
            "config_hash": self.hash,
            "artifact": path.file_name().map(|n| n.to_string_lossy().to_string()),
            "artifact_sha256": hex::encode(Sha256::digest(content.as_bytes())),
            "threads": rayon::current_num_threads(),
            "elapsed_seconds": self.started.elapsed().as_secs_f64(),
        });
        let mp = manifest_path(path);
        let text = serde_json::to_string_pretty(&manifest).expect("serializable") + "\n";
        std::fs::write(&mp, text).map_err(|e| CliError::Validation(format!("cannot write {}: {e}", mp.display())))
    }

    /// Adds the config hash to a JSON object artifact.
    pub fn tag_json(&self, text: &str) -> String {
        let mut v: Value = serde_json::from_str(text).expect("artifact is JSON");
        if let Value::Object(m) = &mut v {
            m.insert("config_hash".into(), Value::String(self.hash.clone()));
        }
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    }
}

pub fn manifest_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}
