use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use egomap_core::interest::MapConfig;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputFile {
    pub path: String,
    pub sha256: String,
}

/// Provenance record written next to a `map` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub inputs: Vec<InputFile>,
    /// Combined hash of all inputs; also the graph cache key.
    pub input_hash: String,
    pub ego: String,
    pub config: MapConfig,
    pub created_unix_secs: u64,
}

impl RunManifest {
    pub fn new(inputs: Vec<InputFile>, input_hash: String, ego: String, config: MapConfig) -> Self {
        let created_unix_secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            inputs,
            input_hash,
            ego,
            config,
            created_unix_secs,
        }
    }

    /// `map.json` → `map.json.manifest.json`.
    pub fn path_for(output: &Path) -> std::path::PathBuf {
        let mut name = output.file_name().unwrap_or_default().to_os_string();
        name.push(".manifest.json");
        output.with_file_name(name)
    }
}
