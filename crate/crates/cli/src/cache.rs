//! Content-addressed cache of validated graphs.
//!
//! Entries are keyed by the SHA-256 of the raw input bytes, so a hit or miss
//! depends only on file contents. The directory is `$EGOMAP_CACHE_DIR`,
//! else `$HOME/.cache/egomap`, else `egomap` under the system temp dir.

use std::fs;
use std::path::{Path, PathBuf};

use egomap_core::graph::DirectedGraph;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "EGOMAP_CACHE_DIR";

/// Hex SHA-256 over the edge bytes and optional metadata bytes, each
/// length-prefixed so distinct inputs cannot collide by concatenation.
pub fn content_hash(edges: &[u8], meta: Option<&[u8]>) -> String {
    let mut h = Sha256::new();
    h.update(b"egomap-graph-v1\0");
    h.update((edges.len() as u64).to_le_bytes());
    h.update(edges);
    match meta {
        Some(m) => {
            h.update([1u8]);
            h.update((m.len() as u64).to_le_bytes());
            h.update(m);
        }
        None => h.update([0u8]),
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone)]
pub struct GraphCache {
    dir: PathBuf,
}

impl GraphCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn from_env() -> Self {
        if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
            return Self::new(dir);
        }
        if let Some(home) = std::env::var_os("HOME").filter(|d| !d.is_empty()) {
            return Self::new(Path::new(&home).join(".cache").join("egomap"));
        }
        Self::new(std::env::temp_dir().join("egomap"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn entry(&self, key: &str) -> PathBuf {
        self.dir.join("graphs").join(format!("{key}.json"))
    }

    /// A cached graph, or `None` on a miss. Unreadable entries count as
    /// misses.
    pub fn get(&self, key: &str) -> Option<DirectedGraph> {
        let bytes = fs::read(self.entry(key)).ok()?;
        match serde_json::from_slice(&bytes) {
            Ok(g) => Some(g),
            Err(e) => {
                log::warn!("ignoring corrupt cache entry {key}: {e}");
                None
            }
        }
    }

    pub fn put(&self, key: &str, graph: &DirectedGraph) -> anyhow::Result<PathBuf> {
        let path = self.entry(key);
        let bytes = serde_json::to_vec(graph)?;
        crate::commands::write_atomic(&path, &bytes)?;
        Ok(path)
    }
}
