use std::collections::BTreeMap;
use std::io::BufRead;

use serde::Deserialize;

use super::IoError;
use crate::graph::{VertexId, VertexMeta};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MetadataLoad {
    pub records: BTreeMap<VertexId, VertexMeta>,
    /// Ids seen more than once, in order of their repeat. The last record
    /// for each id wins.
    pub duplicates: Vec<VertexId>,
}

#[derive(Deserialize)]
struct Line {
    id: Option<String>,
    #[serde(flatten)]
    meta: VertexMeta,
}

/// Reads JSONL profile records: one object per line with a required `id`
/// and optional `handle`, `description` and `follower_count`. Blank lines
/// are skipped.
pub fn parse_metadata<R: BufRead>(reader: R) -> Result<MetadataLoad, IoError> {
    let mut load = MetadataLoad::default();
    for (index, text) in reader.lines().enumerate() {
        let text = text?;
        let line = index as u64 + 1;
        if text.trim().is_empty() {
            continue;
        }
        let parsed: Line = serde_json::from_str(&text).map_err(|e| IoError::Json {
            line,
            message: e.to_string(),
        })?;
        let id = parsed.id.ok_or(IoError::MissingId { line })?;
        let id = VertexId::new(id).map_err(|source| IoError::InvalidId { line, source })?;
        if load.records.insert(id.clone(), parsed.meta).is_some() {
            log::warn!("line {line}: duplicate metadata for `{id}`; keeping the later record");
            load.duplicates.push(id);
        }
    }
    Ok(load)
}
