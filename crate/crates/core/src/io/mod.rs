//! File formats: CSV edge lists, JSONL profile metadata, and interest-map
//! export as canonical JSON or Graphviz DOT.

mod edges;
mod export;
mod metadata;

use std::collections::BTreeMap;

pub use edges::{parse_edges, render_edges, EdgeRecord};
pub use export::{export_map, ExportFormat};
pub use metadata::{parse_metadata, MetadataLoad};

use crate::graph::{build_graph, DirectedGraph, GraphError, VertexId, VertexMeta};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("line 1: expected header `source,target`, found `{found}`")]
    MissingHeader { found: String },
    #[error("line {line}: expected 2 columns, found {found}")]
    ColumnCount { line: u64, found: usize },
    #[error("line {line}: {source}")]
    InvalidEdge { line: u64, source: GraphError },
    #[error("line {line}: malformed CSV: {message}")]
    Csv { line: u64, message: String },
    #[error("line {line}: invalid JSON: {message}")]
    Json { line: u64, message: String },
    #[error("line {line}: record has no `id`")]
    MissingId { line: u64 },
    #[error("line {line}: {source}")]
    InvalidId { line: u64, source: GraphError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Follow graph from parsed edges and metadata. Edge endpoints without a
/// metadata record get default metadata; metadata for accounts that appear
/// in no edge still creates a vertex.
pub fn assemble_graph(
    edges: &[EdgeRecord],
    meta: BTreeMap<VertexId, VertexMeta>,
) -> Result<DirectedGraph, IoError> {
    let mut vertices = meta;
    for e in edges {
        for id in [&e.source, &e.target] {
            vertices.entry(id.clone()).or_default();
        }
    }
    let graph = build_graph(
        vertices,
        edges.iter().map(|e| (e.source.clone(), e.target.clone())),
    )?;
    Ok(graph)
}
