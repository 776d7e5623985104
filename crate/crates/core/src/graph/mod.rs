//! Directed follow graphs, ego-network extraction, the undirected view the
//! detectors run on, and breadth-first shortest-path counting.

mod directed;
mod paths;
mod undirected;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use directed::{build_graph, ego_graph, DirectedGraph};
pub use paths::{shortest_paths, PathCounts};
pub use undirected::{undirected_projection, UndirectedGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex id must be non-empty")]
    EmptyId,
    #[error("vertex `{0}` declared more than once")]
    DuplicateVertex(VertexId),
    #[error("edge ({from}, {to}) references undeclared vertex `{missing}`")]
    DanglingEndpoint {
        from: VertexId,
        to: VertexId,
        missing: VertexId,
    },
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(VertexId),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),
}

/// Stable account identifier. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Result<Self, GraphError> {
        let id = id.into();
        if id.is_empty() {
            return Err(GraphError::EmptyId);
        }
        Ok(Self(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VertexId {
    type Error = GraphError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl TryFrom<&str> for VertexId {
    type Error = GraphError;

    fn try_from(value: &str) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<VertexId> for String {
    fn from(value: VertexId) -> Self {
        value.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Profile data attached to an account.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMeta {
    #[serde(default)]
    pub handle: String,
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub follower_count: u64,
}

#[cfg(test)]
pub(crate) fn vid(s: &str) -> VertexId {
    VertexId::new(s).unwrap()
}
