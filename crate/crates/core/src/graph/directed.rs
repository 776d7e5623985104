use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{GraphError, VertexId, VertexMeta};

/// Accounts plus "follows" edges. Immutable once built.
///
/// Invariants: no self-loops, no duplicate edges, every endpoint declared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRecords", into = "GraphRecords")]
pub struct DirectedGraph {
    vertices: BTreeMap<VertexId, VertexMeta>,
    out: BTreeMap<VertexId, BTreeSet<VertexId>>,
    edge_count: usize,
}

/// Flat serialized form of a [`DirectedGraph`].
#[derive(Serialize, Deserialize)]
struct GraphRecords {
    vertices: Vec<VertexRecord>,
    edges: Vec<(VertexId, VertexId)>,
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    id: VertexId,
    #[serde(flatten)]
    meta: VertexMeta,
}

impl TryFrom<GraphRecords> for DirectedGraph {
    type Error = GraphError;

    fn try_from(records: GraphRecords) -> Result<Self, Self::Error> {
        build_graph(
            records.vertices.into_iter().map(|r| (r.id, r.meta)),
            records.edges,
        )
    }
}

impl From<DirectedGraph> for GraphRecords {
    fn from(g: DirectedGraph) -> Self {
        let edges = g.edges().map(|(s, t)| (s.clone(), t.clone())).collect();
        Self {
            vertices: g
                .vertices
                .into_iter()
                .map(|(id, meta)| VertexRecord { id, meta })
                .collect(),
            edges,
        }
    }
}

/// Builds a graph from vertex and edge records.
///
/// Duplicate edges collapse; duplicate vertex declarations, self-loops and
/// edges to undeclared vertices are errors. The result does not depend on
/// record order, and when several records are bad the error names the
/// lexicographically first one.
pub fn build_graph<V, E>(vertex_records: V, edge_records: E) -> Result<DirectedGraph, GraphError>
where
    V: IntoIterator<Item = (VertexId, VertexMeta)>,
    E: IntoIterator<Item = (VertexId, VertexId)>,
{
    let mut vertices = BTreeMap::new();
    let mut duplicates = BTreeSet::new();
    for (id, meta) in vertex_records {
        if let Some(_previous) = vertices.insert(id.clone(), meta) {
            duplicates.insert(id);
        }
    }
    if let Some(id) = duplicates.into_iter().next() {
        return Err(GraphError::DuplicateVertex(id));
    }

    let edges: BTreeSet<(VertexId, VertexId)> = edge_records.into_iter().collect();
    let mut out: BTreeMap<VertexId, BTreeSet<VertexId>> = vertices
        .keys()
        .map(|id| (id.clone(), BTreeSet::new()))
        .collect();
    for (source, target) in &edges {
        if source == target {
            return Err(GraphError::SelfLoop(source.clone()));
        }
        for endpoint in [source, target] {
            if !vertices.contains_key(endpoint) {
                return Err(GraphError::DanglingEndpoint {
                    from: source.clone(),
                    to: target.clone(),
                    missing: endpoint.clone(),
                });
            }
        }
        out.get_mut(source)
            .expect("declared vertex")
            .insert(target.clone());
    }

    Ok(DirectedGraph {
        vertices,
        out,
        edge_count: edges.len(),
    })
}

impl DirectedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains(&self, id: &VertexId) -> bool {
        self.vertices.contains_key(id)
    }

    pub fn meta(&self, id: &VertexId) -> Option<&VertexMeta> {
        self.vertices.get(id)
    }

    /// All profile metadata, keyed by id.
    pub fn metadata(&self) -> &BTreeMap<VertexId, VertexMeta> {
        &self.vertices
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.vertices.keys()
    }

    /// Edges in ascending `(source, target)` order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> + '_ {
        self.out
            .iter()
            .flat_map(|(s, targets)| targets.iter().map(move |t| (s, t)))
    }

    /// Accounts followed by `id`.
    pub fn out_neighbors(&self, id: &VertexId) -> Option<&BTreeSet<VertexId>> {
        self.out.get(id)
    }

    pub fn has_edge(&self, source: &VertexId, target: &VertexId) -> bool {
        self.out.get(source).is_some_and(|t| t.contains(target))
    }
}

/// Subgraph induced on the accounts `ego` follows. The ego itself is left out.
pub fn ego_graph(g: &DirectedGraph, ego: &VertexId) -> Result<DirectedGraph, GraphError> {
    let friends = g
        .out_neighbors(ego)
        .ok_or_else(|| GraphError::UnknownVertex(ego.clone()))?;

    let vertices: BTreeMap<VertexId, VertexMeta> = friends
        .iter()
        .map(|id| (id.clone(), g.vertices[id].clone()))
        .collect();
    let mut edge_count = 0;
    let out = friends
        .iter()
        .map(|id| {
            let targets: BTreeSet<VertexId> = g.out[id]
                .iter()
                .filter(|t| friends.contains(*t))
                .cloned()
                .collect();
            edge_count += targets.len();
            (id.clone(), targets)
        })
        .collect();

    Ok(DirectedGraph {
        vertices,
        out,
        edge_count,
    })
}
