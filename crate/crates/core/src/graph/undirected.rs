use std::collections::BTreeSet;

use super::{DirectedGraph, GraphError, VertexId};

/// Simple undirected graph over dense indices.
///
/// Vertices are stored in ascending id order, so index order and id order
/// coincide and index-based tie-breaking is lexicographic on ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    ids: Vec<VertexId>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Builds a graph from ids and unordered pairs. Repeated pairs (in either
    /// orientation) collapse to one edge.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut ids: Vec<VertexId> = Vec::new();
        let mut seen = BTreeSet::new();
        for id in vertices {
            if !seen.insert(id.clone()) {
                return Err(GraphError::DuplicateVertex(id));
            }
            ids.push(id);
        }
        ids.sort();

        let mut pairs = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let lookup = |id: &VertexId| {
                ids.binary_search(id)
                    .map_err(|_| GraphError::DanglingEndpoint {
                        from: a.clone(),
                        to: b.clone(),
                        missing: id.clone(),
                    })
            };
            let (u, v) = (lookup(&a)?, lookup(&b)?);
            pairs.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted(ids, pairs))
    }

    /// `ids` must be sorted and unique; `pairs` hold `u < v` indices.
    pub(crate) fn from_sorted(ids: Vec<VertexId>, pairs: BTreeSet<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); ids.len()];
        for &(u, v) in &pairs {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            ids,
            adjacency,
            edges: pairs.into_iter().collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    /// Number of undirected edges, `m`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, index: usize) -> &VertexId {
        &self.ids[index]
    }

    pub fn index_of(&self, id: &VertexId) -> Option<usize> {
        self.ids.binary_search(id).ok()
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    pub fn degree_of(&self, id: &VertexId) -> Option<usize> {
        self.index_of(id).map(|i| self.degree(i))
    }

    /// Neighbor indices in ascending order.
    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    /// Edges as `(u, v)` index pairs with `u < v`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.adjacency)
    }

    /// Subgraph induced on `keep` (indices into `self`, any order).
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut remap = vec![usize::MAX; self.ids.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| remap[u] != usize::MAX && remap[v] != usize::MAX)
            .map(|&(u, v)| (remap[u], remap[v]))
            .collect();
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        Self::from_sorted(ids, pairs)
    }
}

pub(crate) fn components_of(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let c = out.len();
        let mut members = vec![start];
        label[start] = c;
        let mut cursor = 0;
        while cursor < members.len() {
            let v = members[cursor];
            cursor += 1;
            for &w in &adjacency[v] {
                if label[w] == usize::MAX {
                    label[w] = c;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Forgets edge direction: any directed edge between two accounts yields
/// one undirected edge, and reciprocal follows collapse.
pub fn undirected_projection(g: &DirectedGraph) -> UndirectedGraph {
    let ids: Vec<VertexId> = g.vertices().cloned().collect();
    let index = |id: &VertexId| ids.binary_search(id).expect("endpoint is a vertex");
    let pairs = g
        .edges()
        .map(|(s, t)| {
            let (u, v) = (index(s), index(t));
            (u.min(v), u.max(v))
        })
        .collect();
    UndirectedGraph::from_sorted(ids, pairs)
}
