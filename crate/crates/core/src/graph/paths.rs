use std::collections::VecDeque;

use super::{GraphError, UndirectedGraph, VertexId};

/// Breadth-first distances and shortest-path multiplicities from one source.
#[derive(Debug, Clone)]
pub struct PathCounts<'g> {
    graph: &'g UndirectedGraph,
    source: usize,
    dist: Vec<Option<usize>>,
    sigma: Vec<u128>,
}

impl PathCounts<'_> {
    pub fn source(&self) -> &VertexId {
        self.graph.id(self.source)
    }

    /// Hop count, `None` when unreachable or unknown.
    pub fn dist(&self, id: &VertexId) -> Option<usize> {
        self.graph.index_of(id).and_then(|i| self.dist[i])
    }

    /// Number of distinct shortest paths; 0 when unreachable.
    pub fn sigma(&self, id: &VertexId) -> u128 {
        self.graph.index_of(id).map_or(0, |i| self.sigma[i])
    }

    pub fn is_reachable(&self, id: &VertexId) -> bool {
        self.dist(id).is_some()
    }

    /// Distances indexed like the graph's vertices.
    pub fn distances(&self) -> &[Option<usize>] {
        &self.dist
    }

    pub fn multiplicities(&self) -> &[u128] {
        &self.sigma
    }
}

pub fn shortest_paths<'g>(
    g: &'g UndirectedGraph,
    source: &VertexId,
) -> Result<PathCounts<'g>, GraphError> {
    let s = g
        .index_of(source)
        .ok_or_else(|| GraphError::UnknownVertex(source.clone()))?;
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    let mut sigma = vec![0u128; n];
    dist[s] = Some(0);
    sigma[s] = 1;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].expect("queued vertices are reached");
        for &w in g.neighbors(v) {
            match dist[w] {
                None => {
                    dist[w] = Some(dv + 1);
                    sigma[w] = sigma[v];
                    queue.push_back(w);
                }
                Some(dw) if dw == dv + 1 => sigma[w] = sigma[w].saturating_add(sigma[v]),
                Some(_) => {}
            }
        }
    }
    Ok(PathCounts {
        graph: g,
        source: s,
        dist,
        sigma,
    })
}
