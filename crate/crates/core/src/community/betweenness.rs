//! Shortest-path betweenness for vertices and edges.
//!
//! A vertex's score is the sum, over unordered pairs `{a, b}` not containing
//! it, of the fraction of shortest `a`–`b` paths that pass through it. Edge
//! scores are the same sum taken over all pairs (endpoints included) for the
//! paths crossing the edge. Both come out of one Brandes accumulation pass
//! per source.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::graph::{UndirectedGraph, VertexId};
use crate::Scalar;

/// Sources are processed in fixed-size chunks so the floating-point
/// summation order is independent of the thread count.
const SOURCE_CHUNK: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct BetweennessScores<T> {
    pub vertex_scores: BTreeMap<VertexId, T>,
    /// Keyed by `(smaller id, larger id)`.
    pub edge_scores: BTreeMap<(VertexId, VertexId), T>,
}

impl<T: Scalar> BetweennessScores<T> {
    fn from_raw(g: &UndirectedGraph, vertex: Vec<T>, edge: Vec<T>) -> Self {
        let vertex_scores = g.ids().iter().cloned().zip(vertex).collect();
        let edge_scores = g
            .edges()
            .iter()
            .map(|&(u, v)| (g.id(u).clone(), g.id(v).clone()))
            .zip(edge)
            .collect();
        Self {
            vertex_scores,
            edge_scores,
        }
    }

    pub fn vertex(&self, id: &VertexId) -> Option<T> {
        self.vertex_scores.get(id).copied()
    }

    /// Score of the edge `{a, b}` in either orientation.
    pub fn edge(&self, a: &VertexId, b: &VertexId) -> Option<T> {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        self.edge_scores.get(&key).copied()
    }
}

/// Vertex betweenness. The edge scores are filled in as well since they come
/// from the same pass.
pub fn vertex_betweenness<T: Scalar>(g: &UndirectedGraph) -> BetweennessScores<T> {
    betweenness(g)
}

/// Edge betweenness. The vertex scores are filled in as well since they come
/// from the same pass.
pub fn edge_betweenness<T: Scalar>(g: &UndirectedGraph) -> BetweennessScores<T> {
    betweenness(g)
}

fn betweenness<T: Scalar>(g: &UndirectedGraph) -> BetweennessScores<T> {
    let adjacency = edge_labeled_adjacency(g);
    let sources: Vec<usize> = (0..g.vertex_count()).collect();
    let (vertex, edge) = brandes::<T>(&adjacency, g.edge_count(), &sources);
    BetweennessScores::from_raw(g, vertex, edge)
}

/// `adjacency[v]` lists `(neighbor, edge index)` with edge indices into
/// `g.edges()`.
pub(crate) fn edge_labeled_adjacency(g: &UndirectedGraph) -> Vec<Vec<(usize, usize)>> {
    let mut adjacency = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        adjacency[u].push((v, e));
        adjacency[v].push((u, e));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    adjacency
}

/// Brandes accumulation from `sources`, halved to count each unordered pair
/// once. With every vertex of a component in `sources` the result is exact
/// for that component; sources outside contribute nothing elsewhere.
pub(crate) fn brandes<T: Scalar>(
    adjacency: &[Vec<(usize, usize)>],
    edge_count: usize,
    sources: &[usize],
) -> (Vec<T>, Vec<T>) {
    let n = adjacency.len();
    let partials: Vec<(Vec<T>, Vec<T>)> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut state = PassState::new(n);
            let mut vertex = vec![T::zero(); n];
            let mut edge = vec![T::zero(); edge_count];
            for &s in chunk {
                state.accumulate(adjacency, s, &mut vertex, &mut edge);
            }
            (vertex, edge)
        })
        .collect();

    let mut vertex = vec![T::zero(); n];
    let mut edge = vec![T::zero(); edge_count];
    for (pv, pe) in partials {
        vertex.iter_mut().zip(pv).for_each(|(a, b)| *a = *a + b);
        edge.iter_mut().zip(pe).for_each(|(a, b)| *a = *a + b);
    }
    let half = T::lit(0.5);
    vertex.iter_mut().for_each(|x| *x = *x * half);
    edge.iter_mut().for_each(|x| *x = *x * half);
    (vertex, edge)
}

struct PassState<T> {
    order: Vec<usize>,
    preds: Vec<Vec<(usize, usize)>>,
    sigma: Vec<T>,
    dist: Vec<usize>,
    delta: Vec<T>,
    queue: VecDeque<usize>,
}

impl<T: Scalar> PassState<T> {
    fn new(n: usize) -> Self {
        Self {
            order: Vec::with_capacity(n),
            preds: vec![Vec::new(); n],
            sigma: vec![T::zero(); n],
            dist: vec![usize::MAX; n],
            delta: vec![T::zero(); n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn accumulate(
        &mut self,
        adjacency: &[Vec<(usize, usize)>],
        s: usize,
        vertex: &mut [T],
        edge: &mut [T],
    ) {
        // reset only what the previous pass touched
        for &v in &self.order {
            self.preds[v].clear();
            self.sigma[v] = T::zero();
            self.dist[v] = usize::MAX;
            self.delta[v] = T::zero();
        }
        self.order.clear();

        self.sigma[s] = T::one();
        self.dist[s] = 0;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            for &(w, e) in &adjacency[v] {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] = self.sigma[w] + self.sigma[v];
                    self.preds[w].push((v, e));
                }
            }
        }

        for &w in self.order.iter().rev() {
            let coeff = (T::one() + self.delta[w]) / self.sigma[w];
            for &(v, e) in &self.preds[w] {
                let share = self.sigma[v] * coeff;
                edge[e] = edge[e] + share;
                self.delta[v] = self.delta[v] + share;
            }
            if w != s {
                vertex[w] = vertex[w] + self.delta[w];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vid;
    use approx::assert_abs_diff_eq;

    fn graph(ids: &[&str], pairs: &[(&str, &str)]) -> UndirectedGraph {
        UndirectedGraph::new(
            ids.iter().map(|s| vid(s)),
            pairs.iter().map(|(a, b)| (vid(a), vid(b))),
        )
        .unwrap()
    }

    fn bridged_triangles() -> UndirectedGraph {
        graph(
            &["a", "b", "u", "v", "x", "y"],
            &[
                ("a", "b"),
                ("a", "u"),
                ("b", "u"),
                ("u", "v"),
                ("v", "x"),
                ("v", "y"),
                ("x", "y"),
            ],
        )
    }

    #[test]
    fn star_center_carries_every_leaf_pair() {
        let g = graph(
            &["c", "l1", "l2", "l3", "l4"],
            &[("c", "l1"), ("c", "l2"), ("c", "l3"), ("c", "l4")],
        );
        let s: BetweennessScores<f64> = vertex_betweenness(&g);
        assert_abs_diff_eq!(s.vertex(&vid("c")).unwrap(), 6.0, epsilon = 1e-12);
        for leaf in ["l1", "l2", "l3", "l4"] {
            assert_abs_diff_eq!(s.vertex(&vid(leaf)).unwrap(), 0.0);
        }
    }

    #[test]
    fn path_middle() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let s: BetweennessScores<f64> = vertex_betweenness(&g);
        assert_eq!(s.vertex(&vid("b")), Some(1.0));
        assert_eq!(s.vertex(&vid("a")), Some(0.0));
        assert_eq!(s.vertex(&vid("c")), Some(0.0));
    }

    #[test]
    fn triangle() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let s: BetweennessScores<f64> = edge_betweenness(&g);
        for v in ["a", "b", "c"] {
            assert_eq!(s.vertex(&vid(v)), Some(0.0));
        }
        for score in s.edge_scores.values() {
            assert_abs_diff_eq!(*score, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn bridge_between_triangles() {
        let s: BetweennessScores<f64> = edge_betweenness(&bridged_triangles());
        assert_abs_diff_eq!(s.edge(&vid("v"), &vid("u")).unwrap(), 9.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.edge(&vid("a"), &vid("b")).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn single_edge() {
        let g = graph(&["a", "b"], &[("a", "b")]);
        let s: BetweennessScores<f32> = edge_betweenness(&g);
        assert_eq!(s.edge(&vid("a"), &vid("b")), Some(1.0));
    }

    #[test]
    fn four_cycle_splits_evenly() {
        let g = graph(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        );
        let s: BetweennessScores<f64> = vertex_betweenness(&g);
        // each vertex sits on one of the two a-c (or b-d) routes
        for v in ["a", "b", "c", "d"] {
            assert_abs_diff_eq!(s.vertex(&vid(v)).unwrap(), 0.5, epsilon = 1e-12);
        }
    }
}
