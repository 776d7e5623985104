//! Random-walk distances and walktrap agglomeration.
//!
//! A walk of length `t` from vertex `i` lands on `k` with probability
//! `P^t[i][k]`, where each step moves to a uniformly chosen neighbor. Two
//! vertices are close when their landing distributions agree:
//!
//! ```text
//! r(i, j) = sqrt( Σ_k (P^t[i][k] − P^t[j][k])² / d(k) )
//! ```
//!
//! Walktrap starts from singletons and repeatedly merges the adjacent pair of
//! communities whose merge least increases the within-community sum of
//! squared distances, `Δσ = (1/n) · |A||B|/(|A|+|B|) · r²(A, B)`, where a
//! community's distribution is the size-weighted mean of its members'.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{cut_dendrogram, CommunityError, Dendrogram, Merge, Partition};
use crate::graph::{UndirectedGraph, VertexId};
use crate::Scalar;

pub const DEFAULT_WALK_LENGTH: usize = 4;

/// Pairwise walk distances after `t` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkDistance<T> {
    t: usize,
    ids: Vec<VertexId>,
    /// Row-major `n × n`.
    dist: Vec<T>,
}

impl<T: Scalar> WalkDistance<T> {
    pub fn walk_length(&self) -> usize {
        self.t
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn dist(&self, a: &VertexId, b: &VertexId) -> Option<T> {
        let i = self.ids.binary_search(a).ok()?;
        let j = self.ids.binary_search(b).ok()?;
        Some(self.dist[i * self.ids.len() + j])
    }

    pub fn by_index(&self, i: usize, j: usize) -> T {
        self.dist[i * self.ids.len() + j]
    }
}

/// Rows of `P^t`. Every vertex needs at least one neighbor.
pub fn transition_power<T: Scalar>(
    g: &UndirectedGraph,
    t: usize,
) -> Result<Vec<Vec<T>>, CommunityError> {
    if t == 0 {
        return Err(CommunityError::ZeroWalkLength);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(CommunityError::IsolatedVertex(g.id(v).clone()));
    }
    let n = g.vertex_count();
    Ok((0..n)
        .into_par_iter()
        .map(|start| {
            let mut row = vec![T::zero(); n];
            row[start] = T::one();
            let mut next = vec![T::zero(); n];
            for _ in 0..t {
                next.iter_mut().for_each(|x| *x = T::zero());
                for (j, &mass) in row.iter().enumerate() {
                    if mass == T::zero() {
                        continue;
                    }
                    let share = mass / T::of(g.degree(j));
                    for &k in g.neighbors(j) {
                        next[k] = next[k] + share;
                    }
                }
                std::mem::swap(&mut row, &mut next);
            }
            row
        })
        .collect())
}

fn weighted_sq_distance<T: Scalar>(a: &[T], b: &[T], inv_degree: &[T]) -> T {
    a.iter()
        .zip(b)
        .zip(inv_degree)
        .map(|((&x, &y), &w)| (x - y) * (x - y) * w)
        .sum()
}

fn inverse_degrees<T: Scalar>(g: &UndirectedGraph) -> Vec<T> {
    (0..g.vertex_count())
        .map(|v| T::one() / T::of(g.degree(v)))
        .collect()
}

pub fn walk_distance<T: Scalar>(
    g: &UndirectedGraph,
    t: usize,
) -> Result<WalkDistance<T>, CommunityError> {
    let rows = transition_power::<T>(g, t)?;
    let inv_degree = inverse_degrees::<T>(g);
    let n = g.vertex_count();
    let mut dist = vec![T::zero(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d = weighted_sq_distance(&rows[i], &rows[j], &inv_degree).sqrt();
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    Ok(WalkDistance {
        t,
        ids: g.ids().to_vec(),
        dist,
    })
}

struct Cluster<T> {
    size: usize,
    probs: Vec<T>,
    neighbors: BTreeSet<usize>,
    height: T,
}

/// Agglomerates by minimum `Δσ` and returns the dendrogram with its
/// maximum-modularity cut. Isolated vertices are left out of the walk and
/// come back as singleton leaves that are never merged. Ties on `Δσ` go to
/// the lexicographically smallest pair of cluster ids. Heights are clamped
/// so they never decrease toward the root.
pub fn walktrap<T: Scalar>(
    g: &UndirectedGraph,
    t: usize,
) -> Result<(Dendrogram<T>, Partition), CommunityError> {
    if t == 0 {
        return Err(CommunityError::ZeroWalkLength);
    }
    if g.edge_count() == 0 {
        return Err(CommunityError::EmptyGraph);
    }
    let n = g.vertex_count();
    let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let core = g.induced(&active);
    let rows = transition_power::<T>(&core, t)?;
    let inv_degree = inverse_degrees::<T>(&core);
    let scale = T::one() / T::of(core.vertex_count());

    // clusters keyed by dendrogram node id; leaves use the full graph's indices
    let mut clusters: BTreeMap<usize, Cluster<T>> = BTreeMap::new();
    for (c, probs) in rows.into_iter().enumerate() {
        let neighbors = core.neighbors(c).iter().map(|&w| active[w]).collect();
        clusters.insert(
            active[c],
            Cluster {
                size: 1,
                probs,
                neighbors,
                height: T::zero(),
            },
        );
    }

    let delta_sigma = |a: &Cluster<T>, b: &Cluster<T>| {
        let (sa, sb) = (T::of(a.size), T::of(b.size));
        scale * sa * sb / (sa + sb) * weighted_sq_distance(&a.probs, &b.probs, &inv_degree)
    };

    let mut candidates: BTreeMap<(usize, usize), T> = BTreeMap::new();
    for &(u, v) in core.edges() {
        let (a, b) = (active[u], active[v]);
        candidates.insert((a, b), delta_sigma(&clusters[&a], &clusters[&b]));
    }

    let mut merges = Vec::new();
    while let Some(((a, b), cost)) = pop_min(&mut candidates) {
        let node = n + merges.len();
        let left = clusters.remove(&a).expect("live cluster");
        let right = clusters.remove(&b).expect("live cluster");
        let total = left.size + right.size;
        let (wl, wr) = (
            T::of(left.size) / T::of(total),
            T::of(right.size) / T::of(total),
        );
        let probs = left
            .probs
            .iter()
            .zip(&right.probs)
            .map(|(&x, &y)| wl * x + wr * y)
            .collect();
        let mut neighbors: BTreeSet<usize> =
            left.neighbors.union(&right.neighbors).copied().collect();
        neighbors.remove(&a);
        neighbors.remove(&b);
        let height = cost.max(left.height).max(right.height);
        merges.push(Merge {
            left: a,
            right: b,
            height,
        });

        candidates.retain(|&(x, y), _| x != a && x != b && y != a && y != b);
        let merged = Cluster {
            size: total,
            probs,
            neighbors,
            height,
        };
        for &w in &merged.neighbors {
            let other = clusters.get_mut(&w).expect("neighbor is live");
            other.neighbors.remove(&a);
            other.neighbors.remove(&b);
            other.neighbors.insert(node);
            candidates.insert((w, node), delta_sigma(&clusters[&w], &merged));
        }
        clusters.insert(node, merged);
    }

    let dendrogram = Dendrogram::new(g.ids().to_vec(), merges)?;
    let partition = cut_dendrogram(&dendrogram, g)?;
    Ok((dendrogram, partition))
}

fn pop_min<T: Scalar>(candidates: &mut BTreeMap<(usize, usize), T>) -> Option<((usize, usize), T)> {
    let best = candidates.values().copied().fold(T::infinity(), T::min);
    let tol = T::tie_tolerance() * best.abs().max(T::epsilon());
    let key = candidates
        .iter()
        .find(|(_, &v)| v <= best + tol)
        .map(|(&k, _)| k)?;
    candidates.remove(&key).map(|v| (key, v))
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

    fn sets(p: &Partition) -> Vec<Vec<String>> {
        p.communities()
            .iter()
            .map(|c| c.iter().map(|v| v.to_string()).collect())
            .collect()
    }

    #[test]
    fn self_distance_zero_and_symmetric() {
        let g = graph(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "c")],
        );
        let w = walk_distance::<f64>(&g, 3).unwrap();
        for a in g.ids() {
            assert_eq!(w.dist(a, a), Some(0.0));
            for b in g.ids() {
                assert_eq!(w.dist(a, b), w.dist(b, a));
            }
        }
    }

    #[test]
    fn star_leaves_coincide() {
        let g = graph(
            &["c", "l1", "l2", "l3"],
            &[("c", "l1"), ("c", "l2"), ("c", "l3")],
        );
        for t in 1..5 {
            let w = walk_distance::<f64>(&g, t).unwrap();
            assert_eq!(w.dist(&vid("l1"), &vid("l2")), Some(0.0));
        }
    }

    #[test]
    fn path_one_step() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let w = walk_distance::<f64>(&g, 1).unwrap();
        assert_eq!(w.dist(&vid("a"), &vid("c")), Some(0.0));
        // rows a = (0,1,0), b = (1/2,0,1/2); degrees (1,2,1)
        let expected = (0.25f64 / 1.0 + 1.0 / 2.0 + 0.25 / 1.0).sqrt();
        assert_abs_diff_eq!(
            w.dist(&vid("a"), &vid("b")).unwrap(),
            expected,
            epsilon = 1e-12
        );
    }

    #[test]
    fn rows_are_distributions() {
        let g = graph(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "c")],
        );
        for row in transition_power::<f64>(&g, 5).unwrap() {
            assert_abs_diff_eq!(row.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn errors() {
        let g = graph(&["a", "b", "c"], &[("a", "b")]);
        assert_eq!(
            walk_distance::<f64>(&g, 0).unwrap_err(),
            CommunityError::ZeroWalkLength
        );
        assert_eq!(
            walk_distance::<f64>(&g, 2).unwrap_err(),
            CommunityError::IsolatedVertex(vid("c"))
        );
        let empty = graph(&["a"], &[]);
        assert_eq!(
            walktrap::<f64>(&empty, 4).unwrap_err(),
            CommunityError::EmptyGraph
        );
    }

    #[test]
    fn disjoint_triangles() {
        let g = graph(
            &["a", "b", "c", "x", "y", "z"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("a", "c"),
                ("x", "y"),
                ("y", "z"),
                ("x", "z"),
            ],
        );
        let (d, p) = walktrap::<f64>(&g, 4).unwrap();
        assert_eq!(d.merges().len(), 4);
        assert_eq!(sets(&p), vec![vec!["a", "b", "c"], vec!["x", "y", "z"]]);
    }

    #[test]
    fn single_triangle() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let (_, p) = walktrap::<f64>(&g, 4).unwrap();
        assert_eq!(p.k(), 1);
    }

    #[test]
    fn bridged_triangles() {
        let g = graph(
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
        );
        let (d, p) = walktrap::<f64>(&g, 4).unwrap();
        assert_eq!(sets(&p), vec![vec!["a", "b", "u"], vec!["v", "x", "y"]]);
        assert_eq!(d.merges().len(), 5);
    }

    #[test]
    fn isolated_vertex_is_singleton() {
        let g = graph(
            &["a", "b", "c", "solo"],
            &[("a", "b"), ("b", "c"), ("a", "c")],
        );
        let (d, p) = walktrap::<f64>(&g, 4).unwrap();
        assert_eq!(d.leaves().len(), 4);
        assert_eq!(sets(&p), vec![vec!["a", "b", "c"], vec!["solo"]]);
    }
}
