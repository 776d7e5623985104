//! Modularity: observed internal-edge fraction minus the fraction expected
//! when edges are rewired at random with every degree held fixed.
//!
//! The closed form is `Q = Σ_c [ e_c/m − (d_c/2m)² ]`, with `e_c` the edges
//! inside community `c` and `d_c` its degree sum. The Monte-Carlo estimate
//! replaces the second term with the mean internal fraction over random
//! double-edge-swap rewirings of the graph under the same partition.
//!
//! The rewiring operates on edge stubs and allows self-loops and repeated
//! edges, so its stationary law is the configuration model. That model's
//! expected internal fraction is `d_c(d_c − 1) / (2m(2m − 1))` per community,
//! which converges to the closed form's `(d_c/2m)²` as `m` grows; the gap
//! summed over communities is `(1 − Σ_c (d_c/2m)²) / (2m − 1)`.

use rayon::prelude::*;

use super::{CommunityError, Partition};
use crate::graph::UndirectedGraph;
use crate::rng;
use crate::Scalar;

/// Swap attempts per edge in each Monte-Carlo rewiring.
pub const SWAPS_PER_EDGE: usize = 10;

/// Closed-form modularity with its per-community terms.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionQuality<T> {
    pub q: T,
    /// `e_c / m`, indexed by community.
    pub internal_edge_fraction: Vec<T>,
    /// `(d_c / 2m)²`, indexed by community.
    pub expected_fraction: Vec<T>,
}

pub fn modularity<T: Scalar>(
    g: &UndirectedGraph,
    p: &Partition,
) -> Result<PartitionQuality<T>, CommunityError> {
    let labels = p.labels_for(g)?;
    if g.edge_count() == 0 {
        return Err(CommunityError::EmptyGraph);
    }
    Ok(quality_of_labels(g, &labels, p.k()))
}

pub(crate) fn quality_of_labels<T: Scalar>(
    g: &UndirectedGraph,
    labels: &[usize],
    k: usize,
) -> PartitionQuality<T> {
    let m = T::of(g.edge_count());
    let mut internal = vec![0usize; k];
    let mut degree = vec![0usize; k];
    for &(u, v) in g.edges() {
        if labels[u] == labels[v] {
            internal[labels[u]] += 1;
        }
    }
    for (v, &c) in labels.iter().enumerate() {
        degree[c] += g.degree(v);
    }
    let internal_edge_fraction: Vec<T> = internal.iter().map(|&e| T::of(e) / m).collect();
    let expected_fraction: Vec<T> = degree
        .iter()
        .map(|&d| {
            let share = T::of(d) / (m + m);
            share * share
        })
        .collect();
    let q = internal_edge_fraction
        .iter()
        .zip(&expected_fraction)
        .map(|(&a, &b)| a - b)
        .sum();
    PartitionQuality {
        q,
        internal_edge_fraction,
        expected_fraction,
    }
}

/// Monte-Carlo modularity: observed internal fraction minus the mean over
/// `trials` degree-preserving rewirings. Trial `i` draws from ChaCha8 stream
/// `i` under `seed`, so the result does not depend on thread scheduling.
pub fn modularity_monte_carlo<T: Scalar>(
    g: &UndirectedGraph,
    p: &Partition,
    trials: usize,
    seed: u64,
) -> Result<T, CommunityError> {
    let labels = p.labels_for(g)?;
    if g.edge_count() == 0 {
        return Err(CommunityError::EmptyGraph);
    }
    if trials == 0 {
        return Err(CommunityError::ZeroTrials);
    }
    let m = g.edge_count();
    let observed = internal_count(g.edges(), &labels);
    let rewired_total: u64 = (0..trials as u64)
        .into_par_iter()
        .map(|trial| {
            let mut edges = g.edges().to_vec();
            rewire(&mut edges, seed, trial);
            internal_count(&edges, &labels) as u64
        })
        .sum();

    let m_t = T::of(m);
    let observed_fraction = T::of(observed) / m_t;
    let mean_fraction = T::from_u64(rewired_total).expect("finite") / (T::of(trials) * m_t);
    Ok(observed_fraction - mean_fraction)
}

fn internal_count(edges: &[(usize, usize)], labels: &[usize]) -> usize {
    edges
        .iter()
        .filter(|&&(u, v)| labels[u] == labels[v])
        .count()
}

/// `SWAPS_PER_EDGE · m` double-edge swaps: pick two distinct edges
/// `{a,b}`, `{c,d}` and reconnect them as `{a,d}`, `{c,b}` or `{a,c}`,
/// `{b,d}` with equal probability.
fn rewire(edges: &mut [(usize, usize)], seed: u64, trial: u64) {
    let m = edges.len();
    if m < 2 {
        return;
    }
    let mut rng = rng::seeded_stream(seed, trial);
    for _ in 0..SWAPS_PER_EDGE * m {
        let i = rng::below(&mut rng, m);
        let mut j = rng::below(&mut rng, m - 1);
        if j >= i {
            j += 1;
        }
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        if rng::below(&mut rng, 2) == 0 {
            edges[i] = (a, d);
            edges[j] = (c, b);
        } else {
            edges[i] = (a, c);
            edges[j] = (b, d);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{vid, VertexId};
    use approx::assert_abs_diff_eq;

    fn graph(pairs: &[(&str, &str)]) -> UndirectedGraph {
        let mut ids: Vec<VertexId> = pairs.iter().flat_map(|(a, b)| [vid(a), vid(b)]).collect();
        ids.sort();
        ids.dedup();
        UndirectedGraph::new(ids, pairs.iter().map(|(a, b)| (vid(a), vid(b)))).unwrap()
    }

    fn two_triangles() -> UndirectedGraph {
        graph(&[
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("x", "y"),
            ("y", "z"),
            ("x", "z"),
        ])
    }

    fn split(groups: &[&[&str]]) -> Partition {
        Partition::from_communities(groups.iter().map(|g| g.iter().map(|s| vid(s)))).unwrap()
    }

    #[test]
    fn disjoint_triangles_half() {
        let q = modularity::<f64>(
            &two_triangles(),
            &split(&[&["a", "b", "c"], &["x", "y", "z"]]),
        )
        .unwrap();
        assert_abs_diff_eq!(q.q, 0.5, epsilon = 1e-12);
        assert_eq!(q.internal_edge_fraction, vec![0.5, 0.5]);
        assert_eq!(q.expected_fraction, vec![0.25, 0.25]);
    }

    #[test]
    fn single_community_is_zero() {
        let g = two_triangles();
        assert_eq!(modularity::<f64>(&g, &Partition::whole(&g)).unwrap().q, 0.0);
    }

    #[test]
    fn bridged_triangles() {
        let mut pairs = vec![
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("x", "y"),
            ("y", "z"),
            ("x", "z"),
        ];
        pairs.push(("c", "x"));
        let q = modularity::<f64>(
            &graph(&pairs),
            &split(&[&["a", "b", "c"], &["x", "y", "z"]]),
        )
        .unwrap();
        let expected = 2.0 * (3.0 / 7.0 - 0.25);
        assert_abs_diff_eq!(q.q, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(q.q, 0.357143, epsilon = 1e-6);
    }

    #[test]
    fn errors() {
        let g = UndirectedGraph::new([vid("a"), vid("b")], []).unwrap();
        assert_eq!(
            modularity::<f64>(&g, &Partition::whole(&g)).unwrap_err(),
            CommunityError::EmptyGraph
        );
        let t = two_triangles();
        let partial = split(&[&["a", "b", "c"]]);
        assert_eq!(
            modularity::<f64>(&t, &partial).unwrap_err(),
            CommunityError::VertexMismatch
        );
        assert_eq!(
            modularity_monte_carlo::<f64>(&t, &Partition::whole(&t), 0, 1).unwrap_err(),
            CommunityError::ZeroTrials
        );
    }

    #[test]
    fn monte_carlo_universal_community_is_exactly_zero() {
        let g = two_triangles();
        let est = modularity_monte_carlo::<f64>(&g, &Partition::whole(&g), 50, 3).unwrap();
        assert_eq!(est, 0.0);
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let g = two_triangles();
        let p = split(&[&["a", "b", "c"], &["x", "y", "z"]]);
        let a = modularity_monte_carlo::<f64>(&g, &p, 200, 11).unwrap();
        let b = modularity_monte_carlo::<f64>(&g, &p, 200, 11).unwrap();
        assert_eq!(a, b);
    }

    /// Mean internal-edge fraction over every perfect matching of the
    /// graph's stubs (the configuration model, loops and multi-edges kept).
    fn configuration_model_fraction(g: &UndirectedGraph, labels: &[usize]) -> f64 {
        fn go(stubs: &mut Vec<usize>, labels: &[usize], internal: usize, acc: &mut (u64, u64)) {
            if stubs.is_empty() {
                acc.0 += internal as u64;
                acc.1 += 1;
                return;
            }
            let first = stubs.remove(0);
            for i in 0..stubs.len() {
                let other = stubs.remove(i);
                let hit = usize::from(labels[first] == labels[other]);
                go(stubs, labels, internal + hit, acc);
                stubs.insert(i, other);
            }
            stubs.insert(0, first);
        }
        let mut stubs: Vec<usize> = g.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
        let mut acc = (0, 0);
        go(&mut stubs, labels, 0, &mut acc);
        assert_eq!(acc.1, 10395);
        acc.0 as f64 / acc.1 as f64 / g.edge_count() as f64
    }

    #[test]
    fn monte_carlo_matches_exact_configuration_model() {
        let g = two_triangles();
        let p = split(&[&["a", "b", "c"], &["x", "y", "z"]]);
        let labels = p.labels_for(&g).unwrap();
        let exact = 1.0 - configuration_model_fraction(&g, &labels);
        assert_abs_diff_eq!(exact, 1.0 - 30.0 / 66.0, epsilon = 1e-12);
        let est = modularity_monte_carlo::<f64>(&g, &p, 4000, 2).unwrap();
        assert_abs_diff_eq!(est, exact, epsilon = 0.01);
    }

    #[test]
    fn rewiring_preserves_degrees() {
        let g = two_triangles();
        let mut edges = g.edges().to_vec();
        rewire(&mut edges, 5, 0);
        let mut degree = vec![0; g.vertex_count()];
        for (u, v) in edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        assert!(degree.iter().all(|&d| d == 2));
    }
}
