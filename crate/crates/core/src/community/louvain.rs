//! Louvain modularity maximisation: greedy local moves alternating with
//! aggregation of communities into super-vertices.

use super::modularity::quality_of_labels;
use super::{CommunityError, Partition, PartitionQuality};
use crate::graph::UndirectedGraph;
use crate::rng;
use crate::Scalar;

/// Weighted graph at one aggregation level.
struct Level<T> {
    /// `(neighbor, weight)`, neighbors distinct from the vertex itself.
    adjacency: Vec<Vec<(usize, T)>>,
    /// Weighted degree, counting a self-loop twice.
    strength: Vec<T>,
    /// Twice the total edge weight (`2m` at the first level).
    total: T,
}

impl<T: Scalar> Level<T> {
    fn from_graph(g: &UndirectedGraph) -> Self {
        let adjacency: Vec<Vec<(usize, T)>> = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().map(|&w| (w, T::one())).collect())
            .collect();
        let strength = (0..g.vertex_count()).map(|v| T::of(g.degree(v))).collect();
        Self {
            adjacency,
            strength,
            total: T::of(2 * g.edge_count()),
        }
    }

    fn len(&self) -> usize {
        self.adjacency.len()
    }

    /// Moves vertices until a full sweep changes nothing. Returns each
    /// vertex's community, named by one of its vertices, and whether
    /// anything moved.
    fn local_moves(&self, order: &[usize]) -> (Vec<usize>, bool) {
        let n = self.len();
        let mut community: Vec<usize> = (0..n).collect();
        let mut tot = self.strength.clone();
        let mut link = vec![T::zero(); n];
        let mut touched: Vec<usize> = Vec::new();
        let mut moved_any = false;

        loop {
            let mut moved = false;
            for &v in order {
                let k_v = self.strength[v];
                let current = community[v];
                for &(w, weight) in &self.adjacency[v] {
                    let c = community[w];
                    if link[c] == T::zero() {
                        touched.push(c);
                    }
                    link[c] = link[c] + weight;
                }
                tot[current] = tot[current] - k_v;

                // scaled gain of joining c from isolation: m·ΔQ
                let gain = |c: usize| link[c] - tot[c] * k_v / self.total;
                let eps = T::tie_tolerance() * k_v.max(T::one());
                let mut best = current;
                let mut best_gain = gain(current);
                touched.sort_unstable();
                for &c in &touched {
                    let g = gain(c);
                    if g > best_gain + eps {
                        best = c;
                        best_gain = g;
                    }
                }

                tot[best] = tot[best] + k_v;
                if best != current {
                    community[v] = best;
                    moved = true;
                }
                for &c in &touched {
                    link[c] = T::zero();
                }
                touched.clear();
            }
            if !moved {
                break;
            }
            moved_any = true;
        }
        (community, moved_any)
    }

    /// Collapses communities into vertices. `labels` must be compact.
    fn aggregate(&self, labels: &[usize], k: usize) -> Self {
        let mut weights: Vec<std::collections::BTreeMap<usize, T>> = vec![Default::default(); k];
        let mut strength = vec![T::zero(); k];
        for v in 0..self.len() {
            let cv = labels[v];
            strength[cv] = strength[cv] + self.strength[v];
            for &(w, weight) in &self.adjacency[v] {
                let cw = labels[w];
                if cv != cw {
                    let slot = weights[cv].entry(cw).or_insert_with(T::zero);
                    *slot = *slot + weight;
                }
            }
        }
        Self {
            adjacency: weights
                .into_iter()
                .map(|m| m.into_iter().collect())
                .collect(),
            strength,
            total: self.total,
        }
    }
}

/// Renumbers labels in order of first appearance.
fn compact(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut map = vec![usize::MAX; labels.len()];
    let mut next = 0;
    let out = labels
        .iter()
        .map(|&c| {
            if map[c] == usize::MAX {
                map[c] = next;
                next += 1;
            }
            map[c]
        })
        .collect();
    (out, next)
}

/// Flat partitions after each aggregation level, coarsening. Modularity is
/// nondecreasing along the sequence. The vertex visit order at every level
/// is shuffled by `seed`; ΔQ ties keep the current community, otherwise go
/// to the lowest community index.
pub fn louvain_levels<T: Scalar>(
    g: &UndirectedGraph,
    seed: u64,
) -> Result<Vec<Partition>, CommunityError> {
    if g.edge_count() == 0 {
        return Err(CommunityError::EmptyGraph);
    }
    let mut rng = rng::seeded(seed);
    let mut level = Level::<T>::from_graph(g);
    let mut flat: Vec<usize> = (0..g.vertex_count()).collect();
    let mut levels = Vec::new();

    loop {
        let mut order: Vec<usize> = (0..level.len()).collect();
        rng::shuffle(&mut rng, &mut order);
        let (community, moved) = level.local_moves(&order);
        if !moved {
            break;
        }
        let (labels, k) = compact(&community);
        for c in flat.iter_mut() {
            *c = labels[*c];
        }
        levels.push(Partition::from_indexed(g, &flat));
        level = level.aggregate(&labels, k);
    }
    Ok(levels)
}

pub fn louvain<T: Scalar>(
    g: &UndirectedGraph,
    seed: u64,
) -> Result<(Partition, PartitionQuality<T>), CommunityError> {
    let levels = louvain_levels::<T>(g, seed)?;
    let partition = levels
        .into_iter()
        .last()
        .unwrap_or_else(|| Partition::singletons(g));
    let labels = partition.labels_for(g)?;
    let quality = quality_of_labels(g, &labels, partition.k());
    Ok((partition, quality))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::community::modularity;
    use crate::graph::vid;
    use approx::assert_abs_diff_eq;

    fn graph(ids: &[&str], pairs: &[(&str, &str)]) -> UndirectedGraph {
        UndirectedGraph::new(
            ids.iter().map(|s| vid(s)),
            pairs.iter().map(|(a, b)| (vid(a), vid(b))),
        )
        .unwrap()
    }

    fn two_triangles() -> UndirectedGraph {
        graph(
            &["a", "b", "c", "x", "y", "z"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("a", "c"),
                ("x", "y"),
                ("y", "z"),
                ("x", "z"),
            ],
        )
    }

    #[test]
    fn finds_triangles() {
        for seed in 0..10 {
            let (p, q) = louvain::<f64>(&two_triangles(), seed).unwrap();
            assert_eq!(p.k(), 2);
            assert_eq!(p.community_of(&vid("a")), p.community_of(&vid("c")));
            assert_ne!(p.community_of(&vid("a")), p.community_of(&vid("x")));
            assert_abs_diff_eq!(q.q, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn edgeless_is_error() {
        let g = graph(&["a", "b"], &[]);
        assert_eq!(
            louvain::<f64>(&g, 0).unwrap_err(),
            CommunityError::EmptyGraph
        );
    }

    #[test]
    fn levels_never_lose_modularity() {
        // two 4-cliques joined by a path; several levels of aggregation
        let g = graph(
            &["a", "b", "c", "d", "e", "f", "g", "h", "i"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
                ("d", "e"),
                ("e", "f"),
                ("f", "g"),
                ("f", "h"),
                ("f", "i"),
                ("g", "h"),
                ("g", "i"),
                ("h", "i"),
            ],
        );
        for seed in 0..20 {
            let levels = louvain_levels::<f64>(&g, seed).unwrap();
            let mut previous = modularity::<f64>(&g, &Partition::singletons(&g)).unwrap().q;
            for p in &levels {
                let q = modularity::<f64>(&g, p).unwrap().q;
                assert!(q >= previous - 1e-12);
                previous = q;
            }
        }
    }

    #[test]
    fn seed_replay_is_identical() {
        let g = two_triangles();
        assert_eq!(
            louvain::<f64>(&g, 42).unwrap(),
            louvain::<f64>(&g, 42).unwrap()
        );
    }

    #[test]
    fn isolated_vertices_stay_alone() {
        let g = graph(
            &["a", "b", "c", "solo"],
            &[("a", "b"), ("b", "c"), ("a", "c")],
        );
        let (p, _) = louvain::<f64>(&g, 1).unwrap();
        assert_eq!(p.k(), 2);
        assert_eq!(p.sizes().iter().filter(|&&s| s == 1).count(), 1);
    }
}
