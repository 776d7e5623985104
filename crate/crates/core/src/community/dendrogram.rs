use super::{CommunityError, Partition};
use crate::graph::{UndirectedGraph, VertexId};
use crate::Scalar;

/// One agglomeration step. Node ids `0..n` are leaves; merge `i` creates
/// node `n + i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Merge<T> {
    pub left: usize,
    pub right: usize,
    pub height: T,
}

/// Merge history over a set of leaves. May be a forest: a disconnected
/// graph ends with one root per component.
#[derive(Debug, Clone, PartialEq)]
pub struct Dendrogram<T> {
    leaves: Vec<VertexId>,
    merges: Vec<Merge<T>>,
}

impl<T: Scalar> Dendrogram<T> {
    /// Validates that every node is merged at most once, children exist
    /// before their parent, and heights never decrease toward a root.
    pub fn new(leaves: Vec<VertexId>, merges: Vec<Merge<T>>) -> Result<Self, CommunityError> {
        let n = leaves.len();
        if merges.len() > n.saturating_sub(1) {
            return Err(CommunityError::MalformedDendrogram("too many merges"));
        }
        let mut used = vec![false; n + merges.len()];
        let mut heights = vec![T::zero(); n + merges.len()];
        for (i, merge) in merges.iter().enumerate() {
            let node = n + i;
            for child in [merge.left, merge.right] {
                if child >= node {
                    return Err(CommunityError::MalformedDendrogram(
                        "child created after parent",
                    ));
                }
                if std::mem::replace(&mut used[child], true) {
                    return Err(CommunityError::MalformedDendrogram("node merged twice"));
                }
                if heights[child] > merge.height {
                    return Err(CommunityError::MalformedDendrogram(
                        "height decreases toward root",
                    ));
                }
            }
            if merge.left == merge.right || merge.height < T::zero() {
                return Err(CommunityError::MalformedDendrogram("bad merge"));
            }
            heights[node] = merge.height;
        }
        Ok(Self { leaves, merges })
    }

    pub fn leaves(&self) -> &[VertexId] {
        &self.leaves
    }

    pub fn merges(&self) -> &[Merge<T>] {
        &self.merges
    }

    /// Number of clusters after the first `level` merges.
    pub fn clusters_at(&self, level: usize) -> usize {
        self.leaves.len() - level.min(self.merges.len())
    }

    /// Leaf labels after applying the first `level` merges; labels are root
    /// node ids, not compacted.
    fn labels_at(&self, level: usize) -> Vec<usize> {
        let n = self.leaves.len();
        let mut parent: Vec<usize> = (0..n + self.merges.len()).collect();
        for (i, merge) in self.merges.iter().take(level).enumerate() {
            parent[merge.left] = n + i;
            parent[merge.right] = n + i;
        }
        (0..n)
            .map(|mut v| {
                while parent[v] != v {
                    v = parent[v];
                }
                v
            })
            .collect()
    }

    /// Flat partition after the first `level` merges.
    pub fn partition_at(&self, level: usize) -> Partition {
        let labels = self.labels_at(level);
        Partition::from_labels(self.leaves.iter().cloned().zip(labels)).expect("leaves are unique")
    }
}

/// Picks the merge level whose partition has the highest modularity on `g`,
/// preferring fewer communities when levels tie. On an edgeless graph every
/// level scores zero, so the coarsest level wins.
pub fn cut_dendrogram<T: Scalar>(
    d: &Dendrogram<T>,
    g: &UndirectedGraph,
) -> Result<Partition, CommunityError> {
    let level = best_level(d, g)?;
    Ok(d.partition_at(level))
}

pub(crate) fn best_level<T: Scalar>(
    d: &Dendrogram<T>,
    g: &UndirectedGraph,
) -> Result<usize, CommunityError> {
    if d.leaves() != g.ids() {
        return Err(CommunityError::LeafMismatch);
    }
    if g.edge_count() == 0 {
        return Ok(d.merges.len());
    }
    let scores = level_scores(d, g);
    let best = scores.iter().copied().fold(T::neg_infinity(), T::max);
    let tol = T::tie_tolerance() * best.abs().max(T::one());
    Ok(scores
        .iter()
        .rposition(|&s| s >= best - tol)
        .expect("at least one level"))
}

/// Modularity after each prefix of merges, replayed incrementally.
/// Requires matching leaves and `m >= 1`.
fn level_scores<T: Scalar>(d: &Dendrogram<T>, g: &UndirectedGraph) -> Vec<T> {
    let n = d.leaves.len();
    let m = g.edge_count();

    // per-node aggregates, updated as merges are replayed
    let total = n + d.merges.len();
    let mut root = (0..n).collect::<Vec<_>>();
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    members.resize(total, Vec::new());
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degree.resize(total, 0);

    let m_t = T::of(m);
    let two_m = m_t + m_t;
    let mut q: T = -(0..n)
        .map(|v| {
            let s = T::of(g.degree(v)) / two_m;
            s * s
        })
        .sum::<T>();
    let mut scores = Vec::with_capacity(d.merges.len() + 1);
    scores.push(q);

    for (i, merge) in d.merges.iter().enumerate() {
        let node = n + i;
        let (small, large) = if members[merge.left].len() <= members[merge.right].len() {
            (merge.left, merge.right)
        } else {
            (merge.right, merge.left)
        };
        let crossing = members[small]
            .iter()
            .flat_map(|&v| g.neighbors(v))
            .filter(|&&w| root[w] == large)
            .count();
        let (da, db) = (T::of(degree[small]), T::of(degree[large]));
        q = q + T::of(crossing) / m_t - (da + da) * db / (two_m * two_m);
        scores.push(q);

        let mut merged = std::mem::take(&mut members[large]);
        merged.append(&mut members[small]);
        for &v in &merged {
            root[v] = node;
        }
        members[node] = merged;
        degree[node] = degree[small] + degree[large];
    }
    scores
}
