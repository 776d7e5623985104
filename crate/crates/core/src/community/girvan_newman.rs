//! Divisive clustering by repeated removal of the highest-betweenness edge.
//!
//! The edge removal runs until no edges remain, so the dendrogram always
//! records the full split history; the stop rule only chooses which level
//! is returned. After each removal betweenness is recomputed from scratch
//! for the component that lost the edge (other components are unaffected).

use super::betweenness::edge_labeled_adjacency;
use super::dendrogram::best_level;
use super::{brandes, CommunityError, Dendrogram, Merge, Partition};
use crate::graph::UndirectedGraph;
use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    /// Return the level with exactly this many communities.
    Communities(usize),
    /// Return the level with the highest modularity.
    BestModularity,
}

struct Split {
    /// Side holding the smaller endpoint of the removed edge.
    left: Vec<usize>,
    right: Vec<usize>,
    /// Edges still present just before the removal that caused the split.
    edges_before: usize,
}

pub fn girvan_newman<T: Scalar>(
    g: &UndirectedGraph,
    stop: StopRule,
) -> Result<(Dendrogram<T>, Partition), CommunityError> {
    let n = g.vertex_count();
    let initial_components = g.components().len();
    match stop {
        StopRule::Communities(k) if k == 0 || k > n => {
            return Err(CommunityError::TooManyCommunities { k, vertices: n })
        }
        StopRule::Communities(k) if k < initial_components => {
            return Err(CommunityError::TooFewCommunities {
                k,
                components: initial_components,
            })
        }
        StopRule::BestModularity if g.edge_count() == 0 => return Err(CommunityError::EmptyGraph),
        _ => {}
    }

    let splits = split_history::<T>(g);
    let dendrogram = dendrogram_from_splits(g, &splits)?;
    let level = match stop {
        // every split adds exactly one community
        StopRule::Communities(k) => n - k,
        StopRule::BestModularity => best_level(&dendrogram, g)?,
    };
    let partition = dendrogram.partition_at(level);
    Ok((dendrogram, partition))
}

fn split_history<T: Scalar>(g: &UndirectedGraph) -> Vec<Split> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut adjacency = edge_labeled_adjacency(g);
    let mut alive = vec![true; m];
    let mut remaining = m;
    let mut component = vec![0usize; n];
    let mut members: Vec<Vec<usize>> = g.components();
    for (c, vs) in members.iter().enumerate() {
        for &v in vs {
            component[v] = c;
        }
    }

    let mut scores = vec![T::zero(); m];
    let all: Vec<usize> = (0..n).collect();
    let (_, initial) = brandes::<T>(&adjacency, m, &all);
    scores.copy_from_slice(&initial);

    let mut splits = Vec::new();
    while remaining > 0 {
        let e = pick_edge(&scores, &alive);
        let (u, v) = g.edges()[e];
        alive[e] = false;
        remaining -= 1;
        adjacency[u].retain(|&(_, id)| id != e);
        adjacency[v].retain(|&(_, id)| id != e);

        let c = component[u];
        let reach = reachable(&adjacency, u);
        let touched = if reach.len() < members[c].len() {
            let mut in_reach = vec![false; n];
            reach.iter().for_each(|&x| in_reach[x] = true);
            let (left, right): (Vec<usize>, Vec<usize>) =
                members[c].iter().partition(|&&x| in_reach[x]);
            let fresh = members.len();
            for &x in &right {
                component[x] = fresh;
            }
            splits.push(Split {
                left: left.clone(),
                right: right.clone(),
                edges_before: remaining + 1,
            });
            members[c] = left;
            members.push(right);
            vec![c, fresh]
        } else {
            vec![c]
        };

        for c in touched {
            let (_, fresh_scores) = brandes::<T>(&adjacency, m, &members[c]);
            for (id, &(a, _)) in g.edges().iter().enumerate() {
                if alive[id] && component[a] == c {
                    scores[id] = fresh_scores[id];
                }
            }
        }
    }
    splits
}

/// Highest score among live edges; near-ties go to the lowest edge index,
/// which is the lexicographically smallest `(u, v)` id pair.
fn pick_edge<T: Scalar>(scores: &[T], alive: &[bool]) -> usize {
    let best = scores
        .iter()
        .zip(alive)
        .filter(|(_, &a)| a)
        .map(|(&s, _)| s)
        .fold(T::neg_infinity(), T::max);
    let tol = T::tie_tolerance() * best.abs().max(T::one());
    scores
        .iter()
        .zip(alive)
        .position(|(&s, &a)| a && s >= best - tol)
        .expect("a live edge exists")
}

fn reachable(adjacency: &[Vec<(usize, usize)>], start: usize) -> Vec<usize> {
    let mut seen = vec![false; adjacency.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        out.push(v);
        for &(w, _) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    out
}

/// Replays splits in reverse as merges: the last split performed is the
/// lowest merge in the tree.
fn dendrogram_from_splits<T: Scalar>(
    g: &UndirectedGraph,
    splits: &[Split],
) -> Result<Dendrogram<T>, CommunityError> {
    let n = g.vertex_count();
    // node id currently representing the cluster whose smallest member is v
    let mut node_of: Vec<usize> = (0..n).collect();
    let mut merges = Vec::with_capacity(splits.len());
    for split in splits.iter().rev() {
        let left_key = *split.left.iter().min().expect("nonempty side");
        let right_key = *split.right.iter().min().expect("nonempty side");
        let node = n + merges.len();
        merges.push(Merge {
            left: node_of[left_key],
            right: node_of[right_key],
            height: T::of(split.edges_before),
        });
        node_of[left_key.min(right_key)] = node;
    }
    Dendrogram::new(g.ids().to_vec(), merges)
}
