use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::CommunityError;
use crate::graph::{UndirectedGraph, VertexId};

/// Disjoint assignment of vertices to communities `0..k`.
///
/// Community indices are canonical: communities are numbered by their
/// smallest member id, so two partitions with the same member sets compare
/// equal regardless of how they were labeled when built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct Partition {
    k: usize,
    assignment: BTreeMap<VertexId, usize>,
}

#[derive(Deserialize)]
struct RawPartition {
    k: usize,
    assignment: BTreeMap<VertexId, usize>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = CommunityError;

    fn try_from(raw: RawPartition) -> Result<Self, Self::Error> {
        let mut used = vec![false; raw.k];
        for &label in raw.assignment.values() {
            match used.get_mut(label) {
                Some(slot) => *slot = true,
                None => return Err(CommunityError::MalformedLabels { k: raw.k }),
            }
        }
        if used.iter().any(|u| !u) {
            return Err(CommunityError::MalformedLabels { k: raw.k });
        }
        Self::from_labels(raw.assignment)
    }
}

impl Partition {
    /// Builds a partition from arbitrary (hashable, ordered) labels.
    pub fn from_labels<L, I>(labels: I) -> Result<Self, CommunityError>
    where
        L: Ord,
        I: IntoIterator<Item = (VertexId, L)>,
    {
        let mut raw = BTreeMap::new();
        for (id, label) in labels {
            if raw.contains_key(&id) {
                return Err(CommunityError::DuplicateAssignment(id));
            }
            raw.insert(id, label);
        }
        let mut renumber: BTreeMap<&L, usize> = BTreeMap::new();
        let mut assignment = BTreeMap::new();
        for (id, label) in &raw {
            let next = renumber.len();
            let c = *renumber.entry(label).or_insert(next);
            assignment.insert(id.clone(), c);
        }
        Ok(Self {
            k: renumber.len(),
            assignment,
        })
    }

    /// Builds a partition from explicit member lists. Empty lists are ignored.
    pub fn from_communities<C, I>(communities: I) -> Result<Self, CommunityError>
    where
        C: IntoIterator<Item = VertexId>,
        I: IntoIterator<Item = C>,
    {
        let labels = communities
            .into_iter()
            .enumerate()
            .flat_map(|(c, members)| members.into_iter().map(move |id| (id, c)));
        Self::from_labels(labels)
    }

    /// `labels[i]` is the community of `g.id(i)`.
    pub(crate) fn from_indexed(g: &UndirectedGraph, labels: &[usize]) -> Self {
        debug_assert_eq!(labels.len(), g.vertex_count());
        Self::from_labels(g.ids().iter().cloned().zip(labels.iter().copied()))
            .expect("graph ids are unique")
    }

    /// Every vertex in its own community.
    pub fn singletons(g: &UndirectedGraph) -> Self {
        let labels: Vec<usize> = (0..g.vertex_count()).collect();
        Self::from_indexed(g, &labels)
    }

    /// One community holding every vertex.
    pub fn whole(g: &UndirectedGraph) -> Self {
        Self::from_indexed(g, &vec![0; g.vertex_count()])
    }

    /// Number of communities.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of assigned vertices.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn community_of(&self, id: &VertexId) -> Option<usize> {
        self.assignment.get(id).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<VertexId, usize> {
        &self.assignment
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.assignment.keys()
    }

    /// Member sets, indexed by community.
    pub fn communities(&self) -> Vec<BTreeSet<VertexId>> {
        let mut out = vec![BTreeSet::new(); self.k];
        for (id, &c) in &self.assignment {
            out[c].insert(id.clone());
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.k];
        for &c in self.assignment.values() {
            out[c] += 1;
        }
        out
    }

    /// Labels in `g`'s index order. Fails unless the vertex sets coincide.
    pub fn labels_for(&self, g: &UndirectedGraph) -> Result<Vec<usize>, CommunityError> {
        if self.assignment.len() != g.vertex_count() {
            return Err(CommunityError::VertexMismatch);
        }
        self.assignment
            .iter()
            .zip(g.ids())
            .map(|((id, &c), gid)| {
                if id == gid {
                    Ok(c)
                } else {
                    Err(CommunityError::VertexMismatch)
                }
            })
            .collect()
    }

    /// Union with a partition over a disjoint vertex set.
    pub fn union(&self, other: &Partition) -> Result<Self, CommunityError> {
        let left = self.assignment.iter().map(|(id, &c)| (id.clone(), (0, c)));
        let right = other.assignment.iter().map(|(id, &c)| (id.clone(), (1, c)));
        Self::from_labels(left.chain(right))
    }
}
