//! Interest maps: a user's ego network partitioned into communities, each
//! labeled with descriptive terms drawn from its members' profiles.

mod labeling;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use labeling::{community_terms, is_stopword, label_community, tokenize, Corpus, LabelTerm};

use crate::community::{girvan_newman, louvain, walktrap, CommunityError, Partition, StopRule};
use crate::graph::{
    ego_graph, undirected_projection, DirectedGraph, GraphError, UndirectedGraph, VertexId,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Detector {
    GirvanNewman,
    Louvain,
    Walktrap,
}

impl Detector {
    pub const ALL: [Detector; 3] = [
        Detector::GirvanNewman,
        Detector::Louvain,
        Detector::Walktrap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Detector::GirvanNewman => "girvan-newman",
            Detector::Louvain => "louvain",
            Detector::Walktrap => "walktrap",
        }
    }
}

impl fmt::Display for Detector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Detector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Detector::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| {
                format!("unknown detector `{s}` (expected girvan-newman, louvain or walktrap)")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapConfig {
    pub detector: Detector,
    pub min_community_size: usize,
    pub label_top_k: usize,
    pub walk_length: usize,
    pub seed: u64,
}

impl Default for MapConfig {
    fn default() -> Self {
        Self {
            detector: Detector::Louvain,
            min_community_size: 3,
            label_top_k: 5,
            walk_length: crate::community::DEFAULT_WALK_LENGTH,
            seed: 0,
        }
    }
}

impl MapConfig {
    pub fn validate(&self) -> Result<(), MapError> {
        for (name, value) in [
            ("min_community_size", self.min_community_size),
            ("label_top_k", self.label_top_k),
            ("walk_length", self.walk_length),
        ] {
            if value == 0 {
                return Err(MapError::InvalidConfig(name));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("config field `{0}` must be at least 1")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Community(#[from] CommunityError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterestGroup {
    pub community_id: usize,
    pub size: usize,
    pub label_terms: Vec<LabelTerm>,
    pub members: BTreeSet<VertexId>,
}

/// Field order here is the canonical JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterestMap {
    pub ego: VertexId,
    pub detector: Detector,
    /// Largest first; equal sizes ordered by smallest member id.
    pub groups: Vec<InterestGroup>,
    pub dropped_vertices: BTreeSet<VertexId>,
}

/// Splits a partition into communities of at least `min_size` members and
/// the vertices of everything smaller.
pub fn filter_communities(
    p: &Partition,
    min_size: usize,
) -> (Vec<BTreeSet<VertexId>>, BTreeSet<VertexId>) {
    let mut kept = Vec::new();
    let mut dropped = BTreeSet::new();
    for community in p.communities() {
        if community.len() >= min_size {
            kept.push(community);
        } else {
            dropped.extend(community);
        }
    }
    (kept, dropped)
}

/// Runs `detector` with isolated vertices set aside: they are detected
/// around and returned as singleton communities. Girvan–Newman returns its
/// maximum-modularity level.
pub fn detect(
    g: &UndirectedGraph,
    detector: Detector,
    walk_length: usize,
    seed: u64,
) -> Result<Partition, CommunityError> {
    let (active, isolated): (Vec<usize>, Vec<usize>) =
        (0..g.vertex_count()).partition(|&v| g.degree(v) > 0);
    let loners = Partition::singletons(&g.induced(&isolated));
    if active.is_empty() {
        return Ok(loners);
    }
    let core = g.induced(&active);
    let found = match detector {
        Detector::GirvanNewman => girvan_newman::<f64>(&core, StopRule::BestModularity)?.1,
        Detector::Louvain => louvain::<f64>(&core, seed)?.0,
        Detector::Walktrap => walktrap::<f64>(&core, walk_length)?.1,
    };
    found.union(&loners)
}

/// Ego network → undirected view → communities → size filter → labels.
pub fn build_interest_map(
    g: &DirectedGraph,
    ego: &VertexId,
    cfg: &MapConfig,
) -> Result<InterestMap, MapError> {
    cfg.validate()?;
    let friends = ego_graph(g, ego)?;
    let view = undirected_projection(&friends);
    let mut map = InterestMap {
        ego: ego.clone(),
        detector: cfg.detector,
        groups: Vec::new(),
        dropped_vertices: BTreeSet::new(),
    };
    if view.vertex_count() == 0 {
        return Ok(map);
    }

    let partition = detect(&view, cfg.detector, cfg.walk_length, cfg.seed)?;
    let meta: &BTreeMap<VertexId, _> = g.metadata();
    let documents: Vec<_> = partition
        .communities()
        .iter()
        .map(|c| community_terms(c, meta))
        .collect();
    let corpus = Corpus::new(&documents);

    let (mut kept, dropped) = filter_communities(&partition, cfg.min_community_size);
    kept.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.first().cmp(&b.first()))
    });
    map.groups = kept
        .into_iter()
        .enumerate()
        .map(|(community_id, members)| InterestGroup {
            community_id,
            size: members.len(),
            label_terms: label_community(&members, meta, &corpus, cfg.label_top_k),
            members,
        })
        .collect();
    map.dropped_vertices = dropped;
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, vid, VertexMeta};

    fn sizes(p: &[usize]) -> Partition {
        let mut labels = Vec::new();
        let mut next = 0;
        for (c, &s) in p.iter().enumerate() {
            for _ in 0..s {
                labels.push((vid(&format!("v{next:02}")), c));
                next += 1;
            }
        }
        Partition::from_labels(labels).unwrap()
    }

    #[test]
    fn filter_keeps_large_groups() {
        let (kept, dropped) = filter_communities(&sizes(&[5, 3, 1]), 3);
        assert_eq!(kept.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![5, 3]);
        assert_eq!(dropped.len(), 1);
    }

    #[test]
    fn filter_min_one_is_identity() {
        let p = sizes(&[2, 1, 4]);
        let (kept, dropped) = filter_communities(&p, 1);
        assert_eq!(kept, p.communities());
        assert!(dropped.is_empty());
    }

    #[test]
    fn filter_can_drop_everything() {
        let (kept, dropped) = filter_communities(&sizes(&[2, 1]), 3);
        assert!(kept.is_empty());
        assert_eq!(dropped.len(), 3);
    }

    #[test]
    fn detector_names_round_trip() {
        for d in Detector::ALL {
            assert_eq!(d.name().parse::<Detector>().unwrap(), d);
            assert_eq!(
                serde_json::to_string(&d).unwrap(),
                format!("\"{}\"", d.name())
            );
        }
        assert!("leiden".parse::<Detector>().is_err());
    }

    fn graph(ids: &[&str], pairs: &[(&str, &str)]) -> DirectedGraph {
        build_graph(
            ids.iter().map(|s| (vid(s), VertexMeta::default())),
            pairs.iter().map(|(a, b)| (vid(a), vid(b))),
        )
        .unwrap()
    }

    #[test]
    fn ego_following_nobody() {
        let g = graph(&["ego", "x"], &[("x", "ego")]);
        let map = build_interest_map(&g, &vid("ego"), &MapConfig::default()).unwrap();
        assert!(map.groups.is_empty());
        assert!(map.dropped_vertices.is_empty());
    }

    #[test]
    fn pair_below_minimum_is_dropped() {
        let g = graph(
            &["ego", "a", "b"],
            &[("ego", "a"), ("ego", "b"), ("a", "b")],
        );
        for detector in Detector::ALL {
            let cfg = MapConfig {
                detector,
                ..MapConfig::default()
            };
            let map = build_interest_map(&g, &vid("ego"), &cfg).unwrap();
            assert!(map.groups.is_empty());
            assert_eq!(map.dropped_vertices.len(), 2);
        }
    }

    #[test]
    fn edgeless_ego_network_drops_all() {
        let g = graph(
            &["ego", "a", "b", "c"],
            &[("ego", "a"), ("ego", "b"), ("ego", "c")],
        );
        let map = build_interest_map(&g, &vid("ego"), &MapConfig::default()).unwrap();
        assert!(map.groups.is_empty());
        assert_eq!(map.dropped_vertices.len(), 3);
    }

    #[test]
    fn unknown_ego_and_bad_config() {
        let g = graph(&["a"], &[]);
        assert!(matches!(
            build_interest_map(&g, &vid("q"), &MapConfig::default()),
            Err(MapError::Graph(GraphError::UnknownVertex(_)))
        ));
        let cfg = MapConfig {
            label_top_k: 0,
            ..MapConfig::default()
        };
        assert_eq!(
            build_interest_map(&g, &vid("a"), &cfg).unwrap_err(),
            MapError::InvalidConfig("label_top_k")
        );
    }
}
