//! Interest-community detection on social ego networks.
//!
//! The crate takes a directed follow graph, extracts a user's ego network
//! (the accounts they follow), partitions it with one of three detectors
//! (Girvan–Newman, Louvain, walktrap), labels each community from member
//! profile text, and scores detection quality against planted ground truth.
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`). The aliases
//! at the crate root fix the scalar to `f64`, which is what the CLI and most
//! callers want.

pub mod community;
pub mod eval;
pub mod graph;
pub mod interest;
pub mod io;
mod rng;
mod scalar;

pub use scalar::Scalar;

pub use community::{
    cut_dendrogram, edge_betweenness, girvan_newman, louvain, louvain_levels, modularity,
    modularity_monte_carlo, vertex_betweenness, walk_distance, walktrap, CommunityError, Partition,
    StopRule,
};
pub use eval::{
    cf_recommend, confusion_counts, overlap_ratio, partition_similarity, planted_partition,
    precision, recall, ConfusionCounts, EvalError, InterestSet, PlantedGraph,
};
pub use graph::{
    build_graph, ego_graph, shortest_paths, undirected_projection, DirectedGraph, GraphError,
    PathCounts, UndirectedGraph, VertexId, VertexMeta,
};
pub use interest::{
    build_interest_map, filter_communities, label_community, Detector, InterestGroup, InterestMap,
    LabelTerm, MapConfig,
};

/// Betweenness scores in double precision.
pub type BetweennessScores = community::BetweennessScores<f64>;
/// Modularity breakdown in double precision.
pub type PartitionQuality = community::PartitionQuality<f64>;
/// Merge history in double precision.
pub type Dendrogram = community::Dendrogram<f64>;
/// Walk distances in double precision.
pub type WalkDistance = community::WalkDistance<f64>;
/// Partition similarity scores in double precision.
pub type Similarity = eval::Similarity<f64>;
