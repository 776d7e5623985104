//! Community detection: betweenness, modularity (closed form and Monte
//! Carlo), Girvan–Newman, Louvain and walktrap, plus the dendrogram type the
//! hierarchical detectors share.

mod betweenness;
mod dendrogram;
mod girvan_newman;
mod louvain;
mod modularity;
mod partition;
mod walktrap;

pub use betweenness::{edge_betweenness, vertex_betweenness, BetweennessScores};
pub use dendrogram::{cut_dendrogram, Dendrogram, Merge};
pub use girvan_newman::{girvan_newman, StopRule};
pub use louvain::{louvain, louvain_levels};
pub use modularity::{modularity, modularity_monte_carlo, PartitionQuality, SWAPS_PER_EDGE};
pub use partition::Partition;
pub use walktrap::{transition_power, walk_distance, walktrap, WalkDistance, DEFAULT_WALK_LENGTH};

pub(crate) use betweenness::brandes;

use crate::graph::{GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommunityError {
    #[error("graph has no edges; modularity is undefined")]
    EmptyGraph,
    #[error("partition does not cover exactly the graph's vertices")]
    VertexMismatch,
    #[error("vertex `{0}` assigned more than once")]
    DuplicateAssignment(VertexId),
    #[error("community labels must be 0..{k} with none empty")]
    MalformedLabels { k: usize },
    #[error("requested {k} communities but the graph has {vertices} vertices")]
    TooManyCommunities { k: usize, vertices: usize },
    #[error("requested {k} communities but the graph already has {components} components")]
    TooFewCommunities { k: usize, components: usize },
    #[error("walk length must be at least 1")]
    ZeroWalkLength,
    #[error("trial count must be at least 1")]
    ZeroTrials,
    #[error("vertex `{0}` has no neighbors; random walks from it are undefined")]
    IsolatedVertex(VertexId),
    #[error("dendrogram leaves do not match the graph's vertices")]
    LeafMismatch,
    #[error("malformed dendrogram: {0}")]
    MalformedDendrogram(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
