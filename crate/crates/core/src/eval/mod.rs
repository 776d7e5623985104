//! Baselines and scoring: the set-difference collaborative-filtering
//! recommender, precision and recall, planted-partition graphs with known
//! ground truth, and partition similarity (NMI, ARI).

mod cf;
mod matching;
mod metrics;
mod planted;
mod similarity;

pub use cf::{cf_recommend, overlap_ratio, InterestSet};
pub use matching::{match_communities, membership_confusion};
pub use metrics::{confusion_counts, precision, recall, ConfusionCounts};
pub use planted::{planted_partition, PlantedGraph, PlantedParams};
pub use similarity::{partition_similarity, Similarity};

use crate::community::CommunityError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("the two interest sets share no items; there is no basis for a recommendation")]
    EmptyIntersection,
    #[error("both interest sets are empty")]
    BothEmpty,
    #[error("{0} is undefined: its denominator is zero")]
    UndefinedMetric(&'static str),
    #[error("invalid planted-partition parameters: {0}")]
    InvalidParameters(String),
    #[error("partitions cover different vertex sets")]
    VertexMismatch,
    #[error(transparent)]
    Community(#[from] CommunityError),
}
