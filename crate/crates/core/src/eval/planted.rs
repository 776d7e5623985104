use serde::{Deserialize, Serialize};

use super::EvalError;
use crate::community::Partition;
use crate::graph::{UndirectedGraph, VertexId};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlantedParams {
    pub blocks: usize,
    pub block_size: usize,
    pub p_in: f64,
    pub p_out: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedGraph {
    pub graph: UndirectedGraph,
    pub truth: Partition,
    pub params: PlantedParams,
}

/// Planted-partition random graph. Vertex `i` is named `v` followed by `i`
/// zero-padded to a common width (at least three digits) and belongs to
/// block `i / block_size`.
///
/// Pairs `(i, j)`, `i < j`, are visited in lexicographic order and each
/// consumes exactly one uniform draw from ChaCha8 seeded with `seed`; the
/// edge is kept when the draw is below `p_in` (same block) or `p_out`.
pub fn planted_partition(
    blocks: usize,
    block_size: usize,
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> Result<PlantedGraph, EvalError> {
    if blocks == 0 || block_size == 0 {
        return Err(EvalError::InvalidParameters(
            "blocks and block_size must be at least 1".into(),
        ));
    }
    if !(0.0..=1.0).contains(&p_in) || !(0.0..=1.0).contains(&p_out) || p_out > p_in {
        return Err(EvalError::InvalidParameters(format!(
            "need 0 <= p_out <= p_in <= 1, got p_in={p_in}, p_out={p_out}"
        )));
    }
    let n = blocks
        .checked_mul(block_size)
        .ok_or_else(|| EvalError::InvalidParameters("vertex count overflows".into()))?;
    let width = (n - 1).to_string().len().max(3);
    let ids: Vec<VertexId> = (0..n)
        .map(|i| VertexId::new(format!("v{i:0width$}")).expect("nonempty"))
        .collect();

    let mut rng = rng::seeded(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = if i / block_size == j / block_size {
                p_in
            } else {
                p_out
            };
            if rng::unit(&mut rng) < p {
                edges.push((ids[i].clone(), ids[j].clone()));
            }
        }
    }
    let graph =
        UndirectedGraph::new(ids.iter().cloned(), edges).expect("generated edges are valid");
    let truth = Partition::from_labels(
        ids.into_iter()
            .enumerate()
            .map(|(i, id)| (id, i / block_size)),
    )?;
    Ok(PlantedGraph {
        graph,
        truth,
        params: PlantedParams {
            blocks,
            block_size,
            p_in,
            p_out,
            seed,
        },
    })
}
