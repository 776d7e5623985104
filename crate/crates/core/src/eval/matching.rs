//! Confusion counts between a detected partition and planted truth.
//!
//! Detected communities are paired one-to-one with truth blocks so that the
//! total number of shared members is maximal (Hungarian assignment). Within
//! a pair, shared members are true positives, extra members false positives
//! and missing members false negatives; unpaired communities count entirely
//! as false positives, unpaired blocks entirely as false negatives.

use super::{ConfusionCounts, EvalError};
use crate::community::Partition;

/// Overlap-maximising pairs `(predicted community, truth community)`, in
/// predicted order. Pairs with no shared member are omitted.
pub fn match_communities(
    predicted: &Partition,
    truth: &Partition,
) -> Result<Vec<(usize, usize)>, EvalError> {
    let overlap = contingency(predicted, truth)?;
    let size = predicted.k().max(truth.k());
    let cost: Vec<Vec<i64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| match overlap.get(i).and_then(|row| row.get(j)) {
                    Some(&c) => -(c as i64),
                    None => 0,
                })
                .collect()
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> = min_cost_assignment(&cost)
        .into_iter()
        .enumerate()
        .filter(|&(i, j)| i < predicted.k() && j < truth.k() && overlap[i][j] > 0)
        .collect();
    pairs.sort_unstable();
    Ok(pairs)
}

pub fn membership_confusion(
    predicted: &Partition,
    truth: &Partition,
) -> Result<ConfusionCounts, EvalError> {
    let pairs = match_communities(predicted, truth)?;
    let overlap = contingency(predicted, truth)?;
    let shared: usize = pairs.iter().map(|&(i, j)| overlap[i][j]).sum();
    let n = predicted.len();
    Ok(ConfusionCounts::new(shared, n - shared, n - shared))
}

pub(crate) fn contingency(
    predicted: &Partition,
    truth: &Partition,
) -> Result<Vec<Vec<usize>>, EvalError> {
    if predicted.len() != truth.len()
        || !predicted
            .vertices()
            .zip(truth.vertices())
            .all(|(a, b)| a == b)
    {
        return Err(EvalError::VertexMismatch);
    }
    let mut table = vec![vec![0usize; truth.k()]; predicted.k()];
    for ((_, &a), (_, &b)) in predicted.assignment().iter().zip(truth.assignment()) {
        table[a][b] += 1;
    }
    Ok(table)
}

/// Square min-cost assignment (Hungarian method with potentials).
/// Returns the column assigned to each row.
fn min_cost_assignment(cost: &[Vec<i64>]) -> Vec<usize> {
    let n = cost.len();
    const INF: i64 = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for row in 1..=n {
        owner[0] = row;
        let mut j0 = 0;
        let mut min_v = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if reduced < min_v[j] {
                    min_v[j] = reduced;
                    way[j] = j0;
                }
                if min_v[j] < delta {
                    delta = min_v[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_v[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assigned = vec![0; n];
    for j in 1..=n {
        assigned[owner[j] - 1] = j - 1;
    }
    assigned
}
