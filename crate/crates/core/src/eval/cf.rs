use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::EvalError;

/// The observed interests of one user.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterestSet<I: Ord = String> {
    pub owner: String,
    pub items: BTreeSet<I>,
}

impl<I: Ord> InterestSet<I> {
    pub fn new(owner: impl Into<String>, items: impl IntoIterator<Item = I>) -> Self {
        Self {
            owner: owner.into(),
            items: items.into_iter().collect(),
        }
    }
}

/// Set-difference recommendation for two users with common interests:
/// `a` is recommended `B \ A` and `b` is recommended `A \ B`.
pub fn cf_recommend<I: Ord + Clone>(
    a: &InterestSet<I>,
    b: &InterestSet<I>,
) -> Result<(BTreeSet<I>, BTreeSet<I>), EvalError> {
    if a.items.is_disjoint(&b.items) {
        return Err(EvalError::EmptyIntersection);
    }
    let for_a = b.items.difference(&a.items).cloned().collect();
    let for_b = a.items.difference(&b.items).cloned().collect();
    Ok((for_a, for_b))
}

/// Jaccard overlap `|A ∩ B| / |A ∪ B|`.
pub fn overlap_ratio<I: Ord>(a: &InterestSet<I>, b: &InterestSet<I>) -> Result<f64, EvalError> {
    let common = a.items.intersection(&b.items).count();
    let union = a.items.len() + b.items.len() - common;
    if union == 0 {
        return Err(EvalError::BothEmpty);
    }
    Ok(common as f64 / union as f64)
}
