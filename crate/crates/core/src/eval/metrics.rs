use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::EvalError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub true_positives: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
}

impl ConfusionCounts {
    pub fn new(true_positives: usize, false_positives: usize, false_negatives: usize) -> Self {
        Self {
            true_positives,
            false_positives,
            false_negatives,
        }
    }
}

impl std::ops::Add for ConfusionCounts {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.true_positives + rhs.true_positives,
            self.false_positives + rhs.false_positives,
            self.false_negatives + rhs.false_negatives,
        )
    }
}

/// `TP / (TP + FP)`; an error when nothing was predicted.
pub fn precision(c: &ConfusionCounts) -> Result<f64, EvalError> {
    ratio(c.true_positives, c.false_positives, "precision")
}

/// `TP / (TP + FN)`; an error when there is nothing to find.
pub fn recall(c: &ConfusionCounts) -> Result<f64, EvalError> {
    ratio(c.true_positives, c.false_negatives, "recall")
}

fn ratio(hits: usize, misses: usize, name: &'static str) -> Result<f64, EvalError> {
    let total = hits + misses;
    if total == 0 {
        return Err(EvalError::UndefinedMetric(name));
    }
    Ok(hits as f64 / total as f64)
}

pub fn confusion_counts<I: Ord>(predicted: &BTreeSet<I>, truth: &BTreeSet<I>) -> ConfusionCounts {
    let tp = predicted.intersection(truth).count();
    ConfusionCounts::new(tp, predicted.len() - tp, truth.len() - tp)
}
