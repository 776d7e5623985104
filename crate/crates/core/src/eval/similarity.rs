use super::matching::contingency;
use super::EvalError;
use crate::community::Partition;
use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity<T> {
    /// Normalized mutual information, arithmetic-mean normalization.
    pub nmi: T,
    /// Adjusted Rand index.
    pub ari: T,
}

/// NMI and ARI from the contingency table of two partitions of the same
/// vertex set. When both partitions have zero entropy (a single community
/// each) NMI is 1; when the ARI denominator vanishes the partitions are
/// identical up to labels and ARI is 1.
pub fn partition_similarity<T: Scalar>(
    p: &Partition,
    truth: &Partition,
) -> Result<Similarity<T>, EvalError> {
    let table = contingency(p, truth)?;
    let n = p.len();
    if n == 0 {
        return Ok(Similarity {
            nmi: T::one(),
            ari: T::one(),
        });
    }
    let rows: Vec<usize> = table.iter().map(|r| r.iter().sum()).collect();
    let cols: Vec<usize> = (0..truth.k())
        .map(|j| table.iter().map(|r| r[j]).sum())
        .collect();

    let nf = T::of(n);
    let entropy = |sizes: &[usize]| -> T {
        sizes
            .iter()
            .filter(|&&s| s > 0)
            .map(|&s| {
                let f = T::of(s) / nf;
                -f * f.ln()
            })
            .sum()
    };
    let mut mutual = T::zero();
    for (i, row) in table.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                let c = T::of(c);
                mutual = mutual + c / nf * (c * nf / (T::of(rows[i]) * T::of(cols[j]))).ln();
            }
        }
    }
    let h = entropy(&rows) + entropy(&cols);
    let nmi = if h <= T::zero() {
        T::one()
    } else {
        (T::lit(2.0) * mutual / h).max(T::zero()).min(T::one())
    };

    let pairs = |x: usize| (x as u128) * (x as u128).saturating_sub(1) / 2;
    let index: u128 = table.iter().flatten().map(|&c| pairs(c)).sum();
    let sum_rows: u128 = rows.iter().map(|&s| pairs(s)).sum();
    let sum_cols: u128 = cols.iter().map(|&s| pairs(s)).sum();
    let total = T::from_u128(pairs(n)).expect("finite");
    let (index, sum_rows, sum_cols) = (
        T::from_u128(index).expect("finite"),
        T::from_u128(sum_rows).expect("finite"),
        T::from_u128(sum_cols).expect("finite"),
    );
    let expected = if total > T::zero() {
        sum_rows * sum_cols / total
    } else {
        T::zero()
    };
    let max_index = (sum_rows + sum_cols) / T::lit(2.0);
    let denominator = max_index - expected;
    let ari = if denominator == T::zero() {
        T::one()
    } else {
        (index - expected) / denominator
    };
    Ok(Similarity { nmi, ari })
}
