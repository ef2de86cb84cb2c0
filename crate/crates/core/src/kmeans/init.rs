use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{check_k, Assignment, Centroids};
use crate::dataset::NumericDataset;
use crate::error::Result;
use crate::scalar::{from_count, Scalar};

/// Deterministic range-based starting centroids.
///
/// Centroid `j` in `1..=k` gets `min + j * (max - min) / (k + 1)` in every
/// column, so the `k` centroids split each column's span into `k + 1` equal
/// gaps. Returned in ascending `j` order.
pub fn improved_initial_centroids<T: Scalar>(
    dataset: &NumericDataset<T>,
    k: usize,
) -> Result<Centroids<T>> {
    check_k(k, dataset.n())?;
    let ranges = dataset.column_ranges();
    let divisor: T = from_count(k + 1);
    let mut values = Vec::with_capacity(k * dataset.m());
    for j in 1..=k {
        let step: T = from_count(j);
        for r in &ranges {
            let c = r.min + r.range * step / divisor;
            // rounding in floats can land an ulp outside the column
            values.push(clamp(c, r.min, r.max));
        }
    }
    Ok(Centroids::from_flat(values, k, dataset.m()))
}

/// `k` distinct rows drawn uniformly without replacement from a ChaCha stream
/// seeded with `seed`.
pub fn random_initial_centroids<T: Scalar>(
    dataset: &NumericDataset<T>,
    k: usize,
    seed: u64,
) -> Result<Centroids<T>> {
    check_k(k, dataset.n())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = rand::seq::index::sample(&mut rng, dataset.n(), k);
    let mut values = Vec::with_capacity(k * dataset.m());
    for i in picked.iter() {
        values.extend_from_slice(dataset.row(i));
    }
    Ok(Centroids::from_flat(values, k, dataset.m()))
}

/// Splits the rows into `k` contiguous blocks after ordering them by the
/// widest column.
///
/// Rows are sorted by their value in [`NumericDataset::max_range_column`],
/// equal values keeping their original order. The first `n % k` blocks hold
/// `n / k + 1` rows, the rest `n / k`. Block `i` becomes cluster `i`.
pub fn initial_partition_assign<T: Scalar>(
    dataset: &NumericDataset<T>,
    k: usize,
) -> Result<Assignment> {
    let n = dataset.n();
    check_k(k, n)?;
    let key = dataset.max_range_column();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (va, vb) = (dataset.row(a)[key], dataset.row(b)[key]);
        va.partial_cmp(&vb)
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });

    let base = n / k;
    let extra = n % k;
    let mut cluster_of = vec![0; n];
    let mut ranked = order.into_iter();
    for cluster in 0..k {
        let size = base + usize::from(cluster < extra);
        for row in ranked.by_ref().take(size) {
            cluster_of[row] = cluster;
        }
    }
    Assignment::new(cluster_of, k)
}

fn clamp<T: Scalar>(v: T, lo: T, hi: T) -> T {
    if v < lo {
        lo
    } else if v > hi {
        hi
    } else {
        v
    }
}
