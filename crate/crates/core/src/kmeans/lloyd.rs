use std::time::Instant;

use super::{
    improved_initial_centroids, initial_partition_assign, random_initial_centroids,
    squared_distance, Assignment, Centroids, ClusteringResult, InitStrategy, KMeansConfig,
};
use crate::dataset::NumericDataset;
use crate::error::{Error, Result};
use crate::scalar::{from_count, Real, Scalar};

fn check_dims<T>(dataset: &NumericDataset<T>, centroids: &Centroids<T>) -> Result<()>
where
    T: Scalar,
{
    if centroids.m() != dataset.m() {
        return Err(Error::DimensionMismatch {
            expected: dataset.m(),
            found: centroids.m(),
        });
    }
    Ok(())
}

fn nearest<T: Real>(point: &[T], centroids: &Centroids<T>) -> usize {
    let mut best = 0;
    let mut best_dist = T::infinity();
    for (i, c) in centroids.points().enumerate() {
        let d = squared_distance(point, c);
        // strict comparison keeps the lowest index on ties
        if d < best_dist {
            best = i;
            best_dist = d;
        }
    }
    best
}

/// Nearest-centroid assignment. Distance ties go to the lowest centroid index.
pub fn assign_points<T: Real>(
    dataset: &NumericDataset<T>,
    centroids: &Centroids<T>,
) -> Result<Assignment> {
    check_dims(dataset, centroids)?;
    let cluster_of = dataset.rows().map(|r| nearest(r, centroids)).collect();
    Assignment::new(cluster_of, centroids.k())
}

/// Recomputes every centroid as the mean of its rows.
///
/// An empty cluster takes the row farthest from its previous centroid, skipping
/// rows that are the only member of their cluster and rows already used to
/// reseed another empty cluster in this call.
pub fn update_centroids<T: Real>(
    dataset: &NumericDataset<T>,
    assignment: &Assignment,
    k: usize,
    previous: &Centroids<T>,
) -> Result<Centroids<T>> {
    let (n, m) = (dataset.n(), dataset.m());
    if assignment.len() != n {
        return Err(Error::Shape(format!(
            "assignment has {} entries for {n} rows",
            assignment.len()
        )));
    }
    if assignment.k() > k {
        return Err(Error::Shape(format!(
            "assignment uses k = {} but k = {k} was requested",
            assignment.k()
        )));
    }
    check_dims(dataset, previous)?;
    if previous.k() != k {
        return Err(Error::Shape(format!(
            "previous centroids have k = {}, expected {k}",
            previous.k()
        )));
    }

    let mut sums = vec![T::zero(); k * m];
    let mut lo = vec![T::infinity(); k * m];
    let mut hi = vec![T::neg_infinity(); k * m];
    let mut counts = vec![0usize; k];
    for (row, &c) in dataset.rows().zip(assignment.cluster_of()) {
        counts[c] += 1;
        let span = c * m..(c + 1) * m;
        for (((s, l), h), &v) in sums[span.clone()]
            .iter_mut()
            .zip(&mut lo[span.clone()])
            .zip(&mut hi[span])
            .zip(row)
        {
            *s = *s + v;
            *l = l.min(v);
            *h = h.max(v);
        }
    }

    let mut values = vec![T::zero(); k * m];
    for c in (0..k).filter(|&c| counts[c] > 0) {
        let count: T = from_count(counts[c]);
        for j in c * m..(c + 1) * m {
            // the mean of values in [lo, hi] can round just past either end
            values[j] = (sums[j] / count).max(lo[j]).min(hi[j]);
        }
    }

    let mut used = vec![false; n];
    let mut remaining = counts.clone();
    for c in (0..k).filter(|&c| counts[c] == 0) {
        let prev = previous.point(c);
        let farthest = |skip_sole_members: bool| {
            let mut pick: Option<(usize, T)> = None;
            for (i, row) in dataset.rows().enumerate() {
                let owner = assignment.cluster_of()[i];
                if used[i] || (skip_sole_members && remaining[owner] <= 1) {
                    continue;
                }
                let d = squared_distance(row, prev);
                if pick.is_none_or(|(_, best)| d > best) {
                    pick = Some((i, d));
                }
            }
            pick
        };
        // every row is alone only when k exceeds n; then any unused row will do
        let pick = farthest(true).or_else(|| farthest(false));
        let target = &mut values[c * m..(c + 1) * m];
        match pick {
            Some((i, _)) => {
                used[i] = true;
                let owner = &mut remaining[assignment.cluster_of()[i]];
                *owner = owner.saturating_sub(1);
                target.copy_from_slice(dataset.row(i));
            }
            None => target.copy_from_slice(prev),
        }
    }

    Ok(Centroids::from_flat(values, k, m))
}

/// Sum over rows of the squared distance to the assigned centroid.
pub fn sum_of_squared_errors<T: Real>(
    dataset: &NumericDataset<T>,
    assignment: &Assignment,
    centroids: &Centroids<T>,
) -> Result<T> {
    check_dims(dataset, centroids)?;
    if assignment.len() != dataset.n() || assignment.k() > centroids.k() {
        return Err(Error::Shape("assignment does not match dataset and centroids".into()));
    }
    Ok(dataset
        .rows()
        .zip(assignment.cluster_of())
        .fold(T::zero(), |acc, (row, &c)| {
            acc + squared_distance(row, centroids.point(c))
        }))
}

/// Runs k-means to convergence.
///
/// With [`InitStrategy::ImprovedRange`] the range-based centroids are computed
/// first, the rows are pre-assigned to `k` ordered blocks and one mean update
/// produces the starting centroids. With [`InitStrategy::Random`] the starting
/// centroids are `k` seeded random rows. Both then alternate nearest-centroid
/// assignment and mean updates until no coordinate moves more than
/// `config.tolerance` or `config.max_iterations` is reached.
///
/// The returned assignment is always the nearest-centroid assignment for the
/// returned centroids.
pub fn run_kmeans<T: Real>(
    dataset: &NumericDataset<T>,
    config: &KMeansConfig,
) -> Result<ClusteringResult<T>> {
    config.validate(dataset.n())?;
    let k = config.k;
    let tolerance = T::from_f64(config.tolerance)
        .ok_or_else(|| Error::InvalidConfig("tolerance not representable".into()))?;

    let start = Instant::now();
    let mut sse_trace = Vec::new();
    let mut centroids = match config.init_strategy {
        InitStrategy::Random => random_initial_centroids(dataset, k, config.seed)?,
        InitStrategy::ImprovedRange => {
            let seeds = improved_initial_centroids(dataset, k)?;
            let blocks = initial_partition_assign(dataset, k)?;
            let centroids = update_centroids(dataset, &blocks, k, &seeds)?;
            sse_trace.push(sum_of_squared_errors(dataset, &blocks, &centroids)?);
            centroids
        }
    };

    let mut assignment = assign_points(dataset, &centroids)?;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < config.max_iterations {
        iterations += 1;
        let next = update_centroids(dataset, &assignment, k, &centroids)?;
        sse_trace.push(sum_of_squared_errors(dataset, &assignment, &next)?);
        let shift = centroids.max_displacement(&next)?;
        centroids = next;
        let reassigned = assign_points(dataset, &centroids)?;
        let stable = reassigned == assignment;
        assignment = reassigned;
        if shift <= tolerance {
            converged = true;
            if !stable {
                // stopped on the tolerance with a few rows changing sides
                sse_trace.push(sum_of_squared_errors(dataset, &assignment, &centroids)?);
            }
            break;
        }
    }
    if !converged {
        let last = sum_of_squared_errors(dataset, &assignment, &centroids)?;
        if sse_trace.last().is_none_or(|&prev| last < prev) {
            sse_trace.push(last);
        }
    }

    Ok(ClusteringResult {
        assignment,
        centroids,
        sse_trace,
        iterations,
        converged,
        elapsed: start.elapsed(),
    })
}
