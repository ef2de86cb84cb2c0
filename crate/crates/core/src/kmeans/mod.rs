//! The clustering engine: distance, initialization and Lloyd iteration.
//!
//! Two initialization strategies are provided:
//!
//! * [`InitStrategy::Random`] picks `k` distinct rows uniformly at random from
//!   a seeded stream, the classic way to start k-means.
//! * [`InitStrategy::ImprovedRange`] is fully deterministic. Centroid `j`
//!   (1-based) sits at `min + j * (max - min) / (k + 1)` in every column, the
//!   rows are then split into `k` nearly equal blocks ordered by the column
//!   with the widest range, and one mean update turns the blocks into the
//!   starting centroids before regular Lloyd iteration begins.

mod init;
mod lloyd;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

pub use init::{improved_initial_centroids, initial_partition_assign, random_initial_centroids};
pub use lloyd::{assign_points, run_kmeans, sum_of_squared_errors, update_centroids};

/// Straight-line distance between two points of equal dimension.
pub fn euclidean_distance<T: Real>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(squared_distance(a, b).sqrt())
}

#[inline]
pub(crate) fn squared_distance<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| {
        let d = x - y;
        acc + d * d
    })
}

/// `k` cluster centers of dimension `m`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Centroids<T> {
    values: Vec<T>,
    k: usize,
    m: usize,
}

impl<T: Scalar> Centroids<T> {
    pub fn from_points(points: Vec<Vec<T>>) -> Result<Self> {
        let k = points.len();
        let m = points.first().map_or(0, Vec::len);
        if k == 0 || m == 0 {
            return Err(Error::InvalidConfig("centroids must be non-empty".into()));
        }
        let mut values = Vec::with_capacity(k * m);
        for p in points {
            if p.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: p.len(),
                });
            }
            if !p.iter().all(|v| v.is_finite_value()) {
                return Err(Error::InvalidConfig("centroid has a non-finite value".into()));
            }
            values.extend(p);
        }
        Ok(Self { values, k, m })
    }

    pub(crate) fn from_flat(values: Vec<T>, k: usize, m: usize) -> Self {
        debug_assert_eq!(values.len(), k * m);
        Self { values, k, m }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.values[i * self.m..(i + 1) * self.m]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        self.values.chunks_exact(self.m)
    }

    pub fn to_vecs(&self) -> Vec<Vec<T>> {
        self.points().map(<[T]>::to_vec).collect()
    }

    /// Largest absolute per-coordinate difference between two centroid sets.
    pub fn max_displacement(&self, other: &Self) -> Result<T> {
        if self.k != other.k || self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                found: other.values.len(),
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(T::zero(), |acc, (&a, &b)| {
                let d = if a > b { a - b } else { b - a };
                if d > acc {
                    d
                } else {
                    acc
                }
            }))
    }
}

/// Cluster index of every row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    cluster_of: Vec<usize>,
    k: usize,
}

impl Assignment {
    pub fn new(cluster_of: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&bad) = cluster_of.iter().find(|&&c| c >= k) {
            return Err(Error::Shape(format!("cluster index {bad} not below k = {k}")));
        }
        Ok(Self { cluster_of, k })
    }

    pub fn cluster_of(&self) -> &[usize] {
        &self.cluster_of
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.cluster_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cluster_of.is_empty()
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.cluster_of {
            sizes[c] += 1;
        }
        sizes
    }

    /// Row indices belonging to `cluster`, ascending.
    pub fn members(&self, cluster: usize) -> impl Iterator<Item = usize> + '_ {
        self.cluster_of
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == cluster)
            .map(|(i, _)| i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InitStrategy {
    Random,
    ImprovedRange,
}

impl InitStrategy {
    pub const ALL: [InitStrategy; 2] = [InitStrategy::Random, InitStrategy::ImprovedRange];

    pub fn as_str(self) -> &'static str {
        match self {
            InitStrategy::Random => "random",
            InitStrategy::ImprovedRange => "improved",
        }
    }
}

impl fmt::Display for InitStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InitStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "random" => Ok(InitStrategy::Random),
            "improved" | "improved-range" | "improvedrange" => Ok(InitStrategy::ImprovedRange),
            other => Err(Error::InvalidConfig(format!("unknown init strategy {other:?}"))),
        }
    }
}

pub const DEFAULT_MAX_ITERATIONS: usize = 300;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KMeansConfig {
    pub k: usize,
    pub max_iterations: usize,
    /// Largest per-coordinate centroid move, in data units, that counts as converged.
    pub tolerance: f64,
    pub init_strategy: InitStrategy,
    /// Only read by [`InitStrategy::Random`].
    pub seed: u64,
}

impl KMeansConfig {
    pub fn new(k: usize, init_strategy: InitStrategy) -> Self {
        Self {
            k,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            tolerance: DEFAULT_TOLERANCE,
            init_strategy,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        check_k(self.k, n)?;
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
        }
        if !self.tolerance.is_finite() || self.tolerance < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be a finite non-negative number, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

pub(crate) fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        Err(Error::InvalidK { k, n })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringResult<T> {
    pub assignment: Assignment,
    pub centroids: Centroids<T>,
    /// Sum of squared errors after each update, non-increasing.
    pub sse_trace: Vec<T>,
    pub iterations: usize,
    /// `false` when the iteration cap was hit before the tolerance was met.
    pub converged: bool,
    pub elapsed: Duration,
}

impl<T: Scalar> ClusteringResult<T> {
    pub fn final_sse(&self) -> T {
        self.sse_trace.last().copied().unwrap_or_else(T::zero)
    }
}
