//! k-means clustering with deterministic range-based initial centroids.
//!
//! The crate has three layers:
//!
//! * [`kmeans`]: distance, both initialization strategies and Lloyd iteration,
//!   generic over the scalar type.
//! * [`evaluation`]: purity scoring, synthetic blob data and a benchmark
//!   harness comparing the two strategies.
//! * [`donor`]: loading blood donor records, encoding them for clustering,
//!   answering blood-group/location queries and writing notification files.
//!
//! The [`cli`] module backs the `donor-kmeans` binary.

pub mod cli;
pub mod dataset;
pub mod donor;
pub mod error;
pub mod evaluation;
pub mod io;
pub mod kmeans;
pub mod scalar;

pub use dataset::{ColumnRange, NumericDataset};
pub use error::{Error, Result};
pub use kmeans::{
    assign_points, euclidean_distance, improved_initial_centroids, initial_partition_assign,
    random_initial_centroids, run_kmeans, update_centroids, Assignment, Centroids,
    ClusteringResult, InitStrategy, KMeansConfig,
};
pub use scalar::{Real, Scalar};

/// Exact rational scalar, usable with the range and partition operations.
pub type Rational = num_rational::Ratio<i64>;

pub type Dataset = NumericDataset<f64>;
pub type Dataset32 = NumericDataset<f32>;
pub type ExactDataset = NumericDataset<Rational>;

pub type Points = Centroids<f64>;
pub type Points32 = Centroids<f32>;

pub type KMeansResult = ClusteringResult<f64>;
pub type KMeansResult32 = ClusteringResult<f32>;
