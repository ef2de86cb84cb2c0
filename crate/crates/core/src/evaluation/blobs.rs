use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::LabeledDataset;
use crate::dataset::NumericDataset;
use crate::error::{Error, Result};

/// Parameters for [`generate_blobs`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlobSpec {
    pub cluster_count: usize,
    pub points_per_cluster: usize,
    pub dimension: usize,
    /// Distance between neighbouring blob centers along every axis.
    pub center_spread: f64,
    pub noise_stddev: f64,
    pub seed: u64,
}

impl BlobSpec {
    pub fn validate(&self) -> Result<()> {
        if self.cluster_count == 0 || self.points_per_cluster == 0 || self.dimension == 0 {
            return Err(Error::InvalidConfig(
                "blob counts and dimension must be at least 1".into(),
            ));
        }
        if !self.center_spread.is_finite() || self.center_spread <= 0.0 {
            return Err(Error::InvalidConfig("center_spread must be positive".into()));
        }
        if !self.noise_stddev.is_finite() || self.noise_stddev < 0.0 {
            return Err(Error::InvalidConfig("noise_stddev must be non-negative".into()));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.cluster_count * self.points_per_cluster
    }
}

/// Isotropic Gaussian blobs.
///
/// Blob `i` is centered at `i * center_spread` in every coordinate, so the
/// centers lie on the main diagonal. Each point adds independent normal noise
/// with standard deviation `noise_stddev` per coordinate and carries its blob
/// index as label. Rows are shuffled; the output depends only on `spec`.
pub fn generate_blobs(spec: &BlobSpec) -> Result<LabeledDataset<f64>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let noise = Normal::new(0.0, spec.noise_stddev)
        .map_err(|e| Error::InvalidConfig(format!("noise distribution: {e}")))?;

    let mut rows = Vec::with_capacity(spec.n());
    for blob in 0..spec.cluster_count {
        let center = blob as f64 * spec.center_spread;
        for _ in 0..spec.points_per_cluster {
            let point: Vec<f64> = (0..spec.dimension)
                .map(|_| {
                    if spec.noise_stddev == 0.0 {
                        center
                    } else {
                        center + noise.sample(&mut rng)
                    }
                })
                .collect();
            rows.push((point, blob));
        }
    }
    rows.shuffle(&mut rng);

    let (points, labels): (Vec<_>, Vec<_>) = rows
        .into_iter()
        .map(|(p, blob)| (p, blob.to_string()))
        .unzip();
    let data = NumericDataset::from_rows(points)?;
    LabeledDataset::new(format!("blobs-{}", spec.n()), data, labels)
}
