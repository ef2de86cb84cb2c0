use std::time::Duration;

use super::{purity_accuracy, LabeledDataset};
use crate::error::{Error, Result};
use crate::kmeans::{check_k, run_kmeans, InitStrategy, KMeansConfig};
use crate::scalar::Real;

/// Averages over the repeats of one (dataset, strategy) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkRow {
    pub dataset_name: String,
    pub n: usize,
    pub strategy: InitStrategy,
    pub accuracy_percent: f64,
    pub elapsed: Duration,
    pub iterations: f64,
    pub final_sse: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchmarkReport {
    pub rows: Vec<BenchmarkRow>,
}

impl BenchmarkReport {
    pub fn row(&self, dataset_name: &str, strategy: InitStrategy) -> Option<&BenchmarkRow> {
        self.rows
            .iter()
            .find(|r| r.dataset_name == dataset_name && r.strategy == strategy)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed used for one repeat of a random-initialized run.
pub(crate) fn repeat_seed(seed: u64, dataset: usize, repeat: usize) -> u64 {
    splitmix64(splitmix64(seed ^ dataset as u64).wrapping_add(repeat as u64))
}

/// Runs every strategy `repeats` times on every dataset.
///
/// Random runs get a distinct derived seed per repeat. Rows come out ordered by
/// dataset, then by the order of `strategies`. Elapsed time covers
/// `run_kmeans` only.
pub fn run_benchmark<T: Real>(
    datasets: &[LabeledDataset<T>],
    k: usize,
    strategies: &[InitStrategy],
    repeats: usize,
    seed: u64,
) -> Result<BenchmarkReport> {
    if repeats == 0 {
        return Err(Error::InvalidConfig("repeats must be at least 1".into()));
    }
    for ds in datasets {
        check_k(k, ds.data.n())?;
    }

    let mut rows = Vec::with_capacity(datasets.len() * strategies.len());
    for (d, ds) in datasets.iter().enumerate() {
        for &strategy in strategies {
            let mut accuracy = 0.0;
            let mut elapsed = Duration::ZERO;
            let mut iterations = 0usize;
            let mut sse = 0.0;
            for repeat in 0..repeats {
                let config = KMeansConfig::new(k, strategy).with_seed(repeat_seed(seed, d, repeat));
                let result = run_kmeans(&ds.data, &config)?;
                accuracy += purity_accuracy(&result, &ds.labels)?;
                elapsed += result.elapsed;
                iterations += result.iterations;
                sse += result.final_sse().to_f64().unwrap_or(f64::NAN);
            }
            let r = repeats as f64;
            rows.push(BenchmarkRow {
                dataset_name: ds.name.clone(),
                n: ds.data.n(),
                strategy,
                accuracy_percent: accuracy / r,
                elapsed: elapsed / repeats as u32,
                iterations: iterations as f64 / r,
                final_sse: sse / r,
            });
        }
    }
    Ok(BenchmarkReport { rows })
}
