//! Accuracy and timing comparison of the initialization strategies.

mod benchmark;
mod blobs;
mod purity;
mod report;

pub use benchmark::{run_benchmark, BenchmarkReport, BenchmarkRow};
pub use blobs::{generate_blobs, BlobSpec};
pub use purity::{assignment_purity, purity_accuracy};
pub use report::{emit_report, parse_report, ReportFormat, REPORT_HEADER};

use crate::dataset::NumericDataset;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dataset with one ground-truth category per row.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset<T> {
    pub name: String,
    pub data: NumericDataset<T>,
    pub labels: Vec<String>,
}

impl<T: Scalar> LabeledDataset<T> {
    pub fn new(
        name: impl Into<String>,
        data: NumericDataset<T>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if labels.len() != data.n() {
            return Err(Error::Shape(format!(
                "{} labels for {} rows",
                labels.len(),
                data.n()
            )));
        }
        Ok(Self {
            name: name.into(),
            data,
            labels,
        })
    }
}
