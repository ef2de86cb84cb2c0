use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::kmeans::{Assignment, ClusteringResult};

/// Weighted cluster purity in percent.
///
/// For every cluster, count the rows carrying its most frequent label; the
/// score is `100 * sum(majority counts) / n`.
pub fn assignment_purity<S: AsRef<str>>(assignment: &Assignment, labels: &[S]) -> Result<f64> {
    if labels.len() != assignment.len() {
        return Err(Error::Shape(format!(
            "{} labels for {} assigned rows",
            labels.len(),
            assignment.len()
        )));
    }
    if labels.is_empty() {
        return Err(Error::Shape("purity of an empty assignment".into()));
    }
    let mut counts: HashMap<(usize, &str), usize> = HashMap::new();
    for (&c, label) in assignment.cluster_of().iter().zip(labels) {
        *counts.entry((c, label.as_ref())).or_default() += 1;
    }
    let mut majority = vec![0usize; assignment.k()];
    for ((c, _), count) in counts {
        majority[c] = majority[c].max(count);
    }
    let correct: usize = majority.iter().sum();
    Ok(100.0 * correct as f64 / labels.len() as f64)
}

pub fn purity_accuracy<T, S: AsRef<str>>(result: &ClusteringResult<T>, labels: &[S]) -> Result<f64> {
    assignment_purity(&result.assignment, labels)
}
