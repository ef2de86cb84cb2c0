//! Row-major numeric dataset and per-column statistics.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An `n x m` matrix of finite values with one label per column.
///
/// Immutable after construction; every row has the same length and the
/// dataset is never empty.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericDataset<T> {
    values: Vec<T>,
    column_names: Vec<String>,
    n: usize,
    m: usize,
}

/// Minimum, maximum and spread of one column.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColumnRange<T> {
    pub min: T,
    pub max: T,
    pub range: T,
}

impl<T: Scalar> NumericDataset<T> {
    pub fn new(rows: Vec<Vec<T>>, column_names: Vec<String>) -> Result<Self> {
        let m = column_names.len();
        if m == 0 {
            return Err(Error::InvalidDataset("dataset needs at least one column".into()));
        }
        if rows.is_empty() {
            return Err(Error::InvalidDataset("dataset needs at least one row".into()));
        }
        let n = rows.len();
        let mut values = Vec::with_capacity(n * m);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidDataset(format!(
                    "row {i} has {} values, expected {m}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|v| !v.is_finite_value()) {
                return Err(Error::InvalidDataset(format!(
                    "row {i}, column {j}: non-finite value"
                )));
            }
            values.extend(row);
        }
        Ok(Self {
            values,
            column_names,
            n,
            m,
        })
    }

    /// Builds a dataset with generated column names `x0, x1, ...`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.first().map_or(0, Vec::len);
        let names = (0..m).map(|j| format!("x{j}")).collect();
        Self::new(rows, names)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn column_names(&self) -> &[String] {
        &self.column_names
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.values[i * self.m..(i + 1) * self.m]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        self.values.chunks_exact(self.m)
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = T> + '_ {
        self.values.iter().skip(col).step_by(self.m).copied()
    }

    /// Returns a copy with `offset` added to every row.
    pub fn translated(&self, offset: &[T]) -> Result<Self> {
        if offset.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: offset.len(),
            });
        }
        let rows = self
            .rows()
            .map(|r| r.iter().zip(offset).map(|(&v, &o)| v + o).collect())
            .collect();
        Self::new(rows, self.column_names.clone())
    }

    pub fn column_range(&self, col: usize) -> Result<ColumnRange<T>> {
        if col >= self.m {
            return Err(Error::ColumnOutOfBounds {
                index: col,
                columns: self.m,
            });
        }
        let mut values = self.column(col);
        // n >= 1 by construction
        let first = values.next().expect("dataset has at least one row");
        let (min, max) = values.fold((first, first), |(lo, hi), v| {
            (if v < lo { v } else { lo }, if v > hi { v } else { hi })
        });
        Ok(ColumnRange {
            min,
            max,
            range: max - min,
        })
    }

    /// Ranges of every column, in column order.
    pub fn column_ranges(&self) -> Vec<ColumnRange<T>> {
        (0..self.m)
            .map(|j| self.column_range(j).expect("index in bounds"))
            .collect()
    }

    /// Index of the column with the largest range. Ties go to the lowest index.
    pub fn max_range_column(&self) -> usize {
        let ranges = self.column_ranges();
        let mut best = 0;
        for (j, r) in ranges.iter().enumerate().skip(1) {
            if r.range > ranges[best].range {
                best = j;
            }
        }
        best
    }
}
