use super::DonorRecord;
use crate::dataset::NumericDataset;
use crate::error::{Error, Result};

/// Feature columns of an encoded donor dataset, in order.
pub const DONOR_FEATURES: [&str; 3] = ["age", "blood_group", "location"];

/// Ordinal codes for one categorical column: the code of a category is its
/// position in the sorted list of distinct values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryEncoding {
    pub column: String,
    categories: Vec<String>,
}

impl CategoryEncoding {
    pub fn from_values<'a>(column: &str, values: impl IntoIterator<Item = &'a str>) -> Self {
        let mut categories: Vec<String> = values.into_iter().map(str::to_string).collect();
        categories.sort_unstable();
        categories.dedup();
        Self {
            column: column.to_string(),
            categories,
        }
    }

    pub fn code(&self, category: &str) -> Option<usize> {
        self.categories
            .binary_search_by(|c| c.as_str().cmp(category))
            .ok()
    }

    pub fn decode(&self, code: usize) -> Option<&str> {
        self.categories.get(code).map(String::as_str)
    }

    pub fn categories(&self) -> &[String] {
        &self.categories
    }

    /// Position `category` would take among the sorted categories, minus one half
    /// when it is absent, clamped to the code range.
    pub(crate) fn nearest_code(&self, category: &str) -> f64 {
        match self.categories.binary_search_by(|c| c.as_str().cmp(category)) {
            Ok(code) => code as f64,
            Err(pos) => (pos as f64 - 0.5).clamp(0.0, (self.categories.len() - 1) as f64),
        }
    }
}

/// Donor records with their numeric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedDonors {
    pub dataset: NumericDataset<f64>,
    pub records: Vec<DonorRecord>,
    pub blood_groups: CategoryEncoding,
    pub locations: CategoryEncoding,
}

impl EncodedDonors {
    pub fn encoding(&self, column: &str) -> Option<&CategoryEncoding> {
        [&self.blood_groups, &self.locations]
            .into_iter()
            .find(|e| e.column == column)
    }

    /// Original categories of row `i`, read back from its codes.
    pub fn decode_row(&self, i: usize) -> Option<(&str, &str)> {
        let row = self.dataset.row(i);
        let group = self.blood_groups.decode(row[1] as usize)?;
        let location = self.locations.decode(row[2] as usize)?;
        Some((group, location))
    }
}

/// Age passes through; blood group and location become ordinal codes over the
/// categories present in `records`.
pub fn encode_donors(records: &[DonorRecord]) -> Result<EncodedDonors> {
    if records.is_empty() {
        return Err(Error::InvalidDataset("no donor records to encode".into()));
    }
    let blood_groups =
        CategoryEncoding::from_values("blood_group", records.iter().map(|r| r.blood_group.as_str()));
    let locations =
        CategoryEncoding::from_values("location", records.iter().map(|r| r.location.as_str()));

    let rows = records
        .iter()
        .map(|r| {
            let group = blood_groups.code(r.blood_group.as_str()).expect("group was collected");
            let location = locations.code(&r.location).expect("location was collected");
            vec![f64::from(r.age), group as f64, location as f64]
        })
        .collect();
    let names = DONOR_FEATURES.iter().map(|s| s.to_string()).collect();
    Ok(EncodedDonors {
        dataset: NumericDataset::new(rows, names)?,
        records: records.to_vec(),
        blood_groups,
        locations,
    })
}
