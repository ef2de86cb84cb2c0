use super::{BloodGroup, DonorRecord, EncodedDonors};
use crate::error::{Error, Result};
use crate::kmeans::{squared_distance, ClusteringResult};

#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    pub blood_group: BloodGroup,
    pub location: String,
    pub cluster_id: usize,
    pub cluster_size: usize,
    /// Donors of the selected cluster with exactly the queried group and location.
    pub matched: Vec<DonorRecord>,
}

impl QueryResult {
    pub fn mail_ids(&self) -> impl Iterator<Item = &str> {
        self.matched.iter().map(|r| r.mail_id.as_str())
    }
}

fn median(mut values: Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len().is_multiple_of(2) {
        (values[mid - 1] + values[mid]) / 2.0
    } else {
        values[mid]
    }
}

/// Finds the donors for a blood group and location.
///
/// The query becomes a point in feature space: the group and location codes,
/// and the column median for every other feature. The cluster whose centroid
/// is nearest to that point (lowest index on ties) is selected and its members
/// are filtered on exact group and location. A group that no donor has yields
/// an empty match; a location that no donor has is an error.
pub fn query_donors(
    encoded: &EncodedDonors,
    result: &ClusteringResult<f64>,
    blood_group: BloodGroup,
    location: &str,
) -> Result<QueryResult> {
    let dataset = &encoded.dataset;
    if result.assignment.len() != dataset.n() || result.centroids.m() != dataset.m() {
        return Err(Error::Shape(
            "clustering result was not produced from this donor dataset".into(),
        ));
    }
    let location_code = encoded
        .locations
        .code(location)
        .ok_or_else(|| Error::UnknownLocation(location.to_string()))?;

    let query: Vec<f64> = dataset
        .column_names()
        .iter()
        .enumerate()
        .map(|(j, name)| match name.as_str() {
            "blood_group" => encoded.blood_groups.nearest_code(blood_group.as_str()),
            "location" => location_code as f64,
            _ => median(dataset.column(j).collect()),
        })
        .collect();

    let mut cluster_id = 0;
    let mut best = f64::INFINITY;
    for (i, c) in result.centroids.points().enumerate() {
        let d = squared_distance(&query, c);
        if d < best {
            best = d;
            cluster_id = i;
        }
    }

    let members: Vec<usize> = result.assignment.members(cluster_id).collect();
    let matched = members
        .iter()
        .map(|&i| &encoded.records[i])
        .filter(|r| r.blood_group == blood_group && r.location == location)
        .cloned()
        .collect();
    Ok(QueryResult {
        blood_group,
        location: location.to_string(),
        cluster_id,
        cluster_size: members.len(),
        matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::donor::encode_donors;
    use crate::kmeans::{run_kmeans, InitStrategy, KMeansConfig};

    fn donor(id: usize, group: BloodGroup, location: &str, age: u32) -> DonorRecord {
        DonorRecord {
            donor_id: format!("D{id}"),
            name: format!("Donor {id}"),
            age,
            blood_group: group,
            location: location.into(),
            mail_id: format!("d{id}@example.org"),
        }
    }

    fn fixture() -> Vec<DonorRecord> {
        let mut records = Vec::new();
        for i in 0..12 {
            records.push(donor(i, BloodGroup::APos, "Chennai", 20 + (i % 5) as u32));
        }
        for i in 12..24 {
            records.push(donor(i, BloodGroup::BPos, "Pune", 60 + (i % 5) as u32));
        }
        for i in 24..28 {
            records.push(donor(i, BloodGroup::ONeg, "Visakhapatnam", 41 + (i % 3) as u32));
        }
        records
    }

    #[test]
    fn tight_cohort_is_returned_exactly() {
        let enc = encode_donors(&fixture()).unwrap();
        let result = run_kmeans(&enc.dataset, &KMeansConfig::new(3, InitStrategy::ImprovedRange))
            .unwrap();
        let q = query_donors(&enc, &result, BloodGroup::ONeg, "Visakhapatnam").unwrap();
        let ids: Vec<&str> = q.matched.iter().map(|r| r.donor_id.as_str()).collect();
        assert_eq!(ids, vec!["D24", "D25", "D26", "D27"]);
        assert!(q.cluster_size >= 4);
    }

    #[test]
    fn absent_pair_is_empty_not_error() {
        let enc = encode_donors(&fixture()).unwrap();
        let result = run_kmeans(&enc.dataset, &KMeansConfig::new(2, InitStrategy::ImprovedRange))
            .unwrap();
        let q = query_donors(&enc, &result, BloodGroup::ONeg, "Chennai").unwrap();
        assert!(q.matched.is_empty());
        let q = query_donors(&enc, &result, BloodGroup::AbNeg, "Pune").unwrap();
        assert!(q.matched.is_empty());
    }

    #[test]
    fn unknown_location_is_an_error() {
        let enc = encode_donors(&fixture()).unwrap();
        let result = run_kmeans(&enc.dataset, &KMeansConfig::new(2, InitStrategy::ImprovedRange))
            .unwrap();
        let err = query_donors(&enc, &result, BloodGroup::APos, "Atlantis").unwrap_err();
        assert!(matches!(err, Error::UnknownLocation(l) if l == "Atlantis"));
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
