//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use donor_kmeans::donor::{BloodGroup, DonorRecord};
use donor_kmeans::Dataset;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_dataset(rng: &mut ChaCha8Rng, n: usize, m: usize, scale: f64) -> Dataset {
    let rows = (0..n)
        .map(|_| (0..m).map(|_| rng.random_range(-scale..scale)).collect())
        .collect();
    Dataset::from_rows(rows).unwrap()
}

fn sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Index of the nearest centroid by scanning every distance; first minimum wins.
pub fn brute_force_nearest(point: &[f64], centroids: &[Vec<f64>]) -> usize {
    let dists: Vec<f64> = centroids.iter().map(|c| sq(point, c).sqrt()).collect();
    let min = dists.iter().cloned().fold(f64::INFINITY, f64::min);
    dists.iter().position(|&d| d == min).unwrap()
}

/// SSE of a partition when every part is represented by its own mean.
pub fn partition_sse(rows: &[Vec<f64>], labels: &[usize], k: usize) -> f64 {
    let m = rows[0].len();
    let mut total = 0.0;
    for c in 0..k {
        let members: Vec<&Vec<f64>> = rows
            .iter()
            .zip(labels)
            .filter(|(_, &l)| l == c)
            .map(|(r, _)| r)
            .collect();
        if members.is_empty() {
            continue;
        }
        let mean: Vec<f64> = (0..m)
            .map(|j| members.iter().map(|r| r[j]).sum::<f64>() / members.len() as f64)
            .collect();
        total += members.iter().map(|r| sq(r, &mean)).sum::<f64>();
    }
    total
}

/// Every split of the rows into two non-empty parts, with its SSE, by
/// enumerating bitmasks. Row 0 is pinned to part 0 to skip mirror images.
pub fn all_two_partitions(rows: &[Vec<f64>]) -> Vec<(Vec<usize>, f64)> {
    let n = rows.len();
    assert!((2..=16).contains(&n));
    (1u32..(1 << (n - 1)))
        .map(|mask| {
            let labels: Vec<usize> = (0..n)
                .map(|i| if i > 0 && mask & (1 << (i - 1)) != 0 { 1 } else { 0 })
                .collect();
            let sse = partition_sse(rows, &labels, 2);
            (labels, sse)
        })
        .collect()
}

pub fn optimal_two_partition_sse(rows: &[Vec<f64>]) -> f64 {
    all_two_partitions(rows)
        .into_iter()
        .map(|(_, s)| s)
        .fold(f64::INFINITY, f64::min)
}

/// Majority-count purity computed with nested loops over labels.
pub fn brute_force_purity(clusters: &[usize], labels: &[String]) -> f64 {
    let k = clusters.iter().max().map_or(0, |m| m + 1);
    let mut correct = 0;
    for c in 0..k {
        let mut best = 0;
        for candidate in labels {
            let count = clusters
                .iter()
                .zip(labels)
                .filter(|(&cc, l)| cc == c && *l == candidate)
                .count();
            best = best.max(count);
        }
        correct += best;
    }
    100.0 * correct as f64 / labels.len() as f64
}

/// Donors with the given group and location, by a full scan.
pub fn linear_scan<'a>(
    records: &'a [DonorRecord],
    group: BloodGroup,
    location: &str,
) -> Vec<&'a DonorRecord> {
    records
        .iter()
        .filter(|r| r.blood_group == group && r.location == location)
        .collect()
}

const CITIES: [&str; 5] = ["Hyderabad", "Chennai", "Vijayawada", "Guntur", "Visakhapatnam"];

/// `others` young (18-30) and senior (55-65) donors over every group and the
/// cities other than `location`, followed by a cohort of `cohort` donors of
/// `group` in `location` aged 40-44 that no other donor resembles.
pub fn cohort_fixture(
    group: BloodGroup,
    location: &str,
    cohort: usize,
    others: usize,
    seed: u64,
) -> Vec<DonorRecord> {
    let cities: Vec<&str> = CITIES.iter().copied().filter(|c| *c != location).collect();
    let mut r = rng(seed);
    let mut records = Vec::new();
    for i in 0..others {
        let age = if i % 2 == 0 {
            r.random_range(18..=30)
        } else {
            r.random_range(55..=65)
        };
        let g = BloodGroup::ALL[r.random_range(0..8)];
        let city = cities[r.random_range(0..cities.len())];
        records.push(donor(i, g, city, age));
    }
    for i in others..others + cohort {
        records.push(donor(i, group, location, 40 + (i % 5) as u32));
    }
    records
}

/// 200 donors with a cohort of 7 O- donors in Visakhapatnam.
pub fn donor_fixture_200() -> Vec<DonorRecord> {
    cohort_fixture(BloodGroup::ONeg, "Visakhapatnam", 7, 193, 2024)
}

pub fn donor(i: usize, group: BloodGroup, location: &str, age: u32) -> DonorRecord {
    DonorRecord {
        donor_id: format!("D{i:03}"),
        name: format!("Donor{i}"),
        age,
        blood_group: group,
        location: location.to_string(),
        mail_id: format!("donor{i}@bloodbank.example"),
    }
}
