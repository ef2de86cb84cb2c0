//! Delimited text files: numeric datasets in, assignments and centroids out.
//!
//! All formats are plain comma-separated UTF-8 with a header line. Quoting is
//! not supported; a `"` anywhere in a field is rejected.

use std::fs;
use std::io::Write;
use std::path::Path;

use tempfile::NamedTempFile;

use crate::dataset::NumericDataset;
use crate::error::{Error, Result};
use crate::kmeans::{Assignment, Centroids};
use crate::scalar::Scalar;

pub const ASSIGNMENT_HEADER: &str = "row_index,cluster_id";

/// Splits one line into trimmed fields, rejecting quoted input.
pub(crate) fn split_fields(line: &str, lineno: usize) -> Result<Vec<&str>> {
    if line.contains('"') {
        return Err(Error::parse(lineno, "quoted fields are not supported"));
    }
    Ok(line.split(',').map(str::trim).collect())
}

/// Data lines of a delimited text, 1-based line numbers, blank lines skipped.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .skip(1)
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty())
}

pub(crate) fn header_line(text: &str) -> Option<&str> {
    text.lines().next().map(|l| l.trim_end_matches('\r').trim_start_matches('\u{feff}'))
}

/// Parses a header of column names followed by rows of numbers.
pub fn parse_numeric_dataset(text: &str) -> Result<NumericDataset<f64>> {
    let header = header_line(text).ok_or_else(|| Error::parse(1, "empty input"))?;
    let names: Vec<String> = split_fields(header, 1)?
        .into_iter()
        .map(str::to_string)
        .collect();
    if names.iter().any(String::is_empty) {
        return Err(Error::parse(1, "empty column name in header"));
    }
    let m = names.len();
    let mut rows = Vec::new();
    for (lineno, line) in data_lines(text) {
        let fields = split_fields(line, lineno)?;
        if fields.len() != m {
            return Err(Error::parse(
                lineno,
                format!("expected {m} fields, found {}", fields.len()),
            ));
        }
        let row = fields
            .iter()
            .enumerate()
            .map(|(j, f)| {
                let v: f64 = f
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("column {:?}: not a number: {f:?}", names[j])))?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::parse(lineno, format!("column {:?}: non-finite value", names[j])))
                }
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse(1, "no data rows"));
    }
    NumericDataset::new(rows, names)
}

pub fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn read_numeric_dataset(path: &Path) -> Result<NumericDataset<f64>> {
    parse_numeric_dataset(&read_to_string(path)?).map_err(|e| e.with_source_name(path))
}

pub fn format_assignment(assignment: &Assignment) -> String {
    let mut out = String::with_capacity(16 * assignment.len());
    out.push_str(ASSIGNMENT_HEADER);
    out.push('\n');
    for (i, c) in assignment.cluster_of().iter().enumerate() {
        out.push_str(&format!("{i},{c}\n"));
    }
    out
}

pub fn format_centroids<T: Scalar>(centroids: &Centroids<T>, column_names: &[String]) -> String {
    let mut out = String::from("cluster_id");
    for name in column_names {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for (i, p) in centroids.points().enumerate() {
        out.push_str(&i.to_string());
        for v in p {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}

/// Writes `contents` to a temporary file next to `path`, then renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(contents).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numeric_file() {
        let ds = parse_numeric_dataset("a,b\n1,2\n\n3.5,-4e1\n").unwrap();
        assert_eq!(ds.n(), 2);
        assert_eq!(ds.column_names(), &["a", "b"]);
        assert_eq!(ds.row(1), &[3.5, -40.0]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_numeric_dataset("a,b\n1,2\n3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_numeric_dataset("a\n1\nx\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_numeric_dataset("a\n\"1\"\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_numeric_dataset("a\nNaN\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_numeric_dataset("a\n").is_err());
        assert!(parse_numeric_dataset("").is_err());
    }

    #[test]
    fn output_formats() {
        let a = Assignment::new(vec![1, 0], 2).unwrap();
        assert_eq!(format_assignment(&a), "row_index,cluster_id\n0,1\n1,0\n");
        let c = Centroids::from_points(vec![vec![0.0, 0.5], vec![10.0, 0.5]]).unwrap();
        assert_eq!(
            format_centroids(&c, &["x".into(), "y".into()]),
            "cluster_id,x,y\n0,0,0.5\n1,10,0.5\n"
        );
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, b"one").unwrap();
        write_atomic(&path, b"two").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "two");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
