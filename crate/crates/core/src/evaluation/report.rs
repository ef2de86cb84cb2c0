use std::fmt::Write;
use std::str::FromStr;
use std::time::Duration;

use super::{BenchmarkReport, BenchmarkRow};
use crate::error::{Error, Result};
use crate::kmeans::InitStrategy;

pub const REPORT_HEADER: &str = "dataset,n,strategy,accuracy_percent,elapsed_ms,iterations,final_sse";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// Aligned, human-readable columns.
    Table,
    /// Comma-delimited with a header row.
    Delimited,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" | "table-text" | "text" => Ok(ReportFormat::Table),
            "csv" | "delimited" | "delimited-values" => Ok(ReportFormat::Delimited),
            other => Err(Error::InvalidConfig(format!("unknown report format {other:?}"))),
        }
    }
}

fn fields(row: &BenchmarkRow) -> [String; 7] {
    [
        row.dataset_name.clone(),
        row.n.to_string(),
        row.strategy.to_string(),
        format!("{:.4}", row.accuracy_percent),
        format!("{:.3}", row.elapsed.as_secs_f64() * 1e3),
        format!("{:.2}", row.iterations),
        format!("{:.6}", row.final_sse),
    ]
}

/// Renders a report with columns in a fixed order; see [`REPORT_HEADER`].
pub fn emit_report(report: &BenchmarkReport, format: ReportFormat) -> String {
    let header: Vec<&str> = REPORT_HEADER.split(',').collect();
    let body: Vec<[String; 7]> = report.rows.iter().map(fields).collect();
    let mut out = String::new();
    match format {
        ReportFormat::Delimited => {
            out.push_str(REPORT_HEADER);
            out.push('\n');
            for row in &body {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        ReportFormat::Table => {
            let widths: Vec<usize> = (0..header.len())
                .map(|j| body.iter().map(|r| r[j].len()).fold(header[j].len(), usize::max))
                .collect();
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .enumerate()
                    .map(|(j, (c, &w))| {
                        if j == 0 || j == 2 {
                            format!("{c:<w$}")
                        } else {
                            format!("{c:>w$}")
                        }
                    })
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(header.clone())).unwrap();
            for row in &body {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
            }
        }
    }
    out
}

/// Reads back the delimited form written by [`emit_report`].
pub fn parse_report(text: &str) -> Result<BenchmarkReport> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == REPORT_HEADER => {}
        _ => return Err(Error::parse(1, format!("expected header `{REPORT_HEADER}`"))),
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 7 {
            return Err(Error::parse(lineno, format!("expected 7 fields, found {}", cells.len())));
        }
        let num = |j: usize| -> Result<f64> {
            cells[j]
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::parse(lineno, format!("field {}: {e}", j + 1)))
        };
        let n = cells[1]
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::parse(lineno, format!("field 2: {e}")))?;
        let strategy = cells[2]
            .parse::<InitStrategy>()
            .map_err(|e| Error::parse(lineno, e.to_string()))?;
        let elapsed_ms = num(4)?;
        if elapsed_ms.is_nan() || elapsed_ms < 0.0 {
            return Err(Error::parse(lineno, "negative elapsed_ms"));
        }
        rows.push(BenchmarkRow {
            dataset_name: cells[0].to_string(),
            n,
            strategy,
            accuracy_percent: num(3)?,
            elapsed: Duration::from_secs_f64(elapsed_ms / 1e3),
            iterations: num(5)?,
            final_sse: num(6)?,
        });
    }
    Ok(BenchmarkReport { rows })
}
