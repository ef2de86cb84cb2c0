//! The `donor-kmeans` command line.
//!
//! Exit status is 0 on success, 1 for invalid input or flags, and 2 for
//! internal failures. Diagnostics are a single line on standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dataset::NumericDataset;
use crate::donor::{
    compose_notifications, encode_donors, format_donors, parse_donors, query_donors, BloodGroup,
    QueryResult, DONOR_HEADER,
};
use crate::error::{Error, Result};
use crate::evaluation::{emit_report, generate_blobs, run_benchmark, BlobSpec, ReportFormat};
use crate::io::{
    format_assignment, format_centroids, header_line, parse_numeric_dataset, read_to_string,
    write_atomic,
};
use crate::kmeans::{
    run_kmeans, InitStrategy, KMeansConfig, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE,
};

pub const ASSIGNMENT_FILE: &str = "assignment.csv";
pub const CENTROIDS_FILE: &str = "centroids.csv";

#[derive(Debug, Parser)]
#[command(name = "donor-kmeans", version, about = "k-means clustering with range-based initial centroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cluster a numeric dataset or a donor file.
    Cluster(ClusterArgs),
    /// Compare random and improved initialization on synthetic blobs.
    Bench(BenchArgs),
    /// Find donors of a blood group at a location.
    Query(QueryArgs),
    /// Query donors and write one message per match into an outbox directory.
    Notify(NotifyArgs),
    /// Generate a labeled Gaussian blob dataset.
    GenData(GenDataArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InitArg {
    Random,
    Improved,
}

impl From<InitArg> for InitStrategy {
    fn from(arg: InitArg) -> Self {
        match arg {
            InitArg::Random => InitStrategy::Random,
            InitArg::Improved => InitStrategy::ImprovedRange,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Table => ReportFormat::Table,
            FormatArg::Csv => ReportFormat::Delimited,
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn non_negative(s: &str) -> std::result::Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(v) if v >= 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be a finite number >= 0".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct ClusterArgs {
    /// Numeric dataset (header of column names) or donor file.
    pub input: PathBuf,
    /// Number of clusters.
    #[arg(long, value_parser = positive)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "improved")]
    pub init: InitArg,
    /// Seed for random initialization.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest centroid move, in data units, that counts as converged.
    #[arg(long, value_parser = non_negative, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long = "max-iters", value_parser = positive, default_value_t = DEFAULT_MAX_ITERATIONS)]
    pub max_iters: usize,
    /// Output directory for assignment.csv and centroids.csv.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated dataset sizes, e.g. 1000,5000,10000.
    #[arg(long, value_delimiter = ',', value_parser = positive, default_value = "1000,5000,10000")]
    pub sizes: Vec<usize>,
    /// Number of clusters to fit.
    #[arg(long, value_parser = positive, default_value_t = 4)]
    pub k: usize,
    /// Number of blobs in each generated dataset.
    #[arg(long, value_parser = positive, default_value_t = 4)]
    pub clusters: usize,
    #[arg(long, value_parser = positive, default_value_t = 5)]
    pub repeats: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: FormatArg,
    #[arg(long = "dim", value_parser = positive, default_value_t = 2)]
    pub dimension: usize,
    /// Distance between neighbouring blob centers.
    #[arg(long, default_value_t = 10.0)]
    pub spread: f64,
    /// Per-coordinate noise standard deviation [default: spread / 10].
    #[arg(long, value_parser = non_negative)]
    pub noise: Option<f64>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    pub donor_file: PathBuf,
    #[arg(long, value_parser = positive)]
    pub k: usize,
    /// Blood group, e.g. O- (case-insensitive).
    #[arg(long, allow_hyphen_values = true)]
    pub group: String,
    #[arg(long)]
    pub location: String,
    /// Matched donors are written here in the donor file format.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct NotifyArgs {
    pub donor_file: PathBuf,
    #[arg(long, value_parser = positive)]
    pub k: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub group: String,
    #[arg(long)]
    pub location: String,
    /// File whose contents become the body of every message.
    #[arg(long = "message-file")]
    pub message_file: PathBuf,
    /// Directory receiving one <donor_id>.msg file per matched donor.
    #[arg(long)]
    pub outbox: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenDataArgs {
    #[arg(long, value_parser = positive, default_value_t = 4)]
    pub clusters: usize,
    #[arg(long = "points-per-cluster", value_parser = positive, default_value_t = 250)]
    pub points_per_cluster: usize,
    #[arg(long = "dim", value_parser = positive, default_value_t = 2)]
    pub dimension: usize,
    #[arg(long, default_value_t = 10.0)]
    pub spread: f64,
    /// [default: spread / 10]
    #[arg(long, value_parser = non_negative)]
    pub noise: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Numeric dataset output.
    #[arg(long)]
    pub out: PathBuf,
    /// Optional `row_index,label` file with each row's blob index.
    #[arg(long = "labels-out")]
    pub labels_out: Option<PathBuf>,
}

/// Either kind of clustering input, decided by the exact header line.
enum Input {
    Numeric(NumericDataset<f64>),
    Donors(crate::donor::EncodedDonors),
}

fn read_input(path: &Path) -> Result<Input> {
    let text = read_to_string(path)?;
    let parsed = if header_line(&text) == Some(DONOR_HEADER) {
        parse_donors(&text).and_then(|records| encode_donors(&records).map(Input::Donors))
    } else {
        parse_numeric_dataset(&text).map(Input::Numeric)
    };
    parsed.map_err(|e| e.with_source_name(path))
}

fn create_dir(path: &Path) -> Result<()> {
    std::fs::create_dir_all(path).map_err(|e| Error::io(path, e))
}

pub fn cmd_cluster(args: &ClusterArgs, stdout: &mut dyn Write) -> Result<()> {
    let dataset = match read_input(&args.input)? {
        Input::Numeric(ds) => ds,
        Input::Donors(enc) => enc.dataset,
    };
    let config = KMeansConfig {
        k: args.k,
        max_iterations: args.max_iters,
        tolerance: args.tolerance,
        init_strategy: args.init.into(),
        seed: args.seed,
    };
    let result = run_kmeans(&dataset, &config)?;

    create_dir(&args.out)?;
    write_atomic(
        &args.out.join(ASSIGNMENT_FILE),
        format_assignment(&result.assignment).as_bytes(),
    )?;
    write_atomic(
        &args.out.join(CENTROIDS_FILE),
        format_centroids(&result.centroids, dataset.column_names()).as_bytes(),
    )?;
    writeln!(stdout, "iterations: {}", result.iterations).map_err(stdout_err)?;
    writeln!(stdout, "final_sse: {}", result.final_sse()).map_err(stdout_err)?;
    writeln!(stdout, "elapsed_ms: {:.3}", result.elapsed.as_secs_f64() * 1e3).map_err(stdout_err)?;
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<()> {
    let noise = args.noise.unwrap_or(args.spread / 10.0);
    let datasets = args
        .sizes
        .iter()
        .enumerate()
        .map(|(i, &size)| {
            generate_blobs(&BlobSpec {
                cluster_count: args.clusters,
                points_per_cluster: (size / args.clusters).max(1),
                dimension: args.dimension,
                center_spread: args.spread,
                noise_stddev: noise,
                seed: args.seed.wrapping_add(i as u64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = run_benchmark(&datasets, args.k, &InitStrategy::ALL, args.repeats, args.seed)?;
    let text = emit_report(&report, args.format.into());
    match &args.out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

fn run_query(donor_file: &Path, k: usize, group: &str, location: &str) -> Result<QueryResult> {
    let blood_group: BloodGroup = group.parse()?;
    let records = read_donor_file(donor_file)?;
    let encoded = encode_donors(&records).map_err(|e| e.with_source_name(donor_file))?;
    let result = run_kmeans(
        &encoded.dataset,
        &KMeansConfig::new(k, InitStrategy::ImprovedRange),
    )?;
    query_donors(&encoded, &result, blood_group, location)
}

fn read_donor_file(path: &Path) -> Result<Vec<crate::donor::DonorRecord>> {
    parse_donors(&read_to_string(path)?).map_err(|e| e.with_source_name(path))
}

pub fn cmd_query(args: &QueryArgs, stdout: &mut dyn Write) -> Result<()> {
    let found = run_query(&args.donor_file, args.k, &args.group, &args.location)?;
    write_atomic(&args.out, format_donors(&found.matched).as_bytes())?;
    writeln!(stdout, "matches: {}", found.matched.len()).map_err(stdout_err)?;
    Ok(())
}

pub fn cmd_notify(args: &NotifyArgs, stdout: &mut dyn Write) -> Result<()> {
    let body = read_to_string(&args.message_file)?;
    let found = run_query(&args.donor_file, args.k, &args.group, &args.location)?;
    let written = compose_notifications(&found, &body, &args.outbox)?;
    writeln!(stdout, "written: {written}").map_err(stdout_err)?;
    Ok(())
}

pub fn cmd_gen_data(args: &GenDataArgs, stdout: &mut dyn Write) -> Result<()> {
    let blobs = generate_blobs(&BlobSpec {
        cluster_count: args.clusters,
        points_per_cluster: args.points_per_cluster,
        dimension: args.dimension,
        center_spread: args.spread,
        noise_stddev: args.noise.unwrap_or(args.spread / 10.0),
        seed: args.seed,
    })?;
    let mut text = blobs.data.column_names().join(",");
    text.push('\n');
    for row in blobs.data.rows() {
        let cells: Vec<String> = row.iter().map(f64::to_string).collect();
        text.push_str(&cells.join(","));
        text.push('\n');
    }
    write_atomic(&args.out, text.as_bytes())?;
    if let Some(path) = &args.labels_out {
        let mut labels = String::from("row_index,label\n");
        for (i, l) in blobs.labels.iter().enumerate() {
            labels.push_str(&format!("{i},{l}\n"));
        }
        write_atomic(path, labels.as_bytes())?;
    }
    writeln!(stdout, "rows: {}", blobs.data.n()).map_err(stdout_err)?;
    Ok(())
}

fn stdout_err(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

pub fn dispatch(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Cluster(a) => cmd_cluster(a, stdout),
        Command::Bench(a) => cmd_bench(a, stdout),
        Command::Query(a) => cmd_query(a, stdout),
        Command::Notify(a) => cmd_notify(a, stdout),
        Command::GenData(a) => cmd_gen_data(a, stdout),
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        1
                    } else {
                        0
                    }
                }
                _ => {
                    let rendered = e.render().to_string();
                    let first = rendered.lines().next().unwrap_or("error: invalid arguments");
                    let _ = writeln!(stderr, "{first}");
                    1
                }
            };
        }
    };
    match dispatch(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("donor-kmeans").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn k_zero_names_the_flag() {
        let (code, _, err) = run_capture(&["cluster", "x.csv", "--k", "0", "--out", "o"]);
        assert_eq!(code, 1);
        assert!(err.contains("--k"), "{err}");
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn malformed_sizes() {
        let (code, _, err) = run_capture(&["bench", "--sizes", "10,abc"]);
        assert_eq!(code, 1);
        assert!(err.contains("--sizes"), "{err}");
        let (code, _, _) = run_capture(&["bench", "--sizes", "10,0"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn help_lists_defaults() {
        let (code, out, _) = run_capture(&["cluster", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("default: improved"));
        assert!(out.contains("default: 300"));
        assert!(out.contains("default: 0.000000001"));
        let (_, out, _) = run_capture(&["bench", "--help"]);
        assert!(out.contains("default: 5"));
    }

    #[test]
    fn missing_input_file() {
        let dir = tempfile::tempdir().unwrap();
        let missing = dir.path().join("missing.csv");
        let out = dir.path().join("o");
        let (code, _, err) = run_capture(&[
            "cluster",
            missing.to_str().unwrap(),
            "--k",
            "2",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("missing.csv"));
    }

    #[test]
    fn sizes_split_on_commas() {
        let cli = Cli::try_parse_from(["donor-kmeans", "bench", "--sizes", "1000,5000"]).unwrap();
        match cli.command {
            Command::Bench(b) => assert_eq!(b.sizes, vec![1000, 5000]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Cli::try_parse_from(["donor-kmeans", "bench", "--sizes", "1,-2"]).is_err());
    }
}
