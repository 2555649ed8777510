//! Command-line front end: region listings, label tables, parking-function
//! enumeration and checks, constructive region search, arrangement
//! constructors, verification reports, and SVG plots.
//!
//! Exit codes: 0 on success, 1 when a check or verification fails (a
//! non-parking function, a failed verdict), 2 on input or usage errors.

mod plot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use parkplane::factory::{from_multigraph, g_shi, k_shi};
use parkplane::io::{
    parse_arrangement, parse_multigraph, parse_parkvec, write_arrangement,
};
use parkplane::parking::{enumerate_g_parking, g_parking_violation};
use parkplane::regions::{enumerate_regions_with_limit, Region, DEFAULT_MAX_HYPERPLANES};
use parkplane::types::{Arrangement, Multigraph, ParkVec};
use parkplane::verify::{
    verify_bijectivity_kshi, verify_bijectivity_kshi_with_limit, verify_surjectivity_with_limit,
    BijectivityReport, SurjectivityReport,
};
use parkplane::walk::find_region;
use plot::plot_svg;

/// Environment override for the hyperplane-count guard on enumeration.
const MAX_HYPERPLANES_ENV: &str = "PARKPLANE_MAX_HYPERPLANES";

#[derive(Parser)]
#[command(
    name = "parkplane",
    version,
    about = "Exact difference-hyperplane arrangements, region labels, and parking functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Tab-separated rows.
    #[default]
    Tsv,
    /// One JSON object per row.
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List every region: sign vector, label, witness point
    Regions {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the label -> multiplicity table of an arrangement
    Labels {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate the G-parking functions of a multigraph, one per line
    Gpf { file: PathBuf },
    /// Check whether a function is G-parking for a multigraph
    Check {
        file: PathBuf,
        /// Comma-separated values, e.g. 1,0,2
        #[arg(short, long)]
        function: String,
    },
    /// Walk to a region whose label is the given function
    Find {
        file: PathBuf,
        /// Comma-separated values, e.g. 1,0,2
        #[arg(short, long)]
        function: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Construct the shifted k-Shi arrangement
    Shi {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: u64,
        /// Output file; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Construct a G-Shi arrangement from an edge list like 1-2,2-3
    Gshi {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        edges: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Realize a multigraph file as an arrangement (constants 1/2, 3/2, ...)
    Graph2arr {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify that the labeling is surjective onto the parking functions
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify that the k-Shi labeling is bijective with (kn+1)^(n-1) regions
    VerifyShi {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Render a 3-vertex arrangement as SVG
    Plot {
        file: PathBuf,
        /// Place each region's label at its witness point
        #[arg(long)]
        labels: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// `Err` means an input/usage problem (exit 2); `Ok` carries the exit code
/// for completed runs (0, or 1 for negative verdicts).
fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Regions { file, format } => {
            let arr = read_arrangement(&file)?;
            let regions = enumerate(&arr)?;
            for region in &regions {
                println!("{}", region_row(region, format));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Labels { file, format } => {
            let arr = read_arrangement(&file)?;
            let regions = enumerate(&arr)?;
            let mut table: std::collections::BTreeMap<ParkVec, usize> =
                std::collections::BTreeMap::new();
            for region in &regions {
                *table.entry(region.label().clone()).or_insert(0) += 1;
            }
            for (label, count) in &table {
                match format {
                    Format::Tsv => println!("{label}\t{count}"),
                    Format::Json => println!(
                        "{}",
                        json!({ "label": label.values(), "count": count })
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gpf { file } => {
            let graph = read_multigraph(&file)?;
            for f in enumerate_g_parking(&graph) {
                println!("{f}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file, function } => {
            let graph = read_multigraph(&file)?;
            let f = parse_function(&function, graph.n())?;
            match g_parking_violation(&graph, &f) {
                None => {
                    println!("G-parking");
                    Ok(ExitCode::SUCCESS)
                }
                Some(violating) => {
                    println!("NOT G-parking, violating I={{{}}}", join(&violating));
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Find { file, function, format } => {
            let arr = read_arrangement(&file)?;
            let f = parse_function(&function, arr.n())?;
            match find_region(&arr, &f) {
                Ok((region, trace)) => {
                    match format {
                        Format::Tsv => {
                            println!("{}", region_row(&region, format));
                            for h in &trace {
                                println!("cross\t{h}");
                            }
                        }
                        Format::Json => {
                            let trace_rows: Vec<String> =
                                trace.iter().map(|h| h.to_string()).collect();
                            println!(
                                "{}",
                                json!({
                                    "signs": region.signs().to_string(),
                                    "label": region.label().values(),
                                    "witness": witness_strings(&region),
                                    "trace": trace_rows,
                                })
                            );
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(parkplane::Error::NotGParking { violating }) => {
                    println!("NOT G-parking, violating I={{{}}}", join(&violating));
                    Ok(ExitCode::FAILURE)
                }
                Err(err) => Err(err.to_string()),
            }
        }
        Command::Shi { n, k, output } => {
            let arr = k_shi(n, k).map_err(|e| e.to_string())?;
            emit(&write_arrangement(&arr), output.as_deref())
        }
        Command::Gshi { n, edges, output } => {
            let arr = g_shi(n, &parse_edges(&edges)?).map_err(|e| e.to_string())?;
            emit(&write_arrangement(&arr), output.as_deref())
        }
        Command::Graph2arr { file, output } => {
            let graph = read_multigraph(&file)?;
            emit(&write_arrangement(&from_multigraph(&graph)), output.as_deref())
        }
        Command::Verify { file, format } => {
            let arr = read_arrangement(&file)?;
            let report = verify_surjectivity_with_limit(&arr, hyperplane_limit()?)
                .map_err(|e| e.to_string())?;
            print_surjectivity(&report, format);
            Ok(exit_by(report.passed()))
        }
        Command::VerifyShi { n, k, format } => {
            let report = match hyperplane_limit_override()? {
                Some(limit) => verify_bijectivity_kshi_with_limit(n, k, limit),
                None => verify_bijectivity_kshi(n, k),
            }
            .map_err(|e| e.to_string())?;
            print_bijectivity(&report, format);
            Ok(exit_by(report.bijective()))
        }
        Command::Plot { file, labels, output } => {
            let arr = read_arrangement(&file)?;
            let svg = plot_svg(&arr, labels, hyperplane_limit()?).map_err(|e| e.to_string())?;
            fs::write(&output, svg)
                .map_err(|e| format!("cannot write {}: {e}", output.display()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_by(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn read_arrangement(path: &Path) -> Result<Arrangement, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_arrangement(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_multigraph(path: &Path) -> Result<Multigraph, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_multigraph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_function(text: &str, n: usize) -> Result<ParkVec, String> {
    let f = parse_parkvec(text).map_err(|e| format!("function '{text}': {e}"))?;
    if f.len() != n {
        return Err(format!(
            "function has {} values but the input has {n} vertices",
            f.len()
        ));
    }
    Ok(f)
}

fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            let (u, v) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| format!("edge '{part}' is not of the form u-v"))?;
            let u: usize = u.trim().parse().map_err(|_| format!("bad vertex in '{part}'"))?;
            let v: usize = v.trim().parse().map_err(|_| format!("bad vertex in '{part}'"))?;
            Ok((u, v))
        })
        .collect()
}

fn hyperplane_limit_override() -> Result<Option<usize>, String> {
    match std::env::var(MAX_HYPERPLANES_ENV) {
        Ok(value) => value
            .parse::<usize>()
            .map(Some)
            .map_err(|_| format!("{MAX_HYPERPLANES_ENV} must be an integer, got '{value}'")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(err) => Err(format!("{MAX_HYPERPLANES_ENV}: {err}")),
    }
}

fn hyperplane_limit() -> Result<usize, String> {
    Ok(hyperplane_limit_override()?.unwrap_or(DEFAULT_MAX_HYPERPLANES))
}

fn enumerate(arr: &Arrangement) -> Result<Vec<Region>, String> {
    enumerate_regions_with_limit(arr, hyperplane_limit()?).map_err(|e| e.to_string())
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn witness_strings(region: &Region) -> Vec<String> {
    region.witness().coords().iter().map(|c| c.to_string()).collect()
}

fn region_row(region: &Region, format: Format) -> String {
    match format {
        Format::Tsv => format!(
            "{}\t{}\t{}",
            region.signs(),
            region.label().to_csv(),
            region.witness()
        ),
        Format::Json => json!({
            "signs": region.signs().to_string(),
            "label": region.label().values(),
            "witness": witness_strings(region),
        })
        .to_string(),
    }
}

fn print_surjectivity(report: &SurjectivityReport, format: Format) {
    match format {
        Format::Tsv => {
            println!(
                "regions={} labels={} parking={} {} {}",
                report.region_count,
                report.distinct_label_count(),
                report.parking_functions.len(),
                if report.labels_are_gpf {
                    "LABELS_ARE_GPF"
                } else {
                    "LABELS_NOT_GPF"
                },
                if report.surjective() {
                    "SURJECTIVE"
                } else {
                    "NOT_SURJECTIVE"
                }
            );
            for (label, count) in &report.label_multiplicities {
                println!("{label}\t{count}");
            }
        }
        Format::Json => {
            let table: Vec<serde_json::Value> = report
                .label_multiplicities
                .iter()
                .map(|(label, count)| json!({ "label": label.values(), "count": count }))
                .collect();
            println!(
                "{}",
                json!({
                    "regions": report.region_count,
                    "distinct_labels": report.distinct_label_count(),
                    "parking": report.parking_functions.len(),
                    "labels_are_gpf": report.labels_are_gpf,
                    "surjective": report.surjective(),
                    "label_multiplicities": table,
                })
            );
        }
    }
}

fn print_bijectivity(report: &BijectivityReport, format: Format) {
    match format {
        Format::Tsv => println!(
            "regions={} parking={} formula={} {}",
            report.region_count,
            report.parking_count,
            report.formula_count,
            if report.bijective() {
                "BIJECTIVE"
            } else {
                "NOT_BIJECTIVE"
            }
        ),
        Format::Json => println!(
            "{}",
            json!({
                "n": report.n,
                "k": report.k,
                "regions": report.region_count,
                "parking": report.parking_count,
                "k_parking": report.k_parking_count,
                "formula": report.formula_count,
                "labels_distinct": report.labels_distinct,
                "bijective": report.bijective(),
            })
        ),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<ExitCode, String> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
