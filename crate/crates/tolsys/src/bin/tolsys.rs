//! Command-line front end: analysis, verification suites, sweeps, state
//! reports, and metric checks. JSON/CSV on stdout, diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 invariant violation in input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use tolsys::error::Error;
use tolsys::invariants::propagation_number;
use tolsys::metric::{composition_law_check, interval_point_band, partition_relation, Eps};
use tolsys::report::{analyze_relation, InputDescriptor};
use tolsys::states::{extremality_oracle, is_pure_restricted};
use tolsys::sweep::{rows_to_csv, sweep_band, sweep_circle, sweep_circulant};
use tolsys::verify::{run_suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "tolsys",
    version,
    about = "Operator systems of tolerance relations: invariants, dual cones, and oracle-backed verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of a relation file, with oracle cross-checks.
    Analyze {
        /// Relation JSON file.
        path: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Run a verification suite (schur-lemma, propagation, product-support,
    /// jordan, purity, composition-law, numerical-radius, all).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Point-set size override.
        #[arg(long)]
        n: Option<usize>,
        /// Instance-count override.
        #[arg(long)]
        trials: Option<usize>,
        /// Circle discretization override.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Emit a predicted-vs-oracle CSV table for a family sweep.
    Sweep {
        /// band | circulant | circle
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 2)]
        p_min: usize,
        #[arg(long, default_value_t = 12)]
        p_max: usize,
        #[arg(long, default_value_t = 1)]
        width_min: usize,
        #[arg(long, default_value_t = 11)]
        width_max: usize,
        /// Circle discretization (circle family).
        #[arg(long, default_value_t = 1000)]
        p: usize,
        /// Comma-separated thresholds (circle family).
        #[arg(long, value_delimiter = ',')]
        eps: Vec<f64>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Purity report for a vector state restricted to a relation.
    States {
        /// Relation JSON file.
        path: PathBuf,
        /// Vector JSON file.
        #[arg(long)]
        vector: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Composition-law check on a circle or weighted-graph metric.
    MetricCheck {
        /// Circle discretization p.
        #[arg(long)]
        circle: Option<usize>,
        /// Weighted-graph JSON file.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        eps1: f64,
        #[arg(long)]
        eps2: f64,
    },
    /// Interval-partition relation for cell count p and threshold eps.
    Partition {
        #[arg(long)]
        p: usize,
        /// Decimal threshold, compared exactly against the cell grid.
        #[arg(long)]
        eps: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvariantViolation(_) | Error::NotHermitian { .. } => 3,
        _ => 2,
    }
}

#[derive(Serialize)]
struct StatesReport {
    support: Vec<usize>,
    eps_connected_classes: Vec<Vec<usize>>,
    is_pure: bool,
    oracle_agrees: bool,
    seed: u64,
}

#[derive(Serialize)]
struct PartitionReport {
    p: usize,
    eps: String,
    band: usize,
    relation_summary: PartitionRelationSummary,
    propagation: u32,
}

#[derive(Serialize)]
struct PartitionRelationSummary {
    n: usize,
    edge_count: usize,
    connected: bool,
    /// Band of the point-distance convention `max{m : m/p < eps}`, one
    /// more than the cell band away from integer boundaries.
    point_band: usize,
}

fn run(cli: Cli) -> tolsys::Result<ExitCode> {
    match cli.command {
        Command::Analyze { path, seed } => {
            let contents = std::fs::read(&path)?;
            let relation = tolsys::io::relation_from_json(&String::from_utf8_lossy(&contents))?;
            let descriptor = InputDescriptor::new(&path, &contents);
            let report = analyze_relation(&relation, descriptor, seed);
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            seed,
            n,
            trials,
            p,
        } => {
            let mut cfg = SuiteConfig::new(seed);
            cfg.n = n;
            cfg.trials = trials;
            cfg.p = p;
            let reports = run_suite(&suite, &cfg)?;
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            let mut failed = false;
            for report in &reports {
                eprintln!(
                    "suite {}: {} cases, {} failures, max residual {:.3e}",
                    report.suite,
                    report.cases,
                    report.failures.len(),
                    report.max_residual
                );
                for failure in &report.failures {
                    eprintln!("  reproducer: {failure} (seed {})", report.seed);
                    failed = true;
                }
            }
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Sweep {
            family,
            p_min,
            p_max,
            width_min,
            width_max,
            p,
            eps,
            out,
        } => {
            let rows = match family.as_str() {
                "band" => sweep_band(p_min..=p_max, width_min..=width_max),
                "circulant" => sweep_circulant(p_min..=p_max, width_min..=width_max),
                "circle" => sweep_circle(p, &eps)?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown family {other:?}; expected band, circulant, or circle"
                    )))
                }
            };
            let csv = rows_to_csv(&rows);
            match out {
                Some(path) => std::fs::write(&path, csv)?,
                None => print!("{csv}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::States { path, vector, seed } => {
            let relation = tolsys::io::load_relation(&path)?;
            let v = tolsys::io::load_vector(&vector)?;
            if v.n() != relation.n() {
                return Err(Error::DimensionMismatch {
                    left: relation.n(),
                    right: v.n(),
                });
            }
            let support = v.support();
            let classes = tolsys::relation::restricted_components(&relation, &support);
            let is_pure = is_pure_restricted(&relation, &v);
            let oracle = extremality_oracle(&relation, &v, 1e-9, seed);
            let report = StatesReport {
                support,
                eps_connected_classes: classes,
                is_pure,
                oracle_agrees: oracle == is_pure,
                seed,
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::MetricCheck {
            circle,
            graph,
            eps1,
            eps2,
        } => {
            for eps in [eps1, eps2] {
                if !eps.is_finite() || eps <= 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "threshold must be positive and finite, got {eps}"
                    )));
                }
            }
            let metric = match (circle, graph) {
                (Some(p), None) => tolsys::metric::circle_metric(p)?,
                (None, Some(path)) => tolsys::io::load_graph_metric(&path)?,
                _ => {
                    return Err(Error::InvalidParameter(
                        "provide exactly one of --circle or --graph".into(),
                    ))
                }
            };
            let check = composition_law_check(&metric, eps1, eps2);
            println!("{}", serde_json::to_string_pretty(&check).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Partition { p, eps } => {
            let threshold = Eps::parse_decimal(&eps)?;
            let (relation, band) = partition_relation(p, &threshold)?;
            let report = PartitionReport {
                p,
                eps,
                band,
                relation_summary: PartitionRelationSummary {
                    n: relation.n(),
                    edge_count: relation.edges().len(),
                    connected: relation.is_connected(),
                    point_band: interval_point_band(p, &threshold),
                },
                propagation: propagation_number(&relation).overall,
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(ExitCode::SUCCESS)
        }
    }
}
