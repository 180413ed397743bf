//! `ricci-halin`: exact Lin-Lu-Yau curvature and the generalized Halin graph
//! classification from the command line.
//!
//! Exit codes: 0 on success (and, for `curv`, when every edge is positively
//! curved), 1 on usage, parse or validation errors, 2 when `curv` finds an
//! edge with curvature ≤ 0.

mod input;
mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use halin_curvature::curvature::{
    check_coupling_certificate, check_lipschitz_certificate, parse_certificate, Certificate,
    DEFAULT_ORACLE_THRESHOLD,
};
use halin_curvature::enumerate::{
    classification_json, enumerate_halin_with, verify_theorem_with, EnumerateOptions, THEOREM_BOUND,
};
use halin_curvature::halin::{build_family, parse_family_spec};
use halin_curvature::rational::{format_rational, is_positive};
use halin_curvature::{CurvatureError, CurvatureReport, Graph, Rational};

use input::InputFormat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
    Json,
    Dot,
    Table,
}

#[derive(Parser)]
#[command(name = "ricci-halin", version)]
#[command(about = "Exact Lin-Lu-Yau curvature and positively curved Halin graphs")]
struct Cli {
    /// Output format (default depends on the command)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest vertex count for `enum` (and `verify` when no bound is given)
    #[arg(long, global = true)]
    n_max: Option<usize>,

    /// Skip the lemma-based pruning and compute every class exactly
    #[arg(long, global = true)]
    no_prune: bool,

    /// Only report classes without degree-2 vertices
    #[arg(long, global = true)]
    halin_only: bool,

    /// Worker threads for enumeration
    #[arg(long, global = true, env = "RICCI_HALIN_WORKERS")]
    workers: Option<usize>,

    /// Largest d_x + d_y on which `curv` cross-checks with the dual search
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_THRESHOLD)]
    oracle_threshold: usize,

    /// Write the main output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a wheel-family graph: W:n, W1:n or W2:n
    Gen { spec: String },
    /// Curvature of every edge of a graph
    Curv {
        /// Family spec, file path, or `-` for stdin
        input: String,
        #[arg(long, value_enum, default_value = "auto")]
        input_format: InputFormat,
    },
    /// Classify generalized Halin graphs up to --n-max vertices
    Enum,
    /// Check the classification of positively curved generalized Halin graphs
    Verify {
        /// Vertex bound (at least 12)
        n_max: Option<usize>,
        /// Negate every curvature value, to check that the verifier can fail
        #[arg(long, hide = true)]
        negate_curvature: bool,
    },
    /// Validate a certificate and print the bound it proves
    Cert {
        /// Family spec, file path, or `-` for stdin
        input: String,
        /// Certificate JSON file
        certificate: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        input_format: InputFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Gen { spec } => {
            let (family, n) = parse_family_spec(spec)?;
            let h = build_family(family, n)?;
            let text = match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => output::graph6(&h.graph),
                Format::Edgelist => output::edge_list(&h.graph),
                Format::Json => output::graph_json(&h.graph),
                Format::Dot => output::dot(&h.graph, None),
                Format::Table => bail!("`gen` writes edgelist, graph6, json or dot"),
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Curv { input, input_format } => {
            let g = input::load_graph(input, *input_format)?;
            let report = halin_curvature::curvature_report(&g)?;
            let dual = cross_check(&g, &report, cli.oracle_threshold)?;
            let text = match cli.format.unwrap_or(Format::Table) {
                Format::Table => output::curvature_table(&report, &dual),
                Format::Json => output::curvature_json(&g, &report, &dual),
                Format::Dot => output::dot(&g, Some(&report)),
                _ => bail!("`curv` writes table, json or dot"),
            };
            emit(cli, &text)?;
            Ok(if report.positively_curved { 0 } else { 2 })
        }
        Command::Enum => {
            let n_max = cli.n_max.unwrap_or(THEOREM_BOUND);
            let result = enumerate_halin_with(n_max, &enum_options(cli))?;
            let counts = format!("counts {}", result.family_counts);
            match cli.format.unwrap_or(Format::Table) {
                Format::Json => {
                    emit(cli, &(classification_json(&result, cli.halin_only) + "\n"))?;
                    if cli.output.is_some() {
                        println!("{counts}");
                    } else {
                        eprintln!("{counts}");
                    }
                }
                Format::Table => {
                    let mut text = output::class_table(&result, cli.halin_only);
                    text.push_str(&counts);
                    text.push('\n');
                    emit(cli, &text)?;
                }
                _ => bail!("`enum` writes table or json"),
            }
            Ok(0)
        }
        Command::Verify {
            n_max,
            negate_curvature,
        } => {
            let n_max = n_max.or(cli.n_max).unwrap_or(THEOREM_BOUND + 1);
            if n_max < THEOREM_BOUND {
                bail!("n_max must be ≥ {THEOREM_BOUND}");
            }
            let mut opts = enum_options(cli);
            if *negate_curvature {
                opts.engine = negated_report;
            }
            let report = verify_theorem_with(n_max, &opts)?;
            emit(cli, &report.summary())?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Cert {
            input,
            certificate,
            input_format,
        } => {
            let g = input::load_graph(input, *input_format)?;
            let text = fs::read_to_string(certificate)
                .with_context(|| format!("reading {}", certificate.display()))?;
            let line = match parse_certificate(&text)? {
                Certificate::Lipschitz(c) => {
                    let bound = check_lipschitz_certificate(&g, &c)?;
                    let verdict = if !is_positive(&bound) {
                        format!("proves κ({}, {}) ≤ 0", c.x, c.y)
                    } else {
                        "does not prove non-positivity".to_string()
                    };
                    format!("upper_bound {}\n{verdict}\n", format_rational(&bound))
                }
                Certificate::Coupling(c) => {
                    let bound = check_coupling_certificate(&g, &c)?;
                    let verdict = if is_positive(&bound) {
                        format!("proves κ({}, {}) > 0", c.x, c.y)
                    } else {
                        "does not prove positivity".to_string()
                    };
                    format!("lower_bound {}\n{verdict}\n", format_rational(&bound))
                }
            };
            emit(cli, &line)?;
            Ok(0)
        }
    }
}

fn enum_options(cli: &Cli) -> EnumerateOptions {
    EnumerateOptions {
        use_pruning: !cli.no_prune,
        workers: cli.workers,
        ..EnumerateOptions::default()
    }
}

fn negated_report(g: &Graph) -> Result<CurvatureReport, CurvatureError> {
    let r = halin_curvature::curvature_report(g)?;
    CurvatureReport::from_edges(r.edges.into_iter().map(|(e, k)| (e, -k)).collect())
}

/// Dual value per edge where `d_x + d_y` is within the threshold; a
/// disagreement with the transport value is an internal error.
fn cross_check(
    g: &Graph,
    report: &CurvatureReport,
    threshold: usize,
) -> Result<Vec<Option<Rational>>> {
    report
        .edges
        .iter()
        .map(|(e, k)| {
            if g.degree(e.x) + g.degree(e.y) > threshold {
                return Ok(None);
            }
            let d = halin_curvature::kappa_lly_dual(g, *e, threshold)?;
            if d != *k {
                bail!(
                    "transport and dual values disagree on edge {e}: {} vs {}",
                    format_rational(k),
                    format_rational(&d)
                );
            }
            Ok(Some(d))
        })
        .collect()
}
