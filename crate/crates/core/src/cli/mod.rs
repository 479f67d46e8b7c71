//! `maxkcut` command-line interface.
//!
//! Every successful invocation prints one JSON report document to stdout.
//! Exit codes: 0 success, 2 input error, 3 budget refusal.

mod format;

pub use format::{parse_classes, parse_edge_list};

use crate::bounds::{self, bound_report, BoundOptions, BoundReport};
use crate::error::{Error, Result};
use crate::extremal::{self, EqualityReport, VerifyOptions, DEFAULT_CLIQUE_CAP};
use crate::graph::{Classes, CutPartition, Family, Graph};
use crate::solvers::{self, DEFAULT_BUDGET};
use crate::spectra::{self, SpectralSummary};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Parser)]
#[command(name = "maxkcut", version, about = "Spectral bounds and exact solvers for the maximum k-cut")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Named family instead of a file, e.g. `petersen` or `gnp:10,0.5`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct HSource {
    /// Edge-list file for H.
    #[arg(long)]
    h_file: Option<PathBuf>,
    /// Use H = K_N.
    #[arg(long)]
    h_complete: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Every bound for one (G, k).
    Bound {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        k: usize,
        /// Also solve exactly (within the budget).
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Class file witnessing that G is r-partite.
        #[arg(long)]
        r_partition: Option<PathBuf>,
    },
    /// A concrete k-cut.
    #[command(group(ArgGroup::new("method").required(true).multiple(false)))]
    Cut {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, group = "method")]
        exact: bool,
        #[arg(long, group = "method")]
        greedy: bool,
        #[arg(long, group = "method", requires = "r_partition")]
        ratio: bool,
        #[arg(long)]
        r_partition: Option<PathBuf>,
        /// Finish with first-improvement local search.
        #[arg(long)]
        refine: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Adjacency and Laplacian spectra.
    Spectrum {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build the equality graph (J - I) (x) A(H).
    Construct {
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        h: HSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and certify the equality graph.
    Verify {
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        h: HSource,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, default_value_t = DEFAULT_CLIQUE_CAP)]
        clique_cap: u64,
    },
    /// Generate a named graph.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPayload {
    pub n: usize,
    pub adjacency: Vec<f64>,
    pub laplacian: Vec<f64>,
    pub summary: SpectralSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutWitness {
    pub method: String,
    pub k: usize,
    pub assignment: Vec<usize>,
    pub cut_weight: f64,
    pub total_weight: f64,
    pub refined: bool,
    /// Weight before refinement.
    pub start_weight: f64,
    /// The guarantee the method certifies.
    pub guarantee: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphPayload {
    pub n: usize,
    pub edge_count: usize,
    pub total_weight: f64,
    pub regularity: Option<usize>,
    pub digest: String,
    /// Where the edge list was written, if anywhere.
    pub written_to: Option<String>,
    /// `[u, v, w]` triples, included when not written to a file.
    pub edges: Option<Vec<(usize, usize, f64)>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Bound(BoundReport),
    Equality(EqualityReport),
    Spectrum(SpectrumPayload),
    Cut(CutWitness),
    Graph(GraphPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    /// SHA-256 of the canonical edge list of the input graph.
    pub input_digest: String,
    pub payload: Payload,
}

/// SHA-256 of the canonical edge-list text, as `sha256:<hex>`.
pub fn graph_digest(g: &Graph) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(g.to_edge_list().as_bytes())))
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_graph(source: &GraphSource, seed: u64) -> Result<Graph> {
    match (&source.graph, &source.family) {
        (Some(path), _) => parse_edge_list(&read_text(path)?),
        (None, Some(spec)) => Family::parse_with_seed(spec, seed)?.generate(),
        (None, None) => unreachable!("clap enforces one graph source"),
    }
}

fn load_h(h: &HSource) -> Result<Graph> {
    match (&h.h_file, h.h_complete) {
        (Some(path), _) => parse_edge_list(&read_text(path)?),
        (None, Some(n)) => extremal::complete_h(n),
        (None, None) => unreachable!("clap enforces one H source"),
    }
}

fn graph_payload(g: &Graph, out: Option<&Path>) -> Result<GraphPayload> {
    if let Some(path) = out {
        std::fs::write(path, g.to_edge_list()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(GraphPayload {
        n: g.n(),
        edge_count: g.edge_count(),
        total_weight: g.total_weight(),
        regularity: g.regularity(),
        digest: graph_digest(g),
        written_to: out.map(|p| p.display().to_string()),
        edges: out.is_none().then(|| g.edges().iter().map(|e| (e.u, e.v, e.w)).collect()),
    })
}

fn cut_witness(
    g: &Graph,
    k: usize,
    method: &str,
    start: CutPartition,
    refine: bool,
    guarantee: Option<f64>,
) -> Result<CutWitness> {
    let start_weight = start.cut_weight();
    let p = if refine { solvers::local_search_refine(g, &start)? } else { start };
    Ok(CutWitness {
        method: method.to_string(),
        k,
        cut_weight: p.cut_weight(),
        assignment: p.into_assignment(),
        total_weight: g.total_weight(),
        refined: refine,
        start_weight,
        guarantee,
    })
}

fn execute(command: Command) -> Result<ReportDocument> {
    let (name, digest, payload) = match command {
        Command::Bound { source, seed, k, exact, budget, r_partition } => {
            let g = load_graph(&source, seed)?;
            let r_partition = match r_partition {
                Some(path) => Some(parse_classes(&read_text(&path)?)?),
                None => None,
            };
            let opts = BoundOptions { r_partition, compute_exact: exact, budget };
            ("bound", graph_digest(&g), Payload::Bound(bound_report(&g, k, &opts)?))
        }
        Command::Cut { source, seed, k, exact, greedy, ratio, r_partition, refine, budget } => {
            let g = load_graph(&source, seed)?;
            let m = g.total_weight();
            let witness = if exact {
                cut_witness(&g, k, "exact", solvers::exact_max_kcut(&g, k, budget)?, refine, None)?
            } else if ratio {
                let path = r_partition.as_ref().expect("clap requires --r-partition with --ratio");
                let classes: Classes = parse_classes(&read_text(path)?)?;
                let p = solvers::rpartite_ratio_cut(&g, &classes, k)?;
                let lb = bounds::lower_bound_ratio(classes.r(), k, m)?;
                cut_witness(&g, k, "ratio", p, refine, Some(lb))?
            } else {
                debug_assert!(greedy);
                let p = solvers::greedy_kcut_natural(&g, k)?;
                let lb = bounds::lower_bound_trivial(k, m)?;
                cut_witness(&g, k, "greedy", p, refine, Some(lb))?
            };
            ("cut", graph_digest(&g), Payload::Cut(witness))
        }
        Command::Spectrum { source, seed } => {
            let g = load_graph(&source, seed)?;
            let s = spectra::spectra(&g)?;
            let payload = SpectrumPayload {
                n: g.n(),
                adjacency: s.adjacency,
                laplacian: s.laplacian,
                summary: s.summary,
            };
            ("spectrum", graph_digest(&g), Payload::Spectrum(payload))
        }
        Command::Construct { chi, k, h, out } => {
            let h = load_h(&h)?;
            let g = extremal::construct_equality_graph(chi, k, &h)?;
            ("construct", graph_digest(&h), Payload::Graph(graph_payload(&g, out.as_deref())?))
        }
        Command::Verify { chi, k, h, budget, clique_cap } => {
            let h = load_h(&h)?;
            let report = extremal::verify_equality(chi, k, &h, &VerifyOptions { budget, clique_cap })?;
            ("verify", graph_digest(&h), Payload::Equality(report))
        }
        Command::Gen { family, seed, out } => {
            let g = Family::parse_with_seed(&family, seed)?.generate()?;
            ("gen", graph_digest(&g), Payload::Graph(graph_payload(&g, out.as_deref())?))
        }
    };
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        command: name.to_string(),
        input_digest: digest,
        payload,
    })
}

/// Runs one invocation; `args` includes the program name. Returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(doc) => {
            let json = serde_json::to_string_pretty(&doc).expect("report serializes");
            let _ = writeln!(stdout, "{json}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_budget() {
                3
            } else {
                2
            }
        }
    }
}
