//! `kdiam`: measure, multiply, predict and verify graphs from the shell.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 usage or input error, 2 a prediction or claim was contradicted.

mod spec_arg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use kronecker_diameter::cycles::{l_o_bound, CycleBoundReport, DEFAULT_CYCLE_CAP};
use kronecker_diameter::families::Family;
use kronecker_diameter::harness::{
    campaign_report, EnsembleSpec, ExhaustiveSpec, RandomSpec, DEFAULT_SEED, RANDOM_ORDER_LIMIT,
};
use kronecker_diameter::kronecker::kronecker_product;
use kronecker_diameter::predict::{predict, DiameterPrediction};
use kronecker_diameter::walk::{self, diameter, odd_girth_from, parity_distances};
use kronecker_diameter::{edgelist, generate, ExtLen, Graph};
use serde::Serialize;

use crate::spec_arg::{resolve, GraphArg};

#[derive(Parser)]
#[command(
    name = "kdiam",
    version,
    about = "Exponents and diameters of Kronecker graph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Order, connectivity, odd girth, diameter, exponent and cycle bound of one graph.
    Metrics {
        /// Family expression (path:n, cycle:n, complete:n, complete+:n,
        /// multipartite:a,b,..., H:n,p, F:n,p) or edge-list file.
        graph: String,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap_cycles: usize,
    },
    /// Build G1 x G2, compare the predicted diameter with BFS.
    Product {
        g1: String,
        g2: String,
        /// Write the product graph here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Predicted diameter of G1 x G2 from factor invariants only.
    Predict { g1: String, g2: String },
    /// Run claim checkers over an ensemble.
    Verify {
        /// Comma-separated claim ids, or "all".
        #[arg(long, value_delimiter = ',', required = true)]
        claims: Vec<String>,
        /// All labeled graphs up to this order (with loops when <= 4).
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Number of seeded random graphs (with loops).
        #[arg(long)]
        random: Option<usize>,
        /// Largest order of random graphs.
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap_cycles: usize,
    },
    /// Print a family member or a seeded random graph.
    Generate {
        /// Family expression; omit to draw a random graph.
        graph: Option<String>,
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        order: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0.0)]
        loop_prob: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
}

#[derive(Serialize)]
struct GraphJson {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphJson {
    fn of(g: &Graph) -> Self {
        Self {
            order: g.order(),
            edges: g.edges().collect(),
        }
    }
}

#[derive(Serialize)]
struct Metrics {
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<Family>,
    order: usize,
    edges: usize,
    loops: usize,
    connected: bool,
    bipartite: bool,
    odd_girth: ExtLen,
    diameter: ExtLen,
    exponent: ExtLen,
    l_o: Option<CycleBoundReport>,
    witness_pair: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct ProductSummary {
    order: usize,
    edges: usize,
    connected: bool,
    predicted: DiameterPrediction,
    measured: ExtLen,
    matches: bool,
    written: Option<PathBuf>,
}

/// Writes to stdout; a closed pipe (`kdiam ... | head`) is not an error.
fn emit(text: &str) -> Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn render(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Edgelist => edgelist::write(g),
        Format::Json => serde_json::to_string_pretty(&GraphJson::of(g))? + "\n",
    })
}

fn metrics(spec: &str, cap: usize) -> Result<ExitCode> {
    if cap == 0 {
        bail!("--cap-cycles must be positive");
    }
    let GraphArg { graph: g, family } = resolve(spec)?;
    let pd = parity_distances(&g);
    let report = walk::exponent_from(&pd);
    print_json(&Metrics {
        family,
        order: g.order(),
        edges: g.edge_count(),
        loops: g.loop_count(),
        connected: walk::is_connected(&g),
        bipartite: walk::is_bipartite(&g),
        odd_girth: odd_girth_from(&pd),
        diameter: diameter(&g),
        exponent: report.gamma,
        l_o: l_o_bound(&g, cap).ok(),
        witness_pair: report.witness_pair,
    })?;
    Ok(ExitCode::SUCCESS)
}

fn product(g1: &str, g2: &str, out: Option<PathBuf>, format: Format) -> Result<ExitCode> {
    let (a, b) = (resolve(g1)?.graph, resolve(g2)?.graph);
    let predicted = predict(&a, &b)?;
    let p = kronecker_product(&a, &b);
    let measured = diameter(&p);
    if let Some(path) = &out {
        std::fs::write(path, render(&p, format)?)?;
        eprintln!("wrote product to {}", path.display());
    }
    let matches = predicted.value == measured;
    print_json(&ProductSummary {
        order: p.order(),
        edges: p.edge_count(),
        connected: walk::is_connected(&p),
        predicted,
        measured,
        matches,
        written: out,
    })?;
    if matches {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("predicted diameter {} but BFS measured {measured}", predicted.value);
        Ok(ExitCode::from(2))
    }
}

fn verify(
    claims: &[String],
    exhaustive: Option<usize>,
    random: Option<usize>,
    max_order: usize,
    seed: u64,
    cycle_cap: usize,
) -> Result<ExitCode> {
    let mut spec = EnsembleSpec {
        exhaustive: exhaustive.map(|n| ExhaustiveSpec {
            min_order: 1,
            max_order: n,
            loops: n <= 4,
        }),
        random: random.map(|count| RandomSpec {
            count,
            min_order: 1,
            max_order: max_order.min(RANDOM_ORDER_LIMIT),
            loops: true,
        }),
        cycle_cap,
    };
    if spec.exhaustive.is_none() && spec.random.is_none() {
        spec.exhaustive = EnsembleSpec::default().exhaustive;
    }
    if random.is_some() && max_order > RANDOM_ORDER_LIMIT {
        bail!("--max-order must be at most {RANDOM_ORDER_LIMIT}");
    }
    let report = campaign_report(claims, &spec, seed)?;
    for c in &report.claims {
        let status = if c.pass { "pass" } else { "FAIL" };
        eprintln!(
            "{:16} {status} ({} instances, {:.2} s)",
            c.claim_id,
            c.instances_checked,
            c.elapsed.as_secs_f64()
        );
    }
    print_json(&report)?;
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Metrics { graph, cap_cycles } => metrics(&graph, cap_cycles),
        Command::Product { g1, g2, out, format } => product(&g1, &g2, out, format),
        Command::Predict { g1, g2 } => {
            let (a, b) = (resolve(&g1)?.graph, resolve(&g2)?.graph);
            print_json(&predict(&a, &b)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claims,
            exhaustive,
            random,
            max_order,
            seed,
            cap_cycles,
        } => verify(&claims, exhaustive, random, max_order, seed, cap_cycles),
        Command::Generate {
            graph,
            order,
            edge_prob,
            loop_prob,
            seed,
            format,
        } => {
            let g = match (graph, order) {
                (Some(spec), _) => resolve(&spec)?.graph,
                (None, Some(n)) => generate::random_graph(n, edge_prob, loop_prob, seed)?,
                (None, None) => unreachable!("clap requires a graph or --order"),
            };
            emit(&render(&g, format)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
