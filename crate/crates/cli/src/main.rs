//! `powergraph`: build power graphs and graph products, and run the
//! verification sweeps, from the command line.
//!
//! Exit status is 0 on success, 1 for a negative answer (graphs not
//! isomorphic, a verification failure) and 2 for usage or input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use powergraph::product::product_graph;
use powergraph::verify::{render_reports, verify_power_graph_of_product, DEFAULT_SWEEP_ORDER};
use powergraph::{
    are_isomorphic, parse_group, verify_all, ExportFormat, FiniteGroup, PowerGraphBundle,
    ProductKind, SimpleGraph, SweepConfig,
};

#[derive(Parser)]
#[command(
    name = "powergraph",
    version,
    about = "Power graphs of finite groups and graph products"
)]
#[command(
    after_help = "GROUP expressions: C<n> (cyclic), D<n> (dihedral of order 2n), S<n> (symmetric, n ≤ 5), \
Q8, cayley:<path>; join with 'x' for direct products, e.g. C2xD4."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,

    /// Largest product order covered by `verify-all` (at most 64).
    #[arg(long, global = true, default_value_t = DEFAULT_SWEEP_ORDER)]
    max_order: usize,

    /// Seed for the random graphs used by `verify-all`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the exponent weight table (`u v : (t,d)` per ordered pair) to stderr.
    #[arg(long, global = true)]
    dump_weights: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the power graph of a group.
    Build { group: String },
    /// Print a product of two power graphs; `generalized` uses exponent weights.
    Product {
        #[arg(value_enum)]
        kind: Kind,
        left: String,
        right: String,
    },
    /// Check that P(G1 × G2) equals the generalized product of P(G1) and P(G2).
    VerifyTheorem { left: String, right: String },
    /// Run every verification over the built-in group family.
    VerifyAll {
        /// Append per-instance wall time to each line.
        #[arg(long)]
        timing: bool,
    },
    /// Test two json graph files for isomorphism and print a witness.
    Iso { first: PathBuf, second: PathBuf },
    /// Summary statistics of a group and its power graph.
    Stats { group: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Edgelist,
    Json,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Dot => ExportFormat::Dot,
            Format::Edgelist => ExportFormat::Edgelist,
            Format::Json => ExportFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Direct,
    Cartesian,
    Normal,
    Generalized,
}

impl From<Kind> for ProductKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Direct => ProductKind::Direct,
            Kind::Cartesian => ProductKind::Cartesian,
            Kind::Normal => ProductKind::Normal,
            Kind::Generalized => ProductKind::Generalized,
        }
    }
}

/// Semantic outcome of a command that ran to completion.
enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn group(text: &str) -> Result<FiniteGroup> {
    parse_group(text).with_context(|| format!("group {text:?}"))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let format = ExportFormat::from(cli.format);
    match &cli.command {
        Command::Build { group: spec } => {
            let g = group(spec)?;
            let bundle = PowerGraphBundle::new(&g);
            if cli.dump_weights {
                eprint!("{}", bundle.weights.dump());
            }
            print!("{}", bundle.graph.export(format));
            Ok(Outcome::Yes)
        }
        Command::Product { kind, left, right } => {
            let (g1, g2) = (group(left)?, group(right)?);
            let (p1, p2) = (PowerGraphBundle::new(&g1), PowerGraphBundle::new(&g2));
            if cli.dump_weights {
                eprintln!("# {}", g1.name());
                eprint!("{}", p1.weights.dump());
                eprintln!("# {}", g2.name());
                eprint!("{}", p2.weights.dump());
            }
            let kind = ProductKind::from(*kind);
            let weights = (kind == ProductKind::Generalized).then_some((&p1.weights, &p2.weights));
            let graph = product_graph(kind, &p1.graph, &p2.graph, weights)?;
            print!("{}", graph.export(format));
            Ok(Outcome::Yes)
        }
        Command::VerifyTheorem { left, right } => {
            let (g1, g2) = (group(left)?, group(right)?);
            let report = verify_power_graph_of_product(&g1, &g2)?;
            print!("{}", render_reports(std::slice::from_ref(&report), false));
            Ok(if report.passed {
                Outcome::Yes
            } else {
                Outcome::No
            })
        }
        Command::VerifyAll { timing } => {
            let reports = verify_all(SweepConfig {
                max_order: cli.max_order,
                seed: cli.seed,
                ..SweepConfig::default()
            })?;
            print!("{}", render_reports(&reports, *timing));
            Ok(if reports.iter().all(|r| r.passed) {
                Outcome::Yes
            } else {
                Outcome::No
            })
        }
        Command::Iso { first, second } => {
            let (a, b) = (read_graph(first)?, read_graph(second)?);
            match are_isomorphic(&a, &b)? {
                Some(witness) => {
                    println!("isomorphic");
                    for (u, &v) in witness.iter().enumerate() {
                        println!("{} -> {}", a.label(u), b.label(v));
                    }
                    Ok(Outcome::Yes)
                }
                None => {
                    println!("not isomorphic");
                    Ok(Outcome::No)
                }
            }
        }
        Command::Stats { group: spec } => {
            let g = group(spec)?;
            print!("{}", stats(&g));
            Ok(Outcome::Yes)
        }
    }
}

fn read_graph(path: &Path) -> Result<SimpleGraph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SimpleGraph::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn stats(g: &FiniteGroup) -> String {
    let graph = PowerGraphBundle::new(g).graph;
    let mut histogram = std::collections::BTreeMap::new();
    for &o in g.element_orders() {
        *histogram.entry(o).or_insert(0usize) += 1;
    }
    let degrees = graph.degrees();
    let mut out = String::new();
    let _ = writeln!(out, "group            {}", g.name());
    let _ = writeln!(out, "order            {}", g.order());
    let _ = writeln!(out, "identity         {}", g.label(g.identity()));
    let orders: Vec<String> = histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    let _ = writeln!(out, "element orders   {}", orders.join(" "));
    let _ = writeln!(out, "edges            {}", graph.edge_count());
    let _ = writeln!(
        out,
        "degree range     {}..{}",
        degrees.iter().min().unwrap_or(&0),
        degrees.iter().max().unwrap_or(&0)
    );
    let _ = writeln!(
        out,
        "universal        {}",
        graph.universal_vertices().count()
    );
    out
}
