//! Command-line front end: build Cayley graphs over transposition sets,
//! analyze the transposition graph, search automorphism groups, and run the
//! direct-product verification pipeline.
//!
//! Exit codes: 0 success (and, for `verify`, measurement consistent with the
//! structural precheck), 1 verification mismatch, 2 usage error, 3 capacity
//! error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cayley_aut::autsearch::{
    automorphism_group_with, brute_force_automorphism_list_with, DEFAULT_ORACLE_BOUND,
    DEFAULT_SEARCH_BOUND,
};
use cayley_aut::cayley::{
    build_cayley_with, family_generators, CayleyGraph, Family, DEFAULT_BUILD_BOUND,
};
use cayley_aut::error::Error;
use cayley_aut::exec::ExecMode;
use cayley_aut::tgraph::{
    build_transposition_graph, normality_precheck, small_graph_automorphisms, TranspositionSet,
};
use cayley_aut::verify::verify_direct_product_with;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

/// Builds above this n are refused outright: 11! vertices would not fit in
/// memory no matter what --max-n says.
const HARD_BUILD_CEILING: usize = 10;

#[derive(Parser)]
#[command(
    name = "cayley-aut",
    version,
    about = "Automorphism groups of Cayley graphs of symmetric groups over transposition sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Cayley graph and report its size statistics.
    Build(GraphArgs),
    /// Analyze the transposition graph on the points 1..n.
    Tgraph(GraphArgs),
    /// Search the full automorphism group of the Cayley graph.
    Aut(GraphArgs),
    /// Run the direct-product decomposition pipeline and report every flag.
    Verify(GraphArgs),
    /// Enumerate automorphisms by brute force (small graphs only).
    Oracle(GraphArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["family", "generators"])))]
struct GraphArgs {
    /// Number of points n (the graph lives on the n! permutations).
    #[arg(long)]
    n: usize,

    /// Named generator family.
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,

    /// Explicit transpositions in cycle notation, e.g. "(1,2),(2,3),(3,1)".
    #[arg(long)]
    generators: Option<String>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write a DOT rendering to this path (the transposition graph for
    /// `tgraph`, the Cayley graph otherwise).
    #[arg(long)]
    dot: Option<PathBuf>,

    /// Raise the Cayley construction bound above the default 8 (ceiling 10).
    #[arg(long)]
    max_n: Option<usize>,

    /// Worker threads for the data-parallel code paths; 0 forces the
    /// sequential fallback. Default: all cores.
    #[arg(long)]
    parallel: Option<usize>,

    /// Vertex cap for the brute-force oracle (default 40, hard maximum 64).
    #[arg(long)]
    oracle_cap: Option<usize>,

    /// Write the report to this path instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_family(text: &str) -> Result<Family, String> {
    text.parse::<Family>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(if err.is_capacity() { EXIT_CAPACITY } else { EXIT_USAGE })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let (Command::Build(args)
    | Command::Tgraph(args)
    | Command::Aut(args)
    | Command::Verify(args)
    | Command::Oracle(args)) = &cli.command;

    let set = resolve_set(args)?;
    let mode = resolve_mode(args.parallel)?;

    match &cli.command {
        Command::Build(args) => run_build(args, &set, mode),
        Command::Tgraph(args) => run_tgraph(args, &set),
        Command::Aut(args) => run_aut(args, &set, mode),
        Command::Verify(args) => run_verify(args, &set, mode),
        Command::Oracle(args) => run_oracle(args, &set, mode),
    }
}

fn resolve_set(args: &GraphArgs) -> Result<TranspositionSet, Error> {
    match (&args.family, &args.generators) {
        (Some(f), None) => family_generators(*f, args.n),
        (None, Some(text)) => TranspositionSet::parse(text, args.n),
        _ => unreachable!("clap enforces exactly one source"),
    }
}

fn resolve_mode(parallel: Option<usize>) -> Result<ExecMode, Error> {
    match parallel {
        None => Ok(ExecMode::default()),
        Some(0) => Ok(ExecMode::Sequential),
        #[cfg(feature = "parallel")]
        Some(threads) => {
            // Ignore the error: the pool can only be configured once and a
            // pre-existing default pool is fine.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            Ok(ExecMode::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Err(Error::invalid(
            "this binary was built without the parallel feature; use --parallel 0",
        )),
    }
}

fn build_bound(args: &GraphArgs) -> Result<usize, Error> {
    match args.max_n {
        Some(m) if m > HARD_BUILD_CEILING => Err(Error::Capacity {
            what: "--max-n override",
            requested: m as u64,
            bound: HARD_BUILD_CEILING as u64,
        }),
        Some(m) => Ok(m),
        None => Ok(DEFAULT_BUILD_BOUND),
    }
}

fn build_graph(args: &GraphArgs, set: &TranspositionSet, mode: ExecMode) -> Result<CayleyGraph, Error> {
    build_cayley_with(args.n, set, build_bound(args)?, mode)
}

fn family_name(args: &GraphArgs) -> Option<String> {
    args.family.map(|f| f.as_str().to_string())
}

fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn write_dot(args: &GraphArgs, dot: &str) -> Result<(), Error> {
    if let Some(path) = &args.dot {
        std::fs::write(path, dot)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn emit(args: &GraphArgs, json: String, text: String) -> Result<(), Error> {
    let mut body = match args.format {
        Format::Json => json,
        Format::Text => text,
    };
    body.push('\n');
    match &args.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

fn kv_lines(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (i, (k, v)) in pairs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = write!(out, "{k:<width$} = {v}");
    }
    out
}

#[derive(Serialize)]
struct BuildStats {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    generators: Vec<String>,
    vertices: usize,
    edges: usize,
    degree: usize,
    connected: bool,
    timestamp: String,
}

fn run_build(args: &GraphArgs, set: &TranspositionSet, mode: ExecMode) -> Result<u8, Error> {
    let x = build_graph(args, set, mode)?;
    if args.dot.is_some() {
        write_dot(args, &x.to_dot()?)?;
    }
    let stats = BuildStats {
        n: x.n(),
        family: family_name(args),
        generators: set.pair_strings(),
        vertices: x.vertex_count(),
        edges: x.graph().edge_count(),
        degree: set.len(),
        connected: x.is_connected(),
        timestamp: timestamp(),
    };
    let text = kv_lines(&[
        ("n", stats.n.to_string()),
        ("generators", stats.generators.join(",")),
        ("vertices", stats.vertices.to_string()),
        ("edges", stats.edges.to_string()),
        ("degree", stats.degree.to_string()),
        ("connected", stats.connected.to_string()),
        ("timestamp", stats.timestamp.clone()),
    ]);
    emit(args, to_json(&stats), text)?;
    Ok(0)
}

#[derive(Serialize)]
struct TgraphStats {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    generators: Vec<String>,
    edges: usize,
    connected: bool,
    generates_symmetric_group: bool,
    /// Null for forests.
    girth: Option<usize>,
    aut_order: u64,
    /// Omitted when the graph is disconnected (no verdict applies).
    #[serde(skip_serializing_if = "Option::is_none")]
    precheck: Option<String>,
    timestamp: String,
}

fn run_tgraph(args: &GraphArgs, set: &TranspositionSet) -> Result<u8, Error> {
    let t = build_transposition_graph(set);
    if args.dot.is_some() {
        write_dot(args, &t.to_dot())?;
    }
    let precheck = match normality_precheck(&t) {
        Ok(p) => Some(p.as_str().to_string()),
        Err(Error::Disconnected) => None,
        Err(e) => return Err(e),
    };
    let stats = TgraphStats {
        n: t.n(),
        family: family_name(args),
        generators: set.pair_strings(),
        edges: t.graph().edge_count(),
        connected: t.graph().is_connected(),
        generates_symmetric_group: t.generates_symmetric_group(),
        girth: t.girth(),
        aut_order: small_graph_automorphisms(&t)?
            .order_u64()
            .expect("point graph group is small"),
        precheck,
        timestamp: timestamp(),
    };
    let text = kv_lines(&[
        ("n", stats.n.to_string()),
        ("generators", stats.generators.join(",")),
        ("edges", stats.edges.to_string()),
        ("connected", stats.connected.to_string()),
        ("generates_symmetric_group", stats.generates_symmetric_group.to_string()),
        ("girth", stats.girth.map_or("none".into(), |g| g.to_string())),
        ("aut_order", stats.aut_order.to_string()),
        ("precheck", stats.precheck.clone().unwrap_or("DISCONNECTED".into())),
        ("timestamp", stats.timestamp.clone()),
    ]);
    emit(args, to_json(&stats), text)?;
    Ok(0)
}

#[derive(Serialize)]
struct AutReport {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    generators: Vec<String>,
    vertices: usize,
    aut_order: String,
    aut_generators: Vec<String>,
    timestamp: String,
}

fn run_aut(args: &GraphArgs, set: &TranspositionSet, mode: ExecMode) -> Result<u8, Error> {
    let x = build_graph(args, set, mode)?;
    if args.dot.is_some() {
        write_dot(args, &x.to_dot()?)?;
    }
    let aut = automorphism_group_with(x.graph(), DEFAULT_SEARCH_BOUND, mode)?;
    let report = AutReport {
        n: x.n(),
        family: family_name(args),
        generators: set.pair_strings(),
        vertices: x.vertex_count(),
        aut_order: aut.order().to_string(),
        aut_generators: aut.generators().iter().map(|p| p.to_string()).collect(),
        timestamp: timestamp(),
    };
    let mut text = kv_lines(&[
        ("n", report.n.to_string()),
        ("generators", report.generators.join(",")),
        ("vertices", report.vertices.to_string()),
        ("aut_order", report.aut_order.clone()),
        ("timestamp", report.timestamp.clone()),
    ]);
    for g in &report.aut_generators {
        let _ = write!(text, "\ngenerator {g}");
    }
    emit(args, to_json(&report), text)?;
    Ok(0)
}

fn run_verify(args: &GraphArgs, set: &TranspositionSet, mode: ExecMode) -> Result<u8, Error> {
    let x = build_graph(args, set, mode)?;
    if args.dot.is_some() {
        write_dot(args, &x.to_dot()?)?;
    }
    let mut report = verify_direct_product_with(&x, mode)?;
    report.family = family_name(args);
    report.timestamp = timestamp();

    emit(args, to_json(&report), report.to_string())?;

    // The precheck predicts the verdict for trees, girth >= 5 and the two
    // small cycles; a wrong prediction is the mismatch exit, not an error.
    let expected = match report.precheck.as_str() {
        "TREE_NORMAL" | "GIRTH5_NORMAL" => Some(true),
        "SMALL_CYCLE_NONNORMAL" => Some(false),
        _ => None,
    };
    match expected {
        Some(want) if want != report.is_direct_product => Ok(EXIT_MISMATCH),
        _ => Ok(0),
    }
}

#[derive(Serialize)]
struct OracleReport {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    generators: Vec<String>,
    vertices: usize,
    aut_order: String,
    timestamp: String,
}

fn run_oracle(args: &GraphArgs, set: &TranspositionSet, mode: ExecMode) -> Result<u8, Error> {
    let x = build_graph(args, set, mode)?;
    if args.dot.is_some() {
        write_dot(args, &x.to_dot()?)?;
    }
    let cap = args.oracle_cap.unwrap_or(DEFAULT_ORACLE_BOUND);
    let all = brute_force_automorphism_list_with(x.graph(), cap, mode)?;
    let report = OracleReport {
        n: x.n(),
        family: family_name(args),
        generators: set.pair_strings(),
        vertices: x.vertex_count(),
        aut_order: all.len().to_string(),
        timestamp: timestamp(),
    };
    let text = kv_lines(&[
        ("n", report.n.to_string()),
        ("generators", report.generators.join(",")),
        ("vertices", report.vertices.to_string()),
        ("aut_order", report.aut_order.clone()),
        ("timestamp", report.timestamp.clone()),
    ]);
    emit(args, to_json(&report), text)?;
    Ok(0)
}
