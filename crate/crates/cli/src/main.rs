//! `zdtk` — command-line front end for the zero-divisor-graph toolkit.
//!
//! Subcommands:
//!
//! * `powerset <n>` — emit the semigroup of subsets of an n-set under
//!   intersection (multiplication table, optionally the edge list of its
//!   zero-divisor graph and a recognition report).
//! * `check <table>` — parse and validate a multiplication table, then
//!   report its invariants as a one-line JSON record.
//! * `recognize <input>` — decide whether a graph (given directly as an
//!   edge list, or derived from a multiplication table) is isomorphic to
//!   the zero-divisor graph of a subset semigroup, with a certified
//!   isomorphism on acceptance and a named failed check on rejection.
//! * `enumerate` — stream small commutative semigroups with zero, either
//!   exhaustively up to isomorphism or by seeded random sampling.
//! * `export-dot <input>` — render a graph in DOT, optionally colored by
//!   the recognized layer structure.
//! * `equations <table>` — recognize the table's zero-divisor graph and
//!   check the defining identities of the recognized scaffold against the
//!   table itself.
//!
//! Exit codes: `0` when the input is accepted and every requested check
//! passes, `1` when the input is rejected or a property fails (the JSON
//! report names the failed check and carries a concrete witness), `2` for
//! malformed input or usage errors.  Reports contain no timestamps or
//! machine data, so identical inputs (and seeds) produce identical bytes.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zdtk::enumerator::{
    enumerate_semigroups, semigroup_record, EnumerationConfig, EnumerationMode,
};
use zdtk::recognizer::equations::{equation_suite_for_partition, EquationReport};
use zdtk::recognizer::recognize_capped;
use zdtk::recognizer::report::{recognition_report, RecognitionReport};
use zdtk::semigroup::powerset_semigroup;
use zdtk::semigroup::text::{parse_cayley_table, write_cayley_table};
use zdtk::zdgraph::io::{parse_edge_list, to_dot, write_edge_list};
use zdtk::zdgraph::{zero_divisor_graph, Graph};

/// Largest ground-set size the CLI will materialize in full: the order
/// 2^12 = 4096 table and its 4094-vertex graph are the practical ceiling
/// for terminal output; the library itself goes further.
const MAX_CLI_POWERSET_N: usize = 12;

#[derive(Parser)]
#[command(
    name = "zdtk",
    version,
    about = "Finite semigroups, zero-divisor graphs, and the subset-semigroup recognizer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Mirror the JSON report to this file (stdout still receives it).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// RNG seed; required by `enumerate --mode sample`.
    #[arg(long, global = true, value_name = "U64")]
    seed: Option<u64>,

    /// Reject inputs whose ground-set size would exceed this bound.
    #[arg(long, global = true, value_name = "K")]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the semigroup of subsets of {x1, ..., xn} under intersection.
    Powerset {
        /// Ground-set size, between 1 and 12.
        n: usize,
        /// Write the multiplication table here instead of stdout.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
        /// Also write the zero-divisor graph as an edge list to this file.
        #[arg(long, value_name = "PATH")]
        edges: Option<PathBuf>,
    },

    /// Parse and validate a multiplication table; report its invariants.
    Check {
        /// Table file in the `order <n> ...` text format.
        #[arg(value_parser = existing_file)]
        table: PathBuf,
    },

    /// Decide whether a graph is the zero-divisor graph of a subset semigroup.
    Recognize {
        /// Edge-list file, or a multiplication table (first token `order`).
        #[arg(value_parser = existing_file)]
        input: PathBuf,
    },

    /// Stream small commutative semigroups with zero.
    Enumerate {
        /// Semigroup order (number of elements, zero included).
        #[arg(long)]
        order: usize,
        /// Search mode; `sample` requires --seed.
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Number of tables to draw in sample mode.
        #[arg(long, default_value_t = 100, value_name = "N")]
        count: usize,
        /// Keep only tables where every element is idempotent.
        #[arg(long)]
        require_idempotent: bool,
        /// Keep only tables containing a unity.
        #[arg(long)]
        require_unity: bool,
    },

    /// Render a graph (edge list or table input) in DOT.
    ExportDot {
        /// Edge-list file, or a multiplication table (first token `order`).
        #[arg(value_parser = existing_file)]
        input: PathBuf,
        /// Color vertices by recognized layer (rejects unrecognized graphs).
        #[arg(long)]
        layers: bool,
        /// Write the DOT text here instead of stdout.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },

    /// Check the recognized scaffold's defining identities against a table.
    Equations {
        /// Table file in the `order <n> ...` text format.
        #[arg(value_parser = existing_file)]
        table: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Every isomorphism class, ascending (order 4 at most).
    Exhaustive,
    /// Seeded random tables, deterministic per seed.
    Sample,
}

/// Combined output of the `equations` subcommand.
#[derive(Serialize)]
struct EquationsOutput {
    recognition: RecognitionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    equations: Option<EquationReport>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let cap = cli.max_n.unwrap_or(usize::MAX);
    match cli.command {
        Command::Powerset { n, output, edges } => cmd_powerset(n, output, edges, &cli.json, cap),
        Command::Check { table } => cmd_check(&table, &cli.json),
        Command::Recognize { input } => cmd_recognize(&input, &cli.json, cap),
        Command::Enumerate {
            order,
            mode,
            count,
            require_idempotent,
            require_unity,
        } => cmd_enumerate(
            order,
            mode,
            count,
            require_idempotent,
            require_unity,
            cli.seed,
            &cli.json,
        ),
        Command::ExportDot {
            input,
            layers,
            output,
        } => cmd_export_dot(&input, layers, &output, &cli.json, cap),
        Command::Equations { table } => cmd_equations(&table, &cli.json, cap),
    }
}

fn cmd_powerset(
    n: usize,
    output: Option<PathBuf>,
    edges: Option<PathBuf>,
    json: &Option<PathBuf>,
    cap: usize,
) -> Result<u8, String> {
    if n == 0 || n > MAX_CLI_POWERSET_N {
        return Err(format!(
            "ground-set size must be between 1 and {MAX_CLI_POWERSET_N}, got {n}"
        ));
    }
    let s = powerset_semigroup(n).map_err(|e| e.to_string())?;
    let table = write_cayley_table(&s);
    match &output {
        Some(path) => write_file(path, &table)?,
        None => print!("{table}"),
    }
    if edges.is_some() || json.is_some() {
        let zd = zero_divisor_graph(&s);
        if let Some(path) = &edges {
            write_file(path, &write_edge_list(&zd.graph))?;
        }
        if json.is_some() {
            let outcome = recognize_capped(&zd.graph, cap);
            let accepted = outcome.is_ok();
            let line = to_json(&recognition_report(&zd.graph, &outcome));
            mirror_json(&line, json)?;
            if !accepted {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn cmd_check(table: &PathBuf, json: &Option<PathBuf>) -> Result<u8, String> {
    let text = read_file(table)?;
    let s = parse_cayley_table(&text).map_err(|e| e.to_string())?;
    let line = to_json(&semigroup_record(&s));
    println!("{line}");
    mirror_json(&line, json)?;
    Ok(0)
}

fn cmd_recognize(input: &PathBuf, json: &Option<PathBuf>, cap: usize) -> Result<u8, String> {
    let g = load_graph(&read_file(input)?)?;
    let outcome = recognize_capped(&g, cap);
    let accepted = outcome.is_ok();
    let line = to_json(&recognition_report(&g, &outcome));
    println!("{line}");
    mirror_json(&line, json)?;
    Ok(if accepted { 0 } else { 1 })
}

fn cmd_enumerate(
    order: usize,
    mode: Mode,
    count: usize,
    require_idempotent: bool,
    require_unity: bool,
    seed: Option<u64>,
    json: &Option<PathBuf>,
) -> Result<u8, String> {
    let mode = match mode {
        Mode::Exhaustive => EnumerationMode::Exhaustive,
        Mode::Sample => {
            let seed = seed.ok_or("sample mode requires --seed for reproducibility")?;
            EnumerationMode::RandomSample { count, seed }
        }
    };
    let config = EnumerationConfig {
        order,
        mode,
        require_idempotent,
        require_unity,
    };
    let semigroups = enumerate_semigroups(&config).map_err(|e| e.to_string())?;
    for s in &semigroups {
        println!("{}", write_cayley_table(s));
    }
    if json.is_some() {
        let lines: Vec<String> = semigroups
            .iter()
            .map(|s| to_json(&semigroup_record(s)))
            .collect();
        mirror_json(&lines.join("\n"), json)?;
    }
    Ok(0)
}

fn cmd_export_dot(
    input: &PathBuf,
    layers: bool,
    output: &Option<PathBuf>,
    json: &Option<PathBuf>,
    cap: usize,
) -> Result<u8, String> {
    let g = load_graph(&read_file(input)?)?;
    let layer_of: Option<Vec<usize>> = if layers {
        match recognize_capped(&g, cap) {
            Ok(rec) => Some(rec.partition.layers().to_vec()),
            Err(diagnosis) => {
                let line = to_json(&recognition_report(&g, &Err(diagnosis)));
                println!("{line}");
                mirror_json(&line, json)?;
                return Ok(1);
            }
        }
    } else {
        None
    };
    let dot = to_dot(&g, layer_of.as_deref());
    match output {
        Some(path) => write_file(path, &dot)?,
        None => print!("{dot}"),
    }
    Ok(0)
}

fn cmd_equations(table: &PathBuf, json: &Option<PathBuf>, cap: usize) -> Result<u8, String> {
    let text = read_file(table)?;
    let s = parse_cayley_table(&text).map_err(|e| e.to_string())?;
    let zd = zero_divisor_graph(&s);
    let outcome = recognize_capped(&zd.graph, cap);
    let (code, equations) = match &outcome {
        Ok(rec) => {
            let report = equation_suite_for_partition(&s, &zd, &rec.partition);
            (u8::from(!report.all_passed()), Some(report))
        }
        Err(_) => (1, None),
    };
    let line = to_json(&EquationsOutput {
        recognition: recognition_report(&zd.graph, &outcome),
        equations,
    });
    println!("{line}");
    mirror_json(&line, json)?;
    Ok(code)
}

/// Clap value parser: the path must name an existing file.
fn existing_file(raw: &str) -> Result<PathBuf, String> {
    let path = PathBuf::from(raw);
    if path.is_file() {
        Ok(path)
    } else {
        Err(format!("file not found: {raw}"))
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write_file(path: &PathBuf, content: &str) -> Result<(), String> {
    fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Loads a graph from either supported text format, sniffing by the first
/// significant token: `order` opens a multiplication table (the graph is
/// then its zero-divisor graph), anything else is read as an edge list.
fn load_graph(text: &str) -> Result<Graph, String> {
    let first = text
        .lines()
        .map(|line| line.find('#').map_or(line, |pos| &line[..pos]))
        .flat_map(str::split_whitespace)
        .next();
    if first == Some("order") {
        let s = parse_cayley_table(text).map_err(|e| e.to_string())?;
        Ok(zero_divisor_graph(&s).graph)
    } else {
        parse_edge_list(text).map_err(|e| e.to_string())
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}

/// Writes the JSON line to the mirror file when one was requested.
fn mirror_json(line: &str, json: &Option<PathBuf>) -> Result<(), String> {
    if let Some(path) = json {
        write_file(path, &format!("{line}\n"))?;
    }
    Ok(())
}
