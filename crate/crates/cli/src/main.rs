use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use log::debug;

use totalcol::decomposition::{decompose, Decomposition, DecompositionKind};
use totalcol::engine::{total_colour_with, DiagnosticKind, EngineError, EngineOptions, Outcome};
use totalcol::io::{self, IoError, Names};
use totalcol::oracle::{self, check_total_colouring, OracleError, Violation};
use totalcol::recognition::{classify_basic, find_square, find_unichord, ClassLabel};
use totalcol::{Colour, Graph, TotalColouring};

const OK: u8 = 0;
const VIOLATION: u8 = 1;
const TYPE_TWO: u8 = 2;
const PARSE: u8 = 64;
const CLASS: u8 = 65;
const INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "totalcol", version, about = "4-total-colouring of {square, unichord}-free subcubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge list, or graph6 with --graph6.
    file: PathBuf,
    /// Read the input as graph6.
    #[arg(long)]
    graph6: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class label and square/unichord witnesses.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Run the unichord scan only up to this many vertices.
        #[arg(long, default_value_t = 40)]
        max_exact: usize,
    },
    /// Print the cutsets of the structural decomposition.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Write the decomposition tree as DOT.
        #[arg(long, value_name = "OUT")]
        tree: Option<PathBuf>,
    },
    /// Total-colour the graph and print every element with its colour.
    Color {
        #[command(flatten)]
        input: Input,
        /// Also write the colouring as JSON.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        /// Skip the membership test.
        #[arg(long)]
        trust_class: bool,
        /// Write the recursion tree as DOT.
        #[arg(long, value_name = "OUT")]
        trace: Option<PathBuf>,
        /// Run the unichord scan only up to this many vertices.
        #[arg(long, default_value_t = 40)]
        max_exact: usize,
        /// Threads used across connected components.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a colouring file against the graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Colouring file from `color`, or JSON with --json
        colouring: PathBuf,
        /// Palette size.
        #[arg(short, default_value_t = 4)]
        k: Colour,
        /// The colouring file is JSON.
        #[arg(long)]
        json: bool,
    },
    /// Exact search, limited to small graphs.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Print the total chromatic number (the default).
        #[arg(long, conflicts_with = "constrained")]
        chi_t: bool,
        /// Complete the partial colouring in this file.
        #[arg(long, value_name = "FILE")]
        constrained: Option<PathBuf>,
        /// Palette size for --constrained.
        #[arg(short, default_value_t = 4)]
        k: Colour,
        /// Maximum number of elements searched.
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: usize,
    },
}

/// An error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        Failure::new(PARSE, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(INTERNAL, format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<(Graph, Names), Failure> {
    let text = read(&input.file)?;
    let loaded = if input.graph6 {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        let g = io::parse_graph6(line)?;
        let names = Names::numeric(&g);
        (g, names)
    } else {
        io::parse_edge_list(&text)?
    };
    debug!("read {} vertices, {} edges", loaded.0.vertex_count(), loaded.0.edge_count());
    Ok(loaded)
}

fn describe_violation(v: &Violation, names: &Names) -> String {
    let e = |e: &totalcol::Edge| {
        let (a, b) = e.endpoints();
        format!("{} {}", names.token(a), names.token(b))
    };
    match v {
        Violation::AdjacentVertices { a, b, colour } => {
            format!("adjacent vertices {} and {} share colour {colour}", names.token(*a), names.token(*b))
        }
        Violation::AdjacentEdges { e: x, f: y, colour } => {
            format!("adjacent edges {} and {} share colour {colour}", e(x), e(y))
        }
        Violation::Incident { v, e: x, colour } => {
            format!("vertex {} and incident edge {} share colour {colour}", names.token(*v), e(x))
        }
        Violation::OutOfPalette { element, colour } => {
            let what = match element {
                totalcol::Element::Vertex(v) => format!("vertex {}", names.token(*v)),
                totalcol::Element::Edge(x) => format!("edge {}", e(x)),
            };
            format!("{what} has colour {colour} outside the palette")
        }
    }
}

fn classify(input: &Input, max_exact: usize) -> Result<u8, Failure> {
    let (g, names) = load(input)?;
    let label = if g.is_empty() {
        "empty".to_string()
    } else if !g.is_connected() {
        "disconnected".to_string()
    } else {
        classify_basic(&g).map_or_else(|e| e.to_string(), |c: ClassLabel| c.to_string())
    };
    println!("class: {label}");
    println!("max-degree: {}", g.max_degree());
    match find_square(&g) {
        Some(sq) => println!("square: {}", sq.map(|v| names.token(v)).join(" ")),
        None => println!("square: none"),
    }
    if g.vertex_count() <= max_exact {
        match find_unichord(&g) {
            Some(e) => {
                let (a, b) = e.endpoints();
                println!("unichord: {} {}", names.token(a), names.token(b));
            }
            None => println!("unichord: none"),
        }
    } else {
        println!("unichord: not checked, {} vertices exceed --max-exact {max_exact}", g.vertex_count());
    }
    Ok(OK)
}

fn print_decomposition(d: &Decomposition, names: &Names, depth: usize) {
    let pad = "  ".repeat(depth);
    let n = d.graph.vertex_count();
    let set = |s: &std::collections::BTreeSet<totalcol::Vertex>| {
        s.iter().map(|&v| names.token(v)).collect::<Vec<_>>().join(" ")
    };
    match &d.kind {
        DecompositionKind::Basic(c) => println!("{pad}basic {c} |V|={n}"),
        DecompositionKind::OneCutset(s) => println!("{pad}1-cutset {} |V|={n}", names.token(s.v)),
        DecompositionKind::TwoCutset(s) => println!(
            "{pad}2-cutset {} {} |V|={n} X: {}",
            names.token(s.a),
            names.token(s.b),
            set(&s.x)
        ),
        DecompositionKind::OneJoin(j) => println!("{pad}1-join |V|={n} A: {} B: {}", set(&j.a), set(&j.b)),
    }
    for c in &d.children {
        print_decomposition(c, names, depth + 1);
    }
}

fn decompose_cmd(input: &Input, tree: Option<&Path>) -> Result<u8, Failure> {
    let (g, names) = load(input)?;
    // one digraph per component, concatenated
    let mut dot = String::new();
    for comp in g.connected_components() {
        let h = g.induced_subgraph(comp.iter()).map_err(|e| Failure::new(INTERNAL, e.to_string()))?;
        let d = decompose(&h).map_err(|e| Failure::new(INTERNAL, e.to_string()))?;
        print_decomposition(&d, &names, 0);
        dot.push_str(&d.to_dot());
    }
    if let Some(path) = tree {
        write(path, &dot)?;
    }
    Ok(OK)
}

fn color(
    input: &Input,
    json: Option<&Path>,
    trace: Option<&Path>,
    opts: &EngineOptions,
) -> Result<u8, Failure> {
    let (g, names) = load(input)?;
    let outcome = total_colour_with(&g, opts).map_err(|e: EngineError| {
        if e.is_class_violation() {
            Failure::new(CLASS, format!("not in the class: {e}"))
        } else {
            Failure::new(INTERNAL, format!("internal error: {e}"))
        }
    })?;
    if let Some(path) = trace {
        write(path, &outcome.tree().to_dot())?;
    }
    let c = outcome.colouring();
    if let Some(path) = json {
        write(path, &io::to_json(c, &names))?;
    }
    if let Outcome::K4(report) = &outcome {
        println!("# type 2: a K4 component needs {} colours", report.chi_t);
    }
    print!("{}", io::write_colouring(c, &names));

    let mut code = if outcome.is_k4() { TYPE_TWO } else { OK };
    for d in outcome.diagnostics() {
        eprintln!("diagnostic ({:?}): {}", d.kind, d.message);
        if d.kind == DiagnosticKind::Assertion {
            code = INTERNAL;
        }
    }
    Ok(code)
}

fn verify(input: &Input, colouring: &Path, k: Colour, json: bool) -> Result<u8, Failure> {
    let (g, names) = load(input)?;
    let text = read(colouring)?;
    let c: TotalColouring = if json {
        io::parse_json_colouring(&text, &names)?
    } else {
        io::parse_colouring(&text, &names)?
    };
    match check_total_colouring(&g, &c, k) {
        Ok(report) if report.is_valid() => {
            println!("ok: proper {k}-total-colouring");
            Ok(OK)
        }
        Ok(report) => {
            for v in &report.violations {
                println!("violation: {}", describe_violation(v, &names));
            }
            Ok(VIOLATION)
        }
        Err(OracleError::MissingElement(el)) => {
            println!("violation: {el} is not coloured");
            Ok(VIOLATION)
        }
        Err(e) => Err(Failure::new(PARSE, e.to_string())),
    }
}

fn oracle_cmd(input: &Input, constrained: Option<&Path>, k: Colour, budget: usize) -> Result<u8, Failure> {
    let (g, names) = load(input)?;
    let over = |e: OracleError| Failure::new(PARSE, e.to_string());
    match constrained {
        None => {
            let chi = oracle::exact_chi_t(&g, budget).map_err(over)?;
            println!("chi_t: {chi}");
            Ok(OK)
        }
        Some(path) => {
            let fixed = io::parse_colouring(&read(path)?, &names)?;
            match oracle::constrained_search_with_budget(&g, &fixed, k, &[], budget).map_err(over)? {
                Some(c) => {
                    print!("{}", io::write_colouring(&c, &names));
                    Ok(OK)
                }
                None => {
                    println!("none: no {k}-total-colouring extends the given colours");
                    Ok(VIOLATION)
                }
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify { input, max_exact } => classify(&input, max_exact),
        Command::Decompose { input, tree } => decompose_cmd(&input, tree.as_deref()),
        Command::Color {
            input,
            json,
            trust_class,
            trace,
            max_exact,
            jobs,
        } => {
            let opts = EngineOptions {
                max_exact,
                trust_class,
                jobs: jobs.max(1),
            };
            color(&input, json.as_deref(), trace.as_deref(), &opts)
        }
        Command::Verify {
            input,
            colouring,
            k,
            json,
        } => verify(&input, &colouring, k, json),
        Command::Oracle {
            input,
            chi_t: _,
            constrained,
            k,
            budget,
        } => oracle_cmd(&input, constrained.as_deref(), k, budget),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { PARSE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
