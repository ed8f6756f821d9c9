//! Command-line front end. `run` takes the full argument vector (program name
//! first) and returns the exit code with everything destined for the
//! terminal, so it can be driven from tests without spawning a process.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{
    bipartition, blocks, has_even_cycle, is_forest, parse_edge_list, parse_graph6,
    parse_orientation, parse_weighted_edge_list, parse_weighted_orientation, Graph, OrientedGraph,
    WeightedOrientedGraph,
};
use crate::matrix::{Matrix, SkewMatrix};
use crate::orientations::{
    all_orientations, toward_y_orientation, verify, OrientationReport, Property, SweepOptions,
    DEFAULT_BUDGET, DEFAULT_ROOT_TOLERANCE, DEFAULT_SEED,
};
use crate::permanent::{
    perm_poly_direct, permanent_cycle_cover, permanent_naive, permanent_ryser, permanent_skew_even,
};
use crate::poly::{char_poly, matching_polynomial, roots, Poly, RootMultiset, DEFAULT_TOLERANCE};
use crate::rational::Rational;
use crate::sachs::{
    perm_poly_adjacency_sachs, perm_poly_skew_sachs, perm_poly_weighted_skew_sachs,
    perm_poly_weighted_undirected_sachs,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_REFUTED: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

/// Environment variable capping the worker threads.
pub const THREADS_VAR: &str = "SKEWPERM_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "skewperm",
    version,
    about = "Exact permanental polynomials of graphs, oriented graphs and skew-symmetric matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format; detected from the first line when omitted.
    #[arg(long, global = true, value_enum)]
    input_format: Option<Format>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,

    /// Root residual tolerance for `spectrum`, root matching distance for
    /// `verify forest`.
    #[arg(long, global = true, value_parser = positive_f64)]
    tol: Option<f64>,

    /// Orientations swept exhaustively before switching to sampling.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Seed of the orientation sampler.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Permanental polynomial per(xI - A), coefficients a_0 first.
    Permpoly {
        #[command(flatten)]
        kind: PermpolyKind,
        #[command(flatten)]
        src: Source,
    },
    /// Matching polynomial of a graph.
    Matchpoly {
        #[command(flatten)]
        src: Source,
    },
    /// Characteristic polynomial det(xI - A).
    Charpoly {
        #[command(flatten)]
        src: Source,
    },
    /// Permanent of a matrix (or of the adjacency / skew adjacency matrix).
    Permanent {
        #[command(flatten)]
        method: PermanentMethod,
        #[command(flatten)]
        src: Source,
    },
    /// Roots of the permanental (or characteristic) polynomial.
    Spectrum {
        /// Use det(xI - A) instead of per(xI - A).
        #[arg(long)]
        characteristic: bool,
        #[command(flatten)]
        src: Source,
    },
    /// Structural predicates of a graph.
    Classify {
        #[arg(value_enum)]
        predicate: Predicate,
        #[command(flatten)]
        src: Source,
    },
    /// Orientation sweep for one property; several graph6 lines are checked in turn.
    Verify {
        #[arg(value_enum)]
        property: PropertyArg,
        #[command(flatten)]
        src: Source,
    },
    /// Build orientations.
    Orient {
        #[arg(value_enum)]
        action: OrientAction,
        /// Edge index for `reverse`.
        #[arg(long)]
        edge: Option<usize>,
        #[command(flatten)]
        src: Source,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// Input file, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Orientation bitmask applied to a graph input (bit e set: edge e runs high to low).
    #[arg(long)]
    mask: Option<u64>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct PermpolyKind {
    #[arg(long)]
    adjacency: bool,
    #[arg(long)]
    skew: bool,
    #[arg(long)]
    weighted_skew: bool,
    #[arg(long)]
    weighted_undirected: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct PermanentMethod {
    #[arg(long)]
    naive: bool,
    #[arg(long)]
    ryser: bool,
    #[arg(long)]
    skew_even: bool,
    #[arg(long)]
    cycle_cover: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Orientation,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Predicate {
    EvenCycle,
    Bipartite,
    Forest,
    Blocks,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    SamePoly,
    MatchingEq,
    BipartiteI,
    Forest,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::SamePoly => Property::SamePoly,
            PropertyArg::MatchingEq => Property::MatchingEq,
            PropertyArg::BipartiteI => Property::BipartiteI,
            PropertyArg::Forest => Property::Forest,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrientAction {
    TowardY,
    All,
    Reverse,
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("tolerance must be a positive finite number".into())
    }
}

/// Parses `argv` and executes the command. Returns the exit code and the
/// text for stdout (exit 0 or 3) or stderr (anything else).
pub fn run<S: AsRef<str>>(argv: &[S]) -> (u8, String) {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return (code, e.render().to_string());
        }
    };
    let threads = match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Some(t),
            _ => {
                return (
                    EXIT_USAGE,
                    format!("error: {THREADS_VAR} must be a positive integer\n"),
                )
            }
        },
        Err(_) => None,
    };
    let execute = || match execute(&cli) {
        Ok((code, out)) => (code, out),
        Err(e) => (EXIT_INPUT, format!("error: {e}\n")),
    };
    match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(execute),
            Err(e) => (EXIT_INPUT, format!("error: {e}\n")),
        },
        None => execute(),
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    let outcome = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    outcome.map_err(|e| Error::Parse {
        line: 0,
        reason: format!("cannot read {path}: {e}"),
    })?;
    Ok(text)
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// graph6 lines are a single token over bytes 63..=126 (or carry the
/// header); a matrix starts with its order alone on a line; anything else is
/// an edge list style header `n m`.
fn detect(text: &str) -> Format {
    let first = content_lines(text).next().unwrap_or("");
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if first.starts_with(">>graph6<<") {
        Format::Graph6
    } else if tokens.len() == 1 && tokens[0].bytes().all(|b| b.is_ascii_digit()) {
        Format::Matrix
    } else if tokens.len() == 1 {
        Format::Graph6
    } else {
        Format::Edgelist
    }
}

struct Input {
    text: String,
    format: Format,
    mask: Option<u64>,
}

impl Input {
    fn load(cli: &Cli, src: &Source) -> Result<Self> {
        let text = read_input(&src.input)?;
        let format = cli.input_format.unwrap_or_else(|| detect(&text));
        Ok(Self {
            text,
            format,
            mask: src.mask,
        })
    }

    fn graphs6(&self) -> Result<Vec<Graph>> {
        content_lines(&self.text).map(parse_graph6).collect()
    }

    fn graph(&self) -> Result<Graph> {
        match self.format {
            Format::Graph6 => {
                let mut gs = self.graphs6()?;
                if gs.len() != 1 {
                    return Err(Error::Graph(format!(
                        "expected one graph6 line, found {}",
                        gs.len()
                    )));
                }
                Ok(gs.remove(0))
            }
            Format::Edgelist => parse_edge_list(&self.text),
            Format::Orientation => Ok(parse_orientation(&self.text)?.graph().clone()),
            Format::Matrix => graph_from_matrix(&Matrix::parse(&self.text)?),
        }
    }

    /// An orientation file, a skew matrix with entries in {0, 1, -1}, or a
    /// graph with `--mask` (mask 0 when absent).
    fn oriented(&self) -> Result<OrientedGraph> {
        match self.format {
            Format::Orientation | Format::Edgelist => parse_orientation(&self.text),
            Format::Matrix => {
                let wog = WeightedOrientedGraph::from_skew_matrix(&SkewMatrix::new(
                    Matrix::parse(&self.text)?,
                )?);
                if wog.weights().iter().any(|w| !w.is_one()) {
                    return Err(Error::Orientation(
                        "skew matrix has entries other than 0 and +-1".into(),
                    ));
                }
                Ok(wog.oriented().clone())
            }
            Format::Graph6 => OrientedGraph::from_mask(self.graph()?, self.mask.unwrap_or(0)),
        }
    }

    fn weighted_oriented(&self) -> Result<WeightedOrientedGraph> {
        match self.format {
            Format::Orientation | Format::Edgelist => parse_weighted_orientation(&self.text),
            Format::Matrix => Ok(WeightedOrientedGraph::from_skew_matrix(&SkewMatrix::new(
                Matrix::parse(&self.text)?,
            )?)),
            Format::Graph6 => Ok(WeightedOrientedGraph::unit(self.oriented()?)),
        }
    }

    fn weighted_undirected(&self) -> Result<(Graph, Vec<Rational>)> {
        match self.format {
            Format::Edgelist | Format::Orientation => parse_weighted_edge_list(&self.text),
            Format::Matrix => {
                let a = Matrix::parse(&self.text)?;
                let g = graph_support(&a)?;
                let weights = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| a.get(u, v).clone())
                    .collect();
                Ok((g, weights))
            }
            Format::Graph6 => {
                let g = self.graph()?;
                let ones = vec![Rational::one(); g.size()];
                Ok((g, ones))
            }
        }
    }

    /// The matrix itself, the skew adjacency of an orientation, or the
    /// adjacency matrix of a graph.
    fn matrix(&self) -> Result<Matrix> {
        match self.format {
            Format::Matrix => Matrix::parse(&self.text),
            Format::Orientation => Ok(self.oriented()?.skew_adjacency().into_matrix()),
            Format::Graph6 if self.mask.is_some() => {
                Ok(self.oriented()?.skew_adjacency().into_matrix())
            }
            Format::Graph6 | Format::Edgelist => Ok(self.graph()?.adjacency_matrix()),
        }
    }

    /// Whether the input describes an orientation rather than a graph.
    fn is_oriented(&self) -> bool {
        self.format == Format::Orientation || (self.format == Format::Graph6 && self.mask.is_some())
    }
}

/// Graph on the nonzero off-diagonal entries of a symmetric matrix with zero diagonal.
fn graph_support(a: &Matrix) -> Result<Graph> {
    let n = a.order();
    let mut edges = Vec::new();
    for i in 0..n {
        if !a.get(i, i).is_zero() {
            return Err(Error::Graph(format!("nonzero diagonal entry at {i}")));
        }
        for j in i + 1..n {
            if a.get(i, j) != a.get(j, i) {
                return Err(Error::Graph(format!(
                    "matrix is not symmetric at ({i}, {j})"
                )));
            }
            if !a.get(i, j).is_zero() {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

fn graph_from_matrix(a: &Matrix) -> Result<Graph> {
    let g = graph_support(a)?;
    if g.edges().iter().any(|&(u, v)| !a.get(u, v).is_one()) {
        return Err(Error::Graph(
            "adjacency matrix entries must be 0 or 1".into(),
        ));
    }
    Ok(g)
}

fn poly_json(kind: &str, p: &Poly) -> Value {
    json!({
        "kind": kind,
        "degree": p.degree(),
        "coefficients": p.to_strings(),
    })
}

fn poly_text(p: &Poly) -> String {
    format!("{p}\ncoefficients: {}\n", p.to_strings().join(" "))
}

fn render(cli: &Cli, value: Value, text: String) -> String {
    match cli.output {
        OutputFormat::Json => format!("{}\n", serde_json::to_string(&value).expect("json")),
        OutputFormat::Text => text,
    }
}

fn emit_poly(cli: &Cli, kind: &str, p: &Poly) -> (u8, String) {
    (EXIT_OK, render(cli, poly_json(kind, p), poly_text(p)))
}

fn arcs_json(og: &OrientedGraph) -> Value {
    json!({
        "n": og.graph().order(),
        "mask": og.mask(),
        "arcs": og.arcs().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

fn orientation_file(og: &OrientedGraph) -> String {
    let mut s = format!("{} {}\n", og.graph().order(), og.graph().size());
    for (a, b) in og.arcs() {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

fn report_text(r: &OrientationReport) -> String {
    let mut s = format!(
        "{} {} {} examined={}",
        r.graph6,
        r.property.name(),
        r.verdict.name(),
        r.examined
    );
    if let Some(seed) = r.seed {
        let _ = write!(s, " seed={seed}");
    }
    if let Some(w) = &r.witness {
        let _ = write!(s, " bits_a={}", w.bits_a);
        match w.bits_b {
            Some(b) => {
                let _ = write!(s, " bits_b={b}");
            }
            None => s.push_str(" bits_b=none"),
        }
        let _ = write!(
            s,
            " poly_a=[{}] poly_b=[{}]",
            w.poly_a.to_strings().join(", "),
            w.poly_b.to_strings().join(", ")
        );
    }
    s.push('\n');
    s
}

fn roots_text(p: &Poly, r: &RootMultiset) -> String {
    let mut s = poly_text(p);
    for z in r.as_slice() {
        let _ = writeln!(s, "{} {}", z.re, z.im);
    }
    s
}

fn execute(cli: &Cli) -> Result<(u8, String)> {
    match &cli.command {
        Command::Permpoly { kind, src } => {
            let input = Input::load(cli, src)?;
            let (name, p) = if kind.adjacency {
                ("adjacency", perm_poly_adjacency_sachs(&input.graph()?))
            } else if kind.skew {
                ("skew", perm_poly_skew_sachs(&input.oriented()?))
            } else if kind.weighted_skew {
                (
                    "weighted-skew",
                    perm_poly_weighted_skew_sachs(&input.weighted_oriented()?),
                )
            } else {
                let (g, w) = input.weighted_undirected()?;
                (
                    "weighted-undirected",
                    perm_poly_weighted_undirected_sachs(&g, &w)?,
                )
            };
            Ok(emit_poly(cli, name, &p))
        }
        Command::Matchpoly { src } => {
            let g = Input::load(cli, src)?.graph()?;
            Ok(emit_poly(cli, "matching", &matching_polynomial(&g)))
        }
        Command::Charpoly { src } => {
            let a = Input::load(cli, src)?.matrix()?;
            Ok(emit_poly(cli, "characteristic", &char_poly(&a)))
        }
        Command::Permanent { method, src } => {
            let a = Input::load(cli, src)?.matrix()?;
            let (name, value) = if method.naive {
                ("naive", permanent_naive(&a)?)
            } else if method.ryser {
                ("ryser", permanent_ryser(&a))
            } else if method.skew_even {
                ("skew-even", permanent_skew_even(&a)?)
            } else {
                ("cycle-cover", permanent_cycle_cover(&a))
            };
            let v = value.to_string();
            Ok((
                EXIT_OK,
                render(
                    cli,
                    json!({"method": name, "order": a.order(), "value": v}),
                    format!("{v}\n"),
                ),
            ))
        }
        Command::Spectrum {
            characteristic,
            src,
        } => {
            let input = Input::load(cli, src)?;
            let (kind, p) = if *characteristic {
                ("characteristic", char_poly(&input.matrix()?))
            } else if input.format == Format::Matrix {
                ("permanental", perm_poly_direct(&input.matrix()?))
            } else if input.is_oriented() {
                ("skew", perm_poly_skew_sachs(&input.oriented()?))
            } else {
                ("adjacency", perm_poly_adjacency_sachs(&input.graph()?))
            };
            let r = roots(&p, cli.tol.unwrap_or(DEFAULT_TOLERANCE))?;
            let mut value = poly_json(kind, &p);
            value["roots"] = serde_json::to_value(&r).expect("roots serialize");
            Ok((EXIT_OK, render(cli, value, roots_text(&p, &r))))
        }
        Command::Classify { predicate, src } => {
            let g = Input::load(cli, src)?.graph()?;
            let (value, text) = match predicate {
                Predicate::EvenCycle => {
                    let v = has_even_cycle(&g);
                    (
                        json!({"predicate": "even-cycle", "value": v}),
                        format!("{v}\n"),
                    )
                }
                Predicate::Forest => {
                    let v = is_forest(&g);
                    (json!({"predicate": "forest", "value": v}), format!("{v}\n"))
                }
                Predicate::Bipartite => match bipartition(&g) {
                    Some(b) => {
                        let join = |v: &[usize]| {
                            v.iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join(" ")
                        };
                        (
                            json!({"predicate": "bipartite", "value": true, "x": b.x, "y": b.y}),
                            format!("true\nx: {}\ny: {}\n", join(&b.x), join(&b.y)),
                        )
                    }
                    None => (
                        json!({"predicate": "bipartite", "value": false}),
                        "false\n".to_string(),
                    ),
                },
                Predicate::Blocks => {
                    let bs = blocks(&g);
                    let mut text = String::new();
                    for b in &bs {
                        let vs: Vec<String> = b.vertices.iter().map(ToString::to_string).collect();
                        let es: Vec<String> =
                            b.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                        let _ =
                            writeln!(text, "vertices: {} edges: {}", vs.join(" "), es.join(" "));
                    }
                    (json!({"predicate": "blocks", "value": bs}), text)
                }
            };
            Ok((EXIT_OK, render(cli, value, text)))
        }
        Command::Verify { property, src } => {
            let input = Input::load(cli, src)?;
            let graphs = match input.format {
                Format::Graph6 => input.graphs6()?,
                _ => vec![input.graph()?],
            };
            if graphs.is_empty() {
                return Err(Error::Graph("no graphs in input".into()));
            }
            let opts = SweepOptions {
                budget: cli.budget,
                seed: cli.seed,
                root_tolerance: cli.tol.unwrap_or(DEFAULT_ROOT_TOLERANCE),
                ..SweepOptions::default()
            };
            let reports = graphs
                .iter()
                .map(|g| verify((*property).into(), g, &opts))
                .collect::<Result<Vec<_>>>()?;
            let code = if reports.iter().any(OrientationReport::is_refuted) {
                EXIT_REFUTED
            } else {
                EXIT_OK
            };
            let value = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(&reports)
            }
            .expect("reports serialize");
            let text = reports.iter().map(report_text).collect();
            Ok((code, render(cli, value, text)))
        }
        Command::Orient { action, edge, src } => {
            let input = Input::load(cli, src)?;
            match action {
                OrientAction::TowardY => {
                    let g = input.graph()?;
                    let bip = bipartition(&g)
                        .ok_or_else(|| Error::NotBipartition("graph has an odd cycle".into()))?;
                    let og = toward_y_orientation(&g, &bip)?;
                    Ok((EXIT_OK, render(cli, arcs_json(&og), orientation_file(&og))))
                }
                OrientAction::Reverse => {
                    let Some(e) = edge else {
                        return Ok((EXIT_USAGE, "error: orient reverse needs --edge\n".into()));
                    };
                    let og = input.oriented()?.reverse_edge(*e)?;
                    Ok((EXIT_OK, render(cli, arcs_json(&og), orientation_file(&og))))
                }
                OrientAction::All => {
                    let g = input.graph()?;
                    let m = g.size();
                    if m >= 64 || 1u64 << m > cli.budget {
                        return Err(Error::Graph(format!(
                            "2^{m} orientations exceed the budget of {}",
                            cli.budget
                        )));
                    }
                    let mut values = Vec::new();
                    let mut text = String::new();
                    for og in all_orientations(&g)? {
                        let arcs: Vec<String> =
                            og.arcs().map(|(a, b)| format!("{a}->{b}")).collect();
                        let _ = writeln!(text, "{}: {}", og.mask().unwrap_or(0), arcs.join(" "));
                        values.push(arcs_json(&og));
                    }
                    Ok((EXIT_OK, render(cli, Value::Array(values), text)))
                }
            }
        }
    }
}
