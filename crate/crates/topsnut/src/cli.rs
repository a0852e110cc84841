//! The `topsnut` command line. Every verb reads and writes the JSON container
//! of [`crate::encode`] and wraps one library call.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::construct::{
    caterpillar_set_ordered_graceful, caterpillar_set_ordered_odd_graceful, derive_ten_labellings, set_ordered_double,
    six_c_from_set_ordered_graceful,
};
use crate::encode::{self, ColumnOrder, PasswordString, Scheme, Traversal};
use crate::error::Error;
use crate::extremal::{self, Direction, ExtremalResult, Family, Image, Method, Objective};
use crate::graph::Graph;
use crate::groups::{self, EdgeIndexSet, GraphicGroup, ShiftDomain};
use crate::labelling::{Label, LabelledGraph, Labelling};
use crate::matching::{compose, reciprocal_inverse_labelling};
use crate::search::{enumerate_labellings, find_labelling, solve_set_partition, PartitionKind, SearchBudget, SetPartitionProblem};
use crate::verify::{verify, Kind, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "topsnut", version, about = "Graph labellings for topological graphic passwords")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the exhaustive searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Also write the resulting labelled graph as DOT.
    #[arg(long, global = true, value_name = "PATH")]
    emit_dot: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check a labelled graph against a labelling definition.
    Verify {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Build a labelling with one of the constructions.
    Construct {
        #[arg(long, value_enum)]
        method: Construction,
        /// A tree; for derived constructions its labels, when complete, are
        /// taken as the set-ordered graceful start.
        #[arg(long)]
        graph: PathBuf,
        /// Which of the ten derived labellings (1 to 10).
        #[arg(long)]
        index: Option<usize>,
        /// Kind for `set-ordered-double`.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Exhaustive search for a labelling of the given kind.
    Search {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        graph: PathBuf,
        /// Return every labelling instead of the first.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Minimise or maximise a labelling sum.
    Extremal {
        #[arg(long)]
        objective: String,
        #[arg(long)]
        mode: String,
        #[arg(long, value_enum, default_value_t = ExtremalMethod::Brute)]
        method: ExtremalMethod,
        #[arg(long, conflicts_with = "family")]
        graph: Option<PathBuf>,
        /// complete(n), path(p) or star(p); closed form only.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = ImageArg::Full)]
        image: ImageArg,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Assemble a matching partition from labelled parts.
    Compose {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<PathBuf>,
        /// Merge edges shared by several parts.
        #[arg(long)]
        collapse: bool,
    },
    /// Topsnut-matrix of a labelled graph.
    Matrix {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::EdgeLabel)]
        order: OrderArg,
        /// Also read the matrix off as text.
        #[arg(long, value_enum)]
        text: Option<TraversalArg>,
    },
    /// Text password from a walk, a matrix or concatenated parts.
    Password {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        walk: Vec<usize>,
        /// Prime the walk vertex's own label.
        #[arg(long)]
        marks: bool,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<String>,
        /// 0-based order of `--parts`.
        #[arg(long, value_delimiter = ',')]
        order: Vec<usize>,
        #[arg(long, value_enum, default_value_t = TraversalArg::Serpentine)]
        traversal: TraversalArg,
    },
    /// Every-zero graphic group arithmetic and network encryption.
    Group(GroupArgs),
    /// Brute-force a set partition problem.
    PartitionSolve {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Edge shape for graph matching partitions.
        #[arg(long)]
        shape: Option<PathBuf>,
        /// Print at most this many solutions.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args, Debug)]
struct BudgetArgs {
    #[arg(long)]
    max_candidates: Option<u128>,
    /// Seconds.
    #[arg(long)]
    time_limit: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(m) = self.max_candidates {
            b.max_candidates = m;
        }
        if let Some(t) = self.time_limit {
            b = b.with_time_limit(Duration::from_secs(t));
        }
        b
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("action").required(true).args(["op", "inverse", "verify", "encrypt", "find"])))]
struct GroupArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, num_args = 3, value_names = ["I", "J", "ZERO"])]
    op: Option<Vec<usize>>,
    #[arg(long, num_args = 2, value_names = ["I", "ZERO"])]
    inverse: Option<Vec<usize>>,
    /// Check the axioms for every zero.
    #[arg(long)]
    verify: bool,
    /// Encrypt the network in `--graph` with `--assign`.
    #[arg(long)]
    encrypt: bool,
    /// Search an assignment whose edge indices form the given set.
    #[arg(long, value_enum)]
    find: Option<EdgeSetArg>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    assign: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    zero: usize,
    /// Shift vertex labels only.
    #[arg(long)]
    vertices_only: bool,
    /// With `--encrypt`, fail unless the edge indices form this set.
    #[arg(long, value_enum)]
    require: Option<EdgeSetArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Construction {
    SetOrderedGraceful,
    SetOrderedOddGraceful,
    SixC,
    OddEvenSixC,
    ReciprocalInverse,
    Ten,
    SetOrderedDouble,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ExtremalMethod {
    Brute,
    Local,
    Caterpillar,
    ClosedForm,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ImageArg {
    Full,
    Compact,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrderArg {
    EdgeLabel,
    Endpoints,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TraversalArg {
    Serpentine,
    Rows,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EdgeSetArg {
    Any,
    Graceful,
    OddGraceful,
}

impl From<EdgeSetArg> for EdgeIndexSet {
    fn from(a: EdgeSetArg) -> EdgeIndexSet {
        match a {
            EdgeSetArg::Any => EdgeIndexSet::Any,
            EdgeSetArg::Graceful => EdgeIndexSet::Graceful,
            EdgeSetArg::OddGraceful => EdgeIndexSet::OddGraceful,
        }
    }
}

impl From<TraversalArg> for Traversal {
    fn from(a: TraversalArg) -> Traversal {
        match a {
            TraversalArg::Serpentine => Traversal::ColumnSerpentine,
            TraversalArg::Rows => Traversal::RowMajor,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Usage(String),
    /// The command ran but its check did not pass; output already written.
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::Parse { .. }
        | Error::Invalid(_)
        | Error::InvalidWalk(_)
        | Error::IndexOutOfRange(..)
        | Error::UnknownFamily(_)
        | Error::EmptyInput
        | Error::VertexOutOfRange(_)
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::MissingLabels(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let outcome = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => {
                let mut buf = Vec::new();
                let r = pool.install(|| dispatch(&cli, &mut buf));
                out.write_all(&buf).map_err(Failure::from).and(r)
            }
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => dispatch(&cli, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Negative) => EXIT_FAIL,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_text(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &Path) -> std::result::Result<LabelledGraph, Failure> {
    Ok(encode::deserialize(&read_text(path)?)?)
}

fn parse_kind(s: &str) -> std::result::Result<Kind, Failure> {
    Ok(Kind::parse(s)?)
}

fn put_json<T: Serialize>(out: &mut dyn Write, v: &T) -> io::Result<()> {
    let s = serde_json::to_string_pretty(v).expect("plain data serialises");
    writeln!(out, "{s}")
}

fn labels_json(f: &Labelling) -> serde_json::Value {
    json!({ "vertices": f.vertices, "edges": f.edges })
}

fn join(xs: &[Option<Label>]) -> String {
    xs.iter()
        .map(|x| x.map_or_else(|| "-".to_string(), |x| x.to_string()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.verb {
        Verb::Verify { kind, graph } => run_verify(cli, out, kind, graph),
        Verb::Construct {
            method,
            graph,
            index,
            kind,
        } => run_construct(cli, out, *method, graph, *index, kind.as_deref()),
        Verb::Search {
            kind,
            graph,
            all,
            budget,
        } => run_search(cli, out, kind, graph, *all, &budget.budget()),
        Verb::Extremal {
            objective,
            mode,
            method,
            graph,
            family,
            image,
            restarts,
            budget,
        } => {
            let obj = Objective::from_str(&objective.replace('-', "_"))?;
            let dir = Direction::from_str(mode)?;
            let image = match image {
                ImageArg::Full => Image::Full,
                ImageArg::Compact => Image::Compact,
            };
            run_extremal(cli, out, obj, dir, *method, graph.as_deref(), family.as_deref(), image, *restarts, &budget.budget())
        }
        Verb::Compose { parts, collapse } => {
            let parts = parts.iter().map(|p| read_graph(p)).collect::<std::result::Result<Vec<_>, _>>()?;
            let m = compose(&parts, *collapse)?;
            emit_dot(cli, &m.universal)?;
            if cli.json {
                out.write_all(encode::serialize_partition(&m).as_bytes())?;
            } else {
                writeln!(out, "mode: {:?}", m.mode)?;
                writeln!(out, "shared labels k: {}", m.k)?;
                writeln!(out, "vertices: {}", join(&m.universal.labelling.vertices))?;
                writeln!(out, "edges: {}", m.universal.graph.q())?;
            }
            Ok(())
        }
        Verb::Matrix { graph, order, text } => {
            let lg = read_graph(graph)?;
            let order = match order {
                OrderArg::EdgeLabel => ColumnOrder::ByEdgeLabel,
                OrderArg::Endpoints => ColumnOrder::ByEndpoints,
            };
            let m = encode::to_matrix(&lg, order)?;
            let text = text.map(|t| encode::matrix_serpentine_text(&m, t.into()).text);
            if cli.json {
                put_json(out, &json!({ "matrix": m, "text": text }))?;
            } else {
                let row = |r: &[Label]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                writeln!(out, "X: {}", row(&m.x))?;
                writeln!(out, "W: {}", row(&m.w))?;
                writeln!(out, "Y: {}", row(&m.y))?;
                if let Some(t) = text {
                    writeln!(out, "{t}")?;
                }
            }
            Ok(())
        }
        Verb::Password {
            scheme,
            graph,
            walk,
            marks,
            parts,
            order,
            traversal,
        } => {
            let scheme = Scheme::from_str(scheme)?;
            let pw = match scheme {
                Scheme::Concat => {
                    let ps: Vec<PasswordString> = parts.iter().map(|t| PasswordString::new(t.as_str(), Scheme::Concat)).collect();
                    let order: Vec<usize> = if order.is_empty() { (0..ps.len()).collect() } else { order.clone() };
                    encode::concat_passwords(&ps, &order)?
                }
                Scheme::Vv | Scheme::Vev => {
                    let graph = graph.as_ref().ok_or_else(|| Failure::Usage("--graph is required".into()))?;
                    encode::derive_password_walk(&read_graph(graph)?, walk, scheme, *marks)?
                }
                Scheme::MatrixSerpentine => {
                    let graph = graph.as_ref().ok_or_else(|| Failure::Usage("--graph is required".into()))?;
                    let m = encode::to_matrix(&read_graph(graph)?, ColumnOrder::ByEdgeLabel)?;
                    encode::matrix_serpentine_text(&m, (*traversal).into())
                }
            };
            if cli.json {
                put_json(out, &pw)?;
            } else {
                writeln!(out, "{}", pw.text)?;
            }
            Ok(())
        }
        Verb::Group(g) => run_group(cli, out, g),
        Verb::PartitionSolve {
            problem,
            p,
            q,
            shape,
            limit,
            budget,
        } => {
            let kind: PartitionKind = serde_json::from_value(json!(problem.replace('-', "_")))
                .map_err(|_| Failure::Usage(format!("unknown problem {problem}")))?;
            let mut prob = SetPartitionProblem::new(kind, *p, *q);
            if let Some(s) = shape {
                prob.shape = Some(read_graph(s)?.graph);
            }
            let sols = solve_set_partition(&prob, &budget.budget())?;
            let shown = &sols[..limit.unwrap_or(sols.len()).min(sols.len())];
            if cli.json {
                put_json(out, &json!({ "count": sols.len(), "solutions": shown }))?;
            } else {
                writeln!(out, "{} solutions", sols.len())?;
                for s in shown {
                    let parts: Vec<String> = s.parts.iter().map(|x| format!("{x:?}")).collect();
                    let consts: Vec<String> = s.constants.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(out, "{}  {}", parts.join(" | "), consts.join(" "))?;
                }
            }
            if sols.is_empty() {
                return Err(Failure::Negative);
            }
            Ok(())
        }
    }
}

fn emit_dot(cli: &Cli, lg: &LabelledGraph) -> Outcome {
    if let Some(path) = &cli.emit_dot {
        fs::write(path, encode::to_dot(lg)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn print_report(out: &mut dyn Write, r: &VerifyReport) -> io::Result<()> {
    writeln!(out, "kind: {}", r.kind)?;
    writeln!(out, "pass: {}", r.pass)?;
    for (name, v) in [("k", r.k), ("k'", r.k_prime), ("k''", r.k_double_prime), ("singularity", r.singularity)] {
        if let Some(v) = v {
            writeln!(out, "{name}: {v}")?;
        }
    }
    let width = r.conditions.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.conditions {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        match &c.witness {
            Some(w) => writeln!(out, "  {:width$}  {verdict}  {w}", c.name)?,
            None => writeln!(out, "  {:width$}  {verdict}", c.name)?,
        }
    }
    Ok(())
}

fn run_verify(cli: &Cli, out: &mut dyn Write, kind: &str, graph: &Path) -> Outcome {
    let kind = parse_kind(kind)?;
    let lg = read_graph(graph)?;
    let r = verify(&lg.graph, &lg.labelling, &kind)?;
    emit_dot(cli, &lg)?;
    if cli.json {
        put_json(out, &r)?;
    } else {
        print_report(out, &r)?;
    }
    if r.pass {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn set_ordered_start(lg: &LabelledGraph) -> std::result::Result<Labelling, Failure> {
    if lg.labelling.has_all_vertices() {
        let v = lg.labelling.vertex_labels()?;
        Ok(Labelling::from_vertices(&v, lg.graph.q()))
    } else {
        Ok(caterpillar_set_ordered_graceful(&lg.graph)?.labelling)
    }
}

fn run_construct(
    cli: &Cli,
    out: &mut dyn Write,
    method: Construction,
    graph: &Path,
    index: Option<usize>,
    kind: Option<&str>,
) -> Outcome {
    let input = read_graph(graph)?;
    let t = &input.graph;
    let built = match method {
        Construction::SetOrderedGraceful => caterpillar_set_ordered_graceful(t)?,
        Construction::SetOrderedOddGraceful => caterpillar_set_ordered_odd_graceful(t)?,
        Construction::SixC => six_c_from_set_ordered_graceful(t, &set_ordered_start(&input)?, false)?,
        Construction::OddEvenSixC => six_c_from_set_ordered_graceful(t, &set_ordered_start(&input)?, true)?,
        Construction::ReciprocalInverse => reciprocal_inverse_labelling(t, &set_ordered_start(&input)?)?,
        Construction::Ten => {
            let i = index.ok_or_else(|| Failure::Usage("--index 1..10 is required".into()))?;
            let mut ten = derive_ten_labellings(t, &set_ordered_start(&input)?)?;
            if !(1..=ten.len()).contains(&i) {
                return Err(Failure::Usage(format!("--index must lie in 1..={}", ten.len())));
            }
            ten.swap_remove(i - 1)
        }
        Construction::SetOrderedDouble => {
            let kind = parse_kind(kind.ok_or_else(|| Failure::Usage("--kind is required".into()))?)?;
            set_ordered_double(t, &input.labelling, &kind)?.labelled
        }
    };
    emit_dot(cli, &built)?;
    out.write_all(encode::serialize(&built).as_bytes())?;
    Ok(())
}

fn run_search(cli: &Cli, out: &mut dyn Write, kind: &str, graph: &Path, all: bool, budget: &SearchBudget) -> Outcome {
    let kind = parse_kind(kind)?;
    let g = read_graph(graph)?.graph;
    if all {
        let found = enumerate_labellings(&g, &kind, budget)?;
        if cli.json {
            let items: Vec<_> = found.iter().map(labels_json).collect();
            put_json(out, &json!({ "count": found.len(), "labellings": items }))?;
        } else {
            writeln!(out, "{} labellings", found.len())?;
            for f in &found {
                writeln!(out, "{}", join(&f.vertices))?;
            }
        }
        if let Some(f) = found.first() {
            emit_dot(cli, &LabelledGraph::new(g.clone(), f.clone()))?;
        }
        return if found.is_empty() { Err(Failure::Negative) } else { Ok(()) };
    }
    match find_labelling(&g, &kind, budget)? {
        Some(f) => {
            let lg = LabelledGraph::new(g, f);
            emit_dot(cli, &lg)?;
            out.write_all(encode::serialize(&lg).as_bytes())?;
            Ok(())
        }
        None => {
            if cli.json {
                put_json(out, &serde_json::Value::Null)?;
            } else {
                writeln!(out, "no {} labelling exists", kind.name())?;
            }
            Err(Failure::Negative)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_extremal(
    cli: &Cli,
    out: &mut dyn Write,
    obj: Objective,
    dir: Direction,
    method: ExtremalMethod,
    graph: Option<&Path>,
    family: Option<&str>,
    image: Image,
    restarts: usize,
    budget: &SearchBudget,
) -> Outcome {
    if method == ExtremalMethod::ClosedForm {
        let family = Family::from_str(family.ok_or_else(|| Failure::Usage("--family is required".into()))?)?;
        if obj != Objective::DifferenceSum {
            return Err(Failure::Usage("closed forms exist for the difference sum only".into()));
        }
        let value = extremal::closed_form(family, dir)?;
        if cli.json {
            put_json(out, &json!({ "value": value, "method": Method::ClosedForm, "family": family.to_string() }))?;
        } else {
            writeln!(out, "value: {value}")?;
        }
        return Ok(());
    }
    let g = match (graph, family) {
        (Some(p), _) => read_graph(p)?.graph,
        (None, Some(f)) => Family::from_str(f)?.graph(),
        (None, None) => return Err(Failure::Usage("--graph or --family is required".into())),
    };
    let r: ExtremalResult = match method {
        ExtremalMethod::Brute => extremal::brute_force_extremal(&g, obj, dir, image, budget)?,
        ExtremalMethod::Local => extremal::local_search_extremal(&g, obj, dir, image, restarts, cli.seed),
        ExtremalMethod::Caterpillar => {
            if obj != Objective::DifferenceSum || dir != Direction::Min {
                return Err(Failure::Usage("the caterpillar method minimises the difference sum".into()));
            }
            extremal::caterpillar_min_sum(&g)?
        }
        ExtremalMethod::ClosedForm => unreachable!("handled above"),
    };
    let lg = LabelledGraph::new(g, r.labelling.clone());
    emit_dot(cli, &lg)?;
    if cli.json {
        put_json(
            out,
            &json!({
                "value": r.value,
                "method": r.method,
                "optimal": r.optimal,
                "vertex_labels": r.labelling.vertices,
            }),
        )?;
    } else {
        writeln!(out, "value: {}", r.value)?;
        writeln!(out, "optimal: {}", r.optimal)?;
        writeln!(out, "labels: {}", join(&r.labelling.vertices))?;
    }
    Ok(())
}

fn run_group(cli: &Cli, out: &mut dyn Write, a: &GroupArgs) -> Outcome {
    let n = a.n;
    if let Some(op) = &a.op {
        let r = groups::group_op(op[0], op[1], op[2], n)?;
        if cli.json {
            put_json(out, &json!({ "result": r }))?;
        } else {
            writeln!(out, "{r}")?;
        }
        return Ok(());
    }
    if let Some(inv) = &a.inverse {
        let r = groups::group_inverse(inv[0], inv[1], n)?;
        if cli.json {
            put_json(out, &json!({ "inverse": r }))?;
        } else {
            writeln!(out, "{r}")?;
        }
        return Ok(());
    }
    if a.verify {
        let base = match &a.graph {
            Some(p) => read_graph(p)?,
            None => LabelledGraph::new(Graph::empty(1), Labelling::from_vertices(&[0], 0)),
        };
        let domain = if a.vertices_only { ShiftDomain::VerticesOnly } else { ShiftDomain::VerticesAndEdges };
        let r = groups::verify_group(&GraphicGroup::new(base, n, domain)?);
        if cli.json {
            put_json(out, &r)?;
        } else {
            writeln!(out, "modulus: {}", r.modulus)?;
            writeln!(out, "zeros checked: {}", r.zeros_checked)?;
            for (name, ok) in [
                ("closure", r.closure),
                ("associativity", r.associativity),
                ("identity", r.identity),
                ("inverses", r.inverses),
                ("commutativity", r.commutativity),
                ("realised", r.realised),
            ] {
                writeln!(out, "  {name:13}  {}", if ok { "PASS" } else { "FAIL" })?;
            }
            writeln!(out, "pass: {}", r.pass)?;
        }
        return if r.pass { Ok(()) } else { Err(Failure::Negative) };
    }
    let graph = a.graph.as_ref().ok_or_else(|| Failure::Usage("--graph is required".into()))?;
    let network = read_graph(graph)?.graph;
    let (assignment, required) = if let Some(set) = a.find {
        match groups::find_group_assignment(&network, n, a.zero, set.into(), &SearchBudget::default())? {
            Some(found) => (found, Some(set)),
            None => {
                writeln!(out, "no assignment exists")?;
                return Err(Failure::Negative);
            }
        }
    } else {
        (a.assign.clone(), a.require)
    };
    let lg = groups::encrypt_network(&network, n, &assignment, a.zero)?;
    emit_dot(cli, &lg)?;
    out.write_all(encode::serialize(&lg).as_bytes())?;
    match required {
        Some(set) if !groups::edge_indices_match(&lg, set.into())? => Err(Failure::Negative),
        _ => Ok(()),
    }
}
