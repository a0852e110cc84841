//! Topsnut-matrices, text passwords read off labelled graphs, and the JSON
//! and DOT containers.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, LabelledGraph, Labelling};
use crate::matching::{compose, MatchingPartition};

/// Three rows `X`, `W`, `Y`; column `j` is the edge `X_j Y_j` with label
/// `W_j`, normalised so that `X_j <= Y_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TopsnutMatrix {
    pub x: Vec<Label>,
    pub w: Vec<Label>,
    pub y: Vec<Label>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnOrder {
    /// By `W`, ties by `X` then `Y`.
    ByEdgeLabel,
    /// By `X`, then `Y`, then `W`.
    ByEndpoints,
}

impl TopsnutMatrix {
    pub fn columns(&self) -> impl Iterator<Item = (Label, Label, Label)> + '_ {
        (0..self.x.len()).map(|j| (self.x[j], self.w[j], self.y[j]))
    }

    /// `A_vv`: the matrix without its edge-label row.
    pub fn vv(&self) -> (Vec<Label>, Vec<Label>) {
        (self.x.clone(), self.y.clone())
    }
}

pub fn to_matrix(lg: &LabelledGraph, order: ColumnOrder) -> Result<TopsnutMatrix> {
    let v = lg.labelling.vertex_labels()?;
    let e = lg.labelling.edge_labels()?;
    let mut cols: Vec<(Label, Label, Label)> = lg
        .graph
        .edges()
        .iter()
        .zip(&e)
        .map(|(&(a, b), &w)| (v[a].min(v[b]), w, v[a].max(v[b])))
        .collect();
    match order {
        ColumnOrder::ByEdgeLabel => cols.sort_by_key(|&(x, w, y)| (w, x, y)),
        ColumnOrder::ByEndpoints => cols.sort_by_key(|&(x, w, y)| (x, y, w)),
    }
    Ok(TopsnutMatrix {
        x: cols.iter().map(|c| c.0).collect(),
        w: cols.iter().map(|c| c.1).collect(),
        y: cols.iter().map(|c| c.2).collect(),
    })
}

/// Rebuilds a labelled graph with one vertex per distinct label, in
/// ascending label order, and one edge per column.
pub fn from_matrix(m: &TopsnutMatrix) -> Result<LabelledGraph> {
    if m.w.len() != m.x.len() || m.y.len() != m.x.len() {
        return Err(Error::Invalid("matrix rows differ in length".into()));
    }
    let mut labels: Vec<Label> = m.x.iter().chain(&m.y).copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let at = |l: Label| labels.binary_search(&l).expect("label collected above");
    let graph = Graph::new(labels.len(), m.columns().map(|(x, _, y)| (at(x), at(y))))?;
    let labelling = Labelling::total(&labels, &m.w);
    Ok(LabelledGraph::new(graph, labelling))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    Vv,
    Vev,
    Concat,
    MatrixSerpentine,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PasswordString {
    pub text: String,
    pub scheme: Scheme,
}

impl PasswordString {
    pub fn new(text: impl Into<String>, scheme: Scheme) -> PasswordString {
        PasswordString {
            text: text.into(),
            scheme,
        }
    }
}

impl fmt::Display for PasswordString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// For each vertex `w` of the walk: `w`'s label, then for each neighbour in
/// ascending label order its label (`vv`) or the edge label followed by its
/// label (`vev`), then `w`'s label again. With `marks`, both copies of `w`'s
/// label carry a prime.
pub fn derive_password_walk(lg: &LabelledGraph, walk: &[usize], scheme: Scheme, marks: bool) -> Result<PasswordString> {
    let g = &lg.graph;
    if walk.is_empty() {
        return Err(Error::InvalidWalk("empty walk".into()));
    }
    if let Some(&w) = walk.iter().find(|&&w| w >= g.p()) {
        return Err(Error::InvalidWalk(format!("vertex {w} does not exist")));
    }
    if let Some(s) = walk.windows(2).find(|s| !g.has_edge(s[0], s[1])) {
        return Err(Error::InvalidWalk(format!("{} and {} are not adjacent", s[0], s[1])));
    }
    let v = lg.labelling.vertex_labels()?;
    let with_edges = match scheme {
        Scheme::Vv => false,
        Scheme::Vev => true,
        _ => return Err(Error::Invalid(format!("{scheme:?} is not a walk scheme"))),
    };
    let e = if with_edges { lg.labelling.edge_labels()? } else { Vec::new() };
    let mark = if marks { "'" } else { "" };
    let mut text = String::new();
    for &w in walk {
        let mut around: Vec<(Label, usize)> = g.incident(w).iter().map(|&(u, i)| (v[u], i)).collect();
        around.sort_unstable();
        write!(text, "{}{mark}", v[w]).expect("writing to a String");
        for (label, i) in around {
            if with_edges {
                write!(text, "{}", e[i]).expect("writing to a String");
            }
            write!(text, "{label}").expect("writing to a String");
        }
        write!(text, "{}{mark}", v[w]).expect("writing to a String");
    }
    Ok(PasswordString::new(text, scheme))
}

/// Plain concatenation of `parts` in `order` (0-based indices).
pub fn concat_passwords(parts: &[PasswordString], order: &[usize]) -> Result<PasswordString> {
    if parts.is_empty() || order.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut text = String::new();
    for &i in order {
        let part = parts.get(i).ok_or(Error::IndexOutOfRange(i, parts.len()))?;
        text.push_str(&part.text);
    }
    Ok(PasswordString::new(text, Scheme::Concat))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    /// Column 0 top-down, column 1 bottom-up, and so on.
    ColumnSerpentine,
    /// Row `X`, then `W`, then `Y`.
    RowMajor,
}

pub fn matrix_serpentine_text(m: &TopsnutMatrix, traversal: Traversal) -> PasswordString {
    let mut text = String::new();
    match traversal {
        Traversal::ColumnSerpentine => {
            for (j, (x, w, y)) in m.columns().enumerate() {
                let col = if j % 2 == 0 { [x, w, y] } else { [y, w, x] };
                for c in col {
                    write!(text, "{c}").expect("writing to a String");
                }
            }
        }
        Traversal::RowMajor => {
            for c in m.x.iter().chain(&m.w).chain(&m.y) {
                write!(text, "{c}").expect("writing to a String");
            }
        }
    }
    PasswordString::new(text, Scheme::MatrixSerpentine)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct EdgeKey(usize, usize);

impl Serialize for EdgeKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&format_args!("{}-{}", self.0, self.1))
    }
}

impl<'de> Deserialize<'de> for EdgeKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<EdgeKey, D::Error> {
        let s = String::deserialize(d)?;
        let parse = |x: &str| x.parse::<usize>().ok();
        match s.split_once('-').and_then(|(a, b)| Some((parse(a)?, parse(b)?))) {
            Some((a, b)) => Ok(EdgeKey(a, b)),
            None => Err(de::Error::custom(format!("edge key {s:?} is not of the form u-v"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Container {
    p: usize,
    edges: Vec<[usize; 2]>,
    vertex_labels: BTreeMap<usize, Option<Label>>,
    edge_labels: BTreeMap<EdgeKey, Option<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parts: Option<Vec<Container>>,
}

impl Container {
    fn of(lg: &LabelledGraph) -> Container {
        let g = &lg.graph;
        Container {
            p: g.p(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            vertex_labels: (0..g.p()).map(|v| (v, lg.labelling.vertex(v))).collect(),
            edge_labels: g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| (EdgeKey(a, b), lg.labelling.edge(i)))
                .collect(),
            parts: None,
        }
    }

    fn build(&self) -> Result<LabelledGraph> {
        let bad = |m: String| Error::Parse {
            line: 0,
            column: 0,
            message: m,
        };
        if let Some(&[a, b]) = self.edges.iter().find(|e| e[0] >= e[1]) {
            return Err(bad(format!("edge [{a},{b}] must be listed with u < v")));
        }
        let graph = Graph::new(self.p, self.edges.iter().map(|e| (e[0], e[1])))?;
        if self.vertex_labels.len() != self.p || self.vertex_labels.keys().any(|&v| v >= self.p) {
            return Err(bad(format!("vertex_labels must cover vertices 0..{}", self.p)));
        }
        let mut edges = Vec::with_capacity(graph.q());
        for &(a, b) in graph.edges() {
            let label = self
                .edge_labels
                .get(&EdgeKey(a, b))
                .ok_or_else(|| bad(format!("edge_labels lacks {a}-{b}")))?;
            edges.push(*label);
        }
        if self.edge_labels.len() != graph.q() {
            return Err(bad("edge_labels names an edge that is not in edges".into()));
        }
        let labelling = Labelling {
            vertices: self.vertex_labels.values().copied().collect(),
            edges,
        };
        Ok(LabelledGraph::new(graph, labelling))
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn to_text(c: &Container) -> String {
    let mut s = serde_json::to_string_pretty(c).expect("container serialises");
    s.push('\n');
    s
}

/// JSON container of a labelled graph. The certificate is not stored.
pub fn serialize(lg: &LabelledGraph) -> String {
    to_text(&Container::of(lg))
}

pub fn deserialize(text: &str) -> Result<LabelledGraph> {
    let c: Container = serde_json::from_str(text).map_err(parse_error)?;
    if c.parts.is_some() {
        return Err(Error::Invalid("container holds a partition".into()));
    }
    c.build()
}

/// The universal graph with its parts under `"parts"`.
pub fn serialize_partition(m: &MatchingPartition) -> String {
    let mut c = Container::of(&m.universal);
    c.parts = Some(m.parts.iter().map(Container::of).collect());
    to_text(&c)
}

/// Recomposes the stored parts and checks the result against the stored
/// universal graph.
pub fn deserialize_partition(text: &str) -> Result<MatchingPartition> {
    let c: Container = serde_json::from_str(text).map_err(parse_error)?;
    let universal = c.build()?;
    let parts = c
        .parts
        .as_ref()
        .ok_or_else(|| Error::Invalid("container has no parts".into()))?
        .iter()
        .map(Container::build)
        .collect::<Result<Vec<_>>>()?;
    let m = compose(&parts, true)?;
    if m.universal != universal {
        return Err(Error::Invalid("stored universal graph differs from the composed parts".into()));
    }
    Ok(m)
}

fn dot_label(x: Option<Label>) -> String {
    x.map_or_else(|| "null".to_string(), |l| l.to_string())
}

/// Undirected DOT with vertex labels as node labels and edge labels on the
/// edges.
pub fn to_dot(lg: &LabelledGraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..lg.graph.p() {
        writeln!(s, "  {v} [label=\"{}\"];", dot_label(lg.labelling.vertex(v))).expect("writing to a String");
    }
    for (i, &(a, b)) in lg.graph.edges().iter().enumerate() {
        writeln!(s, "  {a} -- {b} [label=\"{}\"];", dot_label(lg.labelling.edge(i))).expect("writing to a String");
    }
    s.push_str("}\n");
    s
}

impl FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scheme> {
        match s {
            "vv" => Ok(Scheme::Vv),
            "vev" => Ok(Scheme::Vev),
            "concat" => Ok(Scheme::Concat),
            "matrix" | "matrix_serpentine" | "matrix-serpentine" => Ok(Scheme::MatrixSerpentine),
            _ => Err(Error::Invalid(format!("unknown scheme {s}"))),
        }
    }
}
