use std::collections::BTreeSet;

use super::util::{interval, odd_interval, repeat, same_multiset, sorted};
use super::{Condition, VerifyReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, Labelling, SetLabelling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProperRule {
    /// Edge labels `[1, q]`.
    Graceful,
    /// Edge labels `[1, 2q-1]^o`.
    OddGraceful,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    TotalSet,
    VertexSet,
    EdgeSet,
    VSetEProper(ProperRule),
    ESetVProper,
}

impl SetKind {
    fn name(self) -> &'static str {
        match self {
            SetKind::TotalSet => "total_set",
            SetKind::VertexSet => "vertex_set",
            SetKind::EdgeSet => "edge_set",
            SetKind::VSetEProper(ProperRule::Graceful) => "v_set_e_proper(graceful)",
            SetKind::VSetEProper(ProperRule::OddGraceful) => "v_set_e_proper(odd_graceful)",
            SetKind::ESetVProper => "e_set_v_proper",
        }
    }
}

fn cond(name: &str, pass: bool, witness: impl FnOnce() -> String) -> Condition {
    Condition {
        name: name.into(),
        pass,
        witness: (!pass).then(witness),
    }
}

fn gather<'a>(sets: &'a [Option<BTreeSet<Label>>], what: &str) -> Result<Vec<&'a BTreeSet<Label>>> {
    sets.iter()
        .enumerate()
        .map(|(i, s)| s.as_ref().ok_or_else(|| Error::MissingSets(format!("{what} {i}"))))
        .collect()
}

fn pairwise_distinct(sets: &[&BTreeSet<Label>]) -> Option<(usize, usize)> {
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] == sets[j] {
                return Some((i, j));
            }
        }
    }
    None
}

fn members_within(sets: &[&BTreeSet<Label>], hi: Label) -> Option<Label> {
    sets.iter().flat_map(|s| s.iter()).copied().find(|&x| x < 0 || x > hi)
}

pub fn verify_set_labelling(
    g: &Graph,
    sets: &SetLabelling,
    f: Option<&Labelling>,
    kind: SetKind,
) -> Result<VerifyReport> {
    if sets.vertices.len() != g.p() || sets.edges.len() != g.q() {
        return Err(Error::Invalid("set labelling has the wrong shape".into()));
    }
    let top = (g.p() + g.q()) as Label;
    let mut out = Vec::new();
    match kind {
        SetKind::TotalSet | SetKind::VertexSet | SetKind::EdgeSet => {
            let mut all = Vec::new();
            if kind != SetKind::EdgeSet {
                all.extend(gather(&sets.vertices, "vertex")?);
            }
            if kind != SetKind::VertexSet {
                all.extend(gather(&sets.edges, "edge")?);
            }
            let bad = members_within(&all, top);
            out.push(cond(&format!("members within [0,{top}]"), bad.is_none(), || {
                format!("member {}", bad.unwrap_or_default())
            }));
            let rep = pairwise_distinct(&all);
            out.push(cond("sets pairwise distinct", rep.is_none(), || {
                let (a, b) = rep.unwrap_or_default();
                format!("elements {a} and {b}")
            }));
        }
        SetKind::VSetEProper(rule) => {
            let vs = gather(&sets.vertices, "vertex")?;
            let f = f.ok_or_else(|| Error::MissingLabels("edge labelling g".into()))?;
            let e = f.edge_labels()?;
            let neg = vs.iter().flat_map(|s| s.iter()).any(|&x| x < 0);
            out.push(cond("members non-negative", !neg, || "negative member".into()));
            let mut clash = None;
            'outer: for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    if let Some(x) = vs[i].intersection(vs[j]).next() {
                        clash = Some((i, j, *x));
                        break 'outer;
                    }
                }
            }
            out.push(cond("vertex sets pairwise disjoint", clash.is_none(), || {
                let (i, j, x) = clash.unwrap_or_default();
                format!("vertices {i} and {j} share {x}")
            }));
            let rep = repeat(&e);
            out.push(cond("edge labels distinct", rep.is_none(), || "repeated edge label".into()));
            let bad = g.edges().iter().enumerate().position(|(i, &(u, v))| {
                !vs[u].iter().any(|&a| vs[v].iter().any(|&b| (a - b).abs() == e[i]))
            });
            out.push(cond("edge labels realised by set members", bad.is_none(), || {
                let i = bad.unwrap_or_default();
                format!("edge {i} label {}", e[i])
            }));
            let q = g.q() as Label;
            let (name, want) = match rule {
                ProperRule::Graceful => (format!("edge labels are [1,{q}]"), interval(1, q)),
                ProperRule::OddGraceful => (format!("edge labels are [1,{}]^o", 2 * q - 1), odd_interval(2 * q - 1)),
            };
            out.push(cond(&name, same_multiset(&e, &want), || format!("got {:?}", sorted(&e))));
        }
        SetKind::ESetVProper => {
            let es = gather(&sets.edges, "edge")?;
            let f = f.ok_or_else(|| Error::MissingLabels("vertex labelling f".into()))?;
            let v = f.vertex_labels()?;
            let bad = members_within(&es, top);
            out.push(cond(&format!("members within [0,{top}]"), bad.is_none(), || {
                format!("member {}", bad.unwrap_or_default())
            }));
            let rep = pairwise_distinct(&es);
            out.push(cond("edge sets pairwise distinct", rep.is_none(), || {
                let (a, b) = rep.unwrap_or_default();
                format!("edges {a} and {b}")
            }));
            out.push(cond("vertex labels distinct", repeat(&v).is_none(), || "repeated vertex label".into()));
        }
    }
    Ok(VerifyReport::from_conditions(kind.name(), out))
}
