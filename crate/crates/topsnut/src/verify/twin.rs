use std::collections::BTreeSet;

use super::util::{components_of_edges, odd_interval, outside, repeat, same_multiset, set_ordered_on, sorted};
use super::{clause, Clause, Ctx, Kind, TogMode, TwinParts, Verdict, VerifyReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, Labelling};

pub(super) fn check_parts(g: &Graph, kind: &Kind) -> Result<()> {
    let parts = kind.parts().ok_or(Error::MissingParts)?;
    let mut seen = vec![0u8; g.q()];
    for &e in parts.first.iter().chain(&parts.second) {
        if e >= g.q() {
            return Err(Error::MissingParts);
        }
        seen[e] += 1;
    }
    if parts.first.is_empty() || parts.second.is_empty() || seen.iter().any(|&s| s != 1) {
        return Err(Error::MissingParts);
    }
    if matches!(kind, Kind::Sotoe(_)) {
        let sub = Graph::new(g.p(), parts.first.iter().map(|&e| g.edges()[e]))?;
        if !sub.is_bipartite() {
            return Err(Error::NotBipartite);
        }
    }
    Ok(())
}

fn part_vertices(g: &Graph, edges: &[usize]) -> Vec<usize> {
    let s: BTreeSet<usize> = edges
        .iter()
        .flat_map(|&e| {
            let (a, b) = g.edges()[e];
            [a, b]
        })
        .collect();
    s.into_iter().collect()
}

struct Part {
    idx: usize,
    edges: Vec<usize>,
    vertices: Vec<usize>,
}

impl Part {
    fn q(&self) -> Label {
        self.edges.len() as Label
    }

    fn labels(&self, c: &Ctx) -> Vec<Label> {
        self.vertices.iter().map(|&v| c.v[v]).collect()
    }

    fn diffs(&self, c: &Ctx) -> Vec<Label> {
        self.edges.iter().map(|&e| c.diff(e)).collect()
    }

    fn sums_mod(&self, c: &Ctx, m: Label) -> Vec<Label> {
        self.edges.iter().map(|&e| c.sum(e).rem_euclid(m.max(1))).collect()
    }
}

pub(super) fn clauses(g: &Graph, kind: &Kind) -> Vec<Clause> {
    let parts: &TwinParts = kind.parts().expect("parts checked");
    let q = g.q() as Label;
    let mk = |idx: usize, edges: &Vec<usize>| Part {
        idx,
        edges: edges.clone(),
        vertices: part_vertices(g, edges),
    };
    let (a, b) = (mk(1, &parts.first), mk(2, &parts.second));
    let (q1, q2) = (a.q(), b.q());
    let mut out = vec![distinct_in(&a), distinct_in(&b), connected(&a), connected(&b)];
    match kind {
        Kind::Tog(mode, _) => {
            out.push(labels_within(0, q));
            out.push(odd_graceful(&a));
            let (top2, union_top) = match mode {
                TogMode::Strict => (q - 1, q - 1),
                TogMode::Compatible => (2 * q2 - 1, q),
            };
            out.push(part_edges_odd(&b, top2));
            out.push(union_within(union_top));
        }
        Kind::Toe(_) | Kind::Sotoe(_) => {
            out.push(labels_within(0, q - 1));
            out.push(odd_elegant(&a, 2 * q1 - 1));
            out.push(odd_elegant(&b, 2 * q2 - 1));
            if matches!(kind, Kind::Sotoe(_)) {
                let edges = a.edges.clone();
                out.push(clause("part 1 set-ordered", move |c: &mut Ctx| {
                    Verdict::check(set_ordered_on(c.g, &c.v, edges.iter().copied()), || {
                        "f_max(X1) < f_min(Y1) fails".into()
                    })
                }));
            }
        }
        Kind::TwoOddTwo(_) => {
            out.push(labels_within(0, q));
            out.push(odd_graceful(&a));
            out.push(odd_elegant(&b, 2 * q2));
        }
        _ => unreachable!("twin kinds only"),
    }
    out.push(shared(&a, &b));
    out
}

fn distinct_in(part: &Part) -> Clause {
    let vs = part.vertices.clone();
    clause(format!("part {} labels distinct", part.idx), move |c: &mut Ctx| {
        let l: Vec<Label> = vs.iter().map(|&v| c.v[v]).collect();
        Verdict::check(repeat(&l).is_none(), || "repeated label".into())
    })
}

fn connected(part: &Part) -> Clause {
    let edges = part.edges.clone();
    clause(format!("part {} connected", part.idx), move |c: &mut Ctx| {
        let n = components_of_edges(c.g, &edges);
        Verdict::check(n == 1, || format!("{n} components"))
    })
}

fn labels_within(lo: Label, hi: Label) -> Clause {
    clause(format!("vertex labels within [{lo},{hi}]"), move |c: &mut Ctx| match outside(&c.v, lo, hi) {
        None => Verdict::yes(),
        Some(x) => Verdict::no(format!("label {x}")),
    })
}

fn union_within(hi: Label) -> Clause {
    clause(format!("union of part labels within [0,{hi}]"), move |c: &mut Ctx| {
        let touched: Vec<Label> = (0..c.g.p())
            .filter(|&v| c.g.degree(v) > 0)
            .map(|v| c.v[v])
            .collect();
        match outside(&touched, 0, hi) {
            None => Verdict::yes(),
            Some(x) => Verdict::no(format!("label {x}")),
        }
    })
}

fn odd_graceful(part: &Part) -> Clause {
    let part = Part {
        idx: part.idx,
        edges: part.edges.clone(),
        vertices: part.vertices.clone(),
    };
    clause(format!("part {} odd-graceful", part.idx), move |c: &mut Ctx| {
        let top = 2 * part.q() - 1;
        if let Some(x) = outside(&part.labels(c), 0, top) {
            return Verdict::no(format!("label {x} outside [0,{top}]"));
        }
        let d = part.diffs(c);
        Verdict::check(same_multiset(&d, &odd_interval(top)), || format!("differences {:?}", sorted(&d)))
    })
}

fn part_edges_odd(part: &Part, top: Label) -> Clause {
    let edges = part.edges.clone();
    clause(format!("part {} edge labels are [1,{top}]^o", part.idx), move |c: &mut Ctx| {
        let d: Vec<Label> = edges.iter().map(|&e| c.diff(e)).collect();
        Verdict::check(same_multiset(&d, &odd_interval(top)), || format!("differences {:?}", sorted(&d)))
    })
}

/// Sums mod `2 q_i` realise `[1, 2q_i - 1]^o`, labels within `[0, top]`.
fn odd_elegant(part: &Part, top: Label) -> Clause {
    let part = Part {
        idx: part.idx,
        edges: part.edges.clone(),
        vertices: part.vertices.clone(),
    };
    clause(format!("part {} odd-elegant", part.idx), move |c: &mut Ctx| {
        if let Some(x) = outside(&part.labels(c), 0, top) {
            return Verdict::no(format!("label {x} outside [0,{top}]"));
        }
        let m = 2 * part.q();
        let s = part.sums_mod(c, m);
        Verdict::check(same_multiset(&s, &odd_interval(m - 1)), || format!("sums {:?}", sorted(&s)))
    })
}

fn shared(a: &Part, b: &Part) -> Clause {
    let (va, vb) = (a.vertices.clone(), b.vertices.clone());
    clause("shared labels", move |c: &mut Ctx| {
        let la: BTreeSet<Label> = va.iter().map(|&v| c.v[v]).collect();
        let lb: BTreeSet<Label> = vb.iter().map(|&v| c.v[v]).collect();
        let k = la.intersection(&lb).count() as Label;
        c.k = Some(k);
        Verdict::yes_with(format!("k={k}"))
    })
}

/// Twin verification on two separately given parts; equal labels are the
/// identified vertices.
pub fn verify_twin_pair(g1: &Graph, f1: &Labelling, g2: &Graph, f2: &Labelling, kind: &Kind) -> Result<VerifyReport> {
    if !kind.is_twin() {
        return Err(Error::Invalid(format!("{} is not a twin kind", kind.name())));
    }
    let g = g1.disjoint_union(g2);
    let mut v = f1.vertex_labels()?;
    v.extend(f2.vertex_labels()?);
    let f = Labelling::from_vertices(&v, g.q());
    let parts = TwinParts {
        first: (0..g1.q()).collect(),
        second: (g1.q()..g.q()).collect(),
    };
    super::verify(&g, &f, &kind.with_parts(parts))
}
