//! Matching partitions: composing labelled parts by identifying equal
//! labels, the odd-graceful matching search, team certificates,
//! reciprocal-inverse pairs and Max-min partitions.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::construct::MatchingTeam;
use crate::error::{Error, Result};
use crate::extremal::{brute_force_optimizers, Direction, Image, Objective};
use crate::graph::{is_isomorphic, Graph};
use crate::labelling::{Label, LabelledGraph, Labelling};
use crate::search::SearchBudget;
use crate::verify::{certify, verify, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// No labelled edge occurs in two parts.
    EdgeDisjoint,
    /// Some labelled edge is shared and every part spans the universal graph.
    MultipleEdge,
    /// Some labelled edge is shared and some part misses a vertex.
    Mixed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatchingPartition {
    /// Vertex `i` of the universal graph carries the `i`-th smallest label.
    pub universal: LabelledGraph,
    pub parts: Vec<LabelledGraph>,
    pub mode: Mode,
    /// Number of labels carried by more than one part.
    pub k: usize,
    /// Universal edge indices covered by each part, in part edge order.
    pub part_edges: Vec<Vec<usize>>,
}

type LabelledEdge = (Label, Label);

fn labelled_edges(lg: &LabelledGraph) -> Result<Vec<LabelledEdge>> {
    let v = lg.labelling.vertex_labels()?;
    Ok(lg
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| (v[a].min(v[b]), v[a].max(v[b])))
        .collect())
}

/// Identifies equal-labelled vertices of the parts. Shared labelled edges
/// are merged into one when `collapse` is set and rejected otherwise, since
/// the universal graph is simple.
pub fn compose(parts: &[LabelledGraph], collapse: bool) -> Result<MatchingPartition> {
    if parts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut owners: BTreeMap<Label, usize> = BTreeMap::new();
    let mut per_part: Vec<Vec<LabelledEdge>> = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let v = part.labelling.vertex_labels()?;
        let set: BTreeSet<Label> = v.iter().copied().collect();
        if set.len() != v.len() {
            return Err(Error::LabelClashInsidePart(i));
        }
        for x in set {
            *owners.entry(x).or_default() += 1;
        }
        per_part.push(labelled_edges(part)?);
    }
    let labels: Vec<Label> = owners.keys().copied().collect();
    let index: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut multiplicity: BTreeMap<LabelledEdge, usize> = BTreeMap::new();
    for e in per_part.iter().flatten() {
        *multiplicity.entry(*e).or_default() += 1;
    }
    let shared = multiplicity.values().any(|&m| m > 1);
    if shared && !collapse {
        return Err(Error::Invalid("parts share a labelled edge; composition needs collapsing".into()));
    }
    let edges: Vec<LabelledEdge> = multiplicity.keys().copied().collect();
    let edge_index: BTreeMap<LabelledEdge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let graph = Graph::new(labels.len(), edges.iter().map(|&(a, b)| (index[&a], index[&b])))?;
    let q = graph.q();
    let universal = LabelledGraph::new(graph, Labelling::from_vertices(&labels, q));
    let spanning = parts.iter().all(|p| p.graph.p() == labels.len());
    let mode = match (shared, spanning) {
        (false, _) => Mode::EdgeDisjoint,
        (true, true) => Mode::MultipleEdge,
        (true, false) => Mode::Mixed,
    };
    Ok(MatchingPartition {
        universal,
        parts: parts.to_vec(),
        mode,
        k: owners.values().filter(|&&c| c > 1).count(),
        part_edges: per_part.iter().map(|es| es.iter().map(|e| edge_index[e]).collect()).collect(),
    })
}

impl MatchingPartition {
    /// Labelled edge sets of the parts read back from the universal graph.
    pub fn decompose(&self) -> Vec<BTreeSet<LabelledEdge>> {
        let u = labelled_edges(&self.universal).expect("universal is fully labelled");
        self.part_edges.iter().map(|es| es.iter().map(|&e| u[e]).collect()).collect()
    }

    /// `deg_W(u) = sum deg_{G_i}(u)` at every label; holds for edge-disjoint
    /// partitions.
    pub fn degrees_add_up(&self) -> bool {
        let u = &self.universal;
        let labels = u.labelling.vertex_labels().expect("labelled");
        let mut total: BTreeMap<Label, usize> = BTreeMap::new();
        for part in &self.parts {
            let v = part.labelling.vertex_labels().expect("labelled");
            for (x, &l) in v.iter().enumerate() {
                *total.entry(l).or_default() += part.graph.degree(x);
            }
        }
        labels.iter().enumerate().all(|(x, l)| total[l] == u.graph.degree(x))
    }
}

/// `H` found by the odd-graceful matching search.
#[derive(Clone, Debug, PartialEq)]
pub struct OddGracefulMatching {
    pub h: LabelledGraph,
    /// `|f(V(G)) ∩ g(V(H))|`.
    pub k: usize,
    /// Top of the covered interval `f(V(G)) ∪ g(V(H))`, `2q` or `2q - 1`.
    pub union_top: Label,
}

/// Clause-by-clause check of a `k`-matching odd-graceful labelling `g` of
/// `H` against the odd-graceful labelling `f` of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub same_size: bool,
    pub odd_edges: bool,
    pub union_top: Option<Label>,
    pub k: usize,
    pub connected: bool,
    pub pass: bool,
}

pub fn check_odd_graceful_matching(g: &Graph, f: &Labelling, h: &Graph, hg: &Labelling) -> Result<MatchingReport> {
    let q = g.q() as Label;
    let fv = f.vertex_set();
    let hv = hg.vertex_labels()?;
    let hv_set: BTreeSet<Label> = hv.iter().copied().collect();
    let diffs: BTreeSet<Label> = h.edges().iter().map(|&(a, b)| (hv[a] - hv[b]).abs()).collect();
    let odd: BTreeSet<Label> = (1..2 * q).step_by(2).collect();
    let same_size = h.q() == g.q();
    let odd_edges = same_size && diffs == odd && hv_set.len() == hv.len();
    let union: BTreeSet<Label> = fv.union(&hv_set).copied().collect();
    let union_top = [2 * q, 2 * q - 1]
        .into_iter()
        .find(|&top| union == (0..=top).collect::<BTreeSet<_>>());
    let connected = h.is_connected();
    Ok(MatchingReport {
        same_size,
        odd_edges,
        union_top,
        k: fv.intersection(&hv_set).count(),
        connected,
        pass: same_size && odd_edges && union_top.is_some() && connected,
    })
}

struct Assembly<'a> {
    r: &'a [Label],
    /// Candidate odd-even pairs per odd difference, by odd endpoint.
    by_diff: Vec<Vec<(usize, usize)>>,
    chosen: Vec<(usize, usize)>,
}

impl Assembly<'_> {
    /// `H_k`: the chosen edges plus every candidate of a later difference.
    fn still_connected(&self, next: usize) -> bool {
        let n = self.r.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut parts = n;
        let later = self.by_diff[next..].iter().flatten();
        for &(a, b) in self.chosen.iter().chain(later) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                parts -= 1;
            }
        }
        parts <= 1
    }

    fn solve(&mut self, d: usize) -> bool {
        if !self.still_connected(d) {
            return false;
        }
        if d == self.by_diff.len() {
            return true;
        }
        for i in 0..self.by_diff[d].len() {
            self.chosen.push(self.by_diff[d][i]);
            if self.solve(d + 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Searches for a connected `H` on the unused labels `R = [0, 2q-1] \ f(V)`
/// (or `[0, 2q] \ f(V)`) with exactly one odd-even edge for each odd
/// difference in `[1, 2q-1]`. Differences are settled in increasing order,
/// candidates by increasing odd endpoint; a choice is kept only while the
/// chosen edges plus all remaining candidates still connect `R`, and the
/// search backtracks on failure.
pub fn odd_graceful_matching(g: &Graph, f: &Labelling, use_extended_range: bool) -> Result<OddGracefulMatching> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    certify(g, f, &Kind::OddGraceful)?;
    let q = g.q() as Label;
    let top = if use_extended_range { 2 * q } else { 2 * q - 1 };
    let used = f.vertex_set();
    let r: Vec<Label> = (0..=top).filter(|x| !used.contains(x)).collect();
    let mut by_diff: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.q()];
    for (i, &a) in r.iter().enumerate() {
        if a % 2 == 0 {
            continue;
        }
        for (j, &b) in r.iter().enumerate() {
            let d = (a - b).abs();
            if b % 2 == 0 && d < 2 * q {
                by_diff[(d / 2) as usize].push((i, j));
            }
        }
    }
    let mut asm = Assembly {
        r: &r,
        by_diff,
        chosen: Vec::new(),
    };
    if r.is_empty() || !asm.solve(0) {
        return Err(Error::NoMatchingExists);
    }
    let h = Graph::new(r.len(), asm.chosen.iter().copied())?;
    let hg = Labelling::from_vertices(&r, h.q());
    let report = check_odd_graceful_matching(g, f, &h, &hg)?;
    if !report.pass {
        return Err(Error::CertificationFailed(format!("{report:?}")));
    }
    let kind = if r.iter().any(|&x| x > 2 * q - 1) {
        Kind::PanOddGraceful
    } else {
        Kind::OddGraceful
    };
    let cert = certify(&h, &hg, &kind)?;
    Ok(OddGracefulMatching {
        h: LabelledGraph {
            graph: h,
            labelling: hg,
            certificate: Some(cert),
        },
        k: report.k,
        union_top: report.union_top.expect("checked"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeamCertificate {
    pub members: usize,
    pub expected_members: usize,
    /// `|f_i(V(T_i)) ∩ h*(V(H))|` per member.
    pub intersections: Vec<usize>,
    /// `k` of each composition `⊙⟨H, T_i⟩`.
    pub composition_k: Vec<usize>,
    /// Union of all labels, when it is an interval.
    pub union_interval: Option<(Label, Label)>,
    pub member_verdicts: Vec<bool>,
    /// All members isomorphic.
    pub perfect: bool,
    /// All members minus their added leaf isomorphic to `H` minus the removed
    /// leaf.
    pub approximately_perfect: bool,
    pub failures: Vec<String>,
    pub pass: bool,
}

pub fn verify_team(team: &MatchingTeam) -> TeamCertificate {
    let p = team.tree.graph.p();
    let hv = team.h.labelling.vertex_set();
    let mut failures = Vec::new();
    if team.members.len() != p {
        failures.push(format!("{} members, expected {p}", team.members.len()));
    }
    let mut intersections = Vec::new();
    let mut composition_k = Vec::new();
    let mut member_verdicts = Vec::new();
    let mut all: BTreeSet<Label> = hv.clone();
    for (i, m) in team.members.iter().enumerate() {
        let labels = m.member.labelling.vertex_set();
        all.extend(&labels);
        let meet = labels.intersection(&hv).count();
        if meet != 1 {
            failures.push(format!("member {i} meets H in {meet} labels"));
        }
        intersections.push(meet);
        let q = m.member.graph.q() as Label;
        let kind = if labels.iter().any(|&x| x > 2 * q - 1) {
            Kind::PanOddGraceful
        } else {
            Kind::OddGraceful
        };
        let ok = verify(&m.member.graph, &m.member.labelling, &kind).is_ok_and(|r| r.pass);
        if !ok {
            failures.push(format!("member {i} is not {}", kind.name()));
        }
        member_verdicts.push(ok);
        match compose(&[team.h.clone(), m.member.clone()], true) {
            Ok(c) => composition_k.push(c.k),
            Err(e) => {
                failures.push(format!("member {i}: {e}"));
                composition_k.push(0);
            }
        }
    }
    let union_interval = match (all.first(), all.last()) {
        (Some(&lo), Some(&hi)) if (hi - lo + 1) as usize == all.len() => Some((lo, hi)),
        _ => None,
    };
    let iso = |a: &Graph, b: &Graph| is_isomorphic(a, b).unwrap_or(false);
    let perfect = team.members.windows(2).all(|w| iso(&w[0].member.graph, &w[1].member.graph));
    let approximately_perfect = team.h.graph.without_vertex(team.removed_leaf).is_ok_and(|base| {
        team.members.iter().all(|m| {
            let last = m.member.graph.p() - 1;
            m.member.graph.without_vertex(last).is_ok_and(|t| iso(&t, &base))
        })
    });
    TeamCertificate {
        members: team.members.len(),
        expected_members: p,
        intersections,
        composition_k,
        union_interval,
        member_verdicts,
        perfect,
        approximately_perfect,
        pass: failures.is_empty(),
        failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocalReport {
    pub x_star: BTreeSet<Label>,
    pub edges_match_vertices: bool,
    pub vertices_match_edges: bool,
    /// `Some` when either side is 6C: whether `X* = {⌊(p+q+1)/2⌋}`.
    pub six_c_singularity: Option<bool>,
    pub pass: bool,
}

fn is_six_c(lg: &LabelledGraph) -> bool {
    lg.certificate.as_ref().is_some_and(|c| {
        c.pass && matches!(c.kind.as_str(), "six_c" | "odd_even_separable_six_c")
    })
}

/// `f(E(G)) = g(V(H)) \ X*` and `f(V(G)) \ X* = g(E(H))` with
/// `X* = f(V(G)) ∩ g(V(H))`. Both sides must carry a passing edge-magic
/// graceful or 6C certificate.
pub fn reciprocal_inverse_check(g: &LabelledGraph, h: &LabelledGraph) -> Result<ReciprocalReport> {
    let accepted = |lg: &LabelledGraph| {
        is_six_c(lg)
            || lg.certificate.as_ref().is_some_and(|c| {
                c.pass && matches!(c.kind.as_str(), "edge_magic_graceful" | "super_edge_magic_graceful")
            })
    };
    if !accepted(g) || !accepted(h) {
        return Err(Error::MissingCertificates);
    }
    let (fv, fe) = (g.labelling.vertex_set(), g.labelling.edge_set());
    let (gv, ge) = (h.labelling.vertex_set(), h.labelling.edge_set());
    let x_star: BTreeSet<Label> = fv.intersection(&gv).copied().collect();
    let edges_match_vertices = fe == gv.difference(&x_star).copied().collect();
    let vertices_match_edges = ge == fv.difference(&x_star).copied().collect();
    let six_c_singularity = (is_six_c(g) || is_six_c(h)).then(|| {
        let a0 = (g.graph.p() + g.graph.q() + 1) as Label / 2;
        x_star == BTreeSet::from([a0])
    });
    Ok(ReciprocalReport {
        pass: edges_match_vertices && vertices_match_edges && six_c_singularity != Some(false),
        x_star,
        edges_match_vertices,
        vertices_match_edges,
        six_c_singularity,
    })
}

/// Super edge-magic graceful labelling of a tree that is reciprocal-inverse
/// to the 6C labelling built from the same set-ordered graceful labelling
/// `f`: the low side `X = f^{-1}[0, s]` is reversed to `s - f(x) + 1`, the high
/// side becomes `f(y) + 1`, and edge `uv` gets `p + |f(u) - f(v)|`.
pub fn reciprocal_inverse_labelling(t: &Graph, f: &Labelling) -> Result<LabelledGraph> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    certify(t, f, &Kind::SetOrderedGraceful)?;
    let p = t.p() as Label;
    let v = f.vertex_labels()?;
    let zero = v.iter().position(|&x| x == 0).expect("graceful labellings use 0");
    let low = t.bipartition()?;
    let low_side = low.in_x(zero);
    let s = (0..t.p()).filter(|&x| low.in_x(x) == low_side).map(|x| v[x]).max().unwrap_or(0);
    let g: Vec<Label> = (0..t.p())
        .map(|x| if low.in_x(x) == low_side { s - v[x] + 1 } else { v[x] + 1 })
        .collect();
    let e: Vec<Label> = t.edges().iter().map(|&(a, b)| p + (v[a] - v[b]).abs()).collect();
    let labelling = Labelling::total(&g, &e);
    let cert = certify(t, &labelling, &Kind::SuperEdgeMagicGraceful)?;
    Ok(LabelledGraph {
        graph: t.clone(),
        labelling,
        certificate: Some(cert),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxMinPartition {
    pub partition: MatchingPartition,
    pub max_value: Label,
    pub min_value: Label,
    /// `k = p` and no labelled edge shared.
    pub perfect: bool,
    /// Perfect pairs among all optimal labelling pairs.
    pub perfect_pairs: usize,
}

const MAX_PAIRS: usize = 4_000_000;

/// Copies of `G` with a maximising and a minimising labelling, both found by
/// exhaustive search, composed by label identification. Among all optimal
/// pairs the first perfect one (lexicographically) is preferred.
pub fn max_min_partition(g: &Graph, obj: Objective) -> Result<MaxMinPartition> {
    let budget = SearchBudget {
        max_candidates: 50_000_000,
        ..SearchBudget::default()
    };
    let run = |dir| brute_force_optimizers(g, obj, dir, Image::Full, &budget).map_err(|_| Error::UncertifiedExtremal);
    let (max_value, maxima) = run(Direction::Max)?;
    let (min_value, minima) = run(Direction::Min)?;
    let edge_sets = |fs: &[Labelling]| -> Vec<(BTreeSet<Label>, BTreeSet<LabelledEdge>)> {
        fs.iter()
            .map(|f| {
                let v = f.vertex_labels().expect("complete");
                let es = g.edges().iter().map(|&(a, b)| (v[a].min(v[b]), v[a].max(v[b]))).collect();
                (f.vertex_set(), es)
            })
            .collect()
    };
    let (big, small) = (edge_sets(&maxima), edge_sets(&minima));
    let mut first: Option<(usize, usize)> = None;
    let mut perfect_pairs = 0;
    if big.len().saturating_mul(small.len()) <= MAX_PAIRS {
        for (i, (bv, be)) in big.iter().enumerate() {
            for (j, (sv, se)) in small.iter().enumerate() {
                if bv == sv && be.is_disjoint(se) {
                    perfect_pairs += 1;
                    first.get_or_insert((i, j));
                }
            }
        }
    }
    let (i, j) = first.unwrap_or((0, 0));
    let copy = |f: &Labelling| LabelledGraph::new(g.clone(), f.clone());
    let partition = compose(&[copy(&maxima[i]), copy(&minima[j])], true)?;
    let perfect = partition.k == g.p() && partition.mode == Mode::EdgeDisjoint;
    Ok(MaxMinPartition {
        partition,
        max_value,
        min_value,
        perfect,
        perfect_pairs,
    })
}

fn is_eulerian(g: &Graph) -> bool {
    g.p() > 0 && g.is_connected() && (0..g.p()).all(|v| g.degree(v) % 2 == 0)
}

/// Neither part is Eulerian but their composition is.
pub fn eulerian_matching_check(g1: &Graph, g2: &Graph, composition: &MatchingPartition) -> bool {
    !is_eulerian(g1) && !is_eulerian(g2) && is_eulerian(&composition.universal.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matching_team, six_c_from_set_ordered_graceful};

    fn lg(g: Graph, v: &[Label]) -> LabelledGraph {
        let q = g.q();
        LabelledGraph::new(g, Labelling::from_vertices(v, q))
    }

    fn labelled(p: usize, edges: &[(usize, usize)], v: &[Label]) -> LabelledGraph {
        lg(Graph::new(p, edges.iter().copied()).unwrap(), v)
    }

    #[test]
    fn k4_from_spanning_trees() {
        let h1 = labelled(4, &[(0, 1), (1, 2), (2, 3)], &[0, 1, 2, 3]);
        let h2 = labelled(4, &[(0, 1), (0, 2), (0, 3)], &[0, 1, 2, 3]);
        let h3 = labelled(4, &[(0, 1), (1, 2), (2, 3)], &[1, 3, 0, 2]);
        let c = compose(&[h1, h2, h3], true).unwrap();
        assert_eq!(c.mode, Mode::MultipleEdge);
        assert!(is_isomorphic(&c.universal.graph, &Graph::complete(4)).unwrap());
    }

    #[test]
    fn k4_from_caterpillars() {
        let t1 = labelled(4, &[(0, 1), (0, 2), (0, 3)], &[0, 1, 2, 3]);
        let t2 = labelled(3, &[(0, 1), (1, 2)], &[1, 2, 3]);
        let t3 = labelled(2, &[(0, 1)], &[1, 3]);
        let c = compose(&[t1, t2, t3], false).unwrap();
        assert_eq!(c.mode, Mode::EdgeDisjoint);
        assert!(is_isomorphic(&c.universal.graph, &Graph::complete(4)).unwrap());
        assert!(c.degrees_add_up());
        let back = c.decompose();
        assert_eq!(back[1], BTreeSet::from([(1, 2), (2, 3)]));
    }

    #[test]
    fn two_edges_share_one_label() {
        let c = compose(&[lg(Graph::path(2), &[0, 1]), lg(Graph::path(2), &[1, 2])], false).unwrap();
        assert_eq!(c.k, 1);
        assert!(is_isomorphic(&c.universal.graph, &Graph::path(3)).unwrap());
        assert_eq!(
            compose(&[lg(Graph::path(2), &[1, 1])], true),
            Err(Error::LabelClashInsidePart(0))
        );
        let shared = [lg(Graph::path(2), &[0, 1]), lg(Graph::path(3), &[1, 0, 2])];
        assert!(compose(&shared, false).is_err());
        assert_eq!(compose(&shared, true).unwrap().mode, Mode::Mixed);
    }

    #[test]
    fn odd_graceful_matching_failures() {
        let star = Graph::star(3);
        let f = Labelling::from_vertices(&[0, 1, 3, 5], 3);
        assert_eq!(odd_graceful_matching(&star, &f, false), Err(Error::NoMatchingExists));
        let p4 = Graph::path(4);
        let f = Labelling::from_vertices(&[0, 5, 2, 3], 3);
        assert_eq!(odd_graceful_matching(&p4, &f, false), Err(Error::NoMatchingExists));
    }

    #[test]
    fn odd_graceful_matching_on_a_seven_seven_graph() {
        let g = Graph::new(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 5)]).unwrap();
        let f = Labelling::from_vertices(&[0, 3, 9, 11, 13, 2, 8], 7);
        let m = odd_graceful_matching(&g, &f, true).unwrap();
        assert_eq!(m.union_top, 14);
        assert_eq!(m.k, 0);
        assert!(m.h.graph.is_tree());
        assert!(m.h.certificate.unwrap().pass);
        // no connected H exists on the seven free labels of [0, 13]
        assert_eq!(odd_graceful_matching(&g, &f, false), Err(Error::NoMatchingExists));
    }

    #[test]
    fn team_certificate() {
        let team = matching_team(&Graph::path(3)).unwrap();
        let c = verify_team(&team);
        assert!(c.pass, "{:?}", c.failures);
        assert!(c.approximately_perfect);
        let mut short = team.clone();
        short.members.pop();
        assert!(!verify_team(&short).pass);
    }

    #[test]
    fn reciprocal_pair_on_p3() {
        let t = Graph::path(3);
        let f = Labelling::from_vertices(&[0, 2, 1], 2);
        let a = six_c_from_set_ordered_graceful(&t, &f, false).unwrap();
        let b = reciprocal_inverse_labelling(&t, &f).unwrap();
        assert_eq!(b.labelling.vertex_labels().unwrap(), vec![2, 3, 1]);
        let r = reciprocal_inverse_check(&a, &b).unwrap();
        assert!(r.pass);
        assert_eq!(r.x_star, BTreeSet::from([3]));
        assert_eq!(r.six_c_singularity, Some(true));
        assert!(reciprocal_inverse_check(&b, &a).unwrap().pass);
        assert!(!reciprocal_inverse_check(&a, &a).unwrap().pass);
        let bare = LabelledGraph::new(t, a.labelling.clone());
        assert_eq!(reciprocal_inverse_check(&bare, &b), Err(Error::MissingCertificates));
    }

    #[test]
    fn reciprocal_pairs_on_caterpillars() {
        for t in crate::graph::catalog::caterpillars_up_to(8).into_iter().filter(|t| t.p() >= 2) {
            let f = crate::construct::caterpillar_set_ordered_graceful(&t).unwrap().labelling;
            let a = six_c_from_set_ordered_graceful(&t, &f, false).unwrap();
            let b = reciprocal_inverse_labelling(&t, &f).unwrap();
            assert!(reciprocal_inverse_check(&a, &b).unwrap().pass);
        }
    }

    #[test]
    fn max_min_on_p3() {
        let r = max_min_partition(&Graph::path(3), Objective::DifferenceSum).unwrap();
        assert_eq!((r.max_value, r.min_value), (3, 2));
        assert_eq!(r.perfect, r.perfect_pairs > 0);
        let k4 = max_min_partition(&Graph::complete(4), Objective::DifferenceSum).unwrap();
        assert!(k4.max_value > k4.min_value);
    }

    #[test]
    fn eulerian_matching() {
        let a = lg(Graph::path(3), &[0, 1, 2]);
        let b = lg(Graph::path(3), &[0, 3, 2]);
        let c = compose(&[a.clone(), b.clone()], false).unwrap();
        assert!(eulerian_matching_check(&a.graph, &b.graph, &c));
        let tri = lg(Graph::cycle(3), &[0, 1, 2]);
        let tri2 = lg(Graph::cycle(3), &[2, 3, 4]);
        let c = compose(&[tri.clone(), tri2.clone()], false).unwrap();
        assert!(!eulerian_matching_check(&tri.graph, &tri2.graph, &c));
        let d = compose(&[a.clone(), lg(Graph::path(2), &[2, 5])], false).unwrap();
        assert!(!eulerian_matching_check(&a.graph, &Graph::path(2), &d));
    }
}
