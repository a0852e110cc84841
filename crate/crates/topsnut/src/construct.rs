//! Executable versions of the constructive proofs. Every generator checks its
//! output with the verifiers before returning it.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::labelling::{Label, LabelledGraph, Labelling, SetLabelling};
use crate::search::{find_labelling, SearchBudget};
use crate::verify::util::{perfect_matching, set_ordered};
use crate::verify::{
    self, certify, verify_set_labelling, verify_twin_pair, Kind, ProperRule, SetKind, TogMode, TwinParts,
    VerifyReport,
};

mod coloring;

pub use coloring::{
    bistar_total_coloring, spider_total_coloring, star_total_coloring, tree_equitable_total_coloring,
    TotalColoring,
};

fn certified(graph: Graph, labelling: Labelling, kind: &Kind) -> Result<LabelledGraph> {
    let r = certify(&graph, &labelling, kind)?;
    Ok(LabelledGraph {
        graph,
        labelling,
        certificate: Some(r),
    })
}

fn from_vertices(g: &Graph, v: &[Label]) -> Labelling {
    Labelling::from_vertices(v, g.q())
}

/// Both sides of a set-ordered graceful labelling, each sorted by label;
/// `xs` is the low side.
struct Sides {
    v: Vec<Label>,
    xs: Vec<usize>,
    ys: Vec<usize>,
}

impl Sides {
    fn of(g: &Graph, f: &Labelling) -> Result<Sides> {
        let pass = verify::verify(g, f, &Kind::SetOrderedGraceful).is_ok_and(|r| r.pass);
        if !pass || g.q() == 0 {
            return Err(Error::NotSetOrderedGraceful);
        }
        let v = f.vertex_labels()?;
        let mut lo = BTreeSet::new();
        let mut hi = BTreeSet::new();
        for &(a, b) in g.edges() {
            let (x, y) = if v[a] < v[b] { (a, b) } else { (b, a) };
            lo.insert(x);
            hi.insert(y);
        }
        let mut xs: Vec<usize> = lo.into_iter().collect();
        let mut ys: Vec<usize> = hi.into_iter().collect();
        xs.sort_by_key(|&u| v[u]);
        ys.sort_by_key(|&u| v[u]);
        Ok(Sides { v, xs, ys })
    }

    #[cfg(test)]
    fn s(&self) -> Label {
        self.xs.len() as Label
    }

    fn in_x(&self, u: usize) -> bool {
        self.xs.binary_search_by_key(&self.v[u], |&w| self.v[w]).is_ok()
    }

    /// `f(x_{s-i+1})` for `x_i`, `f(y_{t-j+1})` for `y_j`.
    fn reversed(&self) -> Vec<Label> {
        let mut r = self.v.clone();
        for side in [&self.xs, &self.ys] {
            for (i, &u) in side.iter().enumerate() {
                r[u] = self.v[side[side.len() - 1 - i]];
            }
        }
        r
    }

    /// `f` on `X` and the side-reversed labels on `Y` (or the other way).
    fn mixed(&self, reverse_x: bool) -> Vec<Label> {
        let r = self.reversed();
        (0..self.v.len())
            .map(|u| if self.in_x(u) == reverse_x { r[u] } else { self.v[u] })
            .collect()
    }

    fn edge(&self, g: &Graph, e: usize) -> Label {
        let (a, b) = g.edge(e);
        (self.v[a] - self.v[b]).abs()
    }
}

fn caterpillar_parts(t: &Graph) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let shape = t.classify_tree();
    if !shape.caterpillar {
        return Err(Error::NotCaterpillar);
    }
    Ok((shape.spine.unwrap_or_default(), shape.leaves.unwrap_or_default()))
}

/// The low side reads u1, L(u2), u3, L(u4), ... and counts up from 0; the
/// high side reads L(u1), u2, L(u3), ... and counts down from p-1. `mirrored`
/// swaps the two readings.
fn zigzag(t: &Graph, mirrored: bool) -> Result<Vec<Label>> {
    let (spine, leaves) = caterpillar_parts(t)?;
    let (mut lo, mut hi) = (Vec::new(), Vec::new());
    for (i, (&u, l)) in spine.iter().zip(&leaves).enumerate() {
        if (i % 2 == 0) != mirrored {
            lo.push(u);
            hi.extend(l);
        } else {
            hi.push(u);
            lo.extend(l);
        }
    }
    let mut v = vec![0; t.p()];
    for (i, &u) in lo.iter().enumerate() {
        v[u] = i as Label;
    }
    for (j, &u) in hi.iter().enumerate() {
        v[u] = t.p() as Label - 1 - j as Label;
    }
    Ok(v)
}

fn doubled(t: &Graph, f: &[Label]) -> Vec<Label> {
    if t.q() == 0 {
        return f.to_vec();
    }
    let sides = Sides::of(t, &from_vertices(t, f)).expect("seed is set-ordered graceful");
    (0..t.p())
        .map(|u| if sides.in_x(u) { 2 * f[u] } else { 2 * f[u] - 1 })
        .collect()
}

fn seed(t: &Graph, mirrored: bool) -> Result<Vec<Label>> {
    let v = zigzag(t, mirrored)?;
    if verify::accepts(t, &from_vertices(t, &v), &Kind::SetOrderedGraceful) {
        return Ok(v);
    }
    let found = find_labelling(t, &Kind::SetOrderedGraceful, &SearchBudget::default())?;
    found
        .map(|f| f.vertex_labels())
        .transpose()?
        .ok_or_else(|| Error::CertificationFailed("no set-ordered graceful labelling".into()))
}

/// Set-ordered graceful labelling of a caterpillar read off its spine.
pub fn caterpillar_set_ordered_graceful(t: &Graph) -> Result<LabelledGraph> {
    let v = seed(t, false)?;
    certified(t.clone(), from_vertices(t, &v), &Kind::SetOrderedGraceful)
}

/// Set-ordered odd-graceful labelling with `h(u1) = 0`: even labels on the
/// low side, odd ones on the high side.
pub fn caterpillar_set_ordered_odd_graceful(t: &Graph) -> Result<LabelledGraph> {
    let v = doubled(t, &seed(t, false)?);
    certified(t.clone(), from_vertices(t, &v), &Kind::SetOrderedOddGraceful)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TeamMember {
    pub member: LabelledGraph,
    /// Vertex of `H` matched with this member.
    pub h_vertex: usize,
    pub shared_label: Label,
    /// `|f_i(V(T_i)) ∩ h*(V(H))|`.
    pub intersection: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatchingTeam {
    /// `T` with its set-ordered odd-graceful labelling `h`.
    pub tree: LabelledGraph,
    /// The copy `H` carrying `h* = h + 1`.
    pub h: LabelledGraph,
    /// Leaf of the unit edge, removed from every member.
    pub removed_leaf: usize,
    pub members: Vec<TeamMember>,
}

fn team_for(t: &Graph, h: &[Label], v: usize) -> Result<Vec<TeamMember>> {
    let star: BTreeSet<Label> = h.iter().map(|x| x + 1).collect();
    let shift = |w: usize| if w > v { w - 1 } else { w };
    let base = t.without_vertex(v)?;
    let rest: Vec<Label> = (0..t.p()).filter(|&w| w != v).map(|w| h[w]).collect();
    if rest.iter().any(|x| star.contains(x)) {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for x in 0..t.p() {
        let label = h[x] + 1;
        let anchor = (0..t.p())
            .filter(|&w| w != v)
            .find(|&w| (h[w] - label).abs() == 1)
            .map(shift);
        let Some(anchor) = anchor else { continue };
        let graph = base.with_leaf(anchor)?;
        let mut labels = rest.clone();
        labels.push(label);
        let q = graph.q() as Label;
        let kind = if label <= 2 * q - 1 {
            Kind::OddGraceful
        } else {
            Kind::PanOddGraceful
        };
        let f = from_vertices(&graph, &labels);
        let Ok(member) = certified(graph, f, &kind) else { continue };
        let intersection = labels.iter().filter(|l| star.contains(l)).count();
        out.push(TeamMember {
            member,
            h_vertex: x,
            shared_label: label,
            intersection,
        });
    }
    Ok(out)
}

/// The team `⊙⟨H, T_i⟩`: `H` is `T` shifted by one, and member `i` is `T`
/// minus the leaf of its unit edge with a new leaf carrying `h*(x_i)`. Both
/// spine readings are tried so that the removed leaf holds the larger label
/// of the unit edge; a vertex of `H` without a member makes the team
/// incomplete.
pub fn matching_team(t: &Graph) -> Result<MatchingTeam> {
    caterpillar_parts(t)?;
    let mut best: Option<(Vec<Label>, usize, Vec<TeamMember>)> = None;
    for mirrored in [false, true] {
        let h = doubled(t, &seed(t, mirrored)?);
        for &(a, b) in t.edges() {
            let (lo, hi) = if h[a] < h[b] { (a, b) } else { (b, a) };
            if h[hi] - h[lo] != 1 || t.degree(hi) != 1 {
                continue;
            }
            let members = team_for(t, &h, hi)?;
            if best.as_ref().is_none_or(|(_, _, m)| members.len() > m.len()) {
                best = Some((h.clone(), hi, members));
            }
        }
    }
    let (h, v, members) = best.ok_or(Error::NoUnitLeafEdge)?;
    if members.len() < t.p() {
        return Err(Error::TeamIncomplete(members.len()));
    }
    let tree = certified(t.clone(), from_vertices(t, &h), &Kind::SetOrderedOddGraceful)?;
    let star: Vec<Label> = h.iter().map(|x| x + 1).collect();
    let hg = certified(t.clone(), from_vertices(t, &star), &Kind::PanOddGraceful)?;
    Ok(MatchingTeam {
        tree,
        h: hg,
        removed_leaf: v,
        members,
    })
}

/// The ten labellings `f_1 .. f_10` of copies of a tree derived from one
/// set-ordered graceful labelling, each certified with its kind.
///
/// For `f_3` and `f_7` (low side reversed) the edge formulas `2p - f` and
/// `f + p` are exchanged relative to `f_2`/`f_6`; with the vertex labels as
/// given only this pairing is magic and antimagic respectively. In `f_8` and
/// `f_9` the vertex labelled `p-1` takes `0`.
pub fn derive_ten_labellings(t: &Graph, f: &Labelling) -> Result<Vec<LabelledGraph>> {
    let sd = Sides::of(t, f)?;
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    let p = t.p() as Label;
    let q = t.q();
    let fe: Vec<Label> = (0..q).map(|e| sd.edge(t, e)).collect();
    let plus1 = |v: Vec<Label>| v.into_iter().map(|x| x + 1).collect::<Vec<_>>();
    let top_to_zero = |v: Vec<Label>| v.into_iter().map(|x| if x == p - 1 { 0 } else { x }).collect::<Vec<_>>();
    let magic_e: Vec<Label> = fe.iter().map(|d| d + p).collect();
    let anti_e: Vec<Label> = fe.iter().map(|d| 2 * p - d).collect();
    let ry = sd.mixed(false);
    let rx = sd.mixed(true);
    let items: Vec<(Labelling, Kind)> = vec![
        (from_vertices(t, &sd.v), Kind::SetOrderedGraceful),
        (Labelling::total(&plus1(ry.clone()), &magic_e), Kind::SuperEdgeMagicTotal),
        (Labelling::total(&plus1(rx.clone()), &anti_e), Kind::SuperEdgeMagicTotal),
        (from_vertices(t, &ry), Kind::Felicitous),
        (from_vertices(t, &rx), Kind::Felicitous),
        (Labelling::total(&plus1(ry.clone()), &anti_e), Kind::EdgeAntimagicTotal),
        (Labelling::total(&plus1(rx.clone()), &magic_e), Kind::EdgeAntimagicTotal),
        (from_vertices(t, &top_to_zero(ry)), Kind::Harmonious),
        (from_vertices(t, &top_to_zero(rx)), Kind::Harmonious),
        (
            Labelling::total(&sd.v, &fe.iter().map(|d| p - d).collect::<Vec<_>>()),
            Kind::Dgemm,
        ),
    ];
    items
        .into_iter()
        .map(|(l, k)| certified(t.clone(), l, &k))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ESetVProper {
    /// `F(e) = {h_2(e), .., h_6(e)}`; `h_1` is null on edges.
    pub sets: SetLabelling,
    /// `f*`: `f` on the low side, the reversed labels on the high side.
    pub vertex: Labelling,
    /// `h_1 .. h_6`, all sharing the vertex labels of `f*`.
    pub components: Vec<Labelling>,
    pub max_set_size: usize,
    pub report: VerifyReport,
}

/// E-set v-proper labelling assembled from six total labellings sharing the
/// vertex labels `f*`.
pub fn eset_vproper_from_set_ordered_graceful(t: &Graph, f: &Labelling) -> Result<ESetVProper> {
    let sd = Sides::of(t, f)?;
    let p = t.p() as Label;
    let star = sd.mixed(false);
    let fe: Vec<Label> = (0..t.q()).map(|e| sd.edge(t, e)).collect();
    let sums: Vec<Label> = t.edges().iter().map(|&(a, b)| star[a] + star[b]).collect();
    let edge_sets: [Vec<Label>; 5] = [
        fe.clone(),
        fe.iter().map(|d| p - 1 + d).collect(),
        sums.iter().map(|s| s.rem_euclid((p - 1).max(1))).collect(),
        fe.iter().map(|d| p - d).collect(),
        fe.iter().map(|d| 2 * d - 1).collect(),
    ];
    let mut components = vec![Labelling::from_vertices(&star, t.q())];
    components.extend(edge_sets.iter().map(|e| Labelling::total(&star, e)));
    for (i, kind) in [(1, Kind::PanEdgeMagicTotal), (2, Kind::PanEdgeMagicTotal), (3, Kind::Felicitous)] {
        certify(t, &components[i], &kind)?;
    }
    let mut sets = SetLabelling::empty(t.p(), t.q());
    for e in 0..t.q() {
        sets.edges[e] = Some(edge_sets.iter().map(|s| s[e]).collect());
    }
    let max_set_size = sets.edges.iter().flatten().map(BTreeSet::len).max().unwrap_or(0);
    let vertex = Labelling::from_vertices(&star, t.q());
    let report = verify_set_labelling(t, &sets, Some(&vertex), SetKind::ESetVProper)?;
    if !report.pass || max_set_size < 5 {
        return Err(Error::CertificationFailed(format!(
            "e-set v-proper: {} (largest set {max_set_size})",
            report.failed().join(", ")
        )));
    }
    Ok(ESetVProper {
        sets,
        vertex,
        components,
        max_set_size,
        report,
    })
}

/// `f = p + g` on vertices and `p - g` on edges; with `odd_even` the
/// vertices get `2g + 1` and the edges `2p - 2g`.
pub fn six_c_from_set_ordered_graceful(t: &Graph, g: &Labelling, odd_even: bool) -> Result<LabelledGraph> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    let sd = Sides::of(t, g)?;
    let p = t.p() as Label;
    let fe: Vec<Label> = (0..t.q()).map(|e| sd.edge(t, e)).collect();
    let (v, e, kind): (Vec<Label>, Vec<Label>, Kind) = if odd_even {
        (
            sd.v.iter().map(|x| 2 * x + 1).collect(),
            fe.iter().map(|d| 2 * p - 2 * d).collect(),
            Kind::OddEvenSeparableSixC,
        )
    } else {
        (
            sd.v.iter().map(|x| p + x).collect(),
            fe.iter().map(|d| p - d).collect(),
            Kind::SixC,
        )
    };
    certified(t.clone(), Labelling::total(&v, &e), &kind)
}

/// Inverse of [`six_c_from_set_ordered_graceful`].
pub fn set_ordered_from_six_c(t: &Graph, f: &Labelling, odd_even: bool) -> Result<LabelledGraph> {
    let p = t.p() as Label;
    let v = f.vertex_labels()?;
    let e = f.edge_labels()?;
    let (v, e): (Vec<Label>, Vec<Label>) = if odd_even {
        (v.iter().map(|x| (x - 1) / 2).collect(), e.iter().map(|x| p - x / 2).collect())
    } else {
        (v.iter().map(|x| x - p).collect(), e.iter().map(|x| p - x).collect())
    };
    certified(t.clone(), Labelling::total(&v, &e), &Kind::SetOrderedGraceful)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinFlavor {
    OddGraceful,
    /// Labels of the second part are taken mod `2p-2`.
    OddElegant,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwinSelfMatching {
    pub first: LabelledGraph,
    pub second: LabelledGraph,
    pub shared: Vec<Label>,
    /// The two parts identified on their shared label, with the parts
    /// designated by edge index. Only built when exactly one label is shared.
    pub composite: Option<(LabelledGraph, TwinParts)>,
    pub report: VerifyReport,
}

/// Two copies of a tree: `g'` doubles a set-ordered graceful labelling into
/// an odd labelling and `g'' = g' + 1` is its complementary matching.
pub fn twin_self_matching(t: &Graph, f: &Labelling, flavor: TwinFlavor) -> Result<TwinSelfMatching> {
    let sd = Sides::of(t, f)?;
    let p = t.p() as Label;
    let base = match flavor {
        TwinFlavor::OddGraceful => sd.v.clone(),
        TwinFlavor::OddElegant => sd.mixed(false),
    };
    let g1: Vec<Label> = (0..t.p())
        .map(|u| if sd.in_x(u) { 2 * base[u] } else { 2 * base[u] - 1 })
        .collect();
    let g2: Vec<Label> = g1
        .iter()
        .map(|x| match flavor {
            TwinFlavor::OddGraceful => x + 1,
            TwinFlavor::OddElegant => (x + 1).rem_euclid(2 * p - 2),
        })
        .collect();
    let (k1, k2) = match flavor {
        TwinFlavor::OddGraceful => (Kind::OddGraceful, Kind::PanOddGraceful),
        TwinFlavor::OddElegant => (Kind::OddElegant, Kind::OddElegant),
    };
    let first = certified(t.clone(), from_vertices(t, &g1), &k1)?;
    let second = certified(t.clone(), from_vertices(t, &g2), &k2)?;
    let l1: BTreeSet<Label> = g1.iter().copied().collect();
    let shared: Vec<Label> = g2.iter().copied().filter(|x| l1.contains(x)).collect();
    let twin_kind = match flavor {
        TwinFlavor::OddGraceful => Kind::Tog(TogMode::Compatible, None),
        TwinFlavor::OddElegant => Kind::Toe(None),
    };
    let composite = if shared.len() == 1 {
        let a = g1.iter().position(|&x| x == shared[0]).expect("shared");
        let b = g2.iter().position(|&x| x == shared[0]).expect("shared");
        let (graph, map) = t.disjoint_union(t).vertex_identify_map(a, t.p() + b)?;
        let mut v = vec![0; graph.p()];
        for (old, &new) in map.iter().enumerate() {
            v[new] = if old < t.p() { g1[old] } else { g2[old - t.p()] };
        }
        let parts = TwinParts {
            first: (0..t.q()).collect(),
            second: (t.q()..2 * t.q()).collect(),
        };
        let lg = certified(graph.clone(), from_vertices(&graph, &v), &twin_kind.with_parts(parts.clone()))?;
        Some((lg, parts))
    } else {
        None
    };
    let report = verify_twin_pair(t, &first.labelling, t, &second.labelling, &twin_kind)?;
    if !report.pass {
        return Err(Error::CertificationFailed(format!(
            "{} fails {}",
            report.kind,
            report.failed().join(", ")
        )));
    }
    Ok(TwinSelfMatching {
        first,
        second,
        shared,
        composite,
        report,
    })
}

pub fn twin_odd_graceful_self_matching(t: &Graph, f: &Labelling) -> Result<TwinSelfMatching> {
    twin_self_matching(t, f, TwinFlavor::OddGraceful)
}

/// `F(x) = [0, f(x)]`, `F(y) = [0, f(y)]` and `F(xy) = F(y) \ F(x)`; the odd
/// flavor uses `[0, 2f(x)]` and `[0, 2f(y)-1]`.
pub fn total_set_labelling(g: &Graph, f: &Labelling, flavor: ProperRule) -> Result<SetLabelling> {
    let sd = Sides::of(g, f)?;
    let top = |u: usize| match (flavor, sd.in_x(u)) {
        (ProperRule::Graceful, _) => sd.v[u],
        (ProperRule::OddGraceful, true) => 2 * sd.v[u],
        (ProperRule::OddGraceful, false) => 2 * sd.v[u] - 1,
    };
    let mut sets = SetLabelling::empty(g.p(), g.q());
    for u in 0..g.p() {
        sets.vertices[u] = Some((0..=top(u)).collect());
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let (x, y) = if sd.in_x(a) { (a, b) } else { (b, a) };
        sets.edges[e] = Some((top(x) + 1..=top(y)).collect());
    }
    let report = verify_set_labelling(g, &sets, None, SetKind::TotalSet)?;
    let mut sizes: Vec<Label> = sets.edges.iter().flatten().map(|s| s.len() as Label).collect();
    sizes.sort_unstable();
    let q = g.q() as Label;
    let want: Vec<Label> = match flavor {
        ProperRule::Graceful => (1..=q).collect(),
        ProperRule::OddGraceful => (1..=q).map(|i| 2 * i - 1).collect(),
    };
    if !report.pass || sizes != want {
        return Err(Error::CertificationFailed(format!(
            "total set labelling: {} with edge set sizes {sizes:?}",
            report.failed().join(", ")
        )));
    }
    Ok(sets)
}

/// V-set e-proper labelling of `K_n` grown one vertex at a time. The new
/// vertex gets a single number `N`; each old vertex contributes a member `a`
/// with `N - a` one of the new edge labels, reusing members it owns and
/// taking unowned numbers otherwise. `N` moves up until such members exist.
pub fn complete_graph_vset_graceful(n: usize, flavor: ProperRule) -> Result<(Graph, SetLabelling, Labelling)> {
    if n < 2 {
        return Err(Error::TooSmall(format!("K_{n} has no edges")));
    }
    let step: Label = match flavor {
        ProperRule::Graceful => 1,
        ProperRule::OddGraceful => 2,
    };
    let mut sets: Vec<BTreeSet<Label>> = vec![BTreeSet::from([0]), BTreeSet::from([1])];
    let mut labels: BTreeMap<(usize, usize), Label> = BTreeMap::from([((0, 1), 1)]);
    for m in 2..n {
        let q_old = (m * (m - 1) / 2) as Label;
        let first = step * q_old + 1;
        let owner: BTreeMap<Label, usize> = sets
            .iter()
            .enumerate()
            .flat_map(|(j, s)| s.iter().map(move |&a| (a, j)))
            .collect();
        let mut c = 0;
        loop {
            let top = first + step * (m as Label - 1) + c;
            let need: Vec<Label> = (0..m).map(|k| top - first - step * k as Label).collect();
            let fits = |j: usize, k: usize| owner.get(&need[k]).is_none_or(|&o| o == j);
            if let Some(mt) = (!owner.contains_key(&top)).then(|| perfect_matching(m, m, fits)).flatten() {
                for (j, &k) in mt.iter().enumerate() {
                    sets[j].insert(need[k]);
                    labels.insert((j, m), first + step * k as Label);
                }
                sets.push(BTreeSet::from([top]));
                break;
            }
            c += 1;
        }
    }
    let g = Graph::complete(n);
    let mut f = Labelling::empty(n, g.q());
    for (&(a, b), &l) in &labels {
        let e = g.edge_index(a, b).expect("complete graph");
        f.edges[e] = Some(l);
    }
    let sl = SetLabelling {
        vertices: sets.into_iter().map(Some).collect(),
        edges: vec![None; g.q()],
    };
    let report = verify_set_labelling(&g, &sl, Some(&f), SetKind::VSetEProper(flavor))?;
    if !report.pass {
        return Err(Error::CertificationFailed(format!(
            "v-set e-proper K_{n}: {}",
            report.failed().join(", ")
        )));
    }
    Ok((g, sl, f))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SetOrderedDouble {
    /// `G ⊖ H` with `g`; the certificate is for the set-ordered variant of
    /// the kind where one exists and may fail.
    pub labelled: LabelledGraph,
    pub set_ordered: bool,
    pub self_matching: bool,
    /// Edge joining vertex 0 of `G` with its copy in `H`.
    pub bridge: usize,
}

fn set_ordered_variant(kind: &Kind) -> Kind {
    match kind {
        Kind::Graceful => Kind::SetOrderedGraceful,
        Kind::OddGraceful => Kind::SetOrderedOddGraceful,
        Kind::OddElegant => Kind::SetOrderedOddElegant,
        k => k.clone(),
    }
}

/// `G ⊖ H` for a copy `H` of `G` joined at vertex 0: `g = f` on `X ∪ Y'` and
/// `g = f + o` on `X' ∪ Y`. The offset `o` is `p`, raised to `max f + 1` when
/// the labels of `f` reach `p` so that the two halves stay apart.
pub fn set_ordered_double(g: &Graph, f: &Labelling, kind: &Kind) -> Result<SetOrderedDouble> {
    let b = g.bipartition().map_err(|_| Error::NotBipartite)?;
    if !kind.is_vertex_kind() || kind.is_twin() {
        return Err(Error::Unsupported(format!("{} is not a vertex labelling kind", kind.name())));
    }
    certify(g, f, kind)?;
    let v = f.vertex_labels()?;
    let p = g.p();
    let mut graph = g.disjoint_union(g);
    let bridge = graph.q();
    graph = graph.with_edge(0, p)?;
    let o = (p as Label).max(v.iter().max().map_or(0, |m| m + 1));
    let mut w = vec![0; 2 * p];
    for u in 0..p {
        let x = b.in_x(u);
        w[u] = if x { v[u] } else { v[u] + o };
        w[p + u] = if x { v[u] + o } else { v[u] };
    }
    let labelling = from_vertices(&graph, &w);
    let target = set_ordered_variant(kind);
    let report = verify::verify(&graph, &labelling, &target)?;
    Ok(SetOrderedDouble {
        set_ordered: set_ordered(&graph, &w),
        self_matching: is_isomorphic(g, g)?,
        labelled: LabelledGraph {
            graph,
            labelling,
            certificate: Some(report),
        },
        bridge,
    })
}
