//! Every-zero graphic groups: the cyclic shifts `f_i = f + i (mod n)` of a
//! base labelling under `f_i ⊕_k f_j = f_{i+j-k}`, and networks whose
//! vertices and edges carry group elements.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, LabelledGraph, Labelling};
use crate::search::{falling, SearchBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftDomain {
    VerticesAndEdges,
    VerticesOnly,
}

/// Elements are kept as indices; `element(i)` realises one on demand.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphicGroup {
    pub base: LabelledGraph,
    pub modulus: usize,
    pub domain: ShiftDomain,
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        return Err(Error::IndexOutOfRange(i, n));
    }
    Ok(())
}

/// `(i + j - zero) mod n`.
pub fn group_op(i: usize, j: usize, zero: usize, n: usize) -> Result<usize> {
    for x in [i, j, zero] {
        check_index(x, n)?;
    }
    Ok((i + j + n - zero) % n)
}

/// The `x` with `i ⊕ x = zero`.
pub fn group_inverse(i: usize, zero: usize, n: usize) -> Result<usize> {
    check_index(i, n)?;
    check_index(zero, n)?;
    Ok((2 * zero + n - i) % n)
}

impl GraphicGroup {
    pub fn new(base: LabelledGraph, modulus: usize, domain: ShiftDomain) -> Result<GraphicGroup> {
        if modulus == 0 {
            return Err(Error::TooSmall("modulus must be at least 1".into()));
        }
        base.labelling.vertex_labels()?;
        if domain == ShiftDomain::VerticesAndEdges {
            base.labelling.edge_labels()?;
        }
        Ok(GraphicGroup { base, modulus, domain })
    }

    pub fn len(&self) -> usize {
        self.modulus
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn shift(&self, x: Label, i: usize) -> Label {
        let n = self.modulus as Label;
        (x + i as Label).rem_euclid(n)
    }

    /// `f_i`. Base labels are read modulo `n`, so `f_0` is the base itself
    /// whenever its labels already lie in `[0, n-1]`.
    pub fn element(&self, i: usize) -> Result<Labelling> {
        check_index(i, self.modulus)?;
        let f = &self.base.labelling;
        let vertices = f.vertices.iter().map(|x| x.map(|x| self.shift(x, i))).collect();
        let edges = match self.domain {
            ShiftDomain::VerticesAndEdges => f.edges.iter().map(|x| x.map(|x| self.shift(x, i))).collect(),
            ShiftDomain::VerticesOnly => f.edges.clone(),
        };
        Ok(Labelling { vertices, edges })
    }

    pub fn op(&self, i: usize, j: usize, zero: usize) -> Result<usize> {
        group_op(i, j, zero, self.modulus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub modulus: usize,
    pub zeros_checked: usize,
    pub closure: bool,
    pub associativity: bool,
    pub identity: bool,
    pub inverses: bool,
    pub commutativity: bool,
    /// `f_i(x) + f_j(x) - f_k(x) ≡ f_{i⊕j}(x)` on every labelled element.
    pub realised: bool,
    pub pass: bool,
}

/// Checks every axiom for every choice of zero.
pub fn verify_group(gp: &GraphicGroup) -> GroupReport {
    let n = gp.modulus;
    let op = |i: usize, j: usize, k: usize| (i + j + n - k) % n;
    let elements: Vec<Labelling> = (0..n).map(|i| gp.element(i).expect("index below modulus")).collect();
    // vertices-only groups leave edge labels fixed, so only vertices obey the law
    let values = |f: &Labelling| -> Vec<Label> {
        let edges = if gp.domain == ShiftDomain::VerticesAndEdges { &f.edges[..] } else { &[] };
        f.vertices.iter().chain(edges).map(|x| x.unwrap_or(0)).collect()
    };
    let flat: Vec<Vec<Label>> = elements.iter().map(values).collect();
    let (mut closure, mut assoc, mut identity, mut inverses, mut commut, mut realised) = (true, true, true, true, true, true);
    let m = n as Label;
    for k in 0..n {
        for i in 0..n {
            identity &= op(i, k, k) == i && op(k, i, k) == i;
            inverses &= op(i, (2 * k + n - i) % n, k) == k;
            for j in 0..n {
                let ij = op(i, j, k);
                closure &= ij < n;
                commut &= ij == op(j, i, k);
                realised &= flat[i]
                    .iter()
                    .zip(&flat[j])
                    .zip(&flat[k])
                    .zip(&flat[ij])
                    .all(|(((a, b), c), d)| (a + b - c).rem_euclid(m) == *d);
                for l in 0..n {
                    assoc &= op(ij, l, k) == op(i, op(j, l, k), k);
                }
            }
        }
    }
    let pass = closure && assoc && identity && inverses && commut && realised;
    GroupReport {
        modulus: n,
        zeros_checked: n,
        closure,
        associativity: assoc,
        identity,
        inverses,
        commutativity: commut,
        realised,
        pass,
    }
}

/// Whether `f_i` is an edge-magic graceful labelling read modulo `n`:
/// all `p + q` values distinct residues and `f(u) + f(v) - f(uv)` constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftCheck {
    pub index: usize,
    pub distinct: bool,
    pub magic_constant: Option<Label>,
    pub pass: bool,
}

pub fn modular_edge_magic_graceful_report(gp: &GraphicGroup) -> Result<Vec<ShiftCheck>> {
    let m = gp.modulus as Label;
    (0..gp.modulus)
        .map(|i| {
            let f = gp.element(i)?;
            let v = f.vertex_labels()?;
            let e = f.edge_labels()?;
            let all: BTreeSet<Label> = v.iter().chain(&e).copied().collect();
            let distinct = all.len() == v.len() + e.len();
            let ks: BTreeSet<Label> = gp
                .base
                .graph
                .edges()
                .iter()
                .zip(&e)
                .map(|(&(a, b), &w)| (v[a] + v[b] - w).rem_euclid(m))
                .collect();
            let magic_constant = if ks.len() == 1 { ks.first().copied() } else { None };
            Ok(ShiftCheck {
                index: i,
                distinct,
                magic_constant,
                pass: distinct && magic_constant.is_some(),
            })
        })
        .collect()
}

/// Which edge indices an encrypted network must realise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeIndexSet {
    Any,
    /// Exactly `[1, q]`.
    Graceful,
    /// Exactly the odd numbers `1, 3, ..., 2q-1`.
    OddGraceful,
}

impl EdgeIndexSet {
    fn target(self, q: usize) -> Option<BTreeSet<usize>> {
        match self {
            EdgeIndexSet::Any => None,
            EdgeIndexSet::Graceful => Some((1..=q).collect()),
            EdgeIndexSet::OddGraceful => Some((0..q).map(|i| 2 * i + 1).collect()),
        }
    }
}

/// Vertex `v` carries element `a(v)` and edge `uv` carries
/// `(a(u) + a(v) - zero) mod n`. Labels of the result are element indices.
pub fn encrypt_network(network: &Graph, modulus: usize, assignment: &[usize], zero: usize) -> Result<LabelledGraph> {
    if assignment.len() != network.p() {
        return Err(Error::Invalid(format!(
            "assignment has {} entries for {} vertices",
            assignment.len(),
            network.p()
        )));
    }
    check_index(zero, modulus)?;
    for &a in assignment {
        check_index(a, modulus)?;
    }
    let edges: Vec<Label> = network
        .edges()
        .iter()
        .map(|&(u, v)| ((assignment[u] + assignment[v] + modulus - zero) % modulus) as Label)
        .collect();
    let vertices: Vec<Label> = assignment.iter().map(|&a| a as Label).collect();
    Ok(LabelledGraph::new(network.clone(), Labelling::total(&vertices, &edges)))
}

/// Whether the edge indices of an encrypted network form `set`, with
/// distinct vertex indices required unless `set` is `Any`.
pub fn edge_indices_match(lg: &LabelledGraph, set: EdgeIndexSet) -> Result<bool> {
    let Some(target) = set.target(lg.graph.q()) else {
        return Ok(true);
    };
    let v = lg.labelling.vertex_labels()?;
    let e = lg.labelling.edge_labels()?;
    let distinct = v.iter().collect::<BTreeSet<_>>().len() == v.len();
    let got: BTreeSet<usize> = e.iter().map(|&x| x as usize).collect();
    Ok(distinct && got.len() == e.len() && got == target)
}

/// Depth-first search for an injective assignment whose edge indices form
/// `set`. `Ok(None)` means none exists.
pub fn find_group_assignment(
    network: &Graph,
    modulus: usize,
    zero: usize,
    set: EdgeIndexSet,
    budget: &SearchBudget,
) -> Result<Option<Vec<usize>>> {
    check_index(zero, modulus)?;
    let p = network.p();
    budget.check_size(p, network.q())?;
    budget.check_candidates(falling(modulus, p))?;
    if p > modulus {
        return Ok(None);
    }
    let target = set.target(network.q());
    if let Some(t) = &target {
        if t.iter().any(|&x| x >= modulus) {
            return Ok(None);
        }
    }
    let order = dfs_order(network);
    let mut pos = vec![0; p];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut state = Assign {
        g: network,
        n: modulus,
        zero,
        target,
        order,
        pos,
        a: vec![usize::MAX; p],
        used_vertex: vec![false; modulus],
        used_edge: vec![false; modulus],
    };
    Ok(state.go(0).then_some(state.a))
}

fn dfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.p()];
    let mut order = Vec::with_capacity(g.p());
    for s in 0..g.p() {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    order
}

struct Assign<'a> {
    g: &'a Graph,
    n: usize,
    zero: usize,
    target: Option<BTreeSet<usize>>,
    order: Vec<usize>,
    pos: Vec<usize>,
    a: Vec<usize>,
    used_vertex: Vec<bool>,
    used_edge: Vec<bool>,
}

impl Assign<'_> {
    fn go(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let earlier: Vec<usize> = self.g.neighbors(v).filter(|&u| self.pos[u] < depth).collect();
        for x in 0..self.n {
            if self.target.is_some() && self.used_vertex[x] {
                continue;
            }
            let idx: Vec<usize> = earlier.iter().map(|&u| (self.a[u] + x + self.n - self.zero) % self.n).collect();
            if let Some(t) = &self.target {
                let fresh = idx.iter().collect::<BTreeSet<_>>().len() == idx.len();
                if !fresh || idx.iter().any(|i| !t.contains(i) || self.used_edge[*i]) {
                    continue;
                }
            }
            self.a[v] = x;
            self.used_vertex[x] = true;
            for &i in &idx {
                self.used_edge[i] = true;
            }
            if self.go(depth + 1) {
                return true;
            }
            for &i in &idx {
                self.used_edge[i] = false;
            }
            self.used_vertex[x] = false;
            self.a[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::caterpillar_set_ordered_graceful;
    use crate::matching::reciprocal_inverse_labelling;

    fn path_group() -> GraphicGroup {
        let t = Graph::path(7);
        let f = caterpillar_set_ordered_graceful(&t).unwrap().labelling;
        let base = reciprocal_inverse_labelling(&t, &f).unwrap();
        GraphicGroup::new(base, 13, ShiftDomain::VerticesAndEdges).unwrap()
    }

    #[test]
    fn operation() {
        assert_eq!(group_op(2, 3, 1, 13), Ok(4));
        for k in 0..13 {
            for j in 0..13 {
                assert_eq!(group_op(k, j, k, 13), Ok(j));
            }
            assert_eq!(group_op(5, group_inverse(5, k, 13).unwrap(), k, 13), Ok(k));
        }
        assert_eq!(group_op(13, 0, 0, 13), Err(Error::IndexOutOfRange(13, 13)));
        assert_eq!(group_inverse(0, 3, 1), Err(Error::IndexOutOfRange(3, 1)));
    }

    #[test]
    fn path_group_mod_13() {
        let gp = path_group();
        assert!(gp.base.certificate.as_ref().unwrap().pass);
        let r = verify_group(&gp);
        assert!(r.pass, "{r:?}");
        assert_eq!(r.zeros_checked, 13);
        let shifts = modular_edge_magic_graceful_report(&gp).unwrap();
        assert!(shifts.iter().all(|s| s.pass), "{shifts:?}");
    }

    #[test]
    fn trivial_and_vertex_only() {
        let base = LabelledGraph::new(Graph::path(2), Labelling::from_vertices(&[0, 1], 1));
        let one = GraphicGroup::new(base.clone(), 1, ShiftDomain::VerticesOnly).unwrap();
        assert!(verify_group(&one).pass);
        assert_eq!(one.element(0).unwrap().vertex_labels().unwrap(), vec![0, 0]);
        let five = GraphicGroup::new(base, 5, ShiftDomain::VerticesOnly).unwrap();
        assert!(verify_group(&five).pass);
        assert_eq!(five.element(4).unwrap().vertices, vec![Some(4), Some(0)]);
        assert!(matches!(five.element(5), Err(Error::IndexOutOfRange(5, 5))));
    }

    #[test]
    fn encryption() {
        let lg = encrypt_network(&Graph::path(2), 13, &[1, 2], 0).unwrap();
        assert_eq!(lg.labelling.edges, vec![Some(3)]);
        let star = Graph::star(5);
        let lg = encrypt_network(&star, 13, &[4, 0, 1, 2, 3, 9], 7).unwrap();
        let e: BTreeSet<Label> = lg.labelling.edge_labels().unwrap().into_iter().collect();
        assert_eq!(e.len(), 5);
        assert!(encrypt_network(&star, 13, &[0; 3], 0).is_err());
        assert!(encrypt_network(&star, 13, &[13; 6], 0).is_err());
    }

    #[test]
    fn graceful_group_assignments() {
        let budget = SearchBudget::default();
        for t in [Graph::path(5), Graph::star(4), Graph::caterpillar(&[1, 2])] {
            for set in [EdgeIndexSet::Graceful, EdgeIndexSet::OddGraceful] {
                let a = find_group_assignment(&t, 13, 1, set, &budget).unwrap().unwrap();
                let lg = encrypt_network(&t, 13, &a, 1).unwrap();
                assert!(edge_indices_match(&lg, set).unwrap());
            }
        }
        assert_eq!(find_group_assignment(&Graph::path(3), 3, 0, EdgeIndexSet::OddGraceful, &budget), Ok(None));
    }
}
