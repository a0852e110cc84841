//! Labelling containers, dual labellings, induced edge labels and set-valued
//! labellings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::VerifyReport;

pub type Label = i64;

/// Partial assignment of integers to vertices and edges. Injectivity is not
/// enforced here; an absent edge label is the "null" label.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labelling {
    pub vertices: Vec<Option<Label>>,
    pub edges: Vec<Option<Label>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Vertices,
    Edges,
    Total,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRule {
    /// `|f(u) - f(v)|`
    Difference,
    /// `f(u) + f(v) mod m`; with `zero_as_modulus` a residue 0 is written as `m`.
    ModSum { modulus: Label, zero_as_modulus: bool },
    /// `2q - 1 - |f(u) - f(v)|`, the alternative edge rule of pan-odd-graceful
    /// labellings.
    TwoQMinusSum,
    /// Leave every edge null.
    None,
}

impl EdgeRule {
    pub fn mod_sum(modulus: Label) -> Result<EdgeRule> {
        if modulus < 1 {
            return Err(Error::Invalid(format!("modulus {modulus} must be at least 1")));
        }
        Ok(EdgeRule::ModSum {
            modulus,
            zero_as_modulus: false,
        })
    }

    pub fn apply(self, a: Label, b: Label, q: usize) -> Option<Label> {
        match self {
            EdgeRule::Difference => Some((a - b).abs()),
            EdgeRule::ModSum {
                modulus,
                zero_as_modulus,
            } => {
                let r = (a + b).rem_euclid(modulus);
                Some(if r == 0 && zero_as_modulus { modulus } else { r })
            }
            EdgeRule::TwoQMinusSum => Some(2 * q as Label - 1 - (a - b).abs()),
            EdgeRule::None => None,
        }
    }
}

impl Labelling {
    pub fn empty(p: usize, q: usize) -> Labelling {
        Labelling {
            vertices: vec![None; p],
            edges: vec![None; q],
        }
    }

    /// Vertex labels only; every edge null.
    pub fn from_vertices(vertices: &[Label], q: usize) -> Labelling {
        Labelling {
            vertices: vertices.iter().copied().map(Some).collect(),
            edges: vec![None; q],
        }
    }

    pub fn total(vertices: &[Label], edges: &[Label]) -> Labelling {
        Labelling {
            vertices: vertices.iter().copied().map(Some).collect(),
            edges: edges.iter().copied().map(Some).collect(),
        }
    }

    pub fn vertex(&self, v: usize) -> Option<Label> {
        self.vertices.get(v).copied().flatten()
    }

    pub fn edge(&self, e: usize) -> Option<Label> {
        self.edges.get(e).copied().flatten()
    }

    pub fn has_all_vertices(&self) -> bool {
        self.vertices.iter().all(Option::is_some)
    }

    pub fn has_all_edges(&self) -> bool {
        self.edges.iter().all(Option::is_some)
    }

    /// All vertex labels, or `MissingLabels` naming the first gap.
    pub fn vertex_labels(&self) -> Result<Vec<Label>> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| Error::MissingLabels(format!("vertex {v}"))))
            .collect()
    }

    pub fn edge_labels(&self) -> Result<Vec<Label>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(e, l)| l.ok_or_else(|| Error::MissingLabels(format!("edge {e}"))))
            .collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<Label> {
        self.vertices.iter().flatten().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<Label> {
        self.edges.iter().flatten().copied().collect()
    }

    /// The set of all labels used on vertices and edges.
    pub fn universal_set(&self) -> BTreeSet<Label> {
        self.vertex_set().union(&self.edge_set()).copied().collect()
    }

    fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.vertices.len() != g.p() || self.edges.len() != g.q() {
            return Err(Error::Invalid(format!(
                "labelling has {} vertices and {} edges, graph has {} and {}",
                self.vertices.len(),
                self.edges.len(),
                g.p(),
                g.q()
            )));
        }
        Ok(())
    }
}

/// `h'(z) = max h(S) + min h(S) - h(z)` over the chosen domain `S`; labels
/// outside the domain are kept.
pub fn dual_labelling(f: &Labelling, domain: Domain) -> Result<Labelling> {
    let vs = matches!(domain, Domain::Vertices | Domain::Total);
    let es = matches!(domain, Domain::Edges | Domain::Total);
    let mut pool = Vec::new();
    if vs {
        pool.extend(f.vertex_labels()?);
    }
    if es {
        pool.extend(f.edge_labels()?);
    }
    let (Some(&lo), Some(&hi)) = (pool.iter().min(), pool.iter().max()) else {
        return Ok(f.clone());
    };
    let flip = |x: Option<Label>| x.map(|x| hi + lo - x);
    Ok(Labelling {
        vertices: if vs {
            f.vertices.iter().map(|&x| flip(x)).collect()
        } else {
            f.vertices.clone()
        },
        edges: if es {
            f.edges.iter().map(|&x| flip(x)).collect()
        } else {
            f.edges.clone()
        },
    })
}

/// Labels every edge from its endpoint labels; vertex labels are kept.
pub fn induce_edge_labels(g: &Graph, f: &Labelling, rule: EdgeRule) -> Result<Labelling> {
    f.check_shape(g)?;
    let vl = f.vertex_labels()?;
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| rule.apply(vl[u], vl[v], g.q()))
        .collect();
    Ok(Labelling {
        vertices: f.vertices.clone(),
        edges,
    })
}

/// Sets of non-negative integers on vertices and/or edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetLabelling {
    pub vertices: Vec<Option<BTreeSet<Label>>>,
    pub edges: Vec<Option<BTreeSet<Label>>>,
}

impl SetLabelling {
    pub fn empty(p: usize, q: usize) -> SetLabelling {
        SetLabelling {
            vertices: vec![None; p],
            edges: vec![None; q],
        }
    }

    pub fn vertex(&self, v: usize) -> Option<&BTreeSet<Label>> {
        self.vertices.get(v).and_then(Option::as_ref)
    }

    pub fn edge(&self, e: usize) -> Option<&BTreeSet<Label>> {
        self.edges.get(e).and_then(Option::as_ref)
    }

    pub fn is_non_negative(&self) -> bool {
        self.vertices
            .iter()
            .chain(&self.edges)
            .flatten()
            .all(|s| s.iter().all(|&x| x >= 0))
    }
}

/// A graph together with a labelling and, once certified, its report.
#[derive(Clone, Debug, PartialEq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labelling: Labelling,
    pub certificate: Option<VerifyReport>,
}

impl LabelledGraph {
    pub fn new(graph: Graph, labelling: Labelling) -> LabelledGraph {
        LabelledGraph {
            graph,
            labelling,
            certificate: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> (Graph, Labelling) {
        (Graph::path(3), Labelling::from_vertices(&[0, 2, 1], 2))
    }

    #[test]
    fn dual_of_path_vertices() {
        let f = Labelling::from_vertices(&[0, 1, 2], 2);
        let d = dual_labelling(&f, Domain::Vertices).unwrap();
        assert_eq!(d.vertex_labels().unwrap(), vec![2, 1, 0]);
        assert_eq!(dual_labelling(&d, Domain::Vertices).unwrap(), f);
    }

    #[test]
    fn dual_keeps_difference_multiset() {
        let (g, f) = p3();
        let e = induce_edge_labels(&g, &f, EdgeRule::Difference).unwrap();
        let d = dual_labelling(&f, Domain::Vertices).unwrap();
        let de = induce_edge_labels(&g, &d, EdgeRule::Difference).unwrap();
        let mut a = e.edge_labels().unwrap();
        let mut b = de.edge_labels().unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, vec![1, 2]);
        assert_eq!(a, b);
    }

    #[test]
    fn dual_needs_domain_labels() {
        let f = Labelling::from_vertices(&[0, 1], 1);
        assert!(matches!(dual_labelling(&f, Domain::Total), Err(Error::MissingLabels(_))));
    }

    #[test]
    fn induced_rules() {
        let (g, f) = p3();
        let e = induce_edge_labels(&g, &f, EdgeRule::Difference).unwrap();
        assert_eq!(e.edge_labels().unwrap(), vec![2, 1]);
        let k2 = Graph::path(2);
        let f = Labelling::from_vertices(&[0, 1], 1);
        let e = induce_edge_labels(&k2, &f, EdgeRule::mod_sum(2).unwrap()).unwrap();
        assert_eq!(e.edge_labels().unwrap(), vec![1]);
        let star = Graph::star(3);
        let f = Labelling::from_vertices(&[0, 1, 3, 5], 3);
        let e = induce_edge_labels(&star, &f, EdgeRule::Difference).unwrap();
        assert_eq!(e.edge_labels().unwrap(), vec![1, 3, 5]);
        let e = induce_edge_labels(&star, &f, EdgeRule::None).unwrap();
        assert_eq!(e.edges, vec![None; 3]);
        assert!(EdgeRule::mod_sum(0).is_err());
    }

    #[test]
    fn zero_as_modulus() {
        let rule = EdgeRule::ModSum {
            modulus: 11,
            zero_as_modulus: true,
        };
        assert_eq!(rule.apply(5, 6, 0), Some(11));
        assert_eq!(EdgeRule::mod_sum(11).unwrap().apply(5, 6, 0), Some(0));
    }

    #[test]
    fn unlabelled_vertex_is_reported() {
        let g = Graph::path(2);
        let f = Labelling {
            vertices: vec![Some(0), None],
            edges: vec![None],
        };
        assert!(matches!(
            induce_edge_labels(&g, &f, EdgeRule::Difference),
            Err(Error::MissingLabels(_))
        ));
    }
}
