use std::collections::BTreeSet;

use serde::Serialize;

use super::{Condition, VerifyReport};
use crate::error::Result;
use crate::graph::Graph;
use crate::labelling::{Label, Labelling};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalColoringReport {
    pub proper: bool,
    pub colors_used: usize,
    /// Spread of the edge sums `f(u)+f(uv)+f(v)`.
    pub b_tol: Label,
    pub edge_sums_consecutive: bool,
    pub min_sum: Option<Label>,
    pub max_sum: Option<Label>,
}

pub(crate) fn is_proper_total(g: &Graph, v: &[Label], e: &[Label]) -> bool {
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if v[a] == v[b] || e[i] == v[a] || e[i] == v[b] {
            return false;
        }
    }
    for x in 0..g.p() {
        let inc = g.incident(x);
        for (i, &(_, e1)) in inc.iter().enumerate() {
            if inc[i + 1..].iter().any(|&(_, e2)| e[e1] == e[e2]) {
                return false;
            }
        }
    }
    true
}

pub fn verify_total_coloring(g: &Graph, f: &Labelling) -> Result<TotalColoringReport> {
    let v = f.vertex_labels()?;
    let e = f.edge_labels()?;
    let colors: BTreeSet<Label> = v.iter().chain(&e).copied().collect();
    let sums: BTreeSet<Label> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| v[a] + e[i] + v[b])
        .collect();
    let (lo, hi) = (sums.first().copied(), sums.last().copied());
    Ok(TotalColoringReport {
        proper: is_proper_total(g, &v, &e),
        colors_used: colors.len(),
        b_tol: match (lo, hi) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        },
        edge_sums_consecutive: match (lo, hi) {
            (Some(a), Some(b)) => (b - a + 1) as usize == sums.len(),
            _ => true,
        },
        min_sum: lo,
        max_sum: hi,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VeFlavor {
    Difference,
    Sum,
}

pub fn verify_ve_matching_total_coloring(g: &Graph, f: &Labelling, flavor: VeFlavor) -> Result<VerifyReport> {
    let v = f.vertex_labels()?;
    let e = f.edge_labels()?;
    let proper = is_proper_total(g, &v, &e);
    let (name, rule): (&str, fn(Label, Label) -> Label) = match flavor {
        VeFlavor::Difference => ("f(uv)=|f(u)-f(v)|", |a, b| (a - b).abs()),
        VeFlavor::Sum => ("f(uv)=f(u)+f(v)", |a, b| a + b),
    };
    let bad = g
        .edges()
        .iter()
        .enumerate()
        .find(|&(i, &(a, b))| e[i] != rule(v[a], v[b]));
    let kind = match flavor {
        VeFlavor::Difference => "ve_matching_difference_total_coloring",
        VeFlavor::Sum => "ve_matching_sum_total_coloring",
    };
    Ok(VerifyReport::from_conditions(
        kind,
        vec![
            Condition {
                name: "proper total coloring".into(),
                pass: proper,
                witness: None,
            },
            Condition {
                name: name.into(),
                pass: bad.is_none(),
                witness: bad.map(|(i, _)| format!("edge {i}")),
            },
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_four_example() {
        let g = Graph::star(4);
        let f = Labelling::total(&[1, 5, 4, 3, 2], &[2, 3, 4, 5]);
        let r = verify_total_coloring(&g, &f).unwrap();
        assert!(r.proper);
        assert_eq!(r.colors_used, 5);
        assert_eq!(r.b_tol, 0);
        assert_eq!(r.min_sum, Some(8));
    }

    #[test]
    fn k2_flavors() {
        let g = Graph::path(2);
        let f = Labelling::total(&[1, 3], &[2]);
        assert!(verify_ve_matching_total_coloring(&g, &f, VeFlavor::Difference).unwrap().pass);
        let f = Labelling::total(&[1, 2], &[3]);
        assert!(verify_ve_matching_total_coloring(&g, &f, VeFlavor::Sum).unwrap().pass);
        assert!(!verify_ve_matching_total_coloring(&g, &f, VeFlavor::Difference).unwrap().pass);
    }

    #[test]
    fn improper_when_edge_repeats_endpoint() {
        let g = Graph::path(2);
        let f = Labelling::total(&[1, 2], &[2]);
        assert!(!verify_total_coloring(&g, &f).unwrap().proper);
    }

    #[test]
    fn path_three_periodic() {
        let g = Graph::path(7);
        let v: Vec<Label> = (0..7).map(|i| [1, 2, 3][i % 3]).collect();
        let e: Vec<Label> = (0..6).map(|i| [3, 1, 2][i % 3]).collect();
        let r = verify_total_coloring(&g, &Labelling::total(&v, &e)).unwrap();
        assert!(r.proper);
        assert_eq!(r.b_tol, 0);
    }
}
