use serde::Serialize;

use super::{Clock, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::Label;
use crate::verify::VeFlavor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticParameters {
    pub chi: usize,
    pub chi_total: usize,
    /// `None` when no coloring exists below the search cap `2(p+q)+1`.
    pub chi_ved: Option<usize>,
    pub chi_ves: Option<usize>,
    /// Minimum spread of edge sums over proper total colorings with
    /// exactly `chi_total` colors.
    pub min_b_tol: Option<Label>,
}

fn timed_out() -> Error {
    Error::BudgetExceeded("time limit reached".into())
}

fn color_vertices(g: &Graph, k: Label, v: &mut [Label], i: usize, clock: &mut Clock) -> Result<bool> {
    if i == g.p() {
        return Ok(true);
    }
    if clock.expired() {
        return Err(timed_out());
    }
    // symmetry: vertex i may open at most one new colour
    let opened = v[..i].iter().copied().max().unwrap_or(0);
    for c in 1..=k.min(opened + 1) {
        if g.neighbors(i).any(|u| u < i && v[u] == c) {
            continue;
        }
        v[i] = c;
        if color_vertices(g, k, v, i + 1, clock)? {
            return Ok(true);
        }
    }
    v[i] = 0;
    Ok(false)
}

pub fn chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<usize> {
    budget.check_size(g.p(), g.q())?;
    let mut clock = budget.clock();
    for k in 1..=g.p().max(1) {
        let mut v = vec![0; g.p()];
        if color_vertices(g, k as Label, &mut v, 0, &mut clock)? {
            return Ok(k);
        }
    }
    Ok(g.p())
}

/// Elements in the order vertex `v`, then every edge from `v` to an earlier
/// vertex, so that each edge is colored right after its later end.
#[derive(Clone, Copy, Debug)]
enum Elem {
    V(usize),
    E(usize),
}

fn elements(g: &Graph) -> Vec<Elem> {
    let mut out = Vec::with_capacity(g.p() + g.q());
    for v in 0..g.p() {
        out.push(Elem::V(v));
        for &(u, e) in g.incident(v) {
            if u < v {
                out.push(Elem::E(e));
            }
        }
    }
    out
}

struct Total<'a> {
    g: &'a Graph,
    order: Vec<Elem>,
    k: Label,
    v: Vec<Label>,
    e: Vec<Label>,
    clock: Clock,
}

impl Total<'_> {
    fn new<'a>(g: &'a Graph, k: Label, clock: Clock) -> Total<'a> {
        Total {
            g,
            order: elements(g),
            k,
            v: vec![0; g.p()],
            e: vec![0; g.q()],
            clock,
        }
    }

    fn fits(&self, el: Elem, c: Label) -> bool {
        match el {
            Elem::V(x) => self.g.incident(x).iter().all(|&(u, e)| self.v[u] != c && self.e[e] != c),
            Elem::E(e) => {
                let (a, b) = self.g.edge(e);
                self.v[a] != c
                    && self.v[b] != c
                    && [a, b]
                        .iter()
                        .all(|&x| self.g.incident(x).iter().all(|&(_, f)| f == e || self.e[f] != c))
            }
        }
    }

    fn set(&mut self, el: Elem, c: Label) {
        match el {
            Elem::V(x) => self.v[x] = c,
            Elem::E(e) => self.e[e] = c,
        }
    }

    fn exists(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        if self.clock.expired() {
            return Err(timed_out());
        }
        let el = self.order[i];
        for c in 1..=self.k {
            if !self.fits(el, c) {
                continue;
            }
            self.set(el, c);
            if self.exists(i + 1)? {
                return Ok(true);
            }
        }
        self.set(el, 0);
        Ok(false)
    }

    fn sum(&self, e: usize) -> Label {
        let (a, b) = self.g.edge(e);
        self.v[a] + self.v[b] + self.e[e]
    }

    /// Branch and bound on the spread of finished edge sums.
    fn min_spread(&mut self, i: usize, lo: Label, hi: Label, best: &mut Option<Label>) -> Result<()> {
        if best.is_some_and(|b| b == 0) {
            return Ok(());
        }
        if i == self.order.len() {
            let spread = if lo > hi { 0 } else { hi - lo };
            if best.is_none_or(|b| spread < b) {
                *best = Some(spread);
            }
            return Ok(());
        }
        if self.clock.expired() {
            return Err(timed_out());
        }
        let el = self.order[i];
        for c in 1..=self.k {
            if !self.fits(el, c) {
                continue;
            }
            self.set(el, c);
            let (nlo, nhi) = match el {
                Elem::E(e) => {
                    let s = self.sum(e);
                    (lo.min(s), hi.max(s))
                }
                Elem::V(_) => (lo, hi),
            };
            if best.is_none_or(|b| nlo > nhi || nhi - nlo < b) {
                self.min_spread(i + 1, nlo, nhi, best)?;
            }
        }
        self.set(el, 0);
        Ok(())
    }
}

pub fn total_chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<usize> {
    budget.check_size(g.p(), g.q())?;
    if g.p() == 0 {
        return Ok(0);
    }
    let mut k = g.max_degree() + 1;
    loop {
        let mut t = Total::new(g, k as Label, budget.clock());
        if t.exists(0)? {
            return Ok(k);
        }
        k += 1;
    }
}

/// Minimum `B_tol` over proper total colorings into `[1, chi_total]`; each
/// such coloring uses every colour, since fewer would beat `chi_total`.
pub fn min_b_tol(g: &Graph, budget: &SearchBudget) -> Result<Option<Label>> {
    let k = total_chromatic_number(g, budget)?;
    let mut t = Total::new(g, k as Label, budget.clock());
    let mut best = None;
    t.min_spread(0, Label::MAX, Label::MIN, &mut best)?;
    Ok(best)
}

fn ve_exists(g: &Graph, flavor: VeFlavor, k: Label, v: &mut [Label], i: usize, clock: &mut Clock) -> Result<bool> {
    if i == g.p() {
        return Ok(true);
    }
    if clock.expired() {
        return Err(timed_out());
    }
    let edge = |a: Label, b: Label| match flavor {
        VeFlavor::Difference => (a - b).abs(),
        VeFlavor::Sum => a + b,
    };
    'colors: for c in 1..=k {
        let earlier: Vec<(usize, usize)> = g.incident(i).iter().copied().filter(|&(u, _)| u < i).collect();
        for &(u, _) in &earlier {
            let w = edge(c, v[u]);
            if v[u] == c || w < 1 || w > k || w == c || w == v[u] {
                continue 'colors;
            }
            // incident edges at u and at i stay distinct
            for &(x, _) in g.incident(u) {
                if x != i && (x < i) && edge(v[x], v[u]) == w {
                    continue 'colors;
                }
            }
            for &(x, _) in &earlier {
                if x != u && edge(c, v[x]) == w {
                    continue 'colors;
                }
            }
        }
        v[i] = c;
        if ve_exists(g, flavor, k, v, i + 1, clock)? {
            return Ok(true);
        }
    }
    v[i] = 0;
    Ok(false)
}

/// Smallest `k` admitting a proper total `k`-coloring whose edge colours are
/// the difference (or sum) of the end colours. Searches `k` up to `2(p+q)+1`.
pub fn ve_chromatic_number(g: &Graph, flavor: VeFlavor, budget: &SearchBudget) -> Result<Option<usize>> {
    let start = total_chromatic_number(g, budget)?;
    let mut clock = budget.clock();
    for k in start..=2 * (g.p() + g.q()) + 1 {
        let mut v = vec![0; g.p()];
        if ve_exists(g, flavor, k as Label, &mut v, 0, &mut clock)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn chromatic_parameters(g: &Graph, budget: &SearchBudget) -> Result<ChromaticParameters> {
    Ok(ChromaticParameters {
        chi: chromatic_number(g, budget)?,
        chi_total: total_chromatic_number(g, budget)?,
        chi_ved: ve_chromatic_number(g, VeFlavor::Difference, budget)?,
        chi_ves: ve_chromatic_number(g, VeFlavor::Sum, budget)?,
        min_b_tol: min_b_tol(g, budget)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::Labelling;
    use crate::verify::{verify_total_coloring, verify_ve_matching_total_coloring};

    fn b() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn small_values() {
        let p3 = chromatic_parameters(&Graph::path(3), &b()).unwrap();
        assert_eq!((p3.chi, p3.chi_total, p3.chi_ved), (2, 3, Some(3)));
        assert_eq!(p3.min_b_tol, Some(0));
        assert_eq!(chromatic_number(&Graph::complete(4), &b()).unwrap(), 4);
        assert_eq!(total_chromatic_number(&Graph::complete(4), &b()).unwrap(), 5);
        assert_eq!(total_chromatic_number(&Graph::path(2), &b()).unwrap(), 3);
    }

    #[test]
    fn cycles() {
        assert_eq!(min_b_tol(&Graph::cycle(6), &b()).unwrap(), Some(0));
        assert_eq!(min_b_tol(&Graph::cycle(4), &b()).unwrap(), Some(1));
    }

    #[test]
    fn ved_witness_is_valid() {
        // (1,3,2) on P_3 with edges 2,1 realises chi_ved = 3
        let f = Labelling::total(&[1, 3, 2], &[2, 1]);
        let g = Graph::path(3);
        assert!(verify_total_coloring(&g, &f).unwrap().proper);
        assert!(verify_ve_matching_total_coloring(&g, &f, VeFlavor::Difference).unwrap().pass);
    }

    #[test]
    fn ves_of_k2() {
        // 1 + 2 = 3 is the smallest sum coloring of one edge
        assert_eq!(ve_chromatic_number(&Graph::path(2), VeFlavor::Sum, &b()).unwrap(), Some(3));
    }
}
