//! Exhaustive oracles: labelling enumeration over each kind's canonical
//! domain, chromatic parameters and the set-partition problems.

mod chromatic;
mod partition;

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, Labelling};
use crate::verify::{Kind, Options, TogMode, Verifier};

pub use chromatic::{
    chromatic_number, chromatic_parameters, min_b_tol, total_chromatic_number, ve_chromatic_number,
    ChromaticParameters,
};
pub use partition::{solve_set_partition, PartitionKind, PartitionSolution, SetPartitionProblem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Upper bound on the size of the candidate space, checked up front.
    pub max_candidates: u128,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 12,
            max_edges: 16,
            max_candidates: 50_000_000_000,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_time_limit(mut self, t: Duration) -> Self {
        self.time_limit = Some(t);
        self
    }

    pub(crate) fn check_size(&self, p: usize, q: usize) -> Result<()> {
        if p > self.max_vertices {
            return Err(Error::BudgetExceeded(format!("{p} vertices > {}", self.max_vertices)));
        }
        if q > self.max_edges {
            return Err(Error::BudgetExceeded(format!("{q} edges > {}", self.max_edges)));
        }
        Ok(())
    }

    pub(crate) fn check_candidates(&self, n: u128) -> Result<()> {
        if n > self.max_candidates {
            return Err(Error::BudgetExceeded(format!(
                "{n} candidates > {}",
                self.max_candidates
            )));
        }
        Ok(())
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock {
            deadline: self.time_limit.map(|t| Instant::now() + t),
            tick: 0,
        }
    }
}

pub(crate) struct Clock {
    deadline: Option<Instant>,
    tick: u32,
}

impl Clock {
    /// Cheap to call in inner loops; looks at the time every few thousand ticks.
    pub fn expired(&mut self) -> bool {
        self.tick = self.tick.wrapping_add(1);
        if self.tick % 4096 != 0 {
            return false;
        }
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

pub(crate) fn falling(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128))
}

pub(crate) fn power(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(n as u128))
}

/// Per-edge quantity that the kind forces to be constant; enumeration
/// discards a partial assignment as soon as two edges disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Invariant {
    Sum,
    EMagic,
    GracefulMagic,
    /// Distinct edge sums, checked as an arithmetic progression at the leaf.
    Progression,
}

impl Invariant {
    fn value(self, a: Label, b: Label, c: Label) -> Label {
        match self {
            Invariant::Sum | Invariant::Progression => a + b + c,
            Invariant::EMagic => c + (a - b).abs(),
            Invariant::GracefulMagic => (a + b - c).abs(),
        }
    }
}

#[derive(Clone, Debug)]
struct EdgeSpace {
    values: Vec<Label>,
    distinct: bool,
    avoid_vertex_labels: bool,
    invariant: Option<Invariant>,
}

/// Candidate domain of one kind on one graph.
#[derive(Clone, Debug)]
struct Space {
    v_values: Vec<Label>,
    /// `conflicts[v]`: earlier vertices whose label `v` must avoid.
    conflicts: Vec<Vec<usize>>,
    injective: bool,
    edges: Option<EdgeSpace>,
}

fn range(lo: Label, hi: Label) -> Vec<Label> {
    (lo..=hi).collect()
}

fn space(g: &Graph, kind: &Kind) -> Space {
    let p = g.p() as Label;
    let q = g.q() as Label;
    let all_before = |n: usize| (0..n).map(|v| (0..v).collect()).collect::<Vec<Vec<usize>>>();
    let inj = |values: Vec<Label>| Space {
        v_values: values,
        conflicts: all_before(g.p()),
        injective: true,
        edges: None,
    };
    let total = |values: Vec<Label>, invariant| Space {
        edges: Some(EdgeSpace {
            values: values.clone(),
            distinct: true,
            avoid_vertex_labels: true,
            invariant,
        }),
        ..inj(values)
    };
    match kind {
        Kind::Graceful | Kind::SetOrderedGraceful | Kind::Felicitous => inj(range(0, q)),
        Kind::OddGraceful | Kind::SetOrderedOddGraceful | Kind::OddElegant | Kind::SetOrderedOddElegant => {
            inj(range(0, 2 * q - 1))
        }
        Kind::PanOddGraceful => inj(range(0, 2 * q)),
        Kind::KSequentialOddGraceful(k) => inj(range(*k, 2 * q - 1 + k)),
        Kind::Harmonious => Space {
            v_values: range(0, q - 1),
            conflicts: vec![Vec::new(); g.p()],
            injective: false,
            edges: None,
        },
        Kind::EdgeMagicTotal | Kind::SuperEdgeMagicTotal | Kind::RelaxedEmt => {
            total(range(1, p + q), Some(Invariant::Sum))
        }
        Kind::EdgeAntimagicTotal => total(range(1, p + q), Some(Invariant::Progression)),
        Kind::EdgeMagicGraceful | Kind::SuperEdgeMagicGraceful => {
            total(range(1, p + q), Some(Invariant::GracefulMagic))
        }
        Kind::SixC | Kind::OddEvenSeparableSixC => total(range(1, p + q), Some(Invariant::EMagic)),
        Kind::PanEdgeMagicTotal => Space {
            edges: Some(EdgeSpace {
                values: range(1, p + q),
                distinct: true,
                avoid_vertex_labels: false,
                invariant: Some(Invariant::Sum),
            }),
            ..inj(range(1, p + q))
        },
        Kind::Oemm | Kind::Eedoemm => Space {
            edges: Some(EdgeSpace {
                values: (1..2 * q).step_by(2).collect(),
                distinct: true,
                avoid_vertex_labels: false,
                invariant: Some(if *kind == Kind::Oemm {
                    Invariant::Sum
                } else {
                    Invariant::EMagic
                }),
            }),
            ..inj(range(0, 2 * q - 1))
        },
        Kind::Dgemm => Space {
            edges: Some(EdgeSpace {
                values: range(1, q),
                distinct: false,
                avoid_vertex_labels: false,
                invariant: Some(Invariant::EMagic),
            }),
            ..inj(range(0, p - 1))
        },
        Kind::VeExchangedOf(f) => {
            let a0 = (p + q + 1) / 2;
            let mut vv: Vec<Label> = f.edge_set().into_iter().chain([a0]).collect();
            vv.sort_unstable();
            vv.dedup();
            let ev: Vec<Label> = f.vertex_set().into_iter().filter(|&x| x != a0).collect();
            Space {
                edges: Some(EdgeSpace {
                    values: ev,
                    distinct: false,
                    avoid_vertex_labels: false,
                    invariant: None,
                }),
                ..inj(vv)
            }
        }
        Kind::Tog(..) | Kind::Toe(_) | Kind::Sotoe(_) | Kind::TwoOddTwo(_) => {
            let hi = match kind {
                Kind::Tog(TogMode::Strict | TogMode::Compatible, _) | Kind::TwoOddTwo(_) => q,
                _ => q - 1,
            };
            let parts = kind.parts().expect("parts checked by the verifier");
            let mut member = vec![[false; 2]; g.p()];
            for (i, part) in [&parts.first, &parts.second].into_iter().enumerate() {
                for &e in part {
                    let (a, b) = g.edge(e);
                    member[a][i] = true;
                    member[b][i] = true;
                }
            }
            let conflicts = (0..g.p())
                .map(|v| {
                    (0..v)
                        .filter(|&u| (0..2).any(|i| member[u][i] && member[v][i]))
                        .collect()
                })
                .collect();
            Space {
                v_values: range(0, hi),
                conflicts,
                injective: false,
                edges: None,
            }
        }
    }
}

impl Space {
    fn size(&self, p: usize, q: usize) -> u128 {
        let n = self.v_values.len();
        let vs = if self.injective { falling(n, p) } else { power(n, p) };
        let es = match &self.edges {
            None => 1,
            Some(es) if q == 0 => {
                let _ = es;
                1
            }
            Some(es) => match es.invariant {
                Some(Invariant::Sum | Invariant::EMagic | Invariant::GracefulMagic) => {
                    (es.values.len() as u128).saturating_mul(2)
                }
                _ if es.distinct => falling(es.values.len(), q),
                _ => power(es.values.len(), q),
            },
        };
        vs.saturating_mul(es)
    }
}

struct Walk<'a> {
    g: &'a Graph,
    space: &'a Space,
    verifier: &'a Verifier<'a>,
    stop: &'a AtomicBool,
    clock: Clock,
    first_only: bool,
    v: Vec<Label>,
    e: Vec<Label>,
    lo: Label,
    v_count: Vec<u16>,
    e_count: Vec<u16>,
    k: Option<Label>,
    out: Vec<Labelling>,
}

impl Walk<'_> {
    fn slot(&self, x: Label) -> usize {
        (x - self.lo) as usize
    }

    fn done(&self) -> bool {
        self.stop.load(Ordering::Relaxed) || (self.first_only && !self.out.is_empty())
    }

    fn vertices(&mut self, i: usize) {
        if self.done() {
            return;
        }
        if self.clock.expired() {
            self.stop.store(true, Ordering::Relaxed);
            return;
        }
        if i == self.g.p() {
            self.edges(0);
            return;
        }
        for idx in 0..self.space.v_values.len() {
            let x = self.space.v_values[idx];
            if self.space.conflicts[i].iter().any(|&u| self.v[u] == x) {
                continue;
            }
            self.v[i] = x;
            let s = self.slot(x);
            self.v_count[s] += 1;
            self.vertices(i + 1);
            self.v_count[s] -= 1;
            if self.done() {
                return;
            }
        }
    }

    fn edges(&mut self, i: usize) {
        let Some(es) = &self.space.edges else {
            self.leaf(false);
            return;
        };
        if i == self.g.q() {
            if es.invariant == Some(Invariant::Progression) && !self.progression() {
                return;
            }
            self.leaf(true);
            return;
        }
        if self.clock.expired() {
            self.stop.store(true, Ordering::Relaxed);
            return;
        }
        let (a, b) = self.g.edge(i);
        let (a, b) = (self.v[a], self.v[b]);
        for idx in 0..es.values.len() {
            let c = es.values[idx];
            let s = self.slot(c);
            if es.distinct && self.e_count[s] > 0 || es.avoid_vertex_labels && self.v_count[s] > 0 {
                continue;
            }
            let saved = self.k;
            match es.invariant {
                Some(Invariant::Progression) => {
                    let sum = a + b + c;
                    let clash = (0..i).any(|j| {
                        let (x, y) = self.g.edge(j);
                        self.v[x] + self.v[y] + self.e[j] == sum
                    });
                    if clash && self.g.q() > 1 {
                        continue;
                    }
                }
                Some(inv) => {
                    let val = inv.value(a, b, c);
                    match self.k {
                        Some(k) if k != val => continue,
                        None => self.k = Some(val),
                        _ => {}
                    }
                }
                None => {}
            }
            self.e[i] = c;
            self.e_count[s] += 1;
            self.edges(i + 1);
            self.e_count[s] -= 1;
            self.k = saved;
            if self.done() {
                return;
            }
        }
    }

    fn progression(&self) -> bool {
        let mut s: Vec<Label> = (0..self.g.q())
            .map(|j| {
                let (x, y) = self.g.edge(j);
                self.v[x] + self.v[y] + self.e[j]
            })
            .collect();
        s.sort_unstable();
        s.windows(3).all(|w| w[1] - w[0] == w[2] - w[1])
    }

    fn leaf(&mut self, with_edges: bool) {
        let f = if with_edges {
            Labelling::total(&self.v, &self.e)
        } else {
            Labelling::from_vertices(&self.v, self.g.q())
        };
        if self.verifier.accepts(&f) {
            self.out.push(f);
        }
    }
}

fn run(g: &Graph, kind: &Kind, budget: &SearchBudget, first_only: bool) -> Result<Vec<Labelling>> {
    budget.check_size(g.p(), g.q())?;
    let verifier = Verifier::new(g, kind, Options::default())?;
    let sp = space(g, kind);
    budget.check_candidates(sp.size(g.p(), g.q()))?;
    if g.p() == 0 {
        let f = Labelling::empty(0, 0);
        return Ok(if verifier.accepts(&f) { vec![f] } else { vec![] });
    }
    let mut all: Vec<Label> = sp.v_values.clone();
    if let Some(es) = &sp.edges {
        all.extend(&es.values);
    }
    let lo = all.iter().copied().min().unwrap_or(0);
    let hi = all.iter().copied().max().unwrap_or(0);
    let width = (hi - lo + 1).max(1) as usize;
    let stop = AtomicBool::new(false);
    let block = |first: Label| -> Vec<Labelling> {
        let mut w = Walk {
            g,
            space: &sp,
            verifier: &verifier,
            stop: &stop,
            clock: budget.clock(),
            first_only,
            v: vec![0; g.p()],
            e: vec![0; g.q()],
            lo,
            v_count: vec![0; width],
            e_count: vec![0; width],
            k: None,
            out: Vec::new(),
        };
        w.v[0] = first;
        let s = w.slot(first);
        w.v_count[s] += 1;
        w.vertices(1);
        w.out
    };
    let out: Vec<Labelling> = if first_only {
        let mut found = Vec::new();
        for &x in &sp.v_values {
            found = block(x);
            if !found.is_empty() || stop.load(Ordering::Relaxed) {
                break;
            }
        }
        found
    } else {
        let blocks: Vec<Vec<Labelling>> = sp.v_values.par_iter().map(|&x| block(x)).collect();
        blocks.into_iter().flatten().collect()
    };
    if stop.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded("time limit reached".into()));
    }
    Ok(out)
}

/// Every labelling of `g` that passes `kind`, in lexicographic order of the
/// vertex-label vector (then the edge-label vector). Vertex-only kinds come
/// back with unlabelled edges.
pub fn enumerate_labellings(g: &Graph, kind: &Kind, budget: &SearchBudget) -> Result<Vec<Labelling>> {
    run(g, kind, budget, false)
}

/// The lexicographically first labelling of `kind`, if any.
pub fn find_labelling(g: &Graph, kind: &Kind, budget: &SearchBudget) -> Result<Option<Labelling>> {
    Ok(run(g, kind, budget, true)?.into_iter().next())
}

/// Size of the candidate space `enumerate_labellings` walks for `kind`.
pub fn candidate_space(g: &Graph, kind: &Kind) -> u128 {
    space(g, kind).size(g.p(), g.q())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::TwinParts;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn p2_graceful() {
        let r = enumerate_labellings(&Graph::path(2), &Kind::Graceful, &budget()).unwrap();
        let v: Vec<Vec<Label>> = r.iter().map(|f| f.vertex_labels().unwrap()).collect();
        assert_eq!(v, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn triangle_not_odd_graceful() {
        assert!(enumerate_labellings(&Graph::complete(3), &Kind::OddGraceful, &budget())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn p4_graceful_count() {
        // 0-3-1-2 and its relatives: four labellings up to the dual and the reversal
        let r = enumerate_labellings(&Graph::path(4), &Kind::Graceful, &budget()).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn first_matches_enumeration() {
        let g = Graph::star(3);
        let all = enumerate_labellings(&g, &Kind::EdgeMagicTotal, &budget()).unwrap();
        let first = find_labelling(&g, &Kind::EdgeMagicTotal, &budget()).unwrap();
        assert_eq!(all.first(), first.as_ref());
        assert!(!all.is_empty());
    }

    #[test]
    fn budget_is_enforced_up_front() {
        let tight = SearchBudget {
            max_candidates: 10,
            ..budget()
        };
        assert!(matches!(
            enumerate_labellings(&Graph::path(4), &Kind::Graceful, &tight),
            Err(Error::BudgetExceeded(_))
        ));
        let few = SearchBudget {
            max_vertices: 3,
            ..budget()
        };
        assert!(matches!(
            enumerate_labellings(&Graph::path(4), &Kind::Graceful, &few),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn time_limit_is_an_error() {
        let b = budget().with_time_limit(Duration::from_millis(0));
        let g = Graph::path(5);
        assert!(matches!(
            enumerate_labellings(&g, &Kind::EdgeAntimagicTotal, &b),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn twin_kinds_need_parts() {
        assert_eq!(
            enumerate_labellings(&Graph::path(3), &Kind::Toe(None), &budget()),
            Err(Error::MissingParts)
        );
        let parts = TwinParts {
            first: vec![0],
            second: vec![1],
        };
        let r = enumerate_labellings(&Graph::path(3), &Kind::Tog(TogMode::Compatible, Some(parts)), &budget())
            .unwrap();
        assert!(!r.is_empty());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = Graph::path(4);
        let a = enumerate_labellings(&g, &Kind::SixC, &budget()).unwrap();
        let b = rayon::ThreadPoolBuilder::new()
            .num_threads(3)
            .build()
            .unwrap()
            .install(|| enumerate_labellings(&g, &Kind::SixC, &budget()).unwrap());
        assert_eq!(a, b);
    }
}
