use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{falling, power, Clock, Invariant, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::labelling::{Label, Labelling, SetLabelling};
use crate::verify::{verify_set_labelling, verify_with, Kind, Options, ProperRule, SetKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionKind {
    RelaxedEmtPartition,
    OemmPartition,
    EedoemmPartition,
    SixCPartition,
    SixCComplementary,
    DgemmPartition,
    EmgPartition,
    VeExchangedPartition,
    VsetGracefulPartition,
    VsetOddGracefulPartition,
    TwinOgPartition,
    TwinOePartition,
    GraphMatchingPartition,
}

impl PartitionKind {
    pub fn all() -> [PartitionKind; 13] {
        use PartitionKind::*;
        [
            RelaxedEmtPartition,
            OemmPartition,
            EedoemmPartition,
            SixCPartition,
            SixCComplementary,
            DgemmPartition,
            EmgPartition,
            VeExchangedPartition,
            VsetGracefulPartition,
            VsetOddGracefulPartition,
            TwinOgPartition,
            TwinOePartition,
            GraphMatchingPartition,
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartitionProblem {
    pub kind: PartitionKind,
    pub p: usize,
    pub q: usize,
    /// Graph matching partitions only: keep the edge sets isomorphic to this graph.
    pub shape: Option<Graph>,
}

impl SetPartitionProblem {
    pub fn new(kind: PartitionKind, p: usize, q: usize) -> Self {
        SetPartitionProblem {
            kind,
            p,
            q,
            shape: None,
        }
    }
}

/// One solution. `parts` holds `(V, E)` (twin problems: `(S1, S2)`; the
/// complementary problems append the partner `(V', E')`), and `matchings[i]`
/// lists the ev-matchings `(a, c, b)` realising the `i`-th pair of parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PartitionSolution {
    pub parts: Vec<Vec<Label>>,
    pub matchings: Vec<Vec<(Label, Label, Label)>>,
    /// Set-valued vertices of the v-set problems.
    pub vertex_sets: Vec<Vec<Label>>,
    pub constants: BTreeMap<String, Label>,
    /// Which readings of the dgemm partner clause the solution satisfies.
    pub readings: Vec<String>,
}

impl PartitionSolution {
    /// The graph whose vertices carry `parts[2i]` and whose edges are the
    /// ev-matchings `matchings[i]`, labelled accordingly.
    pub fn realize(&self, i: usize) -> Option<(Graph, Labelling)> {
        let vs = self.parts.get(2 * i)?;
        let m = self.matchings.get(i)?;
        let pos = |x: Label| vs.iter().position(|&y| y == x);
        let edges: Option<Vec<(usize, usize)>> = m.iter().map(|&(a, _, b)| Some((pos(a)?, pos(b)?))).collect();
        let g = Graph::new(vs.len(), edges?).ok()?;
        let e: Vec<Label> = m.iter().map(|&(_, c, _)| c).collect();
        Some((g, Labelling::total(vs, &e)))
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    falling(n, k) / falling(k, k)
}

fn timed_out() -> Error {
    Error::BudgetExceeded("time limit reached".into())
}

fn invariant(kind: &Kind) -> Option<Invariant> {
    match kind {
        Kind::RelaxedEmt | Kind::Oemm => Some(Invariant::Sum),
        Kind::Eedoemm | Kind::SixC | Kind::Dgemm => Some(Invariant::EMagic),
        Kind::EdgeMagicGraceful => Some(Invariant::GracefulMagic),
        _ => None,
    }
}

/// Assigns each `c` in `es` a distinct pair of `vs` so that the realised
/// graph passes `kind`; the first assignment in lexicographic order wins.
fn labelled_matching(
    vs: &[Label],
    es: &[Label],
    kind: &Kind,
    opts: Options,
    clock: &mut Clock,
) -> Result<Option<Vec<(Label, Label, Label)>>> {
    let pairs: Vec<(usize, usize)> = combinations(vs.len(), 2).into_iter().map(|c| (c[0], c[1])).collect();
    let inv = invariant(kind);
    let mut chosen: Vec<usize> = Vec::with_capacity(es.len());
    let mut used = vec![false; pairs.len()];
    fn go(
        i: usize,
        vs: &[Label],
        es: &[Label],
        pairs: &[(usize, usize)],
        inv: Option<Invariant>,
        k: Option<Label>,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        kind: &Kind,
        opts: Options,
        clock: &mut Clock,
    ) -> Result<bool> {
        if clock.expired() {
            return Err(timed_out());
        }
        if i == es.len() {
            let Ok(g) = Graph::new(vs.len(), chosen.iter().map(|&j| pairs[j])) else {
                return Ok(false);
            };
            let f = Labelling::total(vs, es);
            return Ok(verify_with(&g, &f, kind, opts).is_ok_and(|r| r.pass));
        }
        for j in 0..pairs.len() {
            if used[j] {
                continue;
            }
            let (a, b) = (vs[pairs[j].0], vs[pairs[j].1]);
            let mut nk = k;
            if let Some(inv) = inv {
                let val = inv.value(a, b, es[i]);
                match k {
                    Some(k0) if k0 != val => continue,
                    None => nk = Some(val),
                    _ => {}
                }
            }
            used[j] = true;
            chosen.push(j);
            if go(i + 1, vs, es, pairs, inv, nk, chosen, used, kind, opts, clock)? {
                return Ok(true);
            }
            chosen.pop();
            used[j] = false;
        }
        Ok(false)
    }
    if go(0, vs, es, &pairs, inv, None, &mut chosen, &mut used, kind, opts, clock)? {
        Ok(Some(
            chosen
                .iter()
                .zip(es)
                .map(|(&j, &c)| (vs[pairs[j].0], c, vs[pairs[j].1]))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

/// Distinct pairs of `s` realising each `c` under `rel`, no graph verifier.
fn rule_matching(
    s: &[Label],
    es: &[Label],
    rel: &dyn Fn(Label, Label, Label) -> bool,
    clock: &mut Clock,
) -> Result<Option<Vec<(Label, Label, Label)>>> {
    let pairs: Vec<(Label, Label)> = combinations(s.len(), 2).into_iter().map(|c| (s[c[0]], s[c[1]])).collect();
    let mut used = vec![false; pairs.len()];
    let mut out = Vec::new();
    fn go(
        i: usize,
        es: &[Label],
        pairs: &[(Label, Label)],
        rel: &dyn Fn(Label, Label, Label) -> bool,
        used: &mut [bool],
        out: &mut Vec<(Label, Label, Label)>,
        clock: &mut Clock,
    ) -> Result<bool> {
        if clock.expired() {
            return Err(timed_out());
        }
        if i == es.len() {
            return Ok(true);
        }
        for j in 0..pairs.len() {
            let (a, b) = pairs[j];
            if used[j] || !rel(a, es[i], b) {
                continue;
            }
            used[j] = true;
            out.push((a, es[i], b));
            if go(i + 1, es, pairs, rel, used, out, clock)? {
                return Ok(true);
            }
            out.pop();
            used[j] = false;
        }
        Ok(false)
    }
    Ok(go(0, es, &pairs, rel, &mut used, &mut out, clock)?.then_some(out))
}

fn interval(lo: Label, hi: Label) -> Vec<Label> {
    (lo..=hi).collect()
}

fn odd(hi: Label) -> Vec<Label> {
    (1..=hi).step_by(2).collect()
}

fn pick(ground: &[Label], idx: &[usize]) -> Vec<Label> {
    idx.iter().map(|&i| ground[i]).collect()
}

fn complement(ground: &[Label], v: &[Label]) -> Vec<Label> {
    ground.iter().copied().filter(|x| !v.contains(x)).collect()
}

pub fn solve_set_partition(prob: &SetPartitionProblem, budget: &SearchBudget) -> Result<Vec<PartitionSolution>> {
    use PartitionKind::*;
    let (p, q) = (prob.p, prob.q);
    budget.check_size(p, q)?;
    let (pl, ql) = (p as Label, q as Label);
    let pair_space = falling(p * p.saturating_sub(1) / 2, q);
    let estimate = match prob.kind {
        RelaxedEmtPartition | SixCPartition | SixCComplementary | EmgPartition | VeExchangedPartition => {
            binomial(p + q, p).saturating_mul(pair_space)
        }
        OemmPartition | EedoemmPartition => binomial((2 * q).saturating_sub(1), p).saturating_mul(pair_space),
        DgemmPartition => pair_space.saturating_mul(2),
        VsetGracefulPartition => power(p + 1, q + 1).saturating_mul(pair_space),
        VsetOddGracefulPartition => power(p + 1, 2 * q).saturating_mul(pair_space),
        TwinOgPartition | TwinOePartition => {
            let m = (2 * q + 2).saturating_sub(p).max(p);
            binomial(2 * q, p.saturating_sub(1))
                .saturating_mul(p as u128)
                .saturating_mul(falling(m * m.saturating_sub(1) / 2, q).saturating_mul(2))
        }
        GraphMatchingPartition => binomial(p * p.saturating_sub(1) / 2, q),
    };
    budget.check_candidates(estimate)?;
    let mut clock = budget.clock();
    let opts = Options::default();
    let mut out = Vec::new();
    let split = |ground: Vec<Label>, kind: &Kind, clock: &mut Clock, out: &mut Vec<PartitionSolution>| -> Result<()> {
        for idx in combinations(ground.len(), p) {
            let v = pick(&ground, &idx);
            let e = complement(&ground, &v);
            if e.len() != q {
                continue;
            }
            if let Some(m) = labelled_matching(&v, &e, kind, opts, clock)? {
                out.push(solution(vec![v, e], vec![m], kind));
            }
        }
        Ok(())
    };
    match prob.kind {
        RelaxedEmtPartition => split(interval(1, pl + ql), &Kind::RelaxedEmt, &mut clock, &mut out)?,
        SixCPartition => split(interval(1, pl + ql), &Kind::SixC, &mut clock, &mut out)?,
        EmgPartition => split(interval(1, pl + ql), &Kind::EdgeMagicGraceful, &mut clock, &mut out)?,
        OemmPartition | EedoemmPartition => {
            let kind = if prob.kind == OemmPartition {
                Kind::Oemm
            } else {
                Kind::Eedoemm
            };
            let ground = interval(1, 2 * ql - 1);
            let e = odd(2 * ql - 1);
            for idx in combinations(ground.len(), p) {
                let v = pick(&ground, &idx);
                if let Some(m) = labelled_matching(&v, &e, &kind, opts, &mut clock)? {
                    out.push(solution(vec![v, e.clone()], vec![m], &kind));
                }
            }
        }
        SixCComplementary => {
            let mut base = Vec::new();
            split(interval(1, pl + ql), &Kind::SixC, &mut clock, &mut base)?;
            let s = (pl + ql + 1) / 2;
            for sol in base {
                let (v, e) = (&sol.parts[0], &sol.parts[1]);
                if !v.contains(&s) {
                    continue;
                }
                let mut v2: Vec<Label> = e.iter().copied().chain([s]).collect();
                v2.sort_unstable();
                let e2: Vec<Label> = v.iter().copied().filter(|&x| x != s).collect();
                if let Some(m2) = labelled_matching(&v2, &e2, &Kind::SixC, opts, &mut clock)? {
                    let mut both = sol.clone();
                    both.parts.extend([v2, e2]);
                    both.matchings.push(m2);
                    both.constants.insert("singularity".into(), s);
                    out.push(both);
                }
            }
        }
        VeExchangedPartition => {
            let mut base = Vec::new();
            split(interval(1, pl + ql), &Kind::EdgeMagicGraceful, &mut clock, &mut base)?;
            for sol in base {
                let (v, e) = (sol.parts[0].clone(), sol.parts[1].clone());
                if let Some(m2) = labelled_matching(&e, &v, &Kind::EdgeMagicGraceful, opts, &mut clock)? {
                    let mut both = sol;
                    both.parts.extend([e, v]);
                    both.matchings.push(m2);
                    out.push(both);
                }
            }
        }
        DgemmPartition => {
            let v = interval(0, pl - 1);
            let e = interval(1, ql);
            let mut sol = PartitionSolution {
                parts: vec![v.clone(), e.clone()],
                ..Default::default()
            };
            for (name, existential) in [("bijective partner", false), ("per-edge partner", true)] {
                let o = Options { existential };
                if let Some(m) = labelled_matching(&v, &e, &Kind::Dgemm, o, &mut clock)? {
                    sol.readings.push(name.into());
                    sol.matchings.push(m);
                }
            }
            if !sol.readings.is_empty() {
                out.push(sol);
            }
        }
        VsetGracefulPartition | VsetOddGracefulPartition => {
            let odd_flavor = prob.kind == VsetOddGracefulPartition;
            let (ground, e, rule) = if odd_flavor {
                (interval(0, 2 * ql - 1), odd(2 * ql - 1), ProperRule::OddGraceful)
            } else {
                (interval(0, ql), interval(1, ql), ProperRule::Graceful)
            };
            for blocks in block_families(&ground, p) {
                if clock.expired() {
                    return Err(timed_out());
                }
                if let Some(m) = block_matching(&blocks, &e, rule, &mut clock)? {
                    let flat: Vec<Label> = blocks.iter().flatten().copied().collect();
                    let matchings = m.iter().map(|&(i, c, j)| (i as Label, c, j as Label)).collect();
                    out.push(PartitionSolution {
                        parts: vec![flat, e.clone()],
                        matchings: vec![matchings],
                        vertex_sets: blocks,
                        ..Default::default()
                    });
                }
            }
        }
        TwinOgPartition | TwinOePartition => {
            let m2 = 2 * ql;
            let rel: Box<dyn Fn(Label, Label, Label) -> bool> = if prob.kind == TwinOgPartition {
                Box::new(|a: Label, c: Label, b: Label| (a - b).abs() == c)
            } else {
                Box::new(move |a: Label, c: Label, b: Label| (a + b).rem_euclid(m2) == c)
            };
            let e = odd(2 * ql - 1);
            let rest = interval(1, 2 * ql - 1);
            for idx in combinations(rest.len(), p.saturating_sub(1)) {
                let mut s1 = vec![0];
                s1.extend(pick(&rest, &idx));
                let Some(m1) = rule_matching(&s1, &e, &*rel, &mut clock)? else {
                    continue;
                };
                for &shared in &s1[1..] {
                    let mut s2: Vec<Label> = complement(&interval(0, m2), &s1);
                    s2.push(shared);
                    s2.sort_unstable();
                    if let Some(mm) = rule_matching(&s2, &e, &*rel, &mut clock)? {
                        let mut constants = BTreeMap::new();
                        constants.insert("shared".into(), shared);
                        out.push(PartitionSolution {
                            parts: vec![s1.clone(), e.clone(), s2, e.clone()],
                            matchings: vec![m1.clone(), mm],
                            constants,
                            ..Default::default()
                        });
                    }
                }
            }
        }
        GraphMatchingPartition => {
            if let Some(shape) = &prob.shape {
                if shape.p() != p || shape.q() != q {
                    return Err(Error::Invalid("shape does not have p vertices and q edges".into()));
                }
            }
            let pairs: Vec<(usize, usize)> = combinations(p, 2).into_iter().map(|c| (c[0], c[1])).collect();
            for idx in combinations(pairs.len(), q) {
                if clock.expired() {
                    return Err(timed_out());
                }
                let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
                if let Some(shape) = &prob.shape {
                    let g = Graph::new(p, edges.iter().copied())?;
                    if !is_isomorphic(&g, shape)? {
                        continue;
                    }
                }
                let m: Vec<(Label, Label, Label)> = edges
                    .iter()
                    .map(|&(a, b)| (a as Label, (b - a) as Label, b as Label))
                    .collect();
                let mut e: Vec<Label> = m.iter().map(|t| t.1).collect();
                e.sort_unstable();
                let s_um: Label = e.iter().sum();
                let f_um: Label = m.iter().map(|&(a, _, b)| (a + b).rem_euclid(ql.max(1))).sum();
                let mut constants = BTreeMap::new();
                constants.insert("s_um".into(), s_um);
                constants.insert("f_um".into(), f_um);
                out.push(PartitionSolution {
                    parts: vec![interval(0, pl - 1), e],
                    matchings: vec![m],
                    constants,
                    ..Default::default()
                });
            }
        }
    }
    Ok(out)
}

fn solution(parts: Vec<Vec<Label>>, matchings: Vec<Vec<(Label, Label, Label)>>, kind: &Kind) -> PartitionSolution {
    let mut sol = PartitionSolution {
        parts,
        matchings,
        ..Default::default()
    };
    if let Some((g, f)) = sol.realize(0) {
        if let Ok(r) = verify_with(&g, &f, kind, Options::default()) {
            for (name, val) in [("k", r.k), ("k_prime", r.k_prime), ("k_double_prime", r.k_double_prime)] {
                if let Some(x) = val {
                    sol.constants.insert(name.into(), x);
                }
            }
            if let Some(s) = r.singularity {
                sol.constants.insert("singularity".into(), s);
            }
        }
    }
    sol
}

/// Families of `p` disjoint nonempty subsets of `ground`, blocks ordered by
/// their least element; elements may stay unused.
fn block_families(ground: &[Label], p: usize) -> Vec<Vec<Vec<Label>>> {
    fn go(i: usize, ground: &[Label], p: usize, cur: &mut Vec<Vec<Label>>, out: &mut Vec<Vec<Vec<Label>>>) {
        let left = ground.len() - i;
        if cur.len() + left < p {
            return;
        }
        if i == ground.len() {
            if cur.len() == p {
                out.push(cur.clone());
            }
            return;
        }
        go(i + 1, ground, p, cur, out);
        for b in 0..cur.len() {
            cur[b].push(ground[i]);
            go(i + 1, ground, p, cur, out);
            cur[b].pop();
        }
        if cur.len() < p {
            cur.push(vec![ground[i]]);
            go(i + 1, ground, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, ground, p, &mut Vec::new(), &mut out);
    out
}

/// Block-index triples `(i, c, j)` for a v-set e-proper matching, certified
/// by the set-labelling verifier on the realised graph.
fn block_matching(
    blocks: &[Vec<Label>],
    es: &[Label],
    rule: ProperRule,
    clock: &mut Clock,
) -> Result<Option<Vec<(usize, Label, usize)>>> {
    let n = blocks.len();
    let realises = |i: usize, j: usize, c: Label| {
        blocks[i].iter().any(|&a| blocks[j].iter().any(|&b| (a - b).abs() == c))
    };
    let pairs: Vec<(usize, usize)> = combinations(n, 2).into_iter().map(|c| (c[0], c[1])).collect();
    let mut used = vec![false; pairs.len()];
    let mut chosen = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        es: &[Label],
        pairs: &[(usize, usize)],
        realises: &dyn Fn(usize, usize, Label) -> bool,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        leaf: &dyn Fn(&[usize]) -> bool,
        clock: &mut Clock,
    ) -> Result<bool> {
        if clock.expired() {
            return Err(timed_out());
        }
        if i == es.len() {
            return Ok(leaf(chosen));
        }
        for j in 0..pairs.len() {
            if used[j] || !realises(pairs[j].0, pairs[j].1, es[i]) {
                continue;
            }
            used[j] = true;
            chosen.push(j);
            if go(i + 1, es, pairs, realises, used, chosen, leaf, clock)? {
                return Ok(true);
            }
            chosen.pop();
            used[j] = false;
        }
        Ok(false)
    }
    let leaf = |chosen: &[usize]| {
        let Ok(g) = Graph::new(n, chosen.iter().map(|&j| pairs[j])) else {
            return false;
        };
        let sets = SetLabelling {
            vertices: blocks.iter().map(|b| Some(b.iter().copied().collect())).collect(),
            edges: vec![None; es.len()],
        };
        let f = Labelling {
            vertices: vec![None; n],
            edges: es.iter().map(|&c| Some(c)).collect(),
        };
        verify_set_labelling(&g, &sets, Some(&f), SetKind::VSetEProper(rule)).is_ok_and(|r| r.pass)
    };
    if go(0, es, &pairs, &realises, &mut used, &mut chosen, &leaf, clock)? {
        Ok(Some(
            chosen.iter().zip(es).map(|(&j, &c)| (pairs[j].0, c, pairs[j].1)).collect(),
        ))
    } else {
        Ok(None)
    }
}
