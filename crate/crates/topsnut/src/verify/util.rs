use crate::graph::Graph;
use crate::labelling::Label;

pub fn interval(lo: Label, hi: Label) -> Vec<Label> {
    (lo..=hi).collect()
}

/// `[1, hi]^o`
pub fn odd_interval(hi: Label) -> Vec<Label> {
    (1..=hi).step_by(2).collect()
}

pub fn sorted(xs: &[Label]) -> Vec<Label> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

/// True when `xs` is a rearrangement of the sorted `target`.
pub fn same_multiset(xs: &[Label], target: &[Label]) -> bool {
    xs.len() == target.len() && sorted(xs) == target
}

/// First index pair holding a repeated value.
pub fn repeat(xs: &[Label]) -> Option<(usize, usize)> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by_key(|&i| (xs[i], i));
    idx.windows(2)
        .find(|w| xs[w[0]] == xs[w[1]])
        .map(|w| (w[0], w[1]))
}

pub fn repeat_count(xs: &[Label]) -> usize {
    let s = sorted(xs);
    s.windows(2).filter(|w| w[0] == w[1]).count()
}

pub fn outside(xs: &[Label], lo: Label, hi: Label) -> Option<Label> {
    xs.iter().copied().find(|&x| x < lo || x > hi)
}

/// Every edge's smaller end label is below every edge's larger end label;
/// for connected bipartite graphs this is `max f(X) < min f(Y)` or its mirror.
pub fn set_ordered(g: &Graph, v: &[Label]) -> bool {
    set_ordered_on(g, v, 0..g.q())
}

pub fn set_ordered_on(g: &Graph, v: &[Label], edges: impl IntoIterator<Item = usize>) -> bool {
    let mut lo = Label::MIN;
    let mut hi = Label::MAX;
    for e in edges {
        let (a, b) = g.edges()[e];
        lo = lo.max(v[a].min(v[b]));
        hi = hi.min(v[a].max(v[b]));
    }
    lo < hi
}

/// Kuhn's augmenting paths; `adj(i, j)` says left `i` may take right `j`.
/// Returns the right partner of every left vertex.
pub fn perfect_matching(n: usize, m: usize, adj: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    if n > m {
        return None;
    }
    let lists: Vec<Vec<usize>> = (0..n).map(|i| (0..m).filter(|&j| adj(i, j)).collect()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; m];
    for i in 0..n {
        let mut seen = vec![false; m];
        if !augment(i, &lists, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut out = vec![0; n];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            out[*i] = j;
        }
    }
    Some(out)
}

fn augment(i: usize, lists: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &j in &lists[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if owner[j].is_none_or(|o| augment(o, lists, owner, seen)) {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}

/// Involutive pairing of all items: each item is paired with itself or one
/// other item so that `ok` holds for every pair.
pub fn pairing(vals: &[Label], ok: impl Fn(Label, Label) -> bool) -> bool {
    let mut used = vec![false; vals.len()];
    pair_from(0, vals, &ok, &mut used)
}

fn pair_from(start: usize, vals: &[Label], ok: &impl Fn(Label, Label) -> bool, used: &mut [bool]) -> bool {
    let Some(i) = (start..vals.len()).find(|&i| !used[i]) else {
        return true;
    };
    used[i] = true;
    if ok(vals[i], vals[i]) && pair_from(i + 1, vals, ok, used) {
        return true;
    }
    let mut tried: Vec<Label> = Vec::new();
    for j in i + 1..vals.len() {
        if used[j] || !ok(vals[i], vals[j]) || tried.contains(&vals[j]) {
            continue;
        }
        tried.push(vals[j]);
        used[j] = true;
        if pair_from(i + 1, vals, ok, used) {
            return true;
        }
        used[j] = false;
    }
    used[i] = false;
    false
}

/// Each item has a partner (possibly itself) satisfying `ok`.
pub fn every_has_partner(vals: &[Label], ok: impl Fn(Label, Label) -> bool) -> bool {
    vals.iter().all(|&a| vals.iter().any(|&b| ok(a, b)))
}

/// Edges matched to edges: item `i` with value `xs[i]` must be related to a
/// distinct target `ys[j]` (bijective) or to at least one target.
pub fn matched(xs: &[Label], ys: &[Label], bijective: bool, rel: impl Fn(Label, Label) -> bool) -> bool {
    if bijective {
        perfect_matching(xs.len(), ys.len(), |i, j| rel(xs[i], ys[j])).is_some()
    } else {
        xs.iter().all(|&x| ys.iter().any(|&y| rel(x, y)))
    }
}

pub fn components_of_edges(g: &Graph, edges: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..g.p()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut touched = vec![false; g.p()];
    for &e in edges {
        let (a, b) = g.edges()[e];
        touched[a] = true;
        touched[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..g.p())
        .filter(|&v| touched[v] && find(&mut parent, v) == v)
        .count()
}
