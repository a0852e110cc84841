use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, Labelling};
use crate::verify::util::perfect_matching;
use crate::verify::{verify_total_coloring, TotalColoringReport};

#[derive(Clone, Debug, PartialEq)]
pub struct TotalColoring {
    pub graph: Graph,
    pub labelling: Labelling,
    pub report: TotalColoringReport,
}

fn finish(graph: Graph, v: Vec<Label>, e: Vec<Label>) -> Result<TotalColoring> {
    let labelling = Labelling::total(&v, &e);
    let report = verify_total_coloring(&graph, &labelling)?;
    if !report.proper {
        return Err(Error::CertificationFailed("total coloring is not proper".into()));
    }
    Ok(TotalColoring {
        graph,
        labelling,
        report,
    })
}

fn edge(g: &Graph, a: usize, b: usize) -> usize {
    g.edge_index(a, b).expect("edge of a generated family")
}

/// Centre 1, edge `x0xi` gets `1+i`, leaf `xi` gets `n+2-i`; for odd `n` the
/// leaf `x_{(n+1)/2}` drops to `n+1-(n+1)/2`. `K_{1,1}` needs a third colour.
pub fn star_total_coloring(n: usize) -> Result<TotalColoring> {
    if n == 0 {
        return Err(Error::TooSmall("a star needs at least one leaf".into()));
    }
    let g = Graph::star(n);
    let nl = n as Label;
    let mut v = vec![1; n + 1];
    let mut e = vec![0; n];
    for i in 1..=n {
        let il = i as Label;
        e[edge(&g, 0, i)] = 1 + il;
        v[i] = nl + 2 - il;
    }
    if n == 1 {
        v[1] = 3;
    } else if n % 2 == 1 {
        let h = (n + 1) / 2;
        v[h] = nl + 1 - h as Label;
    }
    finish(g, v, e)
}

fn spider_legs(s: &Graph) -> Result<(usize, Vec<Vec<usize>>)> {
    let shape = s.classify_tree();
    if !shape.is_tree() {
        return Err(Error::NotTree);
    }
    if let (Some(c), Some(legs)) = (shape.center, shape.legs) {
        return Ok((c, legs));
    }
    if s.p() >= 3 && s.max_degree() == 2 {
        let c = (0..s.p()).find(|&u| s.degree(u) == 2).expect("path body");
        let legs = s
            .neighbors(c)
            .map(|start| {
                let mut leg = vec![start];
                let (mut prev, mut cur) = (c, start);
                while let Some(next) = s.neighbors(cur).find(|&u| u != prev) {
                    leg.push(next);
                    prev = cur;
                    cur = next;
                }
                leg
            })
            .collect();
        return Ok((c, legs));
    }
    Err(Error::Unsupported("not a spider".into()))
}

/// Star coloring at the body, then each leg repeats the colours
/// `1, 1+i, n+2-i` of its first three elements. Odd leg counts are left to
/// [`tree_equitable_total_coloring`].
pub fn spider_total_coloring(s: &Graph) -> Result<TotalColoring> {
    let (c, legs) = spider_legs(s)?;
    let n = legs.len();
    if n % 2 == 1 {
        return Err(Error::OddLegCount);
    }
    let mut v = vec![0; s.p()];
    let mut e = vec![0; s.q()];
    v[c] = 1;
    for (i, leg) in legs.iter().enumerate() {
        let i = i as Label + 1;
        let pattern = [1, 1 + i, n as Label + 2 - i];
        let mut prev = c;
        for (j, &u) in leg.iter().enumerate() {
            e[edge(s, prev, u)] = pattern[(2 * j + 1) % 3];
            v[u] = pattern[(2 * j + 2) % 3];
            prev = u;
        }
    }
    finish(s.clone(), v, e)
}

fn acceptable(t: &TotalColoring) -> bool {
    t.report.proper && t.report.colors_used <= t.graph.max_degree() + 1 && t.report.b_tol <= 1
}

/// The even/even formulas: `x0 = 1`, `x0xi = 1+i`, `x0y0 = 2a+2`, `y0 = 2`,
/// `xi = 2a+3-i` with `x_{a+1}` taking the colour of `x_{a+2}`, then the two
/// `y`-side variants for `a != b` and `a = b`.
fn bistar_even(g: &Graph, m: usize, n: usize) -> (Vec<Label>, Vec<Label>) {
    let (a, b) = ((m / 2) as Label, (n / 2) as Label);
    let x = |i: usize| 1 + i;
    let y = |j: usize| 1 + m + j;
    let mut v = vec![0; g.p()];
    let mut e = vec![0; g.q()];
    v[0] = 1;
    v[1] = 2;
    e[edge(g, 0, 1)] = 2 * a + 2;
    for i in 1..=m {
        let il = i as Label;
        e[edge(g, 0, x(i))] = 1 + il;
        v[x(i)] = 2 * a + 3 - il;
    }
    v[x(m / 2 + 1)] = 2 * a + 3 - (a + 2);
    for j in 1..=n {
        let jl = j as Label;
        if a != b {
            e[edge(g, 1, y(j))] = 2 + jl;
            v[y(j)] = 2 * a + 1 - jl;
        } else if j + 1 < n {
            e[edge(g, 1, y(j))] = 2 + jl;
            v[y(j)] = 2 * a + 1 - jl;
        } else if j + 1 == n {
            e[edge(g, 1, y(j))] = 2 + jl;
            v[y(j)] = 3;
        } else {
            e[edge(g, 1, y(j))] = 1;
            v[y(j)] = 2 * a + 2;
        }
    }
    (v, e)
}

/// Same template for every parity: the `x` side aims at the sum `m+5`, and
/// each `y` leaf takes the first free edge colour whose partner colour keeps
/// all sums inside a window of width one.
fn bistar_pattern(g: &Graph, m: usize, n: usize) -> Option<(Vec<Label>, Vec<Label>)> {
    let ml = m as Label;
    let k = ml + 2;
    let target = ml + 5;
    let x = |i: usize| 1 + i;
    let y = |j: usize| 1 + m + j;
    let mut v = vec![0; g.p()];
    let mut e = vec![0; g.q()];
    v[0] = 1;
    v[1] = 2;
    e[edge(g, 0, 1)] = k;
    for i in 1..=m {
        let il = i as Label;
        e[edge(g, 0, x(i))] = 1 + il;
        v[x(i)] = target - 2 - il;
        if v[x(i)] == 1 + il {
            v[x(i)] -= 1;
        }
    }
    let xs_low = (1..=m).any(|i| v[x(i)] + 1 + i as Label + 1 < target);
    let windows: &[(Label, Label)] = if xs_low {
        &[(target - 1, target)]
    } else {
        &[(target, target), (target - 1, target), (target, target + 1)]
    };
    for &(lo, hi) in windows {
        let mut picks = Vec::new();
        let order: Vec<Label> = std::iter::once(target)
            .chain(lo..=hi)
            .filter(|s| (lo..=hi).contains(s))
            .collect();
        for c in (1..=k).filter(|&c| c != 2 && c != k) {
            let ok = |s: &Label| {
                let l = s - 2 - c;
                (1..=k).contains(&l) && l != 2 && l != c
            };
            if let Some(s) = order.iter().copied().find(ok) {
                picks.push((s != target, c, s - 2 - c));
            }
        }
        picks.sort();
        if picks.len() >= n {
            for (j, &(_, c, l)) in picks.iter().take(n).enumerate() {
                e[edge(g, 1, y(j + 1))] = c;
                v[y(j + 1)] = l;
            }
            return Some((v, e));
        }
    }
    None
}

/// Equitable total coloring of `S_{m,n}` (`m >= n >= 1`) with at most
/// `Δ+1` colours: the even/even formulas first, then the shared template,
/// then exhaustive search.
pub fn bistar_total_coloring(m: usize, n: usize) -> Result<TotalColoring> {
    if n == 0 || m < n {
        return Err(Error::Invalid(format!("bi-star needs m >= n >= 1, got ({m},{n})")));
    }
    let g = Graph::bistar(m, n);
    if m % 2 == 0 && n % 2 == 0 {
        let (v, e) = bistar_even(&g, m, n);
        if let Ok(t) = finish(g.clone(), v, e) {
            if acceptable(&t) {
                return Ok(t);
            }
        }
    }
    if let Some((v, e)) = bistar_pattern(&g, m, n) {
        if let Ok(t) = finish(g.clone(), v, e) {
            if acceptable(&t) {
                return Ok(t);
            }
        }
    }
    search_equitable(&g, g.max_degree() + 1)
}

/// Colours of `u` and its coloured edges.
fn used_at(g: &Graph, v: &[Label], e: &[Label], u: usize) -> Vec<Label> {
    let mut c = vec![v[u]];
    c.extend(g.incident(u).iter().map(|&(_, f)| e[f]).filter(|&x| x != 0));
    c
}

/// Leaf attachment from a star coloring at a vertex of maximum degree. A new
/// leaf `x` at `u` copies a coloured neighbour `w` (edge gets `f(w)`, leaf
/// gets `f(wu)`) when `f(w)` is free at `u`; otherwise a free colour goes on
/// the edge and the leaf colour keeps the sums within width one.
fn attach_leaves(t: &Graph) -> Option<(Vec<Label>, Vec<Label>)> {
    let delta = t.max_degree();
    let k = delta as Label + 1;
    let r = (0..t.p()).find(|&u| t.degree(u) == delta)?;
    let mut v = vec![0; t.p()];
    let mut e = vec![0; t.q()];
    let star = star_total_coloring(delta).ok()?;
    let sv = star.labelling.vertex_labels().ok()?;
    let se = star.labelling.edge_labels().ok()?;
    v[r] = sv[0];
    let mut parent = vec![usize::MAX; t.p()];
    parent[r] = r;
    let mut queue = VecDeque::new();
    for (i, w) in t.neighbors(r).enumerate() {
        v[w] = sv[i + 1];
        e[edge(t, r, w)] = se[edge(&star.graph, 0, i + 1)];
        parent[w] = r;
        queue.push_back(w);
    }
    let sum = |v: &[Label], e: &[Label], f: usize| {
        let (a, b) = t.edge(f);
        v[a] + v[b] + e[f]
    };
    let mut lo = (0..t.q()).filter(|&f| e[f] != 0).map(|f| sum(&v, &e, f)).min()?;
    let mut hi = (0..t.q()).filter(|&f| e[f] != 0).map(|f| sum(&v, &e, f)).max()?;
    while let Some(u) = queue.pop_front() {
        let kids: Vec<usize> = t.neighbors(u).filter(|&x| parent[x] == usize::MAX).collect();
        for x in kids {
            parent[x] = u;
            queue.push_back(x);
            let f = edge(t, u, x);
            let used = used_at(t, &v, &e, u);
            let mirror = t
                .incident(u)
                .iter()
                .find(|&&(w, wf)| e[wf] != 0 && !used.contains(&v[w]))
                .map(|&(w, wf)| (v[w], e[wf]));
            let choice = mirror.or_else(|| {
                (1..=k).filter(|c| !used.contains(c)).find_map(|c| {
                    (1..=k)
                        .filter(|&l| l != c && l != v[u])
                        .map(|l| (c, l))
                        .find(|&(c, l)| {
                            let s = v[u] + c + l;
                            s.max(hi) - s.min(lo) <= 1
                        })
                })
            });
            let (c, l) = choice?;
            e[f] = c;
            v[x] = l;
            let s = v[u] + c + l;
            lo = lo.min(s);
            hi = hi.max(s);
        }
    }
    Some((v, e))
}

/// Colourings of a rooted tree whose edge sums `f(u)+f(uv)+f(x)` stay in
/// `[lo, hi]`. `ok[x][a][b]` says the subtree below `x` can be finished when
/// `x` has colour `a` and its parent edge colour `b` (0 at the root).
struct Window<'a> {
    t: &'a Graph,
    k: Label,
    lo: Label,
    hi: Label,
    children: Vec<Vec<(usize, usize)>>,
    ok: Vec<Vec<Vec<bool>>>,
}

impl Window<'_> {
    /// Colours `l` a child may take below a vertex coloured `a` over an edge
    /// coloured `c`.
    fn child_colours(&self, a: Label, c: Label) -> impl Iterator<Item = Label> + '_ {
        (self.lo - a - c..=self.hi - a - c).filter(move |&l| l >= 1 && l <= self.k && l != a && l != c)
    }

    /// For each child of `x`, the edge colours it can take, each with a
    /// child colour that keeps its own subtree finishable.
    fn choices(&self, x: usize, a: Label, b: Label) -> Vec<Vec<(Label, Label)>> {
        self.children[x]
            .iter()
            .map(|&(y, _)| {
                (1..=self.k)
                    .filter(|&c| c != a && c != b)
                    .filter_map(|c| {
                        self.child_colours(a, c)
                            .find(|&l| self.ok[y][l as usize][c as usize])
                            .map(|l| (c, l))
                    })
                    .collect()
            })
            .collect()
    }

    /// Distinct edge colours for the children of `x`, with child colours.
    fn assign(&self, x: usize, a: Label, b: Label) -> Option<Vec<(Label, Label)>> {
        let choices = self.choices(x, a, b);
        let cols: Vec<Label> = (1..=self.k).collect();
        let fits = |i: usize, j: usize| choices[i].iter().any(|&(c, _)| c == cols[j]);
        let m = perfect_matching(choices.len(), cols.len(), fits)?;
        Some(
            m.iter()
                .enumerate()
                .map(|(i, &j)| *choices[i].iter().find(|&&(c, _)| c == cols[j]).expect("matched colour"))
                .collect(),
        )
    }

    fn solve(t: &Graph, k: Label, lo: Label, hi: Label, order: &[usize], children: Vec<Vec<(usize, usize)>>) -> Option<(Vec<Label>, Vec<Label>)> {
        let ku = k as usize;
        let mut w = Window {
            t,
            k,
            lo,
            hi,
            children,
            ok: vec![vec![vec![false; ku + 1]; ku + 1]; t.p()],
        };
        for &x in order.iter().rev() {
            for a in 1..=k {
                for b in 0..=k {
                    if b != a {
                        w.ok[x][a as usize][b as usize] = w.assign(x, a, b).is_some();
                    }
                }
            }
        }
        let root = order[0];
        let a = (1..=k).find(|&a| w.ok[root][a as usize][0])?;
        let mut v = vec![0; w.t.p()];
        let mut e = vec![0; w.t.q()];
        v[root] = a;
        let mut stack = vec![(root, 0)];
        while let Some((x, b)) = stack.pop() {
            let picks = w.assign(x, v[x], b).expect("state marked finishable");
            for (&(y, f), (c, l)) in w.children[x].iter().zip(picks) {
                e[f] = c;
                v[y] = l;
                stack.push((y, c));
            }
        }
        Some((v, e))
    }
}

/// Exact search over proper total colorings of a tree into `[1, k]` whose
/// edge sums fit a window of width at most one, windows tried from the
/// middle outwards.
fn search_equitable(t: &Graph, k: usize) -> Result<TotalColoring> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    let k = k as Label;
    let mut order = vec![0];
    let mut children = vec![Vec::new(); t.p()];
    let mut seen = vec![false; t.p()];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &(x, f) in t.incident(u) {
            if !seen[x] {
                seen[x] = true;
                order.push(x);
                children[u].push((x, f));
            }
        }
        i += 1;
    }
    let mid = 3 * (k + 1) / 2;
    for width in [0, 1] {
        let mut los: Vec<Label> = (3..=3 * k - width).collect();
        los.sort_by_key(|&lo| ((lo - mid).abs(), lo));
        for lo in los {
            if let Some((v, e)) = Window::solve(t, k, lo, lo + width, &order, children.clone()) {
                return finish(t.clone(), v, e);
            }
        }
    }
    Err(Error::CertificationFailed("no equitable total coloring exists".into()))
}

/// Proper total coloring of a tree with `Δ+1` colours and `B_tol <= 1`.
pub fn tree_equitable_total_coloring(t: &Graph) -> Result<TotalColoring> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    if t.p() == 1 {
        return finish(t.clone(), vec![1], vec![]);
    }
    if t.p() == 2 {
        // K_2 needs three colours, one more than Δ+1
        return finish(t.clone(), vec![1, 3], vec![2]);
    }
    let delta = t.max_degree();
    if let Some((v, e)) = attach_leaves(t) {
        if let Ok(c) = finish(t.clone(), v, e) {
            if acceptable(&c) && c.report.colors_used == delta + 1 {
                return Ok(c);
            }
        }
    }
    search_equitable(t, delta + 1)
}
