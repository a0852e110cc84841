//! Brute-force reference checks written directly from the definitions,
//! sharing no code with the library beyond its graph type.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use topsnut::verify::{Kind, TogMode, TwinParts};
use topsnut::{Graph, Label};

pub fn sorted(xs: &[Label]) -> Vec<Label> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

pub fn odd_set(count: Label) -> Vec<Label> {
    (0..count).map(|i| 2 * i + 1).collect()
}

pub fn distinct(xs: &[Label]) -> bool {
    xs.iter().collect::<BTreeSet<_>>().len() == xs.len()
}

pub fn within(xs: &[Label], lo: Label, hi: Label) -> bool {
    xs.iter().all(|&x| lo <= x && x <= hi)
}

pub fn is_interval(xs: &[Label], lo: Label, hi: Label) -> bool {
    sorted(xs) == (lo..=hi).collect::<Vec<_>>()
}

pub fn all_equal(xs: &[Label]) -> bool {
    xs.windows(2).all(|w| w[0] == w[1])
}

/// Two-colouring by breadth-first search; `None` on an odd cycle.
pub fn two_colouring(p: usize, edges: &[(usize, usize)]) -> Option<Vec<u8>> {
    let mut adj = vec![Vec::new(); p];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut side = vec![u8::MAX; p];
    for s in 0..p {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// `max f(X) < min f(Y)` or the mirror, over the vertices the edges touch.
pub fn set_ordered(p: usize, edges: &[(usize, usize)], v: &[Label]) -> bool {
    let Some(side) = two_colouring(p, edges) else {
        return false;
    };
    let touched: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let pick = |s: u8| touched.iter().filter(|&&x| side[x] == s).map(|&x| v[x]).collect::<Vec<_>>();
    let (x, y) = (pick(0), pick(1));
    let below = |a: &[Label], b: &[Label]| match (a.iter().max(), b.iter().min()) {
        (Some(m), Some(n)) => m < n,
        _ => true,
    };
    below(&x, &y) || below(&y, &x)
}

pub fn connected_on(edges: &[(usize, usize)]) -> bool {
    let verts: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let Some(&start) = verts.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (u, w) in [(a, b), (b, a)] {
                if u == x && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    seen.len() == verts.len()
}

/// Calls `f` on every permutation of `0..n`.
pub fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == used.len() {
            return f(perm);
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                perm.push(x);
                if go(k + 1, perm, used, f) {
                    return true;
                }
                perm.pop();
                used[x] = false;
            }
        }
        false
    }
    go(0, &mut Vec::new(), &mut vec![false; n], f)
}

/// Some permutation `pi` with `rel(i, pi(i))` for every `i`.
pub fn bijection(n: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    for_each_permutation(n, &mut |pi| (0..n).all(|i| rel(i, pi[i])))
}

/// An involution `sigma` and constant `k` with `s_i + s_sigma(i) == k`, or
/// `== k - alt` when `alt` is given, for every `i`.
pub fn balanced(s: &[Label], alt: Option<Label>) -> bool {
    let n = s.len();
    if n == 0 {
        return true;
    }
    for_each_permutation(n, &mut |sigma| {
        if (0..n).any(|i| sigma[sigma[i]] != i) {
            return false;
        }
        let options = |i: usize| {
            let base = s[i] + s[sigma[i]];
            let mut o = vec![base];
            if let Some(m) = alt {
                o.push(base + m);
            }
            o
        };
        options(0).into_iter().any(|k| (0..n).all(|i| options(i).contains(&k)))
    })
}

/// One vertex (whose label passes `singular`) left out, the rest paired
/// bijectively with the edges at a constant label sum.
pub fn ve_matched(v: &[Label], e: &[Label], singular: Option<Label>) -> bool {
    (0..v.len()).any(|x0| {
        if singular.is_some_and(|t| v[x0] != t) {
            return false;
        }
        let rest: Vec<Label> = (0..v.len()).filter(|&i| i != x0).map(|i| v[i]).collect();
        if rest.len() != e.len() {
            return false;
        }
        if e.is_empty() {
            return true;
        }
        for_each_permutation(e.len(), &mut |pi| all_equal(&(0..rest.len()).map(|i| rest[i] + e[pi[i]]).collect::<Vec<_>>()))
    })
}

fn onto(v: &[Label], e: &[Label], top: Label) -> bool {
    let mut all = v.to_vec();
    all.extend_from_slice(e);
    is_interval(&all, 1, top)
}

fn ev_ordered(v: &[Label], e: &[Label]) -> bool {
    let (vmin, vmax) = (v.iter().min(), v.iter().max());
    let (emin, emax) = (e.iter().min(), e.iter().max());
    let above = matches!((vmin, emax), (Some(a), Some(b)) if a > b);
    let below = matches!((vmax, emin), (Some(a), Some(b)) if a < b);
    above || below || v.iter().all(|x| e.contains(x)) || e.iter().all(|x| v.contains(x)) || odd_even(v, e)
}

fn odd_even(v: &[Label], e: &[Label]) -> bool {
    v.iter().all(|x| x % 2 != 0) && e.iter().all(|x| x % 2 == 0)
}

/// Part-local checks for twin kinds.
struct PartView {
    edges: Vec<(usize, usize)>,
    vertices: Vec<usize>,
}

impl PartView {
    fn new(g: &Graph, idx: &[usize]) -> PartView {
        let edges: Vec<(usize, usize)> = idx.iter().map(|&i| g.edges()[i]).collect();
        let vertices = edges.iter().flat_map(|&(a, b)| [a, b]).collect::<BTreeSet<_>>().into_iter().collect();
        PartView { edges, vertices }
    }

    fn q(&self) -> Label {
        self.edges.len() as Label
    }

    fn labels(&self, v: &[Label]) -> Vec<Label> {
        self.vertices.iter().map(|&x| v[x]).collect()
    }

    fn diffs(&self, v: &[Label]) -> Vec<Label> {
        self.edges.iter().map(|&(a, b)| (v[a] - v[b]).abs()).collect()
    }

    fn sums_mod(&self, v: &[Label], m: Label) -> Vec<Label> {
        self.edges.iter().map(|&(a, b)| (v[a] + v[b]) % m).collect()
    }

    fn odd_graceful(&self, v: &[Label]) -> bool {
        within(&self.labels(v), 0, 2 * self.q() - 1) && sorted(&self.diffs(v)) == odd_set(self.q())
    }

    fn odd_elegant(&self, v: &[Label], top: Label) -> bool {
        within(&self.labels(v), 0, top) && sorted(&self.sums_mod(v, 2 * self.q())) == odd_set(self.q())
    }
}

/// Whether `(v, e)` meets every clause of `kind` on `g`. For vertex kinds
/// `e` is ignored and the edge values are computed from `v`.
pub fn oracle(g: &Graph, kind: &Kind, v: &[Label], e: &[Label]) -> bool {
    let p = g.p() as Label;
    let q = g.q() as Label;
    let edges = g.edges();
    let d: Vec<Label> = edges.iter().map(|&(a, b)| (v[a] - v[b]).abs()).collect();
    let s: Vec<Label> = edges.iter().map(|&(a, b)| v[a] + v[b]).collect();
    let smod = |m: Label| s.iter().map(|x| x % m).collect::<Vec<_>>();
    let so = || set_ordered(g.p(), edges, v);
    let odd = odd_set(q);
    let totals = || (0..edges.len()).map(|i| s[i] + e[i]).collect::<Vec<_>>();
    let emagic = || (0..edges.len()).map(|i| e[i] + d[i]).collect::<Vec<_>>();
    let slack = || (0..edges.len()).map(|i| d[i] - e[i]).collect::<Vec<_>>();
    let qi = edges.len();
    match kind {
        Kind::Graceful => distinct(v) && within(v, 0, q) && is_interval(&d, 1, q),
        Kind::SetOrderedGraceful => distinct(v) && within(v, 0, q) && is_interval(&d, 1, q) && so(),
        Kind::OddGraceful => distinct(v) && within(v, 0, 2 * q - 1) && sorted(&d) == odd,
        Kind::SetOrderedOddGraceful => distinct(v) && within(v, 0, 2 * q - 1) && sorted(&d) == odd && so(),
        Kind::PanOddGraceful => {
            distinct(v) && within(v, 0, 2 * q) && bijection(qi, |i, j| odd[j] == d[i] || odd[j] == 2 * q - 1 - d[i])
        }
        Kind::KSequentialOddGraceful(k) => distinct(v) && within(v, *k, 2 * q - 1 + k) && sorted(&d) == odd,
        Kind::OddElegant => distinct(v) && within(v, 0, 2 * q - 1) && sorted(&smod(2 * q)) == odd,
        Kind::SetOrderedOddElegant => distinct(v) && within(v, 0, 2 * q - 1) && sorted(&smod(2 * q)) == odd && so(),
        Kind::Felicitous => distinct(v) && within(v, 0, q) && distinct(&smod(q)),
        Kind::Harmonious => {
            let repeats = v.len() - v.iter().collect::<BTreeSet<_>>().len();
            let allowed = usize::from(q == p - 1);
            repeats <= allowed && within(v, 0, q - 1) && is_interval(&smod(q), 0, q - 1)
        }
        Kind::EdgeMagicTotal => onto(v, e, p + q) && all_equal(&totals()),
        Kind::SuperEdgeMagicTotal => onto(v, e, p + q) && is_interval(v, 1, p) && all_equal(&totals()),
        Kind::PanEdgeMagicTotal => distinct(v) && distinct(e) && all_equal(&totals()),
        Kind::EdgeAntimagicTotal => {
            let t = sorted(&totals());
            let gap = if t.len() > 1 { t[1] - t[0] } else { 0 };
            onto(v, e, p + q) && (t.len() == 1 || gap > 0) && t.windows(2).all(|w| w[1] - w[0] == gap)
        }
        Kind::EdgeMagicGraceful | Kind::SuperEdgeMagicGraceful => {
            let g_vals: Vec<Label> = (0..qi).map(|i| (s[i] - e[i]).abs()).collect();
            let super_ok = *kind == Kind::EdgeMagicGraceful || is_interval(v, 1, p);
            onto(v, e, p + q) && super_ok && all_equal(&g_vals)
        }
        Kind::RelaxedEmt => onto(v, e, p + q) && all_equal(&totals()) && bijection(qi, |i, j| e[i] == d[j]),
        Kind::Oemm => distinct(v) && within(v, 0, 2 * q - 1) && sorted(e) == odd && all_equal(&totals()),
        Kind::Eedoemm => {
            distinct(v)
                && within(v, 0, 2 * q - 1)
                && sorted(e) == odd
                && all_equal(&emagic())
                && bijection(qi, |i, j| e[i] == d[j])
                && balanced(&slack(), None)
        }
        Kind::SixC | Kind::OddEvenSeparableSixC => {
            let m = 2 * (p + q);
            let oe = *kind == Kind::OddEvenSeparableSixC;
            onto(v, e, p + q)
                && all_equal(&emagic())
                && if oe { odd_even(v, e) } else { ev_ordered(v, e) }
                && so()
                && bijection(qi, |i, j| e[i] == d[j] || e[i] == m - d[j])
                && balanced(&slack(), Some(m))
                && ve_matched(v, e, if oe { None } else { Some((p + q + 1) / 2) })
        }
        Kind::Dgemm => {
            distinct(v)
                && within(v, 0, p - 1)
                && within(e, 1, q)
                && all_equal(&emagic())
                && bijection(qi, |i, j| e[i] == d[j] || e[i] == p - d[j])
                && balanced(&slack(), None)
                && ve_matched(v, e, Some(0))
        }
        Kind::VeExchangedOf(f) => {
            let a0 = (p + q + 1) / 2;
            let fv: BTreeSet<Label> = f.vertices.iter().flatten().copied().filter(|&x| x != a0).collect();
            let fe: BTreeSet<Label> = f.edges.iter().flatten().copied().collect();
            let hv: BTreeSet<Label> = v.iter().copied().filter(|&x| x != a0).collect();
            let he: BTreeSet<Label> = e.iter().copied().collect();
            let rule = (0..qi).all(|i| e[i] == d[i])
                || (0..qi).all(|i| e[i] == s[i] % q)
                || all_equal(&(0..qi).map(|i| (s[i] - e[i]).abs()).collect::<Vec<_>>())
                || all_equal(&totals());
            onto(v, e, p + q) && rule && hv == fe && he == fv
        }
        Kind::Tog(..) | Kind::Toe(_) | Kind::Sotoe(_) | Kind::TwoOddTwo(_) => twin_oracle(g, kind, v),
    }
}

fn twin_oracle(g: &Graph, kind: &Kind, v: &[Label]) -> bool {
    let q = g.q() as Label;
    let parts = kind.parts().expect("twin kind with parts");
    let (a, b) = (PartView::new(g, &parts.first), PartView::new(g, &parts.second));
    let common = distinct(&a.labels(v)) && distinct(&b.labels(v)) && connected_on(&a.edges) && connected_on(&b.edges);
    common
        && match kind {
            Kind::Tog(mode, _) => {
                let (second, union_top) = match mode {
                    TogMode::Strict => ((1..q).step_by(2).collect::<Vec<_>>(), q - 1),
                    TogMode::Compatible => (odd_set(b.q()), q),
                };
                let touched: Vec<Label> = (0..g.p()).filter(|&x| g.degree(x) > 0).map(|x| v[x]).collect();
                within(v, 0, q) && a.odd_graceful(v) && sorted(&b.diffs(v)) == second && within(&touched, 0, union_top)
            }
            Kind::Toe(_) | Kind::Sotoe(_) => {
                let ordered = !matches!(kind, Kind::Sotoe(_)) || set_ordered(g.p(), &a.edges, v);
                within(v, 0, q - 1) && a.odd_elegant(v, 2 * a.q() - 1) && b.odd_elegant(v, 2 * b.q() - 1) && ordered
            }
            Kind::TwoOddTwo(_) => within(v, 0, q) && a.odd_graceful(v) && b.odd_elegant(v, 2 * b.q()),
            _ => unreachable!(),
        }
}

/// First `ceil(q/2)` edges against the rest.
pub fn halves(q: usize) -> TwinParts {
    let cut = q.div_ceil(2);
    TwinParts {
        first: (0..cut).collect(),
        second: (cut..q).collect(),
    }
}

pub fn for_each_injection(p: usize, values: &[Label], f: &mut dyn FnMut(&[Label])) {
    fn go(cur: &mut Vec<Label>, p: usize, values: &[Label], used: &mut [bool], f: &mut dyn FnMut(&[Label])) {
        if cur.len() == p {
            f(cur);
            return;
        }
        for i in 0..values.len() {
            if !used[i] {
                used[i] = true;
                cur.push(values[i]);
                go(cur, p, values, used, f);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(p), p, values, &mut vec![false; values.len()], f);
}

pub fn for_each_tuple(p: usize, values: &[Label], f: &mut dyn FnMut(&[Label])) {
    fn go(cur: &mut Vec<Label>, p: usize, values: &[Label], f: &mut dyn FnMut(&[Label])) {
        if cur.len() == p {
            f(cur);
            return;
        }
        for &x in values {
            cur.push(x);
            go(cur, p, values, f);
            cur.pop();
        }
    }
    go(&mut Vec::with_capacity(p), p, values, f);
}

fn range(lo: Label, hi: Label) -> Vec<Label> {
    (lo..=hi).collect()
}

/// Edge tuples `k - w_i` for every `k` keeping all of them in `[lo, hi]`.
fn forced(w: &[Label], lo: Label, hi: Label, f: &mut dyn FnMut(&[Label])) {
    let (Some(&wmin), Some(&wmax)) = (w.iter().min(), w.iter().max()) else {
        f(&[]);
        return;
    };
    for k in wmax + lo..=wmin + hi {
        let e: Vec<Label> = w.iter().map(|x| k - x).collect();
        f(&e);
    }
}

/// The candidates the oracle judges: vertex vectors (with an empty edge
/// vector) for vertex kinds, `(v, e)` pairs otherwise. Vertex kinds on
/// graphs with at most four vertices also get out-of-range and repeated
/// labels.
pub fn for_each_candidate(g: &Graph, kind: &Kind, f: &mut dyn FnMut(&[Label], &[Label])) {
    let p = g.p() as Label;
    let q = g.q() as Label;
    let n = g.p();
    let edges = g.edges().to_vec();
    let vertex_range = |lo: Label, hi: Label, f: &mut dyn FnMut(&[Label], &[Label])| {
        if n <= 4 {
            for_each_tuple(n, &range(lo - 1, hi + 1), &mut |v| f(v, &[]));
        } else {
            for_each_injection(n, &range(lo, hi), &mut |v| f(v, &[]));
        }
    };
    let sums = |v: &[Label]| edges.iter().map(|&(a, b)| v[a] + v[b]).collect::<Vec<_>>();
    let diffs = |v: &[Label]| edges.iter().map(|&(a, b)| (v[a] - v[b]).abs()).collect::<Vec<_>>();
    match kind {
        Kind::Graceful | Kind::SetOrderedGraceful | Kind::Felicitous => vertex_range(0, q, f),
        Kind::OddGraceful | Kind::SetOrderedOddGraceful | Kind::OddElegant | Kind::SetOrderedOddElegant => {
            vertex_range(0, 2 * q - 1, f)
        }
        Kind::PanOddGraceful => vertex_range(0, 2 * q, f),
        Kind::KSequentialOddGraceful(k) => vertex_range(*k, 2 * q - 1 + k, f),
        Kind::Harmonious => for_each_tuple(n, &range(0, q - 1), &mut |v| f(v, &[])),
        Kind::Tog(..) | Kind::TwoOddTwo(_) => for_each_tuple(n, &range(0, q), &mut |v| f(v, &[])),
        Kind::Toe(_) | Kind::Sotoe(_) => for_each_tuple(n, &range(0, q - 1), &mut |v| f(v, &[])),
        Kind::EdgeMagicTotal | Kind::SuperEdgeMagicTotal | Kind::PanEdgeMagicTotal | Kind::RelaxedEmt => {
            for_each_injection(n, &range(1, p + q), &mut |v| forced(&sums(v), 1, p + q, &mut |e| f(v, e)))
        }
        Kind::Oemm => for_each_injection(n, &range(0, 2 * q - 1), &mut |v| {
            forced(&sums(v), 1, 2 * q - 1, &mut |e| f(v, e))
        }),
        Kind::Eedoemm => for_each_injection(n, &range(0, 2 * q - 1), &mut |v| {
            forced(&diffs(v), 1, 2 * q - 1, &mut |e| f(v, e))
        }),
        Kind::SixC | Kind::OddEvenSeparableSixC => {
            for_each_injection(n, &range(1, p + q), &mut |v| forced(&diffs(v), 1, p + q, &mut |e| f(v, e)))
        }
        Kind::Dgemm => for_each_injection(n, &range(0, p - 1), &mut |v| forced(&diffs(v), 1, q, &mut |e| f(v, e))),
        Kind::EdgeMagicGraceful | Kind::SuperEdgeMagicGraceful => {
            for_each_injection(n, &range(1, p + q), &mut |v| {
                let s = sums(v);
                for k in 0..=2 * (p + q) {
                    let options: Vec<Vec<Label>> = s
                        .iter()
                        .map(|&x| {
                            let mut o: Vec<Label> = [x - k, x + k].into_iter().filter(|c| (1..=p + q).contains(c)).collect();
                            o.dedup();
                            o
                        })
                        .collect();
                    let mut e = Vec::with_capacity(options.len());
                    product(&options, &mut e, &mut |e| f(v, e));
                }
            })
        }
        Kind::EdgeAntimagicTotal => for_each_injection(n, &range(1, p + q), &mut |v| {
            let rest: Vec<Label> = (1..=p + q).filter(|x| !v.contains(x)).collect();
            for_each_injection(edges.len(), &rest, &mut |e| f(v, e));
        }),
        Kind::VeExchangedOf(r) => {
            let a0 = (p + q + 1) / 2;
            let mut vv: BTreeSet<Label> = r.edges.iter().flatten().copied().collect();
            vv.insert(a0);
            let ev: Vec<Label> = r.vertices.iter().flatten().copied().filter(|&x| x != a0).collect();
            let vv: Vec<Label> = vv.into_iter().collect();
            for_each_injection(n, &vv, &mut |v| for_each_tuple(edges.len(), &ev, &mut |e| f(v, e)));
        }
    }
}

fn product(options: &[Vec<Label>], cur: &mut Vec<Label>, f: &mut dyn FnMut(&[Label])) {
    if cur.len() == options.len() {
        f(cur);
        return;
    }
    for &x in &options[cur.len()] {
        cur.push(x);
        product(options, cur, f);
        cur.pop();
    }
}

/// Every injection `V -> [0, top]` with its difference sum.
pub fn difference_sums(g: &Graph, top: Label, f: &mut dyn FnMut(&[Label], Label)) {
    let values = range(0, top);
    for_each_injection(g.p(), &values, &mut |v| {
        let s = g.edges().iter().map(|&(a, b)| (v[a] - v[b]).abs()).sum();
        f(v, s);
    });
}

/// Proper total colouring check: adjacent vertices, incident vertex/edge
/// pairs and edges sharing an end all differ.
pub fn proper_total(g: &Graph, v: &[Label], e: &[Label]) -> bool {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        if v[a] == v[b] || e[i] == v[a] || e[i] == v[b] {
            return false;
        }
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            let share = a == c || a == d || b == c || b == d;
            if share && e[i] == e[j] {
                return false;
            }
        }
    }
    true
}

/// Odd-even pairs of `r` covering each odd difference in `[1, 2q-1]` once
/// and connecting every label of `r`: does any exist?
pub fn odd_graceful_matching_exists(q: usize, r: &[Label]) -> bool {
    let mut classes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); q];
    for (i, &a) in r.iter().enumerate() {
        for (j, &b) in r.iter().enumerate() {
            if a % 2 == 1 && b % 2 == 0 {
                let d = (a - b).abs();
                if d < 2 * q as Label {
                    classes[(d / 2) as usize].push((i, j));
                }
            }
        }
    }
    if r.is_empty() || classes.iter().any(Vec::is_empty) {
        return false;
    }
    let mut pick = vec![0usize; q];
    loop {
        let chosen: Vec<(usize, usize)> = (0..q).map(|c| classes[c][pick[c]]).collect();
        let covers = (0..r.len()).all(|x| r.len() == 1 || chosen.iter().any(|&(a, b)| a == x || b == x));
        if covers && connected_on(&chosen) {
            return true;
        }
        let mut c = 0;
        loop {
            if c == q {
                return false;
            }
            pick[c] += 1;
            if pick[c] < classes[c].len() {
                break;
            }
            pick[c] = 0;
            c += 1;
        }
    }
}
