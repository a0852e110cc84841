use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};

const MAX_ISO_VERTICES: usize = 12;

/// Colour refinement run on both graphs with a shared palette, so the final
/// colours are comparable across them.
fn refine(a: &Graph, b: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = (0..a.p()).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..b.p()).map(|v| b.degree(v)).collect();
    loop {
        let mut palette: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut step = |g: &Graph, c: &[usize]| -> Vec<usize> {
            (0..g.p())
                .map(|v| {
                    let mut around: Vec<usize> = g.neighbors(v).map(|u| c[u]).collect();
                    around.sort_unstable();
                    let n = palette.len();
                    *palette.entry((c[v], around)).or_insert(n)
                })
                .collect()
        };
        let na = step(a, &ca);
        let nb = step(b, &cb);
        let before = distinct(&ca, &cb);
        let after = distinct(&na, &nb);
        ca = na;
        cb = nb;
        if after == before {
            return (ca, cb);
        }
    }
}

fn distinct(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn histogram(c: &[usize]) -> Vec<usize> {
    let mut h = c.to_vec();
    h.sort_unstable();
    h
}

/// Exact isomorphism test by refinement plus backtracking. Only graphs with
/// at most 12 vertices are accepted.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.p() > MAX_ISO_VERTICES || b.p() > MAX_ISO_VERTICES {
        return Err(Error::Unsupported(format!(
            "isomorphism test limited to {MAX_ISO_VERTICES} vertices"
        )));
    }
    if a.p() != b.p() || a.q() != b.q() {
        return Ok(false);
    }
    let (ca, cb) = refine(a, b);
    if histogram(&ca) != histogram(&cb) {
        return Ok(false);
    }
    // rarest colour classes first
    let mut count: HashMap<usize, usize> = HashMap::new();
    for &c in &ca {
        *count.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..a.p()).collect();
    order.sort_by_key(|&v| (count[&ca[v]], ca[v], v));
    let mut map = vec![usize::MAX; a.p()];
    let mut used = vec![false; b.p()];
    Ok(extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.p() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
