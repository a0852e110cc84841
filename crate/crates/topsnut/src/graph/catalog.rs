//! Exhaustive small-graph families used by the oracles and sweeps.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;

use super::{is_isomorphic, Graph};

/// AHU encoding of the tree rooted at `root`.
fn rooted_code(g: &Graph, root: usize, parent: usize) -> String {
    let mut parts: Vec<String> = g
        .neighbors(root)
        .filter(|&u| u != parent)
        .map(|u| rooted_code(g, u, root))
        .collect();
    parts.sort_unstable();
    format!("({})", parts.concat())
}

fn centres(g: &Graph) -> Vec<usize> {
    let n = g.p();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
        }
        for &v in &layer {
            for u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Canonical string of a tree; equal strings mean isomorphic trees.
pub fn tree_code(g: &Graph) -> String {
    if g.p() == 0 {
        return String::new();
    }
    centres(g)
        .into_iter()
        .map(|c| rooted_code(g, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// All non-isomorphic trees on `n` vertices (`n >= 1`), in a fixed order.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "trees need at least one vertex");
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..t.p() {
                let g = t.with_leaf(v).expect("leaf growth");
                seen.entry(tree_code(&g)).or_insert(g);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// All non-isomorphic trees with between 1 and `max_n` vertices.
pub fn trees_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(trees).collect()
}

/// All non-isomorphic caterpillars with between 1 and `max_n` vertices.
pub fn caterpillars_up_to(max_n: usize) -> Vec<Graph> {
    trees_up_to(max_n)
        .into_iter()
        .filter(|t| t.classify_tree().caterpillar)
        .collect()
}

fn invariant(g: &Graph) -> (usize, Vec<usize>, usize) {
    let mut deg: Vec<usize> = (0..g.p()).map(|v| g.degree(v)).collect();
    deg.sort_unstable();
    let mut triangles = 0;
    for &(a, b) in g.edges() {
        triangles += g.neighbors(a).filter(|&c| g.has_edge(b, c)).count();
    }
    (g.p(), deg, triangles)
}

/// All non-isomorphic connected graphs with exactly `q` edges.
pub fn connected_graphs(q: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for _ in 0..q {
        let mut buckets: HashMap<(usize, Vec<usize>, usize), Vec<Graph>> = HashMap::new();
        let mut found = Vec::new();
        for g in &level {
            let mut grown = Vec::new();
            for u in 0..g.p() {
                for v in u + 1..g.p() {
                    if !g.has_edge(u, v) {
                        grown.push(g.with_edge(u, v).expect("new edge"));
                    }
                }
                grown.push(g.with_leaf(u).expect("pendant"));
            }
            for h in grown {
                let bucket = buckets.entry(invariant(&h)).or_default();
                let fresh = bucket
                    .iter()
                    .all(|other| !is_isomorphic(other, &h).expect("small graph"));
                if fresh {
                    bucket.push(h.clone());
                    found.push(h);
                }
            }
        }
        level = found;
    }
    level
}

/// All non-isomorphic connected graphs with between 1 and `max_q` edges.
pub fn connected_graphs_up_to(max_q: usize) -> Vec<Graph> {
    (1..=max_q).flat_map(connected_graphs).collect()
}

/// Uniform random labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding gives a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts() {
        // OEIS A000055
        let counts: Vec<usize> = (1..=10).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A002905
        let counts: Vec<usize> = (1..=6).map(|q| connected_graphs(q).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 5, 12, 30]);
    }

    #[test]
    fn caterpillar_counts() {
        // caterpillars on n vertices: 2^(n-4) + 2^floor((n-4)/2) for n >= 3
        for n in 4..=10 {
            let got = trees(n).iter().filter(|t| t.classify_tree().caterpillar).count();
            assert_eq!(got, (1 << (n - 4)) + (1 << ((n - 4) / 2)), "n={n}");
        }
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..40 {
            assert!(random_tree(n, &mut rng).is_tree());
        }
    }

    #[test]
    fn bicentral_codes_agree() {
        let a = Graph::path(4);
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_code(&a), tree_code(&b));
    }
}
