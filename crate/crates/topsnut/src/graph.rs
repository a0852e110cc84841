//! Simple undirected graphs on vertices `0..p`, structural classification of
//! trees, and the split/identify operations.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

pub mod catalog;
mod iso;

pub use iso::is_isomorphic;

/// A simple undirected graph. Edges are stored with `u < v` in insertion order,
/// and the position of an edge in [`Graph::edges`] is its edge index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    p: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    bipartite: bool,
    connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    in_x: Vec<bool>,
}

impl Bipartition {
    pub fn in_x(&self, v: usize) -> bool {
        self.in_x[v]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeTag {
    Path,
    Star,
    BiStar,
    Caterpillar,
    Lobster,
    Spider,
    GenericTree,
    NotTree,
}

impl TreeTag {
    pub fn name(self) -> &'static str {
        match self {
            TreeTag::Path => "path",
            TreeTag::Star => "star",
            TreeTag::BiStar => "bi_star",
            TreeTag::Caterpillar => "caterpillar",
            TreeTag::Lobster => "lobster",
            TreeTag::Spider => "spider",
            TreeTag::GenericTree => "generic_tree",
            TreeTag::NotTree => "not_tree",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShape {
    pub tag: TreeTag,
    /// Spine `u_1..u_n` of a caterpillar (the path left after deleting leaves).
    pub spine: Option<Vec<usize>>,
    /// Leaves hanging from each spine vertex, ascending.
    pub leaves: Option<Vec<Vec<usize>>>,
    /// Body vertex and legs (each listed outward) of a spider.
    pub center: Option<usize>,
    pub legs: Option<Vec<Vec<usize>>>,
    pub caterpillar: bool,
    pub lobster: bool,
}

impl TreeShape {
    /// Leaf counts `m_i` along the spine.
    pub fn leaf_blocks(&self) -> Option<Vec<usize>> {
        self.leaves
            .as_ref()
            .map(|ls| ls.iter().map(Vec::len).collect())
    }

    pub fn is_tree(&self) -> bool {
        self.tag != TreeTag::NotTree
    }
}

impl Graph {
    pub fn new(p: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); p];
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a >= p {
                return Err(Error::VertexOutOfRange(a));
            }
            if b >= p {
                return Err(Error::VertexOutOfRange(b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            let idx = list.len();
            list.push(e);
            adj[e.0].push((e.1, idx));
            adj[e.1].push((e.0, idx));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let mut g = Graph {
            p,
            edges: list,
            adj,
            bipartite: false,
            connected: false,
        };
        g.connected = g.count_components() <= 1;
        g.bipartite = g.two_color().is_some();
        Ok(g)
    }

    pub fn empty(p: usize) -> Graph {
        Graph::new(p, []).expect("edgeless graph")
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge index)` pairs sorted by neighbour.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.p || v >= self.p {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.p >= 1 && self.q() + 1 == self.p
    }

    fn count_components(&self) -> usize {
        let mut seen = vec![false; self.p];
        let mut count = 0;
        for s in 0..self.p {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.p];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.p {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn two_color(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.p];
        for s in 0..self.p {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(true);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for u in self.neighbors(v) {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(d) if d == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Proper 2-colouring with vertex 0 (and the smallest vertex of every
    /// other component) in `X`.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let in_x = self.two_color().ok_or(Error::OddCycle)?;
        let x = (0..self.p).filter(|&v| in_x[v]).collect();
        let y = (0..self.p).filter(|&v| !in_x[v]).collect();
        Ok(Bipartition { x, y, in_x })
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    /// `K_{1,n}` with centre 0 and leaves `1..=n`.
    pub fn star(n: usize) -> Graph {
        Graph::new(n + 1, (1..=n).map(|i| (0, i))).expect("star")
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, e).expect("complete")
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..m {
            for v in 0..n {
                e.push((u, m + v));
            }
        }
        Graph::new(m + n, e).expect("complete bipartite")
    }

    /// Bi-star `S_{m,n}`: centres 0 and 1 joined by an edge, `m` leaves on 0
    /// then `n` leaves on 1.
    pub fn bistar(m: usize, n: usize) -> Graph {
        let mut e = vec![(0, 1)];
        e.extend((0..m).map(|i| (0, 2 + i)));
        e.extend((0..n).map(|j| (1, 2 + m + j)));
        Graph::new(m + n + 2, e).expect("bistar")
    }

    /// Caterpillar with spine `0..n` and `blocks[i]` leaves on spine vertex `i`;
    /// leaves are numbered after the spine, block by block.
    pub fn caterpillar(blocks: &[usize]) -> Graph {
        let n = blocks.len();
        let mut e: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        let mut next = n;
        for (i, &m) in blocks.iter().enumerate() {
            for _ in 0..m {
                e.push((i, next));
                next += 1;
            }
        }
        Graph::new(next, e).expect("caterpillar")
    }

    /// Spider with body 0 and legs of the given lengths, numbered leg by leg.
    pub fn spider(legs: &[usize]) -> Graph {
        let mut e = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                e.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::new(next, e).expect("spider")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.p;
        let e = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Graph::new(self.p + other.p, e).expect("union of simple graphs")
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.p, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Adds a fresh vertex `p` joined to `v`.
    pub fn with_leaf(&self, v: usize) -> Result<Graph> {
        if v >= self.p {
            return Err(Error::VertexOutOfRange(v));
        }
        Graph::new(self.p + 1, self.edges.iter().copied().chain([(v, self.p)]))
    }

    /// Deletes vertex `v`; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.p {
            return Err(Error::VertexOutOfRange(v));
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        Graph::new(
            self.p - 1,
            self.edges
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (shift(a), shift(b))),
        )
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.p).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn classify_tree(&self) -> TreeShape {
        classify(self)
    }

    /// Splits `v` into `v'` (keeps index `v`, neighbours `part`) and `v''`
    /// (new index `p`, the remaining neighbours). Edge indices are preserved.
    pub fn vertex_split(&self, v: usize, part: &[usize]) -> Result<Graph> {
        if v >= self.p {
            return Err(Error::VertexOutOfRange(v));
        }
        let keep: BTreeSet<usize> = part.iter().copied().collect();
        if keep.is_empty() || keep.len() >= self.degree(v) {
            return Err(Error::BadPartition);
        }
        if keep.iter().any(|&u| !self.has_edge(u, v)) {
            return Err(Error::BadPartition);
        }
        let fresh = self.p;
        let edges = self.edges.iter().map(|&(a, b)| {
            if a == v && !keep.contains(&b) {
                (b, fresh)
            } else if b == v && !keep.contains(&a) {
                (a, fresh)
            } else {
                (a, b)
            }
        });
        Graph::new(self.p + 1, edges)
    }

    /// Identifies non-adjacent `u` and `v` into `min(u, v)`; the larger index
    /// is removed and later vertices shift down. Parallel edges collapse.
    pub fn vertex_identify(&self, u: usize, v: usize) -> Result<Graph> {
        self.vertex_identify_map(u, v).map(|(g, _)| g)
    }

    /// As [`Graph::vertex_identify`], also returning the old-to-new vertex map.
    pub fn vertex_identify_map(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        if u >= self.p {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= self.p {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::Invalid("cannot identify a vertex with itself".into()));
        }
        if self.has_edge(u, v) {
            return Err(Error::Adjacent(u, v));
        }
        let (w, r) = (u.min(v), u.max(v));
        let map: Vec<usize> = (0..self.p)
            .map(|x| match x.cmp(&r) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => w,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            let e = (map[a].min(map[b]), map[a].max(map[b]));
            if seen.insert(e) {
                edges.push(e);
            }
        }
        Ok((Graph::new(self.p - 1, edges)?, map))
    }

    /// Repeated vertex splits turning a connected graph into a tree on `q + 1`
    /// vertices. Returns the tree and, for each of its vertices, the vertex of
    /// `self` it came from.
    pub fn split_to_tree(&self) -> Result<(Graph, Vec<usize>)> {
        if !self.connected || self.p == 0 {
            return Err(Error::Disconnected);
        }
        let mut in_tree = vec![false; self.q()];
        let mut seen = vec![false; self.p];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &(u, e) in self.incident(v) {
                if !seen[u] {
                    seen[u] = true;
                    in_tree[e] = true;
                    queue.push_back(u);
                }
            }
        }
        let mut g = self.clone();
        let mut origin: Vec<usize> = (0..self.p).collect();
        for e in 0..self.q() {
            if in_tree[e] {
                continue;
            }
            let (a, b) = g.edge(e);
            g = g.vertex_split(b, &[a])?;
            // vertex_split kept `a` on index b; the remaining neighbours moved
            // to the new vertex, so swap roles back: the new vertex must hold
            // only `a`.
            let fresh = g.p - 1;
            g = swap_vertices(&g, b, fresh);
            origin.push(origin[b]);
        }
        debug_assert!(g.is_tree());
        Ok((g, origin))
    }
}

/// Renames vertex `a` to `b` and vice versa, keeping edge indices.
fn swap_vertices(g: &Graph, a: usize, b: usize) -> Graph {
    let sw = |x: usize| {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    Graph::new(g.p, g.edges.iter().map(|&(x, y)| (sw(x), sw(y)))).expect("relabelled graph")
}

fn classify(g: &Graph) -> TreeShape {
    let mut shape = TreeShape {
        tag: TreeTag::NotTree,
        spine: None,
        leaves: None,
        center: None,
        legs: None,
        caterpillar: false,
        lobster: false,
    };
    if !g.is_tree() {
        return shape;
    }
    let p = g.p();
    let body: Vec<usize> = (0..p).filter(|&v| g.degree(v) >= 2).collect();
    let caterpillar = caterpillar_spine(g);
    shape.caterpillar = caterpillar.is_some();
    shape.lobster = shape.caterpillar || is_lobster(g);
    if let Some((spine, leaves)) = caterpillar {
        shape.spine = Some(spine);
        shape.leaves = Some(leaves);
    }
    let high: Vec<usize> = (0..p).filter(|&v| g.degree(v) >= 3).collect();
    if high.len() == 1 {
        let c = high[0];
        shape.center = Some(c);
        shape.legs = Some(
            g.neighbors(c)
                .map(|start| {
                    let mut leg = vec![start];
                    let (mut prev, mut cur) = (c, start);
                    while g.degree(cur) == 2 {
                        let next = g.neighbors(cur).find(|&u| u != prev).unwrap();
                        leg.push(next);
                        prev = cur;
                        cur = next;
                    }
                    leg
                })
                .collect(),
        );
    }
    shape.tag = if g.max_degree() <= 2 {
        TreeTag::Path
    } else if body.len() == 1 {
        TreeTag::Star
    } else if body.len() == 2 {
        TreeTag::BiStar
    } else if shape.caterpillar {
        TreeTag::Caterpillar
    } else if high.len() == 1 {
        TreeTag::Spider
    } else if shape.lobster {
        TreeTag::Lobster
    } else {
        TreeTag::GenericTree
    };
    shape
}

/// Vertices surviving the deletion of all leaves, as an induced subgraph.
fn strip_leaves(g: &Graph) -> (Graph, Vec<usize>) {
    let keep: Vec<usize> = (0..g.p()).filter(|&v| g.degree(v) >= 2).collect();
    let mut index = HashMap::new();
    for (i, &v) in keep.iter().enumerate() {
        index.insert(v, i);
    }
    let edges = g
        .edges()
        .iter()
        .filter_map(|(a, b)| Some((*index.get(a)?, *index.get(b)?)));
    (Graph::new(keep.len(), edges).expect("induced subgraph"), keep)
}

fn caterpillar_spine(g: &Graph) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let p = g.p();
    if p == 1 {
        return Some((vec![0], vec![vec![]]));
    }
    if p == 2 {
        return Some((vec![0], vec![vec![1]]));
    }
    let (body, keep) = strip_leaves(g);
    if body.max_degree() > 2 || !body.is_connected() {
        return None;
    }
    let start = (0..body.p()).find(|&v| body.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = body.neighbors(cur).find(|&u| u != prev);
        match next {
            Some(n) if order.len() < body.p() => {
                order.push(n);
                prev = cur;
                cur = n;
            }
            _ => break,
        }
    }
    let spine: Vec<usize> = order.iter().map(|&i| keep[i]).collect();
    let leaves = spine
        .iter()
        .map(|&u| g.neighbors(u).filter(|&w| g.degree(w) == 1).collect())
        .collect();
    Some((spine, leaves))
}

fn is_lobster(g: &Graph) -> bool {
    let (body, _) = strip_leaves(g);
    body.p() == 0 || (body.is_tree() && caterpillar_spine(&body).is_some())
}
