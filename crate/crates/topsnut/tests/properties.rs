use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;
use topsnut::encode::{self, ColumnOrder};
use topsnut::extremal::{brute_force_extremal, caterpillar_min_sum, evaluate, Direction, Image, Objective};
use topsnut::graph::catalog::caterpillars_up_to;
use topsnut::graph::Graph;
use topsnut::groups::{encrypt_network, group_op, GraphicGroup, ShiftDomain};
use topsnut::labelling::{dual_labelling, Domain, Label, LabelledGraph, Labelling};
use topsnut::matching::compose;
use topsnut::search::SearchBudget;

fn tree_from(parents: &[usize]) -> Graph {
    Graph::new(parents.len() + 1, parents.iter().enumerate().map(|(i, &r)| (r % (i + 1), i + 1))).unwrap()
}

fn arb_tree(max: usize) -> impl Strategy<Value = Graph> {
    (1..max).prop_flat_map(|n| prop::collection::vec(any::<usize>(), n)).prop_map(|ps| tree_from(&ps))
}

/// A spanning tree plus any extra edges picked by `mask`.
fn arb_connected(max: usize) -> impl Strategy<Value = Graph> {
    (arb_tree(max), any::<u64>()).prop_map(|(t, mask)| {
        let mut edges: BTreeSet<(usize, usize)> = t.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut bit = 0;
        for u in 0..t.p() {
            for v in u + 1..t.p() {
                if mask >> (bit % 64) & 1 == 1 {
                    edges.insert((u, v));
                }
                bit += 1;
            }
        }
        Graph::new(t.p(), edges).unwrap()
    })
}

/// Injective vertex labels drawn from `[0, q]`.
fn arb_injection(g: Graph) -> impl Strategy<Value = (Graph, Vec<Label>)> {
    let p = g.p();
    let slots: Vec<Label> = (0..=g.q() as Label).collect();
    subsequence(slots, p)
        .prop_shuffle()
        .prop_map(move |v| (g.clone(), v))
}

fn labelled_edges(lg: &LabelledGraph) -> Vec<(Label, Label, Label)> {
    let v = lg.labelling.vertex_labels().unwrap();
    let e = lg.labelling.edge_labels().unwrap();
    let mut out: Vec<_> = lg
        .graph
        .edges()
        .iter()
        .zip(e)
        .map(|(&(a, b), w)| (v[a].min(v[b]), w, v[a].max(v[b])))
        .collect();
    out.sort();
    out
}

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
}

fn min_sum(g: &Graph, image: Image) -> Label {
    brute_force_extremal(g, Objective::DifferenceSum, Direction::Min, image, &SearchBudget::default())
        .unwrap()
        .value
}

fn max_sum(g: &Graph) -> Label {
    brute_force_extremal(g, Objective::DifferenceSum, Direction::Max, Image::Full, &SearchBudget::default())
        .unwrap()
        .value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn difference_sum_is_dual_invariant((g, v) in arb_connected(8).prop_flat_map(arb_injection)) {
        let f = Labelling::from_vertices(&v, g.q());
        let d = dual_labelling(&f, Domain::Vertices).unwrap();
        prop_assert_eq!(
            evaluate(&g, &f, Objective::DifferenceSum).unwrap(),
            evaluate(&g, &d, Objective::DifferenceSum).unwrap()
        );
    }

    #[test]
    fn minimum_is_additive_over_components(a in arb_tree(5), b in arb_tree(5)) {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(min_sum(&u, Image::Compact), min_sum(&a, Image::Full) + min_sum(&b, Image::Full));
    }

    #[test]
    fn adding_an_edge_never_lowers_the_maximum(g in arb_connected(6), pick in any::<usize>()) {
        let missing: Vec<(usize, usize)> = (0..g.p())
            .flat_map(|u| (u + 1..g.p()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty() && g.q() < 9);
        let (u, v) = missing[pick % missing.len()];
        prop_assert!(max_sum(&g) <= max_sum(&g.with_edge(u, v).unwrap()));
    }

    #[test]
    fn compose_then_decompose_returns_the_parts(g in arb_connected(7), cuts in prop::collection::vec(0usize..3, 21), labels in Just((0..7).map(|i| 3 * i as Label + 1).collect::<Vec<_>>()).prop_shuffle()) {
        let mut groups: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 3];
        for (i, &e) in g.edges().iter().enumerate() {
            groups[cuts[i % cuts.len()]].push(e);
        }
        let parts: Vec<LabelledGraph> = groups
            .iter()
            .filter(|es| !es.is_empty())
            .map(|es| {
                let vs: Vec<usize> = es.iter().flat_map(|&(a, b)| [a, b]).collect::<BTreeSet<_>>().into_iter().collect();
                let at = |x: usize| vs.iter().position(|&y| y == x).unwrap();
                let h = Graph::new(vs.len(), es.iter().map(|&(a, b)| (at(a), at(b)))).unwrap();
                let q = h.q();
                LabelledGraph::new(h, Labelling::from_vertices(&vs.iter().map(|&x| labels[x]).collect::<Vec<_>>(), q))
            })
            .collect();
        let m = compose(&parts, false).unwrap();
        let back = m.decompose();
        for (part, got) in parts.iter().zip(&back) {
            let v = part.labelling.vertex_labels().unwrap();
            let want: BTreeSet<(Label, Label)> = part.graph.edges().iter().map(|&(a, b)| (v[a].min(v[b]), v[a].max(v[b]))).collect();
            prop_assert_eq!(&want, got);
        }
        prop_assert_eq!(parts.iter().map(|p| p.graph.q()).sum::<usize>(), m.universal.graph.q());
        prop_assert!(m.degrees_add_up());
    }

    #[test]
    fn encryption_is_shift_equivariant(g in arb_connected(7), n in 1usize..25, raw in prop::collection::vec(any::<usize>(), 7), zero in any::<usize>(), c in any::<usize>()) {
        let a: Vec<usize> = raw[..g.p()].iter().map(|x| x % n).collect();
        let (z, c) = (zero % n, c % n);
        let plain = encrypt_network(&g, n, &a, z).unwrap();
        let shifted: Vec<usize> = a.iter().map(|x| (x + c) % n).collect();
        let moved = encrypt_network(&g, n, &shifted, (z + c) % n).unwrap();
        let bump = |xs: &[Option<Label>]| xs.iter().map(|x| x.map(|x| (x + c as Label) % n as Label)).collect::<Vec<_>>();
        prop_assert_eq!(bump(&plain.labelling.vertices), moved.labelling.vertices);
        prop_assert_eq!(bump(&plain.labelling.edges), moved.labelling.edges);
    }

    #[test]
    fn json_round_trip(g in arb_connected(8), seed in prop::collection::vec(prop::option::of(0i64..40), 36)) {
        let v: Vec<Option<Label>> = seed[..g.p()].iter().map(|x| x.map(|x| x as Label)).collect();
        let e: Vec<Option<Label>> = seed.iter().rev().take(g.q()).map(|x| x.map(|x| x as Label)).collect();
        let lg = LabelledGraph::new(g, Labelling { vertices: v, edges: e });
        let text = encode::serialize(&lg);
        let back = encode::deserialize(&text).unwrap();
        prop_assert_eq!(&back, &lg);
        prop_assert_eq!(encode::serialize(&back), text);
    }

    #[test]
    fn matrix_determines_labelled_edges(
        (g, v) in arb_connected(7).prop_flat_map(arb_injection),
        w in prop::collection::vec(0i64..6, 21),
        perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle(),
        mutate in any::<Option<usize>>(),
    ) {
        let q = g.q();
        let lg = LabelledGraph::new(g.clone(), Labelling::total(&v, &w[..q]));
        // same labelled graph on renamed vertices, edges listed in another order
        let p = g.p();
        let perm: Vec<usize> = perm.into_iter().filter(|&x| x < p).collect();
        let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let mut ew: Vec<Label> = w[..q].to_vec();
        edges.reverse();
        ew.reverse();
        if let Some(i) = mutate {
            ew[i % q] += 1;
        }
        let mut pv = vec![0; p];
        for (x, &y) in perm.iter().enumerate() {
            pv[y] = v[x];
        }
        let other = LabelledGraph::new(Graph::new(p, edges).unwrap(), Labelling::total(&pv, &ew));
        let same_matrix = encode::to_matrix(&lg, ColumnOrder::ByEdgeLabel).unwrap()
            == encode::to_matrix(&other, ColumnOrder::ByEdgeLabel).unwrap();
        prop_assert_eq!(same_matrix, labelled_edges(&lg) == labelled_edges(&other));
        prop_assert_eq!(same_matrix, mutate.is_none());
    }

    #[test]
    fn split_to_tree_gives_a_spanning_tree_of_the_edges(g in arb_connected(8)) {
        let (t, origin) = g.split_to_tree().unwrap();
        prop_assert_eq!(t.p(), g.q() + 1);
        prop_assert_eq!(t.q(), g.q());
        prop_assert!(t.is_tree());
        let image: BTreeSet<(usize, usize)> = t
            .edges()
            .iter()
            .map(|&(a, b)| (origin[a].min(origin[b]), origin[a].max(origin[b])))
            .collect();
        prop_assert_eq!(image, edge_set(&g));
    }

    #[test]
    fn identify_then_split_is_identity(g in arb_connected(8), pick in any::<usize>()) {
        let last = g.p() - 1;
        let nv: BTreeSet<usize> = g.neighbors(last).collect();
        let candidates: Vec<usize> = (0..last)
            .filter(|&u| !g.has_edge(u, last) && g.degree(u) > 0 && g.neighbors(u).all(|x| !nv.contains(&x)))
            .collect();
        prop_assume!(!candidates.is_empty());
        let u = candidates[pick % candidates.len()];
        let keep: Vec<usize> = g.neighbors(u).collect();
        let back = g.vertex_identify(u, last).unwrap().vertex_split(u, &keep).unwrap();
        prop_assert_eq!(edge_set(&back), edge_set(&g));
    }
}

#[test]
fn every_zero_gives_an_isomorphism_onto_the_integers_mod_n() {
    for n in 1..=24 {
        for k in 0..n {
            let phi = |i: usize| (i + n - k) % n;
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(phi(group_op(i, j, k, n).unwrap()), (phi(i) + phi(j)) % n, "n={n} zero={k} {i}+{j}");
                }
            }
        }
    }
}

#[test]
fn group_elements_are_shifts_of_the_base() {
    let base = LabelledGraph::new(Graph::path(4), Labelling::total(&[0, 3, 1, 2], &[3, 2, 1]));
    for n in 1..=24 {
        let gp = GraphicGroup::new(base.clone(), n, ShiftDomain::VerticesAndEdges).unwrap();
        for i in 0..n {
            let f = gp.element(i).unwrap();
            let shift = |xs: &[Option<Label>], ys: &[Option<Label>]| {
                xs.iter().zip(ys).all(|(x, y)| (x.unwrap() + i as Label) % n as Label == y.unwrap())
            };
            assert!(shift(&base.labelling.vertices, &f.vertices));
            assert!(shift(&base.labelling.edges, &f.edges));
        }
    }
}

// The flat +3 bound breaks at high-degree spine vertices; a leaf at a vertex
// of degree d can cost up to ceil((d + 1) / 2).
#[test]
fn caterpillar_minimum_under_leaf_growth() {
    for t in caterpillars_up_to(7) {
        let before = caterpillar_min_sum(&t).unwrap().value;
        for v in 0..t.p() {
            let grown = t.with_leaf(v).unwrap();
            if !grown.classify_tree().caterpillar {
                continue;
            }
            let after = caterpillar_min_sum(&grown).unwrap().value;
            assert_eq!(after, min_sum(&grown, Image::Full));
            let allowance = 3.max((t.degree(v) as Label + 2) / 2);
            assert!(before <= after && after <= before + allowance, "{:?} + leaf at {v}: {before} -> {after}", t.edges());
        }
    }
}

#[test]
fn star_leaf_growth_exceeds_three() {
    let before = caterpillar_min_sum(&Graph::star(6)).unwrap().value;
    let after = caterpillar_min_sum(&Graph::star(7)).unwrap().value;
    assert_eq!((before, after), (12, 16));
}

// Components may interleave their labels, so the maximum is not additive.
#[test]
fn maximum_is_not_additive_over_components() {
    let k2 = Graph::path(2);
    let two = k2.disjoint_union(&k2);
    let joint = brute_force_extremal(&two, Objective::DifferenceSum, Direction::Max, Image::Compact, &SearchBudget::default())
        .unwrap()
        .value;
    assert_eq!((max_sum(&k2), joint), (1, 4));
}
