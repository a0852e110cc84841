use std::collections::BTreeSet;

use super::util::{
    every_has_partner, interval, matched, odd_interval, outside, pairing, repeat, repeat_count,
    same_multiset, set_ordered, sorted,
};
use super::{clause, six_c, twin, Clause, Ctx, Kind, Verdict};
use crate::graph::Graph;
use crate::labelling::{EdgeRule, Label, Labelling};

pub(super) fn clauses(g: &Graph, kind: &Kind) -> Vec<Clause> {
    let p = g.p() as Label;
    let q = g.q() as Label;
    let rule = kind.edge_rule(g.q());
    let induced = || edges_follow(rule.expect("vertex kind has a rule"));
    match kind {
        Kind::Graceful | Kind::SetOrderedGraceful => {
            let mut c = vec![
                v_distinct(),
                v_within(0, q),
                induced(),
                e_exactly(format!("edge labels are [1,{q}]"), interval(1, q)),
            ];
            if kind.is_set_ordered() {
                c.push(set_ordered_clause());
            }
            c
        }
        Kind::OddGraceful | Kind::SetOrderedOddGraceful => {
            let mut c = vec![
                v_distinct(),
                v_within(0, 2 * q - 1),
                induced(),
                e_exactly(format!("edge labels are [1,{}]^o", 2 * q - 1), odd_interval(2 * q - 1)),
            ];
            if kind.is_set_ordered() {
                c.push(set_ordered_clause());
            }
            c
        }
        Kind::PanOddGraceful => vec![v_distinct(), v_within(0, 2 * q), pan_odd_edges()],
        Kind::KSequentialOddGraceful(k) => vec![
            v_distinct(),
            v_within(*k, 2 * q - 1 + k),
            induced(),
            e_exactly(format!("edge labels are [1,{}]^o", 2 * q - 1), odd_interval(2 * q - 1)),
        ],
        Kind::OddElegant | Kind::SetOrderedOddElegant => {
            let mut c = vec![
                v_distinct(),
                v_within(0, 2 * q - 1),
                induced(),
                e_exactly(format!("edge sums mod {} are [1,{}]^o", 2 * q, 2 * q - 1), odd_interval(2 * q - 1)),
            ];
            if kind.is_set_ordered() {
                c.push(set_ordered_clause());
            }
            c
        }
        Kind::Felicitous => vec![v_distinct(), v_within(0, q), induced(), e_distinct()],
        Kind::Harmonious => vec![
            harmonious_repeats(g.is_tree()),
            v_within(0, q - 1),
            induced(),
            e_exactly(format!("edge sums mod {q} are [0,{}]", q - 1), interval(0, q - 1)),
        ],
        Kind::EdgeMagicTotal => vec![total_onto(1, p + q), magic_sum()],
        Kind::SuperEdgeMagicTotal => vec![total_onto(1, p + q), v_onto(1, p), magic_sum()],
        Kind::PanEdgeMagicTotal => vec![v_distinct(), e_distinct(), magic_sum()],
        Kind::EdgeAntimagicTotal => vec![total_onto(1, p + q), antimagic_progression()],
        Kind::EdgeMagicGraceful => vec![total_onto(1, p + q), graceful_magic()],
        Kind::SuperEdgeMagicGraceful => vec![total_onto(1, p + q), v_onto(1, p), graceful_magic()],
        Kind::RelaxedEmt => vec![
            total_onto(1, p + q),
            magic_sum(),
            ee_difference("edge labels are differences of edges", |c, d, _| c == d),
        ],
        Kind::Oemm => vec![
            v_distinct(),
            v_within(0, 2 * q - 1),
            e_exactly(format!("edge labels are [1,{}]^o", 2 * q - 1), odd_interval(2 * q - 1)),
            magic_sum(),
        ],
        Kind::Eedoemm => vec![
            v_distinct(),
            v_within(0, 2 * q - 1),
            e_exactly(format!("edge labels are [1,{}]^o", 2 * q - 1), odd_interval(2 * q - 1)),
            ee_difference("ee-difference", |c, d, _| c == d),
            ee_balanced(None, Slot::K1),
            e_magic(),
        ],
        Kind::SixC | Kind::OddEvenSeparableSixC => six_c::clauses(kind),
        Kind::Dgemm => vec![
            v_distinct(),
            v_within(0, p - 1),
            e_within(1, q),
            ee_difference("ee-difference", |c, d, p| c == d || c == p - d),
            ee_balanced(None, Slot::K2),
            e_magic(),
            ve_matching(Singular::Label(0), Slot::K1),
        ],
        Kind::VeExchangedOf(f) => ve_exchanged(f),
        Kind::Tog(..) | Kind::Toe(_) | Kind::Sotoe(_) | Kind::TwoOddTwo(_) => twin::clauses(g, kind),
    }
}

pub(super) fn v_distinct() -> Clause {
    clause("vertex labels distinct", |c: &mut Ctx| match repeat(&c.v) {
        None => Verdict::yes(),
        Some((a, b)) => Verdict::no(format!("vertices {a} and {b} share {}", c.v[a])),
    })
}

pub(super) fn v_within(lo: Label, hi: Label) -> Clause {
    clause(format!("vertex labels within [{lo},{hi}]"), move |c: &mut Ctx| {
        match outside(&c.v, lo, hi) {
            None => Verdict::yes(),
            Some(x) => Verdict::no(format!("label {x}")),
        }
    })
}

fn e_within(lo: Label, hi: Label) -> Clause {
    clause(format!("edge labels within [{lo},{hi}]"), move |c: &mut Ctx| {
        match outside(&c.e, lo, hi) {
            None => Verdict::yes(),
            Some(x) => Verdict::no(format!("label {x}")),
        }
    })
}

fn v_onto(lo: Label, hi: Label) -> Clause {
    clause(format!("vertex labels are [{lo},{hi}]"), move |c: &mut Ctx| {
        let want = interval(lo, hi);
        Verdict::check(same_multiset(&c.v, &want), || format!("got {:?}", sorted(&c.v)))
    })
}

fn e_distinct() -> Clause {
    clause("edge labels distinct", |c: &mut Ctx| match repeat(&c.e) {
        None => Verdict::yes(),
        Some((a, b)) => Verdict::no(format!("edges {a} and {b} share {}", c.e[a])),
    })
}

fn e_exactly(name: String, want: Vec<Label>) -> Clause {
    clause(name, move |c: &mut Ctx| {
        Verdict::check(same_multiset(&c.e, &want), || format!("got {:?}", sorted(&c.e)))
    })
}

fn edges_follow(rule: EdgeRule) -> Clause {
    clause("edge labels induced by the vertex labels", move |c: &mut Ctx| {
        if !c.edges_given {
            return Verdict::yes();
        }
        let q = c.g.q();
        for (i, &(a, b)) in c.g.edges().iter().enumerate() {
            if rule.apply(c.v[a], c.v[b], q) != Some(c.e[i]) {
                return Verdict::no(format!("edge {a}-{b}"));
            }
        }
        Verdict::yes()
    })
}

pub(super) fn total_onto(lo: Label, hi: Label) -> Clause {
    clause(format!("labels of V and E are exactly [{lo},{hi}]"), move |c: &mut Ctx| {
        let mut all = c.v.clone();
        all.extend_from_slice(&c.e);
        all.sort_unstable();
        let ok = all.len() as Label == hi - lo + 1 && all.iter().zip(lo..).all(|(&x, y)| x == y);
        Verdict::check(ok, || match repeat(&all) {
            Some((a, _)) => format!("{} repeats", all[a]),
            None => "labels leave the interval".into(),
        })
    })
}

pub(super) fn set_ordered_clause() -> Clause {
    clause("set-ordered", |c: &mut Ctx| {
        Verdict::check(set_ordered(c.g, &c.v), || "f_max(X) < f_min(Y) fails both ways".into())
    })
}

fn harmonious_repeats(tree: bool) -> Clause {
    let name = if tree {
        "vertex labels distinct but for one pair"
    } else {
        "vertex labels distinct"
    };
    clause(name, move |c: &mut Ctx| {
        let r = repeat_count(&c.v);
        let allowed = usize::from(tree);
        Verdict::check(r <= allowed, || format!("{r} repeated labels"))
    })
}

fn pan_odd_edges() -> Clause {
    clause(
        "edge labels d or 2q-1-d realise the odd set",
        |c: &mut Ctx| {
            let q = c.q;
            let want = odd_interval(2 * q - 1);
            let d = c.diffs();
            if c.edges_given {
                let ok_rule = d.iter().zip(&c.e).all(|(&d, &x)| x == d || x == 2 * q - 1 - d);
                if !ok_rule {
                    return Verdict::no("an edge label is neither d nor 2q-1-d");
                }
                return Verdict::check(same_multiset(&c.e, &want), || format!("got {:?}", sorted(&c.e)));
            }
            let fits = |e: usize, x: Label| d[e] == x || 2 * q - 1 - d[e] == x;
            let ok = super::util::perfect_matching(d.len(), want.len(), |i, j| fits(i, want[j])).is_some()
                && d.len() == want.len();
            Verdict::check(ok, || "no choice of edge rule realises the odd set".into())
        },
    )
}

fn magic_sum() -> Clause {
    clause("constant f(u)+f(uv)+f(v)", |c: &mut Ctx| {
        let mut k = None;
        for e in 0..c.g.q() {
            let s = c.sum(e) + c.e[e];
            match k {
                None => k = Some(s),
                Some(k0) if k0 != s => return Verdict::no(format!("sums {k0} and {s}")),
                _ => {}
            }
        }
        c.k = k;
        Verdict::yes_with(k.map_or("no edges".into(), |k| format!("k={k}")))
    })
}

fn graceful_magic() -> Clause {
    clause("constant |f(u)+f(v)-f(uv)|", |c: &mut Ctx| {
        let vals: BTreeSet<Label> = (0..c.g.q()).map(|e| (c.sum(e) - c.e[e]).abs()).collect();
        if vals.len() > 1 {
            return Verdict::no(format!("values {vals:?}"));
        }
        c.k = vals.first().copied();
        Verdict::yes_with(c.k.map_or("no edges".into(), |k| format!("k={k}")))
    })
}

/// `f(uv) + |f(u) - f(v)| = k`
pub(super) fn e_magic() -> Clause {
    clause("e-magic", |c: &mut Ctx| {
        let vals: BTreeSet<Label> = (0..c.g.q()).map(|e| c.e[e] + c.diff(e)).collect();
        if vals.len() > 1 {
            return Verdict::no(format!("values {vals:?}"));
        }
        c.k = vals.first().copied();
        Verdict::yes_with(c.k.map_or("no edges".into(), |k| format!("k={k}")))
    })
}

fn antimagic_progression() -> Clause {
    clause("edge sums form an arithmetic progression", |c: &mut Ctx| {
        let s = sorted(&(0..c.g.q()).map(|e| c.sum(e) + c.e[e]).collect::<Vec<_>>());
        if s.is_empty() {
            return Verdict::yes();
        }
        let a = s[0];
        let d = if s.len() > 1 { s[1] - s[0] } else { 0 };
        let ok = (s.len() == 1 || d > 0) && s.iter().zip(0..).all(|(&x, i)| x == a + i * d);
        c.k = Some(a);
        c.k1 = Some(d);
        Verdict::check(ok, || format!("sums {s:?}")).with_witness(format!("a={a}, d={d}"))
    })
}

impl Verdict {
    fn with_witness(mut self, w: String) -> Verdict {
        if self.pass {
            self.witness = Some(w);
        }
        self
    }
}

/// Each edge label is related to the end difference of a partner edge; the
/// relation gets `(label, difference, p)`.
pub(super) fn ee_difference(
    name: &str,
    rel: impl Fn(Label, Label, Label) -> bool + Send + Sync + 'static,
) -> Clause {
    clause(name, move |c: &mut Ctx| {
        let d = c.diffs();
        let p = c.p;
        let ok = matched(&c.e, &d, !c.opts.existential, |x, y| rel(x, y, p));
        Verdict::check(ok, || "some edge label has no partner difference".into())
    })
}

#[derive(Clone, Copy)]
pub(super) enum Slot {
    K1,
    K2,
}

impl Slot {
    pub fn put(self, c: &mut Ctx, x: Option<Label>) {
        match self {
            Slot::K1 => c.k1 = x,
            Slot::K2 => c.k2 = x,
        }
    }
}

/// `s(uv) = |f(u)-f(v)| - f(uv)` paired to a constant; `alt` admits pairs
/// whose sum plus `alt` hits the constant.
pub(super) fn ee_balanced(alt: Option<Label>, slot: Slot) -> Clause {
    clause("ee-balanced", move |c: &mut Ctx| {
        let s: Vec<Label> = (0..c.g.q()).map(|e| c.diff(e) - c.e[e]).collect();
        if s.is_empty() {
            return Verdict::yes();
        }
        let alt = alt.map(|a| a * (c.p + c.q));
        let mut cands: Vec<Label> = s.iter().map(|&x| s[0] + x).collect();
        if let Some(a) = alt {
            cands.extend(s.iter().map(|&x| s[0] + x + a));
        }
        cands.sort_unstable();
        cands.dedup();
        let bij = !c.opts.existential;
        for k in cands {
            let ok = |a: Label, b: Label| a + b == k || alt.is_some_and(|m| a + b + m == k);
            let found = if bij { pairing(&s, ok) } else { every_has_partner(&s, ok) };
            if found {
                slot.put(c, Some(k));
                return Verdict::yes_with(format!("k'={k}"));
            }
        }
        Verdict::no(format!("s values {:?}", sorted(&s)))
    })
}

#[derive(Clone, Copy)]
pub(super) enum Singular {
    Label(Label),
    /// `floor((p+q+1)/2)`
    Half,
    Any,
}

/// Edges matched with vertices to a constant sum, one singular vertex left out.
pub(super) fn ve_matching(singular: Singular, slot: Slot) -> Clause {
    clause("ve-matching", move |c: &mut Ctx| {
        let target = match singular {
            Singular::Label(x) => Some(x),
            Singular::Half => Some((c.p + c.q + 1) / 2),
            Singular::Any => None,
        };
        let bij = !c.opts.existential;
        for x0 in 0..c.v.len() {
            if target.is_some_and(|t| c.v[x0] != t) {
                continue;
            }
            let rest: Vec<Label> = c.v.iter().enumerate().filter(|&(i, _)| i != x0).map(|(_, &x)| x).collect();
            if let Some(k) = ve_constant(&rest, &c.e, bij) {
                slot.put(c, Some(k));
                c.singularity = Some(c.v[x0]);
                return Verdict::yes_with(format!("k={k}, singularity {}", c.v[x0]));
            }
        }
        Verdict::no(match target {
            Some(t) if !c.v.contains(&t) => format!("no vertex carries the singular label {t}"),
            _ => "no constant pairs edges with vertices".into(),
        })
    })
}

fn ve_constant(rest: &[Label], e: &[Label], bijective: bool) -> Option<Label> {
    if e.is_empty() {
        return rest.is_empty().then_some(0);
    }
    if bijective {
        if rest.len() != e.len() {
            return None;
        }
        let k = rest.iter().min()? + e.iter().max()?;
        let mut comp: Vec<Label> = rest.iter().map(|&x| k - x).collect();
        comp.sort_unstable();
        return (comp == sorted(e)).then_some(k);
    }
    let mut cands: Vec<Label> = rest.iter().map(|&w| e[0] + w).collect();
    cands.sort_unstable();
    cands.dedup();
    cands.into_iter().find(|&k| {
        e.iter().all(|&x| rest.contains(&(k - x))) && rest.iter().all(|&w| e.contains(&(k - w)))
    })
}

fn ve_exchanged(f: &Labelling) -> Vec<Clause> {
    let fv: BTreeSet<Label> = f.vertex_set();
    let fe: BTreeSet<Label> = f.edge_set();
    let p = f.vertices.len() as Label;
    let q = f.edges.len() as Label;
    let a0 = (p + q + 1) / 2;
    let fv_minus: BTreeSet<Label> = fv.iter().copied().filter(|&x| x != a0).collect();
    vec![
        total_onto(1, p + q),
        clause("edge rule", |c: &mut Ctx| {
            let rules: [(&str, &dyn Fn(&Ctx, usize) -> Option<Label>); 5] = [
                ("h(uv)=|h(u)-h(v)|", &|c, e| Some(c.e[e] - c.diff(e)).filter(|&x| x == 0)),
                ("h(uv)=|h(u)-h(v)|=k", &|c, e| (c.e[e] == c.diff(e)).then_some(c.e[e])),
                ("h(uv)=h(u)+h(v) mod q", &|c, e| {
                    (c.e[e] == c.sum(e).rem_euclid(c.q.max(1))).then_some(0)
                }),
                ("|h(u)+h(v)-h(uv)|=k", &|c, e| Some((c.sum(e) - c.e[e]).abs())),
                ("h(u)+h(uv)+h(v)=k", &|c, e| Some(c.sum(e) + c.e[e])),
            ];
            for (name, r) in rules {
                let vals: Option<BTreeSet<Label>> = (0..c.g.q()).map(|e| r(c, e)).collect();
                if vals.is_some_and(|s| s.len() <= 1) {
                    return Verdict::yes_with(name);
                }
            }
            Verdict::no("no listed rule holds on every edge")
        }),
        clause(format!("h(V) minus {a0} equals f(E)"), move |c: &mut Ctx| {
            let hv: BTreeSet<Label> = c.v.iter().copied().filter(|&x| x != a0).collect();
            c.singularity = Some(a0);
            Verdict::check(hv == fe, || format!("h(V)\\a0 = {hv:?}"))
        }),
        clause(format!("h(E) equals f(V) minus {a0}"), move |c: &mut Ctx| {
            let he: BTreeSet<Label> = c.e.iter().copied().collect();
            Verdict::check(he == fv_minus, || format!("h(E) = {he:?}"))
        }),
    ]
}
