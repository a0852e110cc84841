//! Difference-sum and felicitous-sum objectives over injective vertex
//! labellings into `[0, q]`, plus the band parameters of proper vertex
//! colorings.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, Labelling};
use crate::search::{chromatic_number, falling, SearchBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    DifferenceSum,
    /// Edge term `f(u) + f(v) mod (q + 1)`.
    FelicitousSum,
}

impl Objective {
    fn term(self, a: Label, b: Label, modulus: Label) -> Label {
        match self {
            Objective::DifferenceSum => (a - b).abs(),
            Objective::FelicitousSum => (a + b).rem_euclid(modulus),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Objective> {
        match s {
            "difference_sum" | "diff_sum" | "difference" | "sum" => Ok(Objective::DifferenceSum),
            "felicitous_sum" | "felicitous" => Ok(Objective::FelicitousSum),
            _ => Err(Error::Invalid(format!("unknown objective {s}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    fn better(self, a: Label, b: Label) -> bool {
        match self {
            Direction::Min => a < b,
            Direction::Max => a > b,
        }
    }

    fn holds(self, new: Label, old: Label) -> bool {
        match self {
            Direction::Min => new <= old,
            Direction::Max => new >= old,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Direction> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(Error::Invalid(format!("direction must be min or max, got {s}"))),
        }
    }
}

/// Label range searched: `[0, q]` per the definition, or `[0, p - 1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Image {
    #[default]
    Full,
    Compact,
}

impl Image {
    fn width(self, g: &Graph) -> usize {
        match self {
            Image::Full => g.q() + 1,
            Image::Compact => g.p(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    LocalSearch,
    ClosedForm,
    CaterpillarExact,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalResult {
    pub value: Label,
    pub labelling: Labelling,
    pub method: Method,
    /// Set only after a brute-force or closed-form check.
    pub optimal: bool,
}

/// Exact objective value of an injective labelling into `[0, q]`.
pub fn evaluate(g: &Graph, f: &Labelling, obj: Objective) -> Result<Label> {
    let v = f.vertex_labels()?;
    if v.len() != g.p() {
        return Err(Error::Invalid(format!("{} labels for {} vertices", v.len(), g.p())));
    }
    let q = g.q() as Label;
    if let Some(&x) = v.iter().find(|&&x| !(0..=q).contains(&x)) {
        return Err(Error::OutOfRange(format!("{x} not in [0, {q}]")));
    }
    if v.iter().collect::<BTreeSet<_>>().len() != v.len() {
        return Err(Error::NotInjective);
    }
    Ok(raw(g, &v, obj))
}

fn raw(g: &Graph, v: &[Label], obj: Objective) -> Label {
    let m = g.q() as Label + 1;
    g.edges().iter().map(|&(a, b)| obj.term(v[a], v[b], m)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    /// `K_{1,p-1}` on `p` vertices.
    Star(usize),
}

impl Family {
    pub fn graph(self) -> Graph {
        match self {
            Family::Complete(n) => Graph::complete(n),
            Family::Path(p) => Graph::path(p),
            Family::Star(p) => Graph::star(p.saturating_sub(1)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Path(p) => write!(f, "path({p})"),
            Family::Star(p) => write!(f, "star({p})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    /// Accepts `complete(4)`, `path(8)`, `star(5)`.
    fn from_str(s: &str) -> Result<Family> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let (name, rest) = s.trim().split_once('(').ok_or_else(unknown)?;
        let n: usize = rest.strip_suffix(')').ok_or_else(unknown)?.trim().parse().map_err(|_| unknown())?;
        match name.trim() {
            "complete" | "K" => Ok(Family::Complete(n)),
            "path" | "P" => Ok(Family::Path(n)),
            "star" => Ok(Family::Star(n)),
            _ => Err(unknown()),
        }
    }
}

/// Known extremal values of the difference sum. Only the complete graph
/// (where every labelling is optimal), the path minimum and the star minimum
/// have one.
pub fn closed_form(family: Family, bound: Direction) -> Result<Label> {
    let unknown = || Error::UnknownFamily(format!("{family} has no closed form for {bound:?}"));
    match family {
        Family::Complete(n) | Family::Path(n) | Family::Star(n) if n < 2 => {
            Err(Error::TooSmall(format!("{family}")))
        }
        Family::Complete(n) => {
            let n = n as Label;
            Ok((1..n).map(|i| (n - i + 1) * (n - i)).sum::<Label>() / 2)
        }
        Family::Path(p) if bound == Direction::Min => Ok(p as Label - 1),
        Family::Star(p) if bound == Direction::Min => Ok((p * p / 4) as Label),
        _ => Err(unknown()),
    }
}

struct Brute<'a> {
    g: &'a Graph,
    obj: Objective,
    dir: Direction,
    keep_all: bool,
    modulus: Label,
    v: Vec<Label>,
    used: Vec<bool>,
    best: Option<Label>,
    winners: Vec<Vec<Label>>,
}

impl Brute<'_> {
    fn walk(&mut self, i: usize, acc: Label) {
        if i == self.g.p() {
            match self.best {
                Some(b) if b == acc => {
                    if self.keep_all {
                        self.winners.push(self.v.clone());
                    }
                }
                Some(b) if !self.dir.better(acc, b) => {}
                _ => {
                    self.best = Some(acc);
                    self.winners.clear();
                    self.winners.push(self.v.clone());
                }
            }
            return;
        }
        for x in 0..self.used.len() {
            if self.used[x] {
                continue;
            }
            let x = x as Label;
            let add: Label = self
                .g
                .neighbors(i)
                .filter(|&u| u < i)
                .map(|u| self.obj.term(x, self.v[u], self.modulus))
                .sum();
            self.used[x as usize] = true;
            self.v[i] = x;
            self.walk(i + 1, acc + add);
            self.used[x as usize] = false;
        }
    }
}

/// Optimum over every injection `V -> [0, q]` together with all labellings
/// attaining it, in lexicographic order.
pub fn brute_force_optimizers(
    g: &Graph,
    obj: Objective,
    dir: Direction,
    image: Image,
    budget: &SearchBudget,
) -> Result<(Label, Vec<Labelling>)> {
    let (best, winners) = brute(g, obj, dir, image, budget, true)?;
    let q = g.q();
    Ok((best, winners.iter().map(|v| Labelling::from_vertices(v, q)).collect()))
}

/// Optimum over every injection `V -> [0, q]`; the witness is the
/// lexicographically least optimal labelling.
pub fn brute_force_extremal(
    g: &Graph,
    obj: Objective,
    dir: Direction,
    image: Image,
    budget: &SearchBudget,
) -> Result<ExtremalResult> {
    let (value, winners) = brute(g, obj, dir, image, budget, false)?;
    Ok(ExtremalResult {
        value,
        labelling: Labelling::from_vertices(&winners[0], g.q()),
        method: Method::Brute,
        optimal: true,
    })
}

fn brute(
    g: &Graph,
    obj: Objective,
    dir: Direction,
    image: Image,
    budget: &SearchBudget,
    keep_all: bool,
) -> Result<(Label, Vec<Vec<Label>>)> {
    let width = image.width(g);
    budget.check_candidates(falling(width, g.p()))?;
    if g.p() == 0 {
        return Ok((0, vec![Vec::new()]));
    }
    let runs: Vec<(Option<Label>, Vec<Vec<Label>>)> = (0..width)
        .into_par_iter()
        .map(|first| {
            let mut b = Brute {
                g,
                obj,
                dir,
                keep_all,
                modulus: g.q() as Label + 1,
                v: vec![0; g.p()],
                used: vec![false; width],
                best: None,
                winners: Vec::new(),
            };
            b.v[0] = first as Label;
            b.used[first] = true;
            b.walk(1, 0);
            (b.best, b.winners)
        })
        .collect();
    let mut best: Option<Label> = None;
    let mut winners = Vec::new();
    for (b, w) in runs {
        let Some(b) = b else { continue };
        match best {
            Some(x) if x == b => winners.extend(w),
            Some(x) if !dir.better(b, x) => {}
            _ => {
                best = Some(b);
                winners = w;
            }
        }
    }
    Ok((best.unwrap_or(0), winners))
}

const CERTIFY_LIMIT: u128 = 2_000_000;

fn certify_by_brute(g: &Graph, obj: Objective, dir: Direction, image: Image, value: Label) -> bool {
    if falling(image.width(g), g.p()) > CERTIFY_LIMIT {
        return false;
    }
    brute_force_extremal(g, obj, dir, image, &SearchBudget::default()).is_ok_and(|r| r.value == value)
}

/// Neighbour sums of `x` at label `to` and at its current label.
fn side(g: &Graph, v: &[Label], x: usize, to: Label, obj: Objective, m: Label) -> (Label, Label) {
    g.neighbors(x).fold((0, 0), |(new, old), w| {
        (new + obj.term(to, v[w], m), old + obj.term(v[x], v[w], m))
    })
}

const STEP_LIMIT: usize = 20_000;

/// Walks to a fixpoint of the swap rule and leaves the best labelling seen in
/// `v`. Moves that keep the total unchanged are allowed, but a labelling is
/// never revisited. Unused labels act as isolated phantom vertices, so a
/// vertex may also trade its label for a free one.
fn descend(g: &Graph, v: &mut [Label], obj: Objective, dir: Direction, image: Image) -> Label {
    let m = g.q() as Label + 1;
    let width = image.width(g) as Label;
    let mut value = raw(g, v, obj);
    let mut best = (value, v.to_vec());
    let mut seen: HashSet<Vec<Label>> = HashSet::from([v.to_vec()]);
    let fresh = |v: &[Label], seen: &mut HashSet<Vec<Label>>| seen.insert(v.to_vec());
    'outer: for _ in 0..STEP_LIMIT {
        let used: BTreeSet<Label> = v.iter().copied().collect();
        let free: Vec<Label> = (0..width).filter(|x| !used.contains(x)).collect();
        for x in 0..g.p() {
            for y in x + 1..g.p() {
                let (n1, o1) = side(g, v, x, v[y], obj, m);
                let (n2, o2) = side(g, v, y, v[x], obj, m);
                if !(dir.holds(n1, o1) && dir.holds(n2, o2)) {
                    continue;
                }
                v.swap(x, y);
                let next = raw(g, v, obj);
                if dir.holds(next, value) && fresh(v, &mut seen) {
                    value = next;
                    if dir.better(value, best.0) {
                        best = (value, v.to_vec());
                    }
                    continue 'outer;
                }
                v.swap(x, y);
            }
            for &c in &free {
                let (n1, o1) = side(g, v, x, c, obj, m);
                if !dir.holds(n1, o1) {
                    continue;
                }
                let old = v[x];
                v[x] = c;
                let next = raw(g, v, obj);
                if dir.holds(next, value) && fresh(v, &mut seen) {
                    value = next;
                    if dir.better(value, best.0) {
                        best = (value, v.to_vec());
                    }
                    continue 'outer;
                }
                v[x] = old;
            }
        }
        break;
    }
    v.copy_from_slice(&best.1);
    best.0
}

const KICKS: usize = 40;

/// Descends, then repeatedly perturbs the best labelling with two random
/// transpositions and descends again.
fn kicked(g: &Graph, mut v: Vec<Label>, obj: Objective, dir: Direction, image: Image, seed: u64) -> (Label, Vec<Label>) {
    let mut best = (descend(g, &mut v, obj, dir, image), v);
    if g.p() < 2 {
        return best;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..KICKS {
        let mut w = best.1.clone();
        for _ in 0..2 {
            let a = rng.gen_range(0..w.len());
            let b = rng.gen_range(0..w.len());
            w.swap(a, b);
        }
        let value = descend(g, &mut w, obj, dir, image);
        if dir.better(value, best.0) {
            best = (value, w);
        }
    }
    best
}

/// Swap descent from `restarts` random starting labellings. A pair `(x, y)`
/// is exchanged when the neighbour sums of both ends move in the requested
/// direction and the total does not get worse; scanning is lexicographic and
/// the first such pair is taken. Each restart is followed by a fixed number
/// of random kicks from its best labelling.
pub fn local_search_extremal(
    g: &Graph,
    obj: Objective,
    dir: Direction,
    image: Image,
    restarts: usize,
    seed: u64,
) -> ExtremalResult {
    let p = g.p();
    let q = g.q();
    let width = image.width(g);
    let starts: Vec<Vec<Label>> = {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..restarts.max(1))
            .map(|r| {
                let mut pool: Vec<Label> = (0..width as Label).collect();
                if obj == Objective::DifferenceSum || r == 0 {
                    pool.truncate(p);
                } else {
                    pool.shuffle(&mut rng);
                    pool.truncate(p);
                }
                pool.shuffle(&mut rng);
                pool
            })
            .collect()
    };
    let runs: Vec<(Label, Vec<Label>)> = starts
        .into_par_iter()
        .enumerate()
        .map(|(r, v)| kicked(g, v, obj, dir, image, seed ^ (r as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)))
        .collect();
    let (value, v) = runs
        .into_iter()
        .reduce(|a, b| {
            if dir.better(b.0, a.0) || (a.0 == b.0 && b.1 < a.1) {
                b
            } else {
                a
            }
        })
        .expect("at least one restart");
    ExtremalResult {
        optimal: certify_by_brute(g, obj, dir, image, value),
        value,
        labelling: Labelling::from_vertices(&v, q),
        method: Method::LocalSearch,
    }
}

/// Runs the descent from a given labelling and reports whether it found a
/// strictly better one.
pub fn swap_fixpoint(
    g: &Graph,
    f: &Labelling,
    obj: Objective,
    dir: Direction,
    image: Image,
) -> Result<(Labelling, bool)> {
    evaluate(g, f, obj)?;
    let start = f.vertex_labels()?;
    let before = raw(g, &start, obj);
    let mut v = start;
    let after = descend(g, &mut v, obj, dir, image);
    Ok((Labelling::from_vertices(&v, g.q()), dir.better(after, before)))
}

fn triangle(n: usize) -> Label {
    (n * (n + 1) / 2) as Label
}

/// Minimum difference sum of a caterpillar. The spine is labelled left to
/// right with each spine vertex's leaves packed around it in a consecutive
/// block; each spine vertex then moves to the position of its block that
/// minimises its leaf sum plus the spine edges leaving the block.
pub fn caterpillar_min_sum(t: &Graph) -> Result<ExtremalResult> {
    let shape = t.classify_tree();
    if !shape.caterpillar {
        return Err(Error::NotCaterpillar);
    }
    let spine = shape.spine.unwrap_or_default();
    let leaves = shape.leaves.unwrap_or_default();
    let n = spine.len();
    let mut v = vec![0; t.p()];
    let mut next: Label = 0;
    for (i, (&u, block)) in spine.iter().zip(&leaves).enumerate() {
        let m = block.len();
        let cost = |l: usize| {
            let r = m - l;
            let mut c = triangle(l) + triangle(r);
            if n > 1 && i > 0 {
                c += l as Label;
            }
            if n > 1 && i + 1 < n {
                c += r as Label;
            }
            c
        };
        let l = (0..=m).min_by_key(|&l| (cost(l), l)).unwrap_or(0);
        for (k, &leaf) in block.iter().enumerate() {
            v[leaf] = next + if k < l { k as Label } else { k as Label + 1 };
        }
        v[u] = next + l as Label;
        next += m as Label + 1;
    }
    let value = raw(t, &v, Objective::DifferenceSum);
    Ok(ExtremalResult {
        optimal: certify_by_brute(t, Objective::DifferenceSum, Direction::Min, Image::Full, value),
        value,
        labelling: Labelling::from_vertices(&v, t.q()),
        method: Method::CaterpillarExact,
    })
}

/// The Steps 1-3 value `n - m_1 + (1/2) sum m_k (m_k + 3)` of the consecutive
/// assignment before re-centering, for spine leaf counts `m`.
pub fn caterpillar_consecutive_sum(m: &[usize]) -> Label {
    let n = m.len() as Label;
    let first = m.first().copied().unwrap_or(0) as Label;
    n - first + m.iter().map(|&k| (k * (k + 3)) as Label).sum::<Label>() / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BandParameters {
    pub b_sub: Label,
    pub b_sum: Label,
}

/// `B_sub = sum |c(x) - c(y)|` and `B_sum = sum c(x) + c(y)` of a proper
/// coloring that uses exactly `chi(G)` colors.
pub fn coloring_band_parameters(g: &Graph, c: &[Label]) -> Result<BandParameters> {
    if c.len() != g.p() {
        return Err(Error::Invalid(format!("{} colors for {} vertices", c.len(), g.p())));
    }
    if g.edges().iter().any(|&(a, b)| c[a] == c[b]) {
        return Err(Error::ImproperColoring);
    }
    let used = c.iter().collect::<BTreeSet<_>>().len();
    let chi = chromatic_number(g, &SearchBudget::default())?;
    if used != chi {
        return Err(Error::Invalid(format!("coloring uses {used} colors, chromatic number is {chi}")));
    }
    Ok(band(g, c))
}

fn band(g: &Graph, c: &[Label]) -> BandParameters {
    g.edges().iter().fold(BandParameters { b_sub: 0, b_sum: 0 }, |acc, &(a, b)| BandParameters {
        b_sub: acc.b_sub + (c[a] - c[b]).abs(),
        b_sum: acc.b_sum + c[a] + c[b],
    })
}

/// Every value of `B_sub` and `B_sum` over proper colorings onto `[1, chi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BandSpectrum {
    pub chi: usize,
    pub b_sub: BTreeSet<Label>,
    pub b_sum: BTreeSet<Label>,
}

impl BandSpectrum {
    fn consecutive(s: &BTreeSet<Label>) -> bool {
        match (s.first(), s.last()) {
            (Some(&lo), Some(&hi)) => (hi - lo + 1) as usize == s.len(),
            _ => true,
        }
    }

    /// Every `M` between the extremes of `B_sub` is attained.
    pub fn sub_consecutive(&self) -> bool {
        Self::consecutive(&self.b_sub)
    }

    pub fn sum_consecutive(&self) -> bool {
        Self::consecutive(&self.b_sum)
    }
}

pub fn band_spectrum(g: &Graph, budget: &SearchBudget) -> Result<BandSpectrum> {
    let chi = chromatic_number(g, budget)?;
    budget.check_candidates(crate::search::power(chi, g.p()))?;
    let mut out = BandSpectrum {
        chi,
        b_sub: BTreeSet::new(),
        b_sum: BTreeSet::new(),
    };
    let mut c = vec![0; g.p()];
    fn go(g: &Graph, chi: usize, c: &mut [Label], i: usize, out: &mut BandSpectrum) {
        if i == g.p() {
            if c.iter().collect::<BTreeSet<_>>().len() == chi {
                let b = band(g, c);
                out.b_sub.insert(b.b_sub);
                out.b_sum.insert(b.b_sum);
            }
            return;
        }
        for x in 1..=chi as Label {
            if g.neighbors(i).any(|u| u < i && c[u] == x) {
                continue;
            }
            c[i] = x;
            go(g, chi, c, i + 1, out);
        }
        c[i] = 0;
    }
    go(g, chi, &mut c, 0, &mut out);
    Ok(out)
}
