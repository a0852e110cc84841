//! Clause-by-clause verification of labellings against their definitions.
//!
//! Every kind is a named checklist of clauses. [`Verifier`] builds the list once
//! for a graph and kind; [`Verifier::report`] runs every clause while
//! [`Verifier::accepts`] stops at the first failure.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{EdgeRule, Label, Labelling};

mod coloring;
mod kinds;
mod sequence;
mod sets;
mod six_c;
mod twin;
pub(crate) mod util;

pub use coloring::{
    verify_total_coloring, verify_ve_matching_total_coloring, TotalColoringReport, VeFlavor,
};
pub use sequence::{verify_sequence_labelling, SeqFlavor, TripleRelation};
pub use sets::{verify_set_labelling, ProperRule, SetKind};
pub use six_c::{ev_modes, verify_six_c, SixCReport};
pub use twin::verify_twin_pair;

/// Edge indices of the two designated parts of a twin composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinParts {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// The range clause of twin odd-graceful labellings exists in two readings:
/// `Strict` keeps the union inside `[0, q-1]` with the second part's edges
/// `[1, q-1]^o`; `Compatible` admits the self-matching construction, whose
/// union is `[0, q]` and whose second part carries `[1, 2q_2-1]^o`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TogMode {
    Strict,
    Compatible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Graceful,
    SetOrderedGraceful,
    OddGraceful,
    SetOrderedOddGraceful,
    PanOddGraceful,
    KSequentialOddGraceful(Label),
    OddElegant,
    SetOrderedOddElegant,
    Felicitous,
    Harmonious,
    EdgeMagicTotal,
    SuperEdgeMagicTotal,
    PanEdgeMagicTotal,
    EdgeAntimagicTotal,
    EdgeMagicGraceful,
    SuperEdgeMagicGraceful,
    RelaxedEmt,
    Oemm,
    Eedoemm,
    SixC,
    OddEvenSeparableSixC,
    Dgemm,
    VeExchangedOf(Box<Labelling>),
    Tog(TogMode, Option<TwinParts>),
    Toe(Option<TwinParts>),
    Sotoe(Option<TwinParts>),
    TwoOddTwo(Option<TwinParts>),
}

impl Kind {
    pub fn name(&self) -> String {
        match self {
            Kind::Graceful => "graceful".into(),
            Kind::SetOrderedGraceful => "set_ordered_graceful".into(),
            Kind::OddGraceful => "odd_graceful".into(),
            Kind::SetOrderedOddGraceful => "set_ordered_odd_graceful".into(),
            Kind::PanOddGraceful => "pan_odd_graceful".into(),
            Kind::KSequentialOddGraceful(k) => format!("k_sequential_odd_graceful({k})"),
            Kind::OddElegant => "odd_elegant".into(),
            Kind::SetOrderedOddElegant => "set_ordered_odd_elegant".into(),
            Kind::Felicitous => "felicitous".into(),
            Kind::Harmonious => "harmonious".into(),
            Kind::EdgeMagicTotal => "edge_magic_total".into(),
            Kind::SuperEdgeMagicTotal => "super_edge_magic_total".into(),
            Kind::PanEdgeMagicTotal => "pan_edge_magic_total".into(),
            Kind::EdgeAntimagicTotal => "edge_antimagic_total".into(),
            Kind::EdgeMagicGraceful => "edge_magic_graceful".into(),
            Kind::SuperEdgeMagicGraceful => "super_edge_magic_graceful".into(),
            Kind::RelaxedEmt => "relaxed_emt".into(),
            Kind::Oemm => "oemm".into(),
            Kind::Eedoemm => "eedoemm".into(),
            Kind::SixC => "six_c".into(),
            Kind::OddEvenSeparableSixC => "odd_even_separable_six_c".into(),
            Kind::Dgemm => "dgemm".into(),
            Kind::VeExchangedOf(_) => "ve_exchanged_of".into(),
            Kind::Tog(TogMode::Strict, _) => "tog".into(),
            Kind::Tog(TogMode::Compatible, _) => "tog_compatible".into(),
            Kind::Toe(_) => "toe".into(),
            Kind::Sotoe(_) => "sotoe".into(),
            Kind::TwoOddTwo(_) => "two_odd_two".into(),
        }
    }

    /// Parses a kind name; dashes and underscores are interchangeable and
    /// `k_sequential_odd_graceful:K` carries its parameter after a colon.
    /// Twin kinds come back without parts.
    pub fn parse(s: &str) -> Result<Kind> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        if let Some(k) = s
            .strip_prefix("k_sequential_odd_graceful")
            .map(|r| r.trim_matches(|c| c == ':' || c == '(' || c == ')'))
        {
            let k = k
                .parse()
                .map_err(|_| Error::Invalid(format!("bad k in kind {s}")))?;
            return Ok(Kind::KSequentialOddGraceful(k));
        }
        Kind::simple()
            .into_iter()
            .chain([
                Kind::Tog(TogMode::Strict, None),
                Kind::Tog(TogMode::Compatible, None),
                Kind::Toe(None),
                Kind::Sotoe(None),
                Kind::TwoOddTwo(None),
            ])
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown kind {s}")))
    }

    /// Every kind that needs no parameter.
    pub fn simple() -> Vec<Kind> {
        vec![
            Kind::Graceful,
            Kind::SetOrderedGraceful,
            Kind::OddGraceful,
            Kind::SetOrderedOddGraceful,
            Kind::PanOddGraceful,
            Kind::OddElegant,
            Kind::SetOrderedOddElegant,
            Kind::Felicitous,
            Kind::Harmonious,
            Kind::EdgeMagicTotal,
            Kind::SuperEdgeMagicTotal,
            Kind::PanEdgeMagicTotal,
            Kind::EdgeAntimagicTotal,
            Kind::EdgeMagicGraceful,
            Kind::SuperEdgeMagicGraceful,
            Kind::RelaxedEmt,
            Kind::Oemm,
            Kind::Eedoemm,
            Kind::SixC,
            Kind::OddEvenSeparableSixC,
            Kind::Dgemm,
        ]
    }

    /// Vertex-only kinds induce their edge labels; the rest label edges too.
    pub fn is_vertex_kind(&self) -> bool {
        matches!(
            self,
            Kind::Graceful
                | Kind::SetOrderedGraceful
                | Kind::OddGraceful
                | Kind::SetOrderedOddGraceful
                | Kind::PanOddGraceful
                | Kind::KSequentialOddGraceful(_)
                | Kind::OddElegant
                | Kind::SetOrderedOddElegant
                | Kind::Felicitous
                | Kind::Harmonious
        ) || self.is_twin()
    }

    pub fn is_twin(&self) -> bool {
        matches!(self, Kind::Tog(..) | Kind::Toe(_) | Kind::Sotoe(_) | Kind::TwoOddTwo(_))
    }

    pub fn is_set_ordered(&self) -> bool {
        matches!(
            self,
            Kind::SetOrderedGraceful
                | Kind::SetOrderedOddGraceful
                | Kind::SetOrderedOddElegant
                | Kind::SixC
                | Kind::OddEvenSeparableSixC
        )
    }

    pub fn parts(&self) -> Option<&TwinParts> {
        match self {
            Kind::Tog(_, p) | Kind::Toe(p) | Kind::Sotoe(p) | Kind::TwoOddTwo(p) => p.as_ref(),
            _ => None,
        }
    }

    pub fn with_parts(&self, parts: TwinParts) -> Kind {
        match self {
            Kind::Tog(m, _) => Kind::Tog(*m, Some(parts)),
            Kind::Toe(_) => Kind::Toe(Some(parts)),
            Kind::Sotoe(_) => Kind::Sotoe(Some(parts)),
            Kind::TwoOddTwo(_) => Kind::TwoOddTwo(Some(parts)),
            k => k.clone(),
        }
    }

    /// The rule inducing edge labels from vertex labels, if the kind has one.
    pub fn edge_rule(&self, q: usize) -> Option<EdgeRule> {
        let q = q.max(1) as Label;
        match self {
            Kind::Graceful
            | Kind::SetOrderedGraceful
            | Kind::OddGraceful
            | Kind::SetOrderedOddGraceful
            | Kind::PanOddGraceful
            | Kind::KSequentialOddGraceful(_) => Some(EdgeRule::Difference),
            Kind::OddElegant | Kind::SetOrderedOddElegant => Some(EdgeRule::ModSum {
                modulus: 2 * q,
                zero_as_modulus: false,
            }),
            Kind::Felicitous | Kind::Harmonious => Some(EdgeRule::ModSum {
                modulus: q,
                zero_as_modulus: false,
            }),
            _ => None,
        }
    }
}

/// Matching clauses ("each edge corresponds another edge") are perfect
/// matchings by default; `existential` only asks for a witness per element.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub existential: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kind: String,
    pub pass: bool,
    pub conditions: Vec<Condition>,
    pub k: Option<Label>,
    pub k_prime: Option<Label>,
    pub k_double_prime: Option<Label>,
    pub singularity: Option<Label>,
}

impl VerifyReport {
    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }

    /// Assembles a report from clause outcomes computed outside a checklist.
    pub(crate) fn from_conditions(kind: impl Into<String>, conditions: Vec<Condition>) -> VerifyReport {
        VerifyReport {
            kind: kind.into(),
            pass: conditions.iter().all(|c| c.pass),
            conditions,
            k: None,
            k_prime: None,
            k_double_prime: None,
            singularity: None,
        }
    }
}

pub(crate) struct Verdict {
    pub pass: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn yes() -> Verdict {
        Verdict {
            pass: true,
            witness: None,
        }
    }

    pub fn yes_with(w: impl Into<String>) -> Verdict {
        Verdict {
            pass: true,
            witness: Some(w.into()),
        }
    }

    pub fn no(w: impl Into<String>) -> Verdict {
        Verdict {
            pass: false,
            witness: Some(w.into()),
        }
    }

    pub fn check(pass: bool, w: impl FnOnce() -> String) -> Verdict {
        if pass {
            Verdict::yes()
        } else {
            Verdict::no(w())
        }
    }
}

/// Labels of one candidate, resolved, plus the constants clauses discover.
pub(crate) struct Ctx<'a> {
    pub g: &'a Graph,
    pub p: Label,
    pub q: Label,
    pub v: Vec<Label>,
    pub e: Vec<Label>,
    pub edges_given: bool,
    pub opts: Options,
    pub k: Option<Label>,
    pub k1: Option<Label>,
    pub k2: Option<Label>,
    pub singularity: Option<Label>,
}

impl Ctx<'_> {
    pub fn diff(&self, e: usize) -> Label {
        let (a, b) = self.g.edges()[e];
        (self.v[a] - self.v[b]).abs()
    }

    pub fn sum(&self, e: usize) -> Label {
        let (a, b) = self.g.edges()[e];
        self.v[a] + self.v[b]
    }

    pub fn diffs(&self) -> Vec<Label> {
        (0..self.g.q()).map(|e| self.diff(e)).collect()
    }
}

pub(crate) type Check = Box<dyn Fn(&mut Ctx) -> Verdict + Send + Sync>;

pub(crate) struct Clause {
    pub name: String,
    pub check: Check,
}

pub(crate) fn clause(name: impl Into<String>, f: impl Fn(&mut Ctx) -> Verdict + Send + Sync + 'static) -> Clause {
    Clause {
        name: name.into(),
        check: Box::new(f),
    }
}

/// A kind's checklist bound to one graph.
pub struct Verifier<'a> {
    g: &'a Graph,
    kind: Kind,
    opts: Options,
    rule: Option<EdgeRule>,
    clauses: Vec<Clause>,
}

impl<'a> Verifier<'a> {
    pub fn new(g: &'a Graph, kind: &Kind, opts: Options) -> Result<Verifier<'a>> {
        if kind.is_set_ordered() && !g.is_bipartite() {
            return Err(Error::NotBipartite);
        }
        if kind.is_twin() {
            twin::check_parts(g, kind)?;
        }
        if let Kind::VeExchangedOf(f) = kind {
            if f.vertices.len() != g.p() || f.edges.len() != g.q() {
                return Err(Error::Invalid("reference labelling has the wrong shape".into()));
            }
            f.vertex_labels()?;
            f.edge_labels()?;
        }
        Ok(Verifier {
            g,
            kind: kind.clone(),
            opts,
            rule: kind.edge_rule(g.q()),
            clauses: kinds::clauses(g, kind),
        })
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn clause_names(&self) -> Vec<&str> {
        self.clauses.iter().map(|c| c.name.as_str()).collect()
    }

    fn ctx(&self, f: &Labelling) -> Result<Ctx<'a>> {
        let g = self.g;
        if f.vertices.len() != g.p() || f.edges.len() != g.q() {
            return Err(Error::Invalid(format!(
                "labelling shape ({}, {}) does not match graph ({}, {})",
                f.vertices.len(),
                f.edges.len(),
                g.p(),
                g.q()
            )));
        }
        let v = f.vertex_labels()?;
        let (e, edges_given) = if !self.kind.is_vertex_kind() || f.edges.iter().any(Option::is_some) {
            (f.edge_labels()?, true)
        } else {
            let rule = self.rule.unwrap_or(EdgeRule::Difference);
            let e = g
                .edges()
                .iter()
                .map(|&(a, b)| rule.apply(v[a], v[b], g.q()).unwrap_or(0))
                .collect();
            (e, false)
        };
        Ok(Ctx {
            g,
            p: g.p() as Label,
            q: g.q() as Label,
            v,
            e,
            edges_given,
            opts: self.opts,
            k: None,
            k1: None,
            k2: None,
            singularity: None,
        })
    }

    pub fn report(&self, f: &Labelling) -> Result<VerifyReport> {
        let mut ctx = self.ctx(f)?;
        let conditions = self
            .clauses
            .iter()
            .map(|c| {
                let v = (c.check)(&mut ctx);
                Condition {
                    name: c.name.clone(),
                    pass: v.pass,
                    witness: v.witness,
                }
            })
            .collect();
        let mut r = VerifyReport::from_conditions(self.kind.name(), conditions);
        r.k = ctx.k;
        r.k_prime = ctx.k1;
        r.k_double_prime = ctx.k2;
        r.singularity = ctx.singularity;
        Ok(r)
    }

    pub fn accepts(&self, f: &Labelling) -> bool {
        let Ok(mut ctx) = self.ctx(f) else {
            return false;
        };
        self.clauses.iter().all(|c| (c.check)(&mut ctx).pass)
    }
}

pub fn verify(g: &Graph, f: &Labelling, kind: &Kind) -> Result<VerifyReport> {
    verify_with(g, f, kind, Options::default())
}

pub fn verify_with(g: &Graph, f: &Labelling, kind: &Kind, opts: Options) -> Result<VerifyReport> {
    Verifier::new(g, kind, opts)?.report(f)
}

/// Fast yes/no; any error (wrong shape, missing labels, unsuitable graph)
/// counts as rejection.
pub fn accepts(g: &Graph, f: &Labelling, kind: &Kind) -> bool {
    Verifier::new(g, kind, Options::default()).is_ok_and(|v| v.accepts(f))
}

/// Verifies and attaches the report, failing when any clause fails.
pub fn certify(g: &Graph, f: &Labelling, kind: &Kind) -> Result<VerifyReport> {
    let r = verify(g, f, kind)?;
    if !r.pass {
        return Err(Error::CertificationFailed(format!(
            "{} fails {}",
            r.kind,
            r.failed().join(", ")
        )));
    }
    Ok(r)
}
