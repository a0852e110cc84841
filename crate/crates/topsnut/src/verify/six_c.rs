use serde::Serialize;

use super::kinds::{e_magic, ee_balanced, set_ordered_clause, total_onto, ve_matching, Singular, Slot};
use super::util::matched;
use super::{clause, Clause, Ctx, Kind, Options, Verdict, Verifier};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Label, Labelling};

pub const MIN_V_ABOVE_MAX_E: &str = "min V > max E";
pub const MAX_V_BELOW_MIN_E: &str = "max V < min E";
pub const V_IN_E: &str = "V within E";
pub const E_IN_V: &str = "E within V";
pub const ODD_EVEN: &str = "V odd, E even";

/// Which EV-ordered alternatives hold.
pub fn ev_modes(v: &[Label], e: &[Label]) -> Vec<&'static str> {
    let mut out = Vec::new();
    let (vmin, vmax) = (v.iter().min(), v.iter().max());
    let (emin, emax) = (e.iter().min(), e.iter().max());
    if let (Some(a), Some(b)) = (vmin, emax) {
        if a > b {
            out.push(MIN_V_ABOVE_MAX_E);
        }
    }
    if let (Some(a), Some(b)) = (vmax, emin) {
        if a < b {
            out.push(MAX_V_BELOW_MIN_E);
        }
    }
    if v.iter().all(|x| e.contains(x)) {
        out.push(V_IN_E);
    }
    if e.iter().all(|x| v.contains(x)) {
        out.push(E_IN_V);
    }
    if v.iter().all(|x| x % 2 != 0) && e.iter().all(|x| x % 2 == 0) {
        out.push(ODD_EVEN);
    }
    out
}

pub(super) fn clauses(kind: &Kind) -> Vec<Clause> {
    let odd_even = matches!(kind, Kind::OddEvenSeparableSixC);
    vec![
        clause("bijection onto [1,p+q]", |c: &mut Ctx| {
            let inner = total_onto(1, c.p + c.q);
            (inner.check)(c)
        }),
        e_magic(),
        clause("ee-difference", |c: &mut Ctx| {
            let d = c.diffs();
            let m = 2 * (c.p + c.q);
            let ok = matched(&c.e, &d, !c.opts.existential, |x, y| x == y || x == m - y);
            Verdict::check(ok, || "some edge label has no partner difference".into())
        }),
        ee_balanced(Some(2), Slot::K1),
        clause("EV-ordered", move |c: &mut Ctx| {
            let modes = ev_modes(&c.v, &c.e);
            let ok = if odd_even {
                modes.contains(&ODD_EVEN)
            } else {
                !modes.is_empty()
            };
            Verdict::check(ok, || "no EV-ordered mode holds".into()).with_modes(&modes)
        }),
        ve_matching(if odd_even { Singular::Any } else { Singular::Half }, Slot::K2),
        set_ordered_clause(),
    ]
}

impl Verdict {
    fn with_modes(mut self, modes: &[&str]) -> Verdict {
        if self.pass {
            self.witness = Some(modes.join("; "));
        }
        self
    }
}

/// One entry per clause of the 6C definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixCReport {
    pub pass: bool,
    pub bijective: bool,
    pub e_magic_k: Option<Label>,
    pub ee_difference: bool,
    pub ee_balanced_k: Option<Label>,
    pub ev_ordered_modes: Vec<String>,
    pub ve_matching_k: Option<Label>,
    pub singularity: Option<Label>,
    pub set_ordered: bool,
}

pub fn verify_six_c(g: &Graph, f: &Labelling) -> Result<SixCReport> {
    verify_six_c_with(g, f, Options::default())
}

pub fn verify_six_c_with(g: &Graph, f: &Labelling, opts: Options) -> Result<SixCReport> {
    let top = (g.p() + g.q()) as Label;
    let v = f.vertex_labels()?;
    let e = f.edge_labels()?;
    if let Some(x) = v.iter().chain(&e).find(|&&x| x < 1 || x > top) {
        return Err(Error::OutOfRange(format!("{x} outside [1,{top}]")));
    }
    let r = Verifier::new(g, &Kind::SixC, opts)?.report(f)?;
    let pass_of = |name: &str| r.condition(name).is_some_and(|c| c.pass);
    Ok(SixCReport {
        pass: r.pass,
        bijective: pass_of("bijection onto [1,p+q]"),
        e_magic_k: r.k.filter(|_| pass_of("e-magic")),
        ee_difference: pass_of("ee-difference"),
        ee_balanced_k: r.k_prime,
        ev_ordered_modes: ev_modes(&v, &e).into_iter().map(String::from).collect(),
        ve_matching_k: r.k_double_prime,
        singularity: r.singularity,
        set_ordered: pass_of("set-ordered"),
    })
}
