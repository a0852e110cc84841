use std::collections::BTreeSet;

use super::util::repeat;
use super::{Condition, VerifyReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{EdgeRule, Label, Labelling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqFlavor {
    /// Seq-1, Seq-3
    Sequence,
    /// Seq-2, Seq-4, Seq-7
    Full,
    /// Seq-1, Seq-3, Seq-8
    GracefulSequence,
    /// Seq-2, Seq-4
    TotalSequence,
    /// Seq-2, Seq-4, Seq-8
    FTotalGraceful,
}

/// `F(f(u), f(uv), f(v))` must hold on every edge.
pub type TripleRelation = dyn Fn(Label, Label, Label) -> bool;

fn increasing(xs: &[Label]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

fn cond(name: &str, pass: bool) -> Condition {
    Condition {
        name: name.into(),
        pass,
        witness: None,
    }
}

pub fn verify_sequence_labelling(
    g: &Graph,
    f: &Labelling,
    a: &[Label],
    b: &[Label],
    flavor: SeqFlavor,
    rule: EdgeRule,
    relation: Option<&TripleRelation>,
) -> Result<VerifyReport> {
    if !increasing(a) || !increasing(b) {
        return Err(Error::NonMonotonicSequence);
    }
    let v = f.vertex_labels()?;
    let aset: BTreeSet<Label> = a.iter().copied().collect();
    let bset: BTreeSet<Label> = b.iter().copied().collect();
    let total = matches!(
        flavor,
        SeqFlavor::Full | SeqFlavor::TotalSequence | SeqFlavor::FTotalGraceful
    );
    let e: Vec<Label> = if total || f.has_all_edges() && g.q() > 0 {
        f.edge_labels()?
    } else {
        g.edges()
            .iter()
            .map(|&(x, y)| rule.apply(v[x], v[y], g.q()).unwrap_or(0))
            .collect()
    };
    let vset: BTreeSet<Label> = v.iter().copied().collect();
    let eset: BTreeSet<Label> = e.iter().copied().collect();
    let mut out = Vec::new();
    let seq1 = || cond("Seq-1 vertex labels distinct in A", repeat(&v).is_none() && vset.is_subset(&aset));
    let seq2 = || {
        let mut all = v.clone();
        all.extend_from_slice(&e);
        let inside = all.iter().all(|x| aset.contains(x) || bset.contains(x));
        cond("Seq-2 total labels distinct in A and B", repeat(&all).is_none() && inside)
    };
    let seq3 = || {
        let ok = g
            .edges()
            .iter()
            .enumerate()
            .all(|(i, &(x, y))| rule.apply(v[x], v[y], g.q()) == Some(e[i]));
        cond("Seq-3 edge labels induced", ok)
    };
    let seq4 = || {
        let ok = relation.is_none_or(|r| g.edges().iter().enumerate().all(|(i, &(x, y))| r(v[x], e[i], v[y])));
        cond("Seq-4 F-equation", ok)
    };
    let e_is_b = e.len() == b.len() && eset == bset;
    match flavor {
        SeqFlavor::Sequence => {
            out.push(seq1());
            out.push(seq3());
        }
        SeqFlavor::Full => {
            out.push(seq2());
            out.push(seq4());
            out.push(cond("Seq-7 V within A and E equal to B", vset.is_subset(&aset) && e_is_b));
        }
        SeqFlavor::GracefulSequence => {
            out.push(seq1());
            out.push(seq3());
            out.push(cond("Seq-8 V equal to A and E equal to B", vset == aset && e_is_b));
        }
        SeqFlavor::TotalSequence => {
            out.push(seq2());
            out.push(seq4());
        }
        SeqFlavor::FTotalGraceful => {
            out.push(seq2());
            out.push(seq4());
            out.push(cond("Seq-8 V equal to A and E equal to B", vset == aset && e_is_b));
        }
    }
    Ok(VerifyReport::from_conditions(format!("sequence({flavor:?})"), out))
}
