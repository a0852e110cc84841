//! Graph labellings for topological graphic passwords: verifiers, constructive
//! generators, extremal search, matching partitions, encodings and graphic
//! groups, all checkable against brute-force oracles at small scale.

pub mod cli;
pub mod construct;
pub mod encode;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod groups;
pub mod labelling;
pub mod matching;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, TreeShape, TreeTag};
pub use labelling::{Domain, EdgeRule, Label, LabelledGraph, Labelling, SetLabelling};
pub use verify::{Kind, VerifyReport};
