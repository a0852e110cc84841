use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph contains an odd cycle")]
    OddCycle,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("neighbour subset must be a non-empty proper subset of N(v)")]
    BadPartition,
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("graph is not a tree")]
    NotTree,
    #[error("tree is not a caterpillar")]
    NotCaterpillar,
    #[error("missing labels: {0}")]
    MissingLabels(String),
    #[error("twin kinds need a part designation covering every edge")]
    MissingParts,
    #[error("labels are not injective")]
    NotInjective,
    #[error("label out of range: {0}")]
    OutOfRange(String),
    #[error("labelling is not set-ordered graceful")]
    NotSetOrderedGraceful,
    #[error("no leaf edge carries label 1")]
    NoUnitLeafEdge,
    #[error("vertex {0} of H has no matching member")]
    TeamIncomplete(usize),
    #[error("no matching graph exists")]
    NoMatchingExists,
    #[error("part {0} repeats a vertex label")]
    LabelClashInsidePart(usize),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("sequence is not strictly increasing")]
    NonMonotonicSequence,
    #[error("missing sets: {0}")]
    MissingSets(String),
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("index {0} out of range for modulus {1}")]
    IndexOutOfRange(usize, usize),
    #[error("empty input")]
    EmptyInput,
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("extremal labelling could not be certified")]
    UncertifiedExtremal,
    #[error("missing certificates")]
    MissingCertificates,
    #[error("spider has an odd number of legs")]
    OddLegCount,
    #[error("graph too small: {0}")]
    TooSmall(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
