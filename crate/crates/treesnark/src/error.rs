use thiserror::Error;

/// Errors raised by graph construction, multipole surgery, format parsing
/// and the bisection machinery.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("loops are not allowed (vertex {0})")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("vertex {0} already has degree 3")]
    DegreeOverflow(usize),
    #[error("graph is not cubic: vertex {0} has degree {1}")]
    NotCubic(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown dangling edge label `{0}`")]
    UnknownDangling(String),
    #[error("dangling edge label `{0}` already in use")]
    DuplicateDangling(String),
    #[error("dangling edges `{0}` and `{1}` share the endvertex {2}")]
    SharedEndvertex(String, String, usize),
    #[error("no inner edge {0}-{1}")]
    NoSuchEdge(usize, usize),

    #[error("tree has a degree-2 vertex: {0}")]
    DegreeTwoVertex(usize),
    #[error("internal tree vertex {0} has degree {1}, expected 3")]
    BadInternalDegree(usize, usize),
    #[error("tree must have at least 3 leaves, found {0}")]
    TooFewLeaves(usize),
    #[error("leaf cycle is not a permutation of the leaf set")]
    LeafCycleMismatch,
    #[error("edge set contains a cycle")]
    NotATree,
    #[error("no consecutive near leaves: the leaf cycle is not consistent with a planar embedding")]
    NoNearLeaves,
    #[error("reduction requires at least two internal tree vertices")]
    TreeTooSmall,

    #[error("colouring is not total: expected {expected} colours, got {got}")]
    PartialColouring { expected: usize, got: usize },
    #[error("colouring violates the monochromatic property (component of size {0})")]
    MonochromaticViolation(usize),
    #[error("extension engine failed in case {case}: no catalogue candidate verifies")]
    ExtensionFailed { case: String },
    #[error("exhaustive extension failed: no candidate in the full search space verifies")]
    ExhaustionFailed,

    #[error("graph too large for graph6 ({0} vertices)")]
    Graph6TooLarge(u64),
    #[error("malformed graph6 input: {0}")]
    Graph6Malformed(String),
    #[error("malformed {format} input at line {line}: {msg}")]
    Parse {
        format: &'static str,
        line: usize,
        msg: String,
    },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("budget limits must be positive")]
    BadBudget,
}

pub type Result<T> = std::result::Result<T, Error>;
