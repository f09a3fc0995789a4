use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter `{name}` = {value}: expected {expected}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        expected: &'static str,
    },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex index {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),

    #[error("coordinate annotation is not a bijection: {0}")]
    BadCoordinates(String),

    #[error("center set is empty")]
    EmptyCenter,

    #[error("labeling covers {got} vertices, graph has {expected}")]
    PartialLabeling { expected: usize, got: usize },

    #[error("vertex {0} has no label")]
    MissingLabel(usize),

    #[error("vertex {vertex} has negative label {label}")]
    NegativeLabel { vertex: usize, label: i64 },

    #[error("vertex {0} is labeled more than once")]
    DuplicateVertex(usize),

    #[error("ordering is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    #[error("increment into position {index} would be {increment}; ordering is incompatible with the center")]
    NonPositiveIncrement { index: usize, increment: i64 },

    #[error("jump at position {0} is given more than once")]
    DuplicateJump(usize),

    #[error("jump at position {index} is invalid: {reason}")]
    InvalidJump { index: usize, reason: &'static str },

    #[error("center strategy `{strategy}` is infeasible for a graph on {order} vertices")]
    InfeasibleStrategy { strategy: String, order: usize },

    #[error("target span {target} is below the lower bound {bound}")]
    TargetBelowBound { target: i64, bound: i64 },

    #[error("{0} only applies to odd n; use the plain lower bound for even n")]
    EvenN(&'static str),

    #[error("construction for {family} did not produce a valid labeling of span {span}")]
    ConstructionFailed { family: String, span: i64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
