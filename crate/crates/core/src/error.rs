use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: usize },

    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },

    #[error("graph edge ({0}, {1}) is a loop")]
    Loop(usize, usize),

    #[error("graph edge ({0}, {1}) appears twice")]
    RepeatedPair(usize, usize),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("graph has no bipartition")]
    NoBipartition,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} guard exceeded: {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("unknown special hypergraph `{0}`")]
    UnknownSpecial(String),

    #[error("special hypergraph {0} is not drawn in the source figure and is not shipped")]
    NotShipped(&'static str),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("hypothesis of bound {bound} not met: {reason}")]
    Hypothesis { bound: &'static str, reason: String },

    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
