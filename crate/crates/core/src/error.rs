use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty vertex set")]
    EmptySet,
    #[error("the void complex has no {0}")]
    VoidComplex(&'static str),
    #[error("complex is not pure")]
    NotPure,
    #[error("not a facet permutation: {0}")]
    NotAPermutation(String),
    #[error("malformed matching: {0}")]
    MalformedMatching(String),
    #[error("graph precondition failed: {0}")]
    GraphPrecondition(String),
    #[error("no closed form covers {0}")]
    NotCovered(String),
}

pub type Result<T> = std::result::Result<T, Error>;
