use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} is odd")]
    OddOrder(usize),
    #[error("graph order {0} is below 4")]
    OrderTooSmall(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("edge set is not a perfect matching: {0}")]
    NotAMatching(String),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("unknown semiedge `{0}`")]
    UnknownSemiedge(String),
    #[error("joining would create a parallel edge between {0} and {1}")]
    MultiEdge(Vertex, Vertex),
    #[error("joining would create a loop at vertex {0}")]
    Loop(Vertex),
    #[error("mapping is not a bijection: {0}")]
    NotABijection(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("lemma violation: {0}")]
    LemmaViolation(String),
    #[error("cycle length t = {0} is odd")]
    OddT(usize),
    #[error("input line {line}: {source}")]
    Input {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
