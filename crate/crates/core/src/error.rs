use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, offset {offset}: {message}")]
    Parse {
        line: usize,
        offset: usize,
        message: String,
    },

    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("walks have unequal lengths ({alice} vs {bob})")]
    UnequalLengths { alice: usize, bob: usize },

    #[error("walks must be non-empty")]
    EmptyWalk,

    #[error("graph is not an interval graph")]
    NotInterval,

    #[error("{what}: {n} vertices exceeds cap {cap} ({bound})")]
    Capacity {
        what: &'static str,
        n: usize,
        cap: usize,
        bound: String,
    },

    #[error("invalid family spec `{spec}`: {reason}")]
    InvalidFamily { spec: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
