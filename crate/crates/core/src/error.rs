use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge index {index} out of range for graph with {size} edges")]
    EdgeOutOfRange { index: usize, size: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),

    #[error("{what} = {value} outside supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },

    #[error("product factor must have at least one vertex")]
    EmptyFactor,

    #[error(
        "solver capacity exceeded: {items} items > cap {cap}; use a witness-only construction or raise the cap"
    )]
    Capacity { items: usize, cap: usize },

    #[error("input graph is not a tree")]
    NotATree,

    #[error("input graph is not bipartite")]
    NotBipartite,

    #[error("invalid spider wiring: {0}")]
    InvalidWiring(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}
