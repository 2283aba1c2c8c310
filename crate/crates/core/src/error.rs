use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    Range { vertex: usize, vertex_count: usize },

    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("{{{u},{v}}} is not an edge of the graph")]
    InvalidEdge { u: usize, v: usize },

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Domain(String),

    #[error("inconsistent decomposition: {0}")]
    Inconsistent(String),

    #[error("graph has {vertex_count} vertices, exceeding the enumeration bound of {bound}")]
    Resource { vertex_count: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
