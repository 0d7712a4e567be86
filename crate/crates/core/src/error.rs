use thiserror::Error;

/// Errors raised while building or parsing a graph.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: duplicate `p` header")]
    DuplicateHeader { line: usize },
    #[error("edge endpoint {vertex} out of range 1..={n}")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {vertex} admits no proper coloring")]
    SelfLoop { vertex: usize },
    #[error("{n} vertices exceeds the configured cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}

/// Errors raised by the chromatic-number dynamic program.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DpError {
    #[error("{n} vertices exceeds the dynamic-programming cap of {cap} (table of 2^{n} entries)")]
    TooLarge { n: usize, cap: usize },
    #[error("table does not belong to this graph ({table_n} vs {graph_n} vertices)")]
    TableMismatch { table_n: usize, graph_n: usize },
    #[error("no coloring witness below subset {0:#x}; table is incomplete")]
    MissingWitness(u64),
}

/// Size guard failures in the brute-force reference implementations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle input of {size} vertices exceeds its limit of {limit}")]
pub struct OracleError {
    pub size: usize,
    pub limit: usize,
}
