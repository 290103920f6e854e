use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {{{0}, {1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("{n} vertices exceeds the configured cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("color list has {got} entries, expected {expected}")]
    ColorCount { got: usize, expected: usize },
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("invalid bipartition: {0}")]
    BadBipartition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

/// Raised when a search exceeds its node budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exhausted")]
pub struct BudgetExhausted {
    pub limit: u64,
}
