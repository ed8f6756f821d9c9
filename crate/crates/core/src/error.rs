use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6: {reason} at byte {offset}")]
    Graph6 { offset: usize, reason: String },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid rational literal {0:?}")]
    Rational(String),

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("invalid orientation: {0}")]
    Orientation(String),

    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("refusing to expand {n}! permutations (limit n <= {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("cycle of length {0} has no orientation parity (odd length)")]
    OddCycle(usize),

    #[error("not a bipartition: {0}")]
    NotBipartition(String),

    #[error("polynomial degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("root multisets differ in size: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence {
        iterations: usize,
        best: Vec<num::complex::Complex64>,
    },

    #[error("edge index {index} out of range (graph has {edges} edges)")]
    EdgeIndex { index: usize, edges: usize },

    #[error("graph has {0} edges; orientation masks support at most 64")]
    TooManyEdges(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
