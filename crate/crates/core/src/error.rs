use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order {0}: graphs need between 1 and {max} vertices", max = crate::graph::MAX_ORDER)]
    InvalidOrder(usize),

    #[error("invalid join spec: {0}")]
    InvalidSpec(String),

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("unsupported size: n = {n} exceeds limit {limit}")]
    UnsupportedSize { n: usize, limit: usize },

    #[error("alpha must lie in [0, 1), got {0}")]
    InvalidAlpha(f64),

    #[error("input graph is disconnected")]
    Disconnected,

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        lambda: f64,
        vector: Vec<f64>,
    },

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("graph has no edges")]
    Edgeless,

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("outside theorem scope: {0}")]
    OutOfScope(String),

    #[error("infeasible class: n = {n} < (d-1)k + 2 = {needed}")]
    Infeasible { n: usize, needed: usize },

    #[error("Perron entries disagree inside cell {cell} by {spread:e}")]
    SymmetryViolation { cell: usize, spread: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
