use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-finite input value {0} (only finite reals and -inf are allowed)")]
    NonFinite(f64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("the zero vector has no pseudo-inverse")]
    ZeroVector,

    #[error("{0} is not regular")]
    NotRegular(&'static str),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is reducible; only irreducible matrices are supported")]
    NotIrreducible,

    #[error("no column of A× has a unit diagonal entry, so A⁺ is empty")]
    EmptyPlus,

    #[error("premise violated: {0}")]
    PremiseViolation(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("invalid oracle config: {0}")]
    InvalidConfig(String),

    #[error("grid has {nodes} nodes, above the cap of {cap}")]
    GridTooLarge { nodes: u128, cap: u128 },

    #[error("no grid node passes the feasibility filter")]
    NoFeasibleNode,
}
