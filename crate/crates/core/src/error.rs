use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("insufficient data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid shape {rows}x{cols} for {len} entries")]
    InvalidShape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("no convergence after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("column {column} has zero standard deviation")]
    ConstantColumn { column: usize },

    #[error("invalid component count {requested}; model has {available}")]
    InvalidComponentCount { requested: usize, available: usize },

    #[error("model file line {line}: {message}")]
    ModelFormat { line: usize, message: String },
}

impl Error {
    /// True for failures of the numerical kernels themselves, as opposed to
    /// problems with the shape or content of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Singular | Error::NoConvergence { .. })
    }
}
