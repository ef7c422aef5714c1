use thiserror::Error;

/// Errors raised by the matrix engine, the model zoo and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix side {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("unknown model `{name}`; valid models: {}", valid.join(", "))]
    UnknownModel { name: String, valid: Vec<String> },

    #[error("unknown symmetry `{0}`; valid symmetries: P_x, P_y, P, T, C, M, chi")]
    UnknownSymmetry(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degenerate point: {0}")]
    Degenerate(String),

    #[error("matrix is not unitary (deviation {0:.3e})")]
    NotUnitary(f64),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("cannot parse Pauli expression `{0}`")]
    PauliParse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
