use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A document could not be parsed; `line`/`column` are 1-based.
    #[error("{source_name}:{line}:{column}: {message}")]
    Parse { source_name: String, line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("quotient is not finite dimensional: no stabilisation up to length {0}")]
    InfiniteDimensional(usize),

    #[error("action violates the algebra relations: {0}")]
    RelationViolation(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("operation is undefined on the zero module")]
    ZeroModule,

    /// An exact decision could not be reached (never silently mapped to false).
    #[error("undetermined: {0}")]
    Undetermined(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
