use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported partial field: {0}")]
    UnsupportedField(String),

    #[error("values from different partial fields: {0} and {1}")]
    FieldMismatch(String, String),

    #[error("{0} is not invertible in the ambient ring")]
    NotInvertible(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid spanning forest: {0}")]
    InvalidForest(String),

    #[error("matrix is not a P-matrix: {0}")]
    NotPMatrix(String),

    #[error("basis exchange fails for bases {0} and {1} at element {2}")]
    Exchange(String, String, String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("label sets are not disjoint: `{0}` appears twice")]
    DuplicateLabel(String),

    #[error("{0} is not a basis")]
    NotABasis(String),

    #[error("unknown catalog matroid `{0}`")]
    UnknownCatalog(String),

    #[error("ground set of {0} elements exceeds the cap of {1}")]
    GroundTooLarge(usize, usize),

    #[error("invalid branch decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search infeasible: {0}")]
    Infeasible(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("stage `{stage}` failed: {msg}")]
    Stage { stage: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn stage(stage: &str, msg: impl Into<String>) -> Self {
        Error::Stage {
            stage: stage.to_string(),
            msg: msg.into(),
        }
    }
}
