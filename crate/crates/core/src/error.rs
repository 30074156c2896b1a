use thiserror::Error;

/// Errors produced by ledger evaluation, spectral extraction and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("no piece of generator `{generator}` covers the point in cell `{cell}`")]
    NoPieceFound { generator: String, cell: String },

    #[error("piece image left the codomain cell `{cell}` (corrupt ledger)")]
    ImageOutsideCodomain { cell: String },

    #[error("invariant subspace of the sink-package iteration is zero")]
    ZeroInvariantSubspace,

    #[error("no verified eigenpair within the iteration budget (max_k = {max_k})")]
    BudgetExhausted { max_k: usize },

    #[error("letter budget exceeded: the run needs {needed} letter applications, wall is {wall}")]
    LetterBudgetExceeded { needed: u64, wall: u64 },

    #[error("the extracted eigenpair failed point-level verification")]
    VerificationFailed,

    #[error("Sturm endpoint is a root of the polynomial")]
    EndpointIsRoot,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown cell `{0}`")]
    UnknownCell(String),

    #[error("word syntax error: {0}")]
    WordSyntax(String),

    #[error("point is outside its declared cell")]
    PointOutsideCell,

    #[error("surface complexity 3g-3+p must be at least 1 (got {0})")]
    NonpositiveComplexity(i64),

    #[error("no surface parameters on the ledger and no Q override supplied")]
    MissingQ,

    #[error("ledger parse error: {0}")]
    Parse(String),

    #[error("ledger validation error: {0}")]
    Validation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
