use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator token `{0}`")]
    UnknownToken(String),
    #[error("generator `{token}` does not exist in rank {n}")]
    GeneratorOutOfRange { token: String, n: usize },
    #[error("rank {n} outside supported range {min}..={max}")]
    RankOutOfRange { n: usize, min: usize, max: usize },
    #[error("invalid signed window: {0}")]
    InvalidWindow(String),
    #[error("parameter l = {l} out of range 0..={n}")]
    LOutOfRange { l: usize, n: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },
    #[error("weight {0:?} is not positive under order {1}")]
    WeightNotPositive((i32, i32), String),
    #[error("operation requires the asymptotic order, got {0}")]
    NotAsymptotic(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("element {0} not found")]
    ElementNotFound(String),
    #[error("basis order is not a permutation of the cell")]
    InvalidBasisOrder,
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("bipartition size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("cells have different types: {0} vs {1}")]
    TypeMismatch(String, String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
