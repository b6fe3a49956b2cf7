use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: String, found: String },
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("duplicate operation name `{0}`")]
    DuplicateOperation(String),
    #[error("variable x{0} does not occur")]
    MissingVariable(usize),
    #[error("polynomial is not multilinear: {0}")]
    NotMultilinear(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("value {0} is not representable in the field")]
    NotRepresentable(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed operator word: {0}")]
    MalformedWord(String),
    #[error("unknown catalog entry `{name}`; available: {available}")]
    UnknownEntry { name: String, available: String },
    #[error("degree {0} exceeds the supported range")]
    DegreeTooLarge(usize),
    #[error("operator is not a Rota-Baxter operator for `{0}`")]
    NotRotaBaxter(String),
    #[error("operators do not commute")]
    NotCommuting,
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
    #[error("construction `{name}` needs an algebra with operations {expected}")]
    ConstructionSignature { name: String, expected: String },
    #[error("search space of {0} candidates is too large for an exhaustive scan")]
    SearchTooLarge(u128),
    #[error("construction `{name}` takes {expected} operator(s), got {found}")]
    OperatorCount {
        name: String,
        expected: usize,
        found: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
