use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("{op}: left operand must have ambient size {expected}, found {found}")]
    AmbientMismatch { op: &'static str, expected: usize, found: usize },
    #[error("composition: source {g_source} does not match target {f_target}")]
    SourceTargetMismatch { f_target: usize, g_source: usize },
    #[error("{indices} indices but {signs} signs")]
    SignLengthMismatch { indices: usize, signs: usize },
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("replacement word for `{0}` mentions an eliminated generator")]
    CyclicDefinition(String),
    #[error("stable letter `{0}` is already a generator")]
    NameCollision(String),
    #[error("exhaustive enumeration of {order}^{generators} assignments exceeds the limit")]
    TooLarge { order: usize, generators: usize },
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("invalid strand count {0}")]
    InvalidStrandCount(usize),
    #[error("index out of range: need 1 <= i < j <= k, got j={j}, i={i}, k={k}")]
    IndexError { j: usize, i: usize, k: usize },
    #[error("strand {r} out of range 1..={k}")]
    StrandOutOfRange { r: usize, k: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid parameter `{key}`: {reason}")]
    BadParam { key: String, reason: String },
}
