use thiserror::Error;

/// Errors surfaced by the algebra kernel.
///
/// Every failure mode that a caller can trigger with well-typed but invalid
/// input gets its own variant so the CLI can map them to stable exit codes.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} exceeds the supported bound 2^31")]
    CharacteristicTooLarge(u64),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("too many variables: {0} (limit {1})")]
    TooManyVariables(usize, usize),

    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("expected a homogeneous input: {0}")]
    NotHomogeneous(String),

    #[error("empty generating set where at least one generator is required")]
    EmptyGenerators,

    #[error("parameter violation: {0}")]
    Parameter(String),

    #[error("module shape mismatch: {0}")]
    ModuleShape(String),

    #[error("computation exceeded configured bound: {0}")]
    BoundExceeded(String),

    #[error("regular-sequence check failed at position {position}: element has a nonzero annihilator")]
    RegularityFailure { position: usize },

    #[error("rank is undefined: {0}")]
    RankUndefined(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
