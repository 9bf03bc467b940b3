use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("Clifford deformation mismatch: cannot combine e (sigma=+1) and ep (sigma=-1) generators")]
    DeformationMismatch,
    #[error("pole: denominator vanishes at s = {at}")]
    Pole { at: String },
    #[error("value contains odd powers of s and cannot be specialized in q alone")]
    OddPower,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree shift mismatch: {left} vs {right}")]
    DegreeShiftMismatch { left: i64, right: i64 },
    #[error("operator lowers degree below zero")]
    NegativeDegree,
    #[error("input is not q-harmonic")]
    NotHarmonic,
    #[error("degenerate q-number [{0}]_q = 0")]
    DegenerateBracket(i64),
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("unknown relation name `{0}`")]
    UnknownRelation(String),
    #[error("syntax error at line {line}, column {column}: expected {expected}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("type error: {0}")]
    Lowering(String),
    #[error("limit exceeded: {0} (pass --unsafe-limits to override)")]
    LimitExceeded(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
