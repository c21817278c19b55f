use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not homogeneous in t")]
    NotHomogeneous,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("substitution sends a denominator to zero")]
    SubstitutionPole,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("cochain is not closed under the Hochschild differential")]
    NotClosed,
    #[error("size limit exceeded: {size} > {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("Stasheff identity fails at arity {arity}: {detail}")]
    StasheffViolation { arity: usize, detail: String },
    #[error("obstruction at arity {0} is not closed")]
    ObstructionNotClosed(usize),
    #[error("no primitive found for the obstruction at arity {arity} (order bound {order_bound}); raise the solver bounds")]
    ObstructionUnresolved { arity: usize, order_bound: u32 },
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("Maurer-Cartan equation fails at entry ({row}, {col}): {value}")]
    MCViolation { row: usize, col: usize, value: String },
    #[error("twisted complex failed its Maurer-Cartan prerequisite: {0}")]
    MCPrereqFailed(String),
    #[error("structure is only determined through arity {have}, arity {need} required")]
    InsufficientArity { have: usize, need: usize },
    #[error("invalid twisted complex: {0}")]
    InvalidComplex(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
