use thiserror::Error;

/// Errors raised by scalar arithmetic in cyclotomic fields.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the configured limit {1}")]
    ConductorLimit(u64, u64),
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("malformed rational literal `{0}`")]
    BadRational(String),
}

/// Errors raised while constructing or analyzing algebras.
#[derive(Debug, Clone, Error)]
pub enum HopfError {
    #[error(transparent)]
    Scalar(#[from] CycError),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("Hopf axiom `{axiom}` fails at basis indices {witness:?}")]
    AxiomFailure { axiom: String, witness: Vec<usize> },
    #[error("algebra is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("radical nonzero")]
    RadicalNonzero,
    #[error("splitting conductor too small (tried {0}); raise the conductor and retry")]
    SplittingConductorTooSmall(u64),
    #[error("element does not belong to the expected parent algebra")]
    ParentMismatch,
    #[error("functional is not cocommutative")]
    NotCocommutative,
    #[error("subspace is not closed: {0}")]
    NotClosed(String),
    #[error("subalgebra is not normal; the requested operation requires normality")]
    NotNormal,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("independent verdicts disagree: {0}")]
    VerdictDisagreement(String),
    #[error("internal construction bug: {0}")]
    Internal(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;
