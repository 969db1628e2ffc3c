use thiserror::Error;

/// Errors raised while building systems, words and polytopes.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("Coxeter matrix does not define a finite group: {0}")]
    NonFinite(String),
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("not a Coxeter word (each generator exactly once): {0}")]
    NotCoxeterWord(String),
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
    #[error("unknown type code `{0}`")]
    UnknownType(String),
    #[error("Gram matrix is singular")]
    SingularGram,
    #[error("invalid base point: {0}")]
    InvalidBasePoint(String),
    #[error("halfspace system is unbounded or degenerate: {0}")]
    UnboundedOrDegenerate(String),
    #[error("halfspace label and geometry disagree: {0}")]
    LabelGeometryMismatch(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("system is irreducible")]
    NotReducible,
    #[error("system is reducible; use the reducible-case verifier")]
    NotIrreducible,
    #[error("export failed: {0}")]
    Export(String),
}

pub type Result<T> = std::result::Result<T, Error>;
