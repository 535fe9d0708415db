use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("not divisible")]
    NotDivisible,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("too many variables ({0}, at most 16 supported)")]
    TooManyVariables(usize),
    #[error("singular matrix")]
    Singular,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}
