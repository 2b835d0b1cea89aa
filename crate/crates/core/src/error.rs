use crate::map::Witness;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("composition undefined for `{left}` then `{right}`: {detail}")]
    Composition { left: String, right: String, detail: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("2-cell is not invertible ({0})")]
    NotInvertible(Witness),
    #[error("no canonical comparison: {0}")]
    Coherence(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("axiom `{axiom}` fails: {detail}")]
    Axiom { axiom: String, detail: String },
    #[error("not a mixed morphism: {0}")]
    NotMixed(String),
    #[error("internal disagreement: {0}")]
    Disagreement(String),
    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
