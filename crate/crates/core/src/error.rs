use thiserror::Error;

use crate::algebra::Generator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{input}`: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(input: &str, reason: &str) -> Self {
        ParseError {
            input: input.to_string(),
            reason: reason.to_string(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("truncation overflow: {generator} applied to {term} leaves the degree cap {cap} (raise --cap)")]
    TruncationOverflow {
        generator: Generator,
        term: String,
        cap: u32,
    },
    #[error("claim violation at step {step}: applied {generator}, predicted degree {predicted}, got {actual}")]
    ClaimViolation {
        step: usize,
        generator: Generator,
        predicted: String,
        actual: String,
    },
    #[error("invalid Whittaker datum: {0}")]
    Homomorphism(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
