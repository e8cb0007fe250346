use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation of 1..=n: {0}")]
    NotAPermutation(String),
    #[error("permutation contains [{anchor}] and has no {anchor}-encoding")]
    ContainsAnchor { anchor: &'static str },
    #[error("invalid binary word: {0}")]
    InvalidWord(String),
    #[error("invalid circled composition: {0}")]
    InvalidComposition(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("methods disagree at n={n}: {left}={left_value} but {right}={right_value}")]
    MethodMismatch {
        n: usize,
        left: String,
        left_value: String,
        right: String,
        right_value: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
