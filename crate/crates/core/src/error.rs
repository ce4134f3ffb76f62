use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a unit monomial")]
    NotMonomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid braid: {0}")]
    Braid(String),
    #[error("not a knot: closure has {0} components")]
    NotAKnot(usize),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("{0}")]
    Invalid(String),
    #[error("engine failure: {0}")]
    Engine(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
