use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("element has no multiplicative inverse")]
    NoInverse,
    #[error("no distinguished group-like element: {0}")]
    NotUnimodularCompatible(String),
    #[error("module axioms fail: {0}")]
    Module(String),
    #[error("extension data invalid: {0}")]
    ExtData(String),
    #[error("braid data invalid: {0}")]
    BraidData(String),
    #[error("object too large: {0} exceeds the limit {1}")]
    SizeLimit(usize, usize),
    #[error("rigidity check failed: {0}")]
    Rigidity(String),
    #[error("not a Hopf-algebra isomorphism: {0}")]
    Iso(String),
    #[error("no ribbon structure: {0}")]
    NotRibbon(String),
    #[error("braiding impossible: {0}")]
    BraidingImpossible(String),
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {pointer}: {msg}")]
    Schema { pointer: String, msg: String },
}
