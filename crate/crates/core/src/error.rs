use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is not allowed here")]
    Zero,
    #[error("expected a positive integer, got {0}")]
    NotPositive(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("{0} exceeds the trial-division limit of 10^12")]
    FactorizationLimit(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("quadratic form must have at least one coefficient")]
    EmptyForm,
    #[error("expected an odd prime, got {0}")]
    EvenPrime(u64),
    #[error("invalid metacyclic parameters: {0}")]
    InvalidMetacyclic(String),
    #[error("group order exceeds the enumeration cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("unknown catalog group {0:?}")]
    UnknownCatalog(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("exponent list must be descending with every entry >= 1: {0:?}")]
    NotDescending(Vec<u32>),
    #[error("cyclotomic level 2^{0} is outside the supported range 1..=20")]
    LevelOutOfRange(u32),
    #[error("{0}")]
    OutOfRange(String),
}
