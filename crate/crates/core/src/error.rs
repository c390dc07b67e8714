use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("lambda must be nonzero here")]
    ZeroLambda,
    #[error("lambda must be positive for numeric evaluation")]
    NonPositiveLambda,
    #[error("x must be positive for numeric evaluation")]
    NonPositiveX,
    #[error("eps must be positive")]
    NonPositiveEps,
    #[error("precision must be at least {min} bits, got {got}")]
    PrecisionTooLow { min: u32, got: u32 },
    #[error("series exp needs a zero constant term")]
    NonzeroConstantTerm,
    #[error("shift identity needs k >= 1")]
    ZeroShiftPower,
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("k = {k} exceeds the series order {order}")]
    OrderTooSmall { k: usize, order: usize },
    #[error("{name} = {value} exceeds the cap {cap}")]
    BoundTooLarge {
        name: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
