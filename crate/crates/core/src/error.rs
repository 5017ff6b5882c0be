use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library. Domain errors carry the violated precondition as their message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no content")]
    ZeroContent,
    #[error("{0} undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("properness undefined for constants")]
    ConstantProperness,
    #[error("base-x defined for positive polynomials")]
    NotPositive,
    #[error("digital subtraction requires A ≥ B")]
    DigitalUnderflow,
    #[error("division algorithm requires monic divisor")]
    NotMonic,
    #[error("not a base-b digit polynomial")]
    NotDigitPolynomial,
    #[error("oracle is test-scale only")]
    OracleGuard,
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("digit {digit} lies outside the alphabet of base {base}")]
    OutOfAlphabet { digit: String, base: BigInt },
    #[error("invalid digit: {0}")]
    InvalidDigit(String),
    #[error("not a base-{0} polynomial representative")]
    NotRepresentative(BigInt),
    #[error("unary representative of {value} exceeds the cap of {cap} terms")]
    UnaryCap { value: BigInt, cap: u64 },
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
