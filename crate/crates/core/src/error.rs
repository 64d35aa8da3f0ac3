use alloc::string::String;
use core::fmt;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The working precision was too small to certify an answer.
    PrecisionExhausted(&'static str),
    /// A Weierstrass model or isogeny datum has vanishing discriminant.
    Singular,
    /// `kernel_translate` was handed something that is not a root.
    NotARoot,
    /// A multiplicative-only operation received another reduction class.
    WrongReductionClass,
    /// The input lies outside the computable range of the formula.
    Unsupported(&'static str),
    /// Malformed or out-of-range input.
    InvalidInput(String),
    /// A semistable-only formula received a curve with additive reduction.
    NonSemistable,
    /// The pairing restricted to a fixed space is degenerate.
    DegenerateRestriction,
    /// A subgroup list does not describe subgroups of the given group.
    MalformedSubgroup,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PrecisionExhausted(w) => write!(f, "precision exhausted: {w}"),
            Error::Singular => f.write_str("singular model"),
            Error::NotARoot => f.write_str("value is not a root of the cubic"),
            Error::WrongReductionClass => f.write_str("reduction is not multiplicative"),
            Error::Unsupported(w) => write!(f, "unsupported case: {w}"),
            Error::InvalidInput(w) => write!(f, "invalid input: {w}"),
            Error::NonSemistable => f.write_str("curve is not semistable"),
            Error::DegenerateRestriction => f.write_str("pairing degenerate on a fixed space"),
            Error::MalformedSubgroup => f.write_str("malformed subgroup"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
