use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    Domain(String),
    /// A coefficient at or beyond the truncation order was requested.
    Truncated { power: i64, order: i64 },
    /// Malformed generating-function expression; `offset` is a byte offset.
    Syntax { offset: usize, message: String },
    /// The denominator has roots other than `x = ±1`.
    UnsupportedDenominator(String),
    /// Abel evaluation requested for a function with a pole at `x = 1`.
    PoleAtOne,
    /// Two routes that must agree did not.
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Truncated { power, order } => write!(
                f,
                "coefficient of power {power} is unknown (series truncated at order {order})"
            ),
            Error::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            Error::UnsupportedDenominator(d) => write!(
                f,
                "unsupported denominator {d}: only (1-x)^a (1+x)^b up to a constant is allowed"
            ),
            Error::PoleAtOne => write!(f, "generating function has a pole at x = 1"),
            Error::Consistency(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
