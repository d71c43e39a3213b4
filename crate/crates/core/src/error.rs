use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-arithmetic pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A positive integer argument was zero.
    ZeroArgument(&'static str),
    /// The map degree must be at least 2.
    InvalidMapDegree(u32),
    ZeroPolynomial,
    ConstantPolynomial,
    DivisionByZeroPoly,
    NonExactDivision,
    ParentMismatch,
    NotQuadraticIrrational,
    /// A degree-2 polynomial was required.
    NotQuadratic {
        degree: usize,
    },
    /// Periods must be at least 1; some operations require at least 2.
    InvalidPeriod(u32),
    /// A rational point was passed where an irrational one is required.
    RationalPoint,
    /// The input is outside what the exact algorithms can certify.
    Unsupported(String),
    /// The orbit did not return to its starting point within `steps` iterations.
    NonPeriodic {
        steps: usize,
    },
    /// The dynatomic polynomial would exceed the supported degree.
    DegreeGuard {
        d: u32,
        n: u32,
        limit: u64,
    },
    Parse(String),
    /// An internal consistency check failed. Always a bug.
    Invariant(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroArgument(what) => write!(f, "{what} must be positive"),
            Error::InvalidMapDegree(d) => write!(f, "map degree must be at least 2, got {d}"),
            Error::ZeroPolynomial => f.write_str("zero polynomial not allowed here"),
            Error::ConstantPolynomial => f.write_str("polynomial must have positive degree"),
            Error::DivisionByZeroPoly => f.write_str("division by the zero polynomial"),
            Error::NonExactDivision => {
                f.write_str("polynomial division leaves a nonzero remainder")
            }
            Error::ParentMismatch => f.write_str("elements belong to different quotient algebras"),
            Error::NotQuadraticIrrational => f.write_str("quadratic polynomial has rational roots"),
            Error::NotQuadratic { degree } => {
                write!(f, "expected a quadratic polynomial, got degree {degree}")
            }
            Error::InvalidPeriod(n) => write!(f, "unsupported period {n}"),
            Error::RationalPoint => f.write_str("operation requires a nonrational point"),
            Error::Unsupported(msg) => write!(f, "unsupported input: {msg}"),
            Error::NonPeriodic { steps } => {
                write!(f, "orbit did not close within {steps} iterations")
            }
            Error::DegreeGuard { d, n, limit } => write!(
                f,
                "dynatomic polynomial for d = {d}, N = {n} exceeds the degree limit {limit}"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Invariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
