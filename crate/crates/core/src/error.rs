use core::fmt;

/// Errors reported by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts must be non-increasing.
    NotNonIncreasing,
    /// A zero part appears before a positive one.
    ZeroBeforePositive,
    /// Sum of parts does not fit in `u32`.
    Overflow,
    /// Text is not a comma-separated list of non-negative integers.
    Parse,
    /// Partitions of different integers were compared or combined.
    MismatchedN { left: u32, right: u32 },
    /// `n` exceeds the configured cap for an operation.
    CapExceeded { n: u32, cap: u32 },
    /// `n` is below the minimum an operation supports.
    TooSmall { n: u32, min: u32 },
    IndexOutOfRange { index: usize, len: usize },
    /// The generator is not an object or attribute of the context.
    UnknownGenerator,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotNonIncreasing => f.write_str("parts are not non-increasing"),
            Error::ZeroBeforePositive => f.write_str("zero part before a positive part"),
            Error::Overflow => f.write_str("sum of parts overflows"),
            Error::Parse => f.write_str("expected comma-separated non-negative integers"),
            Error::MismatchedN { left, right } => {
                write!(f, "partitions of different integers ({left} vs {right})")
            }
            Error::CapExceeded { n, cap } => write!(f, "n = {n} exceeds cap {cap}"),
            Error::TooSmall { n, min } => write!(f, "n = {n} is below the minimum {min}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::UnknownGenerator => f.write_str("generator is not part of the context"),
        }
    }
}

impl core::error::Error for Error {}
