use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix has no columns")]
    NoColumns,

    #[error("k = 0: no nonzero codewords")]
    ZeroDimension,

    #[error("length {len} exceeds the packed kernel limit of {max}")]
    LengthTooLarge { len: usize, max: usize },

    #[error("{what}: {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("coordinate {0} is not covered by any dual codeword")]
    NoLocality(usize),

    #[error("coordinate {coord} has locality {locality} > {target}")]
    LocalityExceeded {
        coord: usize,
        locality: usize,
        target: usize,
    },

    #[error("coordinate {coord} out of range for length {len}")]
    CoordinateOutOfRange { coord: usize, len: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
