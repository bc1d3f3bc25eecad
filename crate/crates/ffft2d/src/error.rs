use thiserror::Error;

/// Errors raised by code construction, transforms and decoding.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {0} is even; n and m must be odd so that roots of unity exist in GF(2^lambda)")]
    EvenDimension(usize),
    #[error("no extension degree <= {bound} has lcm(n,m) = {lcm} dividing 2^lambda - 1")]
    LambdaTooLarge { lcm: u64, bound: u32 },
    #[error("division by zero in GF(2^lambda)")]
    DivideByZero,
    #[error("{d} does not divide the extension degree {lambda}")]
    NotADivisor { d: u32, lambda: u32 },
    #[error("element of order {expected} not found (got order {actual}); primitive polynomial is not primitive")]
    OrderMismatch { expected: usize, actual: usize },
    #[error("grid dimensions {got:?} do not match expected {expected:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("inverse transform produced a non-binary entry at {0:?}; spectrum violates conjugacy")]
    NonBinaryResult((usize, usize)),
    #[error("frequency index {0:?} out of range for an {1}x{2} code")]
    IndexOutOfRange((usize, usize), usize, usize),
    #[error("indicator index {0:?} is not in the declared zero set")]
    IndicatorNotAZero((usize, usize)),
    #[error("indicator index {0:?} is not a root of any registered error pattern")]
    IndicatorNotPatternRoot((usize, usize)),
    #[error("message has {got} bits but the code carries {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("conjugacy propagation produced a non-binary codeword; this is a bug")]
    InternalNonBinary,
    #[error("code lacks the indicator triple (0,0),(1,0),(0,1); cannot classify error patterns")]
    MissingIndicators,
    #[error("no error placement matches the syndrome")]
    NoSolution,
    #[error("{0} distinct error placements match the syndrome; zero set does not give disjoint syndromes")]
    AmbiguousSolution(usize),
    #[error("enumeration of {0} grids exceeds the limit {1}")]
    TooLarge(u64, u64),
    #[error("encoder-enumerated codewords differ from brute-force enumeration")]
    EnumerationMismatch,
    #[error("pattern {0:?} spans a full row or column and is undetectable; refusing to register")]
    UndetectablePattern(String),
    #[error("pattern {0:?} at {1:?} does not fit inside the grid without wraparound")]
    PatternOutOfBounds(String, (usize, usize)),
    #[error("pattern support must contain the origin (0,0)")]
    MissingOrigin,
    #[error("malformed {what}: {detail}")]
    Parse { what: String, detail: String },
    #[error("code config is inconsistent: {0}")]
    ConfigMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
