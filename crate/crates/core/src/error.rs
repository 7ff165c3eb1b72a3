use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("ideal must be squarefree")]
    NotSquarefree,

    #[error("ideal must be nonzero and proper")]
    DegenerateIdeal,

    #[error("negative exponent where a nonnegative one is required")]
    NegativeExponent,

    #[error("face {face:?} is not in the complex")]
    NotAFace { face: Vec<usize> },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("unsupported symbolic expansion order {0} (expected 2 or 3)")]
    UnsupportedOrder(u32),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("betti strand truncated at degree {max_degree}; increase max_degree")]
    Truncated { max_degree: u32 },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("too many variables ({0}); at most {max} supported", max = crate::MAX_VARS)]
    TooManyVariables(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
