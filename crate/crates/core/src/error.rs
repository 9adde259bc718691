use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input.
    Input,
    /// The parameterization violates a hypothesis of the method.
    Hypothesis,
    /// An internal cross-check failed.
    Consistency,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable set: {0}")]
    InvalidVariables(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("polynomials live in different rings or fields")]
    FieldMismatch,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial does not divide exactly")]
    NotDivisible,
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("characteristic {characteristic} is too small for degree {degree}")]
    SmallCharacteristic { characteristic: u64, degree: u32 },
    #[error("invalid parameterization: {0}")]
    InvalidParameterization(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no nonsingular {target}x{target} minor: generic rank is {found}")]
    NoNonsingularMinor { target: usize, found: usize },
    #[error("rank profile {ranks:?} of strand with dims {dims:?} is not generically exact")]
    RankProfile { dims: Vec<usize>, ranks: Vec<usize> },
    #[error("positive-dimensional base locus; divide the polynomials by their gcd {gcd}")]
    PositiveDimensionalBaseLocus { gcd: String },
    #[error("the map is not generically finite (predicted implicit degree {predicted})")]
    NotGenericallyFinite { predicted: i64 },
    #[error("common factor {0} present; resultant methods need base-point-free input")]
    CommonFactor(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("nu = {nu} is below the proven bound {bound}; pass the sub-bound flag to try it anyway")]
    SubBound { nu: u32, bound: u32 },
    #[error("determinant has degree {found} but degree {expected} was predicted")]
    DegreeMismatch { expected: i64, found: u32 },
    #[error("evaluation oracle rejected the implicit equation")]
    OracleFailure,
    #[error("could not find {needed} sample points off the base locus")]
    NoSamplePoints { needed: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Parse { .. } | UnknownVariable(_) | InvalidVariables(_) | InvalidField(_)
            | FieldMismatch | ZeroPolynomial | MissingAssignment(_) | InvalidParameterization(_)
            | Shape(_) | SubBound { .. } | SmallCharacteristic { .. } | Degenerate(_) => {
                ErrorKind::Input
            }
            NotDivisible | NoNonsingularMinor { .. } | RankProfile { .. }
            | PositiveDimensionalBaseLocus { .. } | NotGenericallyFinite { .. }
            | CommonFactor(_) => ErrorKind::Hypothesis,
            DegreeMismatch { .. } | OracleFailure | NoSamplePoints { .. } | Internal(_) => {
                ErrorKind::Consistency
            }
        }
    }
}
