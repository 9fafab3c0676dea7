use crate::partition::Partition;
use thiserror::Error;

/// Errors produced by the library.
///
/// Domain errors (bad inputs) map to CLI exit code 2, internal
/// inconsistencies (arithmetic bugs detected by self-checks) to exit code 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("partition {0} is not {1}-bounded")]
    NotKBounded(Partition, usize),
    #[error("({x},{y}) is not a box of {shape}")]
    NotABox { shape: Partition, x: usize, y: usize },
    #[error("sizes differ: |{0}| != |{1}|")]
    SizeMismatch(Partition, Partition),
    #[error("{0} is not a {1}-core")]
    NotACore(Partition, usize),
    #[error("variable counts differ: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("partition {0} has more than {1} parts")]
    TooLongPartition(Partition, usize),
    #[error("root ideal is not upward closed: ({0},{1}) present without ({2},{3})")]
    ClosureViolation(usize, usize, usize, usize),
    #[error("({0},{1}) is not a corner of the root ideal")]
    NotACorner(usize, usize),
    #[error("no root ideal exists for weight {0:?} with k={1}")]
    NonexistentIdeal(Vec<i64>, usize),
    #[error("[{0},{1}] is not a proper cyclic interval for n={2}")]
    ImproperInterval(usize, usize, usize),
    #[error("root ideal is not shallow")]
    NotShallow,
    #[error("weight {0:?} is not a valid lambda for n={1}")]
    InvalidWeight(Vec<i64>, usize),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("polynomial has negative exponents; Schur peel needs a polynomial input")]
    NotPolynomial,
    #[error("Schur peel failed to terminate; residual has {0} terms")]
    NonterminatingResidual(usize),
    #[error("input lies outside the k-Schur span; residual is nonzero at {0}")]
    ResidualNonzero(Partition),
    #[error("input is not homogeneous: degrees {0} and {1} both occur")]
    NotHomogeneous(usize, usize),
    #[error("need at least {need} variables, got {got}")]
    NTooSmall { need: usize, got: usize },
    #[error("size {0} exceeds the oracle limit {1}")]
    MTooLarge(usize, usize),
    #[error("invalid partition syntax: {0}")]
    ParseError(String),
    #[error("invalid split: {0} + {1} != {2}")]
    InvalidSplit(usize, usize, usize),
    #[error("cache error: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code for this error: 2 for domain errors, 3 for internal
    /// inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonterminatingResidual(_) | Error::ResidualNonzero(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
