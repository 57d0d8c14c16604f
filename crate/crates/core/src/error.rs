use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("invalid prime {0}: need a prime p with 5 <= p < 2^31")]
    InvalidPrime(u64),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("denominator divisible by {0}")]
    DenominatorDivisibleByPrime(u64),

    #[error("projective point needs at least one nonzero coordinate")]
    ZeroPoint,

    #[error("duplicate point at index {0}")]
    DuplicatePoint(usize),

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error("configuration degenerate for requested r = {0}")]
    DegenerateConfiguration(usize),

    #[error("excluded point belongs to the vanishing set")]
    PointInSet,

    #[error("vertex lies in the base subspace")]
    VertexInSubspace,

    #[error("not admissible for the constructive path: {0}")]
    NotAdmissible(String),

    #[error("no certificate found (case {case})")]
    NoCertificate { case: String },

    #[error("point not on hypersurface")]
    NotOnHypersurface,

    #[error("nodes not rational; use scan ({0})")]
    NodesNotRational(String),

    #[error("wrong constituent: {0}")]
    Constituent(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("Hirzebruch index mismatch: {0} vs {1}")]
    HirzebruchMismatch(u32, u32),
}

pub type Result<T> = std::result::Result<T, Error>;
