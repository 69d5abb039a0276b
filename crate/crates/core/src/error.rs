use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank {0} is outside the supported range 0..={max}", max = crate::superspace::MAX_RANK)]
    RankTooLarge(usize),
    #[error("variable index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("explicit antisymmetrization refused for n = {0} (limit 8)")]
    AntisymmetrizerTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid polarization order {0}")]
    InvalidPolarization(u32),
    #[error("degree cap {cap} exceeded (saw total degree {degree})")]
    CapExceeded { cap: u32, degree: u32 },
    #[error("containment violated at bidegree {0}")]
    ContainmentViolation(String),
    #[error("subspace is not stable under the permutation {0}")]
    StabilityViolation(String),
    #[error("composition {parts:?} does not sum to {n}")]
    CompositionMismatch { n: u32, parts: Vec<u32> },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("multiplicity of {partition} is not a nonnegative integer: {value}")]
    BadMultiplicity { partition: String, value: String },
    #[error("result retains a nontrivial denominator: {0}")]
    ResidualDenominator(String),
    #[error("coefficient is not a polynomial in q,t: {0}")]
    NotPolynomial(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
