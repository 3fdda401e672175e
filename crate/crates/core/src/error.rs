//! Crate-wide error type.

/// Errors produced by graph construction, decoding, sampling and the
/// eigensolver.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graphs have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not congruent to 1 mod 4")]
    NotPaley(u64),
    #[error("{0} is not a power of two")]
    NotPowerOfTwo(u64),
    #[error("n*k must be even (n={n}, k={k})")]
    OddDegreeSum { n: usize, k: usize },
    #[error("degree k={k} out of range for order n={n}")]
    DegreeRange { n: usize, k: usize },
    #[error("construction of order {0} exceeds the size budget {1}")]
    TooLarge(u128, usize),
    #[error("regular graph sampler exhausted its retry budget (n={n}, k={k})")]
    RetryBudget { n: usize, k: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has dimension zero")]
    EmptyMatrix,
    #[error("eigensolver failed to converge within the iteration cap")]
    NoConvergence,
    #[error("histogram is empty")]
    EmptyHistogram,
    #[error("{0}")]
    InvalidParameter(String),
    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
