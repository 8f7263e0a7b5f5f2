use thiserror::Error;

/// Errors raised by the algebra kernel.
///
/// Everything here is a usage error: the caller handed in values that do not
/// share a context, or asked an algorithm for something outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("negative argument {0}")]
    NegativeArgument(i64),
    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("leading monomial of the divisor does not divide that of the dividend")]
    NotDivisible,
    #[error("{order} is a local order; use the Mora weak normal form instead of division")]
    LocalOrder { order: crate::monomial::MonomialOrder },
    #[error("{order} is a global order; use division instead of the Mora weak normal form")]
    GlobalOrder { order: crate::monomial::MonomialOrder },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
