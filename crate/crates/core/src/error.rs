use thiserror::Error;

/// Errors raised by the algebraic kernels and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("multinomial parts {a} + {b} + {c} do not sum to {k}")]
    PartitionMismatch { k: i64, a: i64, b: i64, c: i64 },
    #[error("polynomial is not numerical: finite difference {index} is {value}")]
    NotNumerical { index: usize, value: String },
    #[error("polynomial has a negative exponent t^{0}")]
    NegativeExponent(i64),
    #[error("element does not lie in H = F[1/t]")]
    NotInH,
    #[error("slot {slot} out of range for a tensor of arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("{0} is not prime")]
    InvalidPrime(u64),
    #[error("modulus {q} exceeds the size guard {limit}")]
    SizeGuard { q: u64, limit: u64 },
    #[error("iterated images did not stabilize within {steps} steps")]
    NotStabilized { steps: usize },
    #[error("moduli {0} and {1} differ")]
    ModulusMismatch(u64, u64),
    #[error("coface index {index} out of range for degree {degree}")]
    FaceIndexOutOfRange { index: usize, degree: usize },
    #[error("codegeneracy index {index} out of range for degree {degree}")]
    DegeneracyIndexOutOfRange { index: usize, degree: usize },
    #[error("coefficient of x^{i} y^{j} is not determined by a law truncated at degree {degree}")]
    TruncationExceeded { i: usize, j: usize, degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("`{atom}` is not allowed in the {context} context")]
    ContextViolation { atom: String, context: String },
    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
