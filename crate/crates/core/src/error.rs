use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is not Eisenstein at {p}: {reason}")]
    NotEisenstein { p: u64, reason: String },
    #[error("unsupported base: {0}")]
    UnsupportedBase(String),
    #[error("element has valuation {have}, cannot divide by pi^{want}")]
    NotDivisible { have: String, want: u32 },
    #[error("ghost vector is not in the image of the ghost map (component {0})")]
    NotInImage(usize),
    #[error("variable {0} has no declared Frobenius image")]
    UndeclaredVariable(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("coefficient is not integral: {0}")]
    IntegralityFailure(String),
    #[error("element of nilpotency order {order} exceeds truncation degree {degree}")]
    TruncationUnsound { order: usize, degree: usize },
    #[error("group is not abelian: {0}")]
    NonAbelian(String),
    #[error("group is not a p-group: {0}")]
    NotPGroup(String),
    #[error("no additive certificate: {0}")]
    CertificateMissing(String),
    #[error("size guard: {size} exceeds {limit}")]
    SizeGuard { size: u128, limit: u128 },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
