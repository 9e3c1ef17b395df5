use thiserror::Error;

/// Errors raised by field construction, linear algebra, ratio evaluation and
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field order {p}^{m} exceeds the maximum of {max}")]
    DegreeTooLarge { p: u64, m: u32, max: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("subfield order {q} does not satisfy q^2 = {order}")]
    BadSubfieldOrder { q: u64, order: u64 },
    #[error("symplectic form needs an even ambient length, got {0}")]
    OddAmbientForSymplectic(usize),
    #[error("Hermitian form needs a field of square order, got {0}")]
    FieldNotASquareForHermitian(u64),
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficientGenerator { rows: usize, rank: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parameters out of range: {0}")]
    BadRange(String),
    #[error("factor index {index} outside 1..={max}")]
    BadIndex { index: u32, max: u32 },
    #[error("ratio factor undefined: {0}")]
    OutOfValidRange(String),
    #[error("k - l = {0} is odd")]
    ParityViolation(i64),
    #[error("quadratic character needs odd characteristic, got q = {0}")]
    EvenCharacteristic(u64),
    #[error("bad asymptotic regime: {0}")]
    BadRegime(String),
    #[error("enumeration of about {estimated} subspaces exceeds the work limit {limit}")]
    WorkLimitExceeded { estimated: u128, limit: u128 },
    #[error("Gram matrix has odd rank {0}")]
    OddGramRank(usize),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
}

pub type Result<T> = std::result::Result<T, Error>;
