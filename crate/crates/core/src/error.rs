use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside supported range 2..=26")]
    DegreeOutOfRange(u32),
    #[error("element {bits:#x} does not fit in {m} bits")]
    ElementOutOfRange { bits: u32, m: u32 },
    #[error("h={h} outside 1..={max} for m={m}")]
    HOutOfRange { m: u32, h: u32, max: u32 },
    #[error("parity must be 0 or 1, got {0}")]
    BadParity(u8),
    #[error("{0} is not a coset leader")]
    NotALeader(u64),
    #[error("epsilon({a}, {t}) requires 1 <= a <= 2^t - 1")]
    EpsilonDomain { a: u64, t: u32 },
    #[error("odd part of zero is undefined")]
    OddPartOfZero,
    #[error("expected an odd residue, got {0}")]
    EvenResidue(u64),
    #[error("{a} is not a unit modulo {n}")]
    NotAUnit { a: u64, n: u64 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("0 is already in the defining set; adjoining it again would repeat a root")]
    RepeatedRoot,
    #[error("coset size {size} does not divide m*rho = {product}")]
    CorruptTable { size: u64, product: u64 },
    #[error("dimension {k} exceeds the exhaustive limit {limit}")]
    DimensionTooLarge { k: usize, limit: usize },
}
