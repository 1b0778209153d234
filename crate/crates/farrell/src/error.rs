use thiserror::Error;

/// Errors shared across the crate.
///
/// Domain violations (a composite where a prime is required, a j that is
/// not an odd divisor of y, ...) are reported through this enum; internal
/// invariant breaks inside an algorithm panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("multiplicative order of {a} mod {p} is undefined: residue is 0")]
    ZeroResidue { a: i128, p: u64 },
    #[error("{d} does not divide {m}")]
    NotDivisor { d: u64, m: u64 },
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("n must be nonzero")]
    ZeroN,
    #[error("p = {p} must divide n")]
    PrimeNotDividingN { p: u64 },
    #[error("j = {j} is not an odd divisor of y = {y}")]
    InvalidStep { j: u64, y: u64 },
    #[error("cycle length {c} does not divide j = {j}")]
    CycleLength { c: u64, j: u64 },
    #[error("cycle pair ({c}, {d}) must have positive entries")]
    EmptyCycle { c: u64, d: u64 },
    #[error("permutation dimension {dim} exceeds the oracle guard {guard}")]
    GuardExceeded { dim: usize, guard: usize },
    #[error("{root} is not a primitive root of unity of order {j} mod {p}")]
    NotPrimitiveRoot { root: u64, j: u64, p: u64 },
    #[error("wedge degree {m} is out of range 0..={dim}")]
    WedgeDegree { m: usize, dim: usize },
    #[error(
        "dimension routes disagree for j = {j} at degree {degree}: \
         bigraded route gives {bigraded}, residue sums give {residue}"
    )]
    RouteMismatch {
        j: u64,
        degree: usize,
        bigraded: String,
        residue: String,
    },
    #[error("duplicate prime factor {0}")]
    DuplicateFactor(u64),
    #[error("prime factor {q} has multiplicity 0")]
    ZeroMultiplicity { q: u64 },
    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
