use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {token:?} as an integer")]
    ParseInt { token: String },
    #[error("entry at position {position} is zero")]
    ZeroEntry { position: usize },
    #[error("absolute value {value} appears more than once")]
    RepeatedAbsValue { value: u32 },
    #[error("absolute value {value} lies outside [1, {n}]")]
    AbsValueOutOfRange { value: u32, n: usize },
    #[error("word has repeated entry {value}")]
    RepeatedEntry { value: i32 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("skew sum is undefined: operand entries do not share one sign")]
    MixedSigns,
    #[error("expected a permutation without negative entries, got {perm}")]
    NegativeEntry { perm: String },
    #[error("{perm} is not separable")]
    NotSeparable { perm: String },
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("pattern of length {pattern} is longer than the permutation ({perm})")]
    PatternTooLong { pattern: usize, perm: usize },
    #[error("polynomial is not palindromic about degree {center}")]
    NotPalindromic { center: usize },
    #[error("polynomial has no gamma expansion with center {center}")]
    NonGammaRepresentable { center: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("rank {n} exceeds the brute-force oracle bound {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },
    #[error("permutation must be nonempty")]
    EmptyPermutation,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
