use thiserror::Error;

use crate::shape::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("inner partition {inner:?} is not contained in outer partition {outer:?}")]
    InnerNotContained { outer: Vec<u32>, inner: Vec<u32> },
    #[error("cell set is not a skew shape")]
    NotASkewShape,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("filling does not match the shape: {0}")]
    ShapeMismatch(String),
    #[error("not a semistandard tableau")]
    NotSemistandard,
    #[error("not a standard tableau: {0}")]
    NotStandard(String),
    #[error("entry {k} out of range 1..={n}")]
    EntryOutOfRange { k: usize, n: usize },
    #[error("expected a straight shape")]
    NotStraight,
    #[error("{cell} is not a legal {direction} slide cell")]
    IllegalSlide { cell: Cell, direction: &'static str },
    #[error("extension violated: {0}")]
    NotAnExtension(String),
    #[error("sequence is not weakly increasing: {0:?}")]
    NotWeaklyIncreasing(Vec<u64>),
    #[error("expected {expected} parts, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("not a permutation of 1..=n: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("enumeration limit exceeded: {size} > {limit}")]
    LimitExceeded { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
