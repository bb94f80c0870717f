//! Error and violation types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a signed permutation: {0}")]
    BadWord(String),

    #[error("label {0} already present")]
    DuplicateLabel(u32),

    #[error("label {0} not present")]
    MissingLabel(u32),

    #[error("invalid tableau: {0}")]
    InvalidTableau(#[from] Violation),

    #[error("{op} does not apply to {word}")]
    NotApplicable { op: String, word: String },

    #[error("enumeration cap exceeded: n = {n}, cap = {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("cannot reverse an empty pair")]
    EmptyPair,

    #[error("tableau pair mismatch: {0}")]
    PairMismatch(String),

    #[error("label set is not a cycle: {0}")]
    NotACycle(String),

    #[error(
        "moving this core-open cycle alone does not leave a tableau; \
         the whole core-open family must move together (see promote)"
    )]
    CoreOpenFamily,

    #[error("parse error: {0}")]
    Parse(String),
}

/// Structured reasons a candidate tableau can fail validation.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("cell ({0}, {1}) is covered twice")]
    Overlap(usize, usize),

    #[error("domino {0} overlaps the core")]
    CoreOverlap(u32),

    #[error("occupied cells do not form a Young diagram near row {0}")]
    NotYoung(usize),

    #[error("labels are not exactly 1..n")]
    Labels,

    #[error("labels do not increase weakly along rows and columns at ({0}, {1})")]
    Ordering(usize, usize),
}
