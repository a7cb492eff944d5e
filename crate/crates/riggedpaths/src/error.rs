//! Crate-wide error type.
//!
//! Variants split into two families used by callers to distinguish exit
//! behaviour: malformed input (bad letters, bad JSON shape) versus data that
//! parses but violates a structural invariant (ballot failures, height
//! overflows, inadmissible riggings).

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A polynomial coefficient left the `i64` range. Arithmetic aborts
    /// rather than wrapping.
    #[error("polynomial coefficient overflow")]
    CoefficientOverflow,

    /// Gaussian binomial with bottom index exceeding the top one.
    #[error("gaussian binomial undefined: bottom {bottom} exceeds top {top}")]
    BinomialDomain { top: usize, bottom: usize },

    /// A word letter outside the expected alphabet.
    #[error("letter {letter} at position {position} is not in the alphabet")]
    BadLetter { position: usize, letter: u8 },

    /// Ballot (lattice) condition failed: some prefix holds more copies of a
    /// letter than of its predecessor.
    #[error("lattice condition fails at position {0}")]
    NotLatticeWord(usize),

    /// A prefix height exceeds the level bound.
    #[error("height {height} at position {position} exceeds level {level}")]
    HeightExceedsLevel {
        position: usize,
        height: usize,
        level: usize,
    },

    /// Vacuum-sector operation applied to an unbalanced word.
    #[error("word is not in the vacuum sector (zeros and ones differ in count)")]
    NotVacuum,

    /// Operation requiring an even word length received an odd one.
    #[error("length {0} is odd, an even length is required")]
    OddLength(usize),

    /// Height profile with a step other than +1 or -1.
    #[error("height step at position {0} is not +1 or -1")]
    BadHeightStep(usize),

    /// Height profile that starts off the floor or dips below it.
    #[error("height profile must start at 0 and stay nonnegative")]
    BadHeightProfile,

    /// Rows of a filling fail standardness (shape, row/column growth, or the
    /// entries are not exactly 1..n).
    #[error("filling is not a standard tableau: {0}")]
    NotStandard(&'static str),

    /// A rigged-configuration row longer than the level bound.
    #[error("row length {length} exceeds level {level}")]
    RowExceedsLevel { length: usize, level: usize },

    /// More boxes in the configuration than its word length can support.
    #[error("configuration has {cells} cells but size {size}")]
    TooManyCells { cells: usize, size: usize },

    /// Vacancy numbers or riggings violate admissibility.
    #[error("inadmissible configuration: {0}")]
    Inadmissible(&'static str),
}
