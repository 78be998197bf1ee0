//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Domain violations (a word that is not a parking function where one is
/// required, mismatched basis tags, incomparable poset elements) are errors;
/// *internal* invariant violations (a matching merge producing an invalid
/// decomposition out of valid inputs) are bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation needs a nonempty word.
    #[error("operation requires a nonempty word")]
    EmptyWord,

    /// Letters are positive integers; zero appeared.
    #[error("letter 0 is not allowed (letters are positive integers)")]
    ZeroLetter,

    /// A word failed the parking condition.
    #[error("word [{0}] is not a parking function")]
    NotParking(String),

    /// A proposed left-to-right-minima decomposition is malformed.
    /// Condition 1: the concatenation of the parts (largest minimum first)
    /// is a parking function. Condition 2: every part begins with its
    /// minimum. Condition 3: the part minima strictly increase.
    #[error("invalid decomposition: condition {condition} violated ({detail})")]
    InvalidDecomposition { condition: u8, detail: String },

    /// A matching referred to part indices outside the two decompositions.
    #[error("matching edge ({left}, {right}) out of range for {r} x {s} parts")]
    EdgeOutOfRange {
        left: usize,
        right: usize,
        r: usize,
        s: usize,
    },

    /// Applying a matching produced parts that do not form a valid
    /// decomposition (can happen when the shift is smaller than the maximum
    /// letter of the left factor).
    #[error("matching merge produced an invalid decomposition: {0}")]
    InvalidMerge(String),

    /// Two elements in different bases were combined without an explicit
    /// conversion.
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    /// An order comparison between parking functions of different lengths.
    #[error("length mismatch: {left} vs {right} (order is defined per degree)")]
    LengthMismatch { left: usize, right: usize },

    /// A degree-guarded operation was asked to go past its cap.
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    /// Moebius values are only defined on comparable pairs.
    #[error("{a} is not below {b} in the partial order")]
    NotComparable { a: String, b: String },

    /// Blocks handed to set-partition constructors overlapped.
    #[error("blocks are not pairwise disjoint (element {0} repeats)")]
    OverlappingBlocks(u32),

    /// A set partition of [n] must cover all of 1..=n.
    #[error("blocks do not cover 1..={n} (missing {missing})")]
    IncompleteCover { n: u32, missing: u32 },

    /// Word standardization needs pairwise distinct letters.
    #[error("word has repeated letter {0}; standardization needs distinct letters")]
    RepeatedLetter(u32),

    /// Text input could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Shorthand used by the parsers.
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
