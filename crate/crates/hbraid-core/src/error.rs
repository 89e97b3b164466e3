use thiserror::Error;

/// Errors reported by word construction, parsing and the algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed token in a braid-word or group-word string. `position` is the
    /// byte offset of the offending token.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Generator index outside `[1, n-1]` (braid letters) or `[1, n]`
    /// (group letters, monomial variables).
    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: u32, strands: u32 },

    /// Two operands live on different strand counts.
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: u32, right: u32 },

    /// The requested rewrite does not match the word at the given site.
    #[error("move not applicable at site {site}")]
    MoveNotApplicable { site: usize },

    /// Strand deletion asked for a keep-set the word's permutation does not
    /// preserve, or one referencing unknown components.
    #[error("invalid keep set: {reason}")]
    InvalidKeepSet { reason: String },

    #[error("images do not form a permutation of 1..=n")]
    InvalidPermutation,

    #[error("monomial has a repeated index")]
    RepeatedIndex,

    /// `chi` and arrow products need two distinct component labels.
    #[error("invalid component pair ({i}, {j}) on {strands} strands")]
    InvalidPair { i: u32, j: u32, strands: u32 },

    /// A letter sign other than `+1`/`-1`, or a signed virtual letter.
    #[error("invalid letter sign {sign}")]
    InvalidSign { sign: i8 },

    /// Substitution hit a generator index with no image supplied.
    #[error("no image supplied for generator {index}")]
    MissingImage { index: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
