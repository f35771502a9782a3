//! Error type shared by all modules.

/// Errors returned by fallible operations in this crate.
#[derive(Debug, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// A word or filling contained a letter less than 1.
    #[error("letters must be positive integers")]
    ZeroLetter,
    /// A word string was neither a digit string nor a comma-separated list.
    #[error("cannot parse word: {0:?}")]
    WordParse(String),
    /// A filling violated the strict row/column increase condition.
    #[error("filling is not strictly increasing")]
    NotIncreasing,
    /// An operation required a straight shape.
    #[error("shape is not straight")]
    NotStraight,
    /// An operation required a skew (or straight) shape.
    #[error("shape is not skew")]
    NotSkew,
    /// An operation required a hook shape.
    #[error("shape is not a nonempty hook")]
    NotHook,
    /// An operation required an initial tableau or word.
    #[error("labels do not form an initial interval")]
    NotInitial,
    /// A restriction interval was empty.
    #[error("empty interval: {a} > {b}")]
    EmptyInterval { a: u32, b: u32 },
    /// A slide was given an empty or non-corner cell set.
    #[error("slide cells must be a nonempty subset of the available corners")]
    InvalidSlideCells,
    /// A bounded search was given a word longer than the bound.
    #[error("word of length {len} exceeds the bound {bound}")]
    LengthBound { len: usize, bound: usize },
    /// A tableau used labels outside the expected alphabet.
    #[error("tableau has labels outside [{n}] or is not straight")]
    NotInUniverse { n: u32 },
    /// A sequence of row lengths was not weakly decreasing.
    #[error("row lengths must be weakly decreasing")]
    NotPartition,
    /// The inner shape of a skew pair was not contained in the outer shape.
    #[error("inner shape is not contained in the outer shape")]
    InnerNotContained,
    /// Row data did not match the shape it was paired with.
    #[error("row data does not match the shape")]
    RowMismatch,
    /// A partition snapshot was malformed or of an unsupported version.
    #[error("snapshot: {0}")]
    Snapshot(String),
    /// An I/O error during snapshot reading or writing.
    #[error(transparent)]
    Io(#[from] std::io::Error),
    /// A JSON encoding or decoding error.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
