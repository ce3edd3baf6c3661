use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet 1..={alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("negative duration {0}")]
    NegativeDuration(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("interval [{start}, {end}) is empty or outside [0, {length})")]
    IntervalOutOfBounds {
        start: String,
        end: String,
        length: String,
    },

    #[error("intervals overlap or are out of order at index {0}")]
    OverlappingIntervals(usize),

    #[error("restriction index {k} outside 0..={alphabet}")]
    RestrictOutOfRange { k: usize, alphabet: usize },

    #[error("word is not a timed row: {0}")]
    NotARow(String),

    #[error("not a timed tableau: row {lower} does not lie under row {upper}")]
    NotATableau { lower: usize, upper: usize },

    #[error("not a real partition: {0}")]
    NotAPartition(String),

    #[error("interleaving violated: {0}")]
    Interleaving(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("reconstruction mismatch: {0}")]
    ReconstructionMismatch(String),

    #[error("invalid Knuth move: {0}")]
    InvalidMove(String),

    #[error("Greene oracle instance has scaled length {size} above the cap {cap}")]
    OracleTooLarge { size: String, cap: usize },

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("the zero matrix has no leading points")]
    ZeroMatrix,

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),
}
