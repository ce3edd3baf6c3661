//! Timed words and timed tableaux over exact rational durations.
//!
//! A timed word is a finite step function with values in an ordered
//! alphabet `{1, ..., n}`; integer durations recover ordinary words. This
//! crate implements Schensted-style row insertion for timed words, the
//! timed plactic monoid with checkable Knuth move certificates, Greene
//! invariants, and the real RSK correspondence on nonnegative rational
//! matrices with three cross-checking algorithms and an inverse.
//!
//! ```
//! use timed_plactic::{insertion_tableau, TimedWord};
//!
//! let w = TimedWord::parse("3^0.8 1^0.5 4^1.1 1^0.9 2^1.6 3^0.7 1^0.7 2^0.2", None).unwrap();
//! let p = insertion_tableau(&w);
//! assert_eq!(p.shape().to_string(), "(3.7, 1.9, 0.9)");
//! ```

#![forbid(unsafe_code)]

pub mod duration;
pub mod error;
pub mod greene;
pub mod insertion;
pub mod knuth;
pub mod random;
pub mod rsk;
pub mod tableau;
pub mod word;

pub use duration::Duration;
pub use error::{Error, Result};
pub use greene::{greene, greene_oracle, DEFAULT_ORACLE_CAP};
pub use insertion::{delete, insert, insertion_tableau, rins, rins_inverse};
pub use knuth::{
    apply_move, equivalent, normalize_with_trace, replay, Direction, KnuthMove, MoveKind,
};
pub use rsk::{
    column_word, gt_partial_sum_check, gt_partial_sum_check_rows, leading_points, row_word, rsk,
    rsk_inverse, rsk_recording, rsk_shadows, rsk_shadows_with, Algorithm, LeadingRule,
    LeadingSequence, NonNegMatrix, RskPair,
};
pub use tableau::{dominates, interleaves, GTPattern, RealPartition, TimedTableau};
pub use word::{IntervalSet, Segment, TimedWord};
