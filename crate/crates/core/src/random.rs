//! Seeded generators for words, rows, tableaux and matrices.

use rand::Rng;

use crate::duration::Duration;
use crate::insertion::insertion_tableau;
use crate::rsk::NonNegMatrix;
use crate::tableau::TimedTableau;
use crate::word::TimedWord;

/// A positive duration `p/q` with `1 <= q <= denom_bound`, `1 <= p <= 2q`.
pub fn positive_duration<R: Rng + ?Sized>(rng: &mut R, denom_bound: u64) -> Duration {
    let q = rng.gen_range(1..=denom_bound.max(1));
    let p = rng.gen_range(1..=2 * q);
    Duration::from_ratio(p, q)
}

/// A word with up to `max_segments` raw segments.
pub fn word<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: usize,
    max_segments: usize,
    denom_bound: u64,
) -> TimedWord {
    let count = rng.gen_range(0..=max_segments);
    let raw: Vec<_> = (0..count)
        .map(|_| {
            (
                rng.gen_range(1..=alphabet),
                positive_duration(rng, denom_bound),
            )
        })
        .collect();
    TimedWord::new(alphabet, raw).expect("letters drawn from the alphabet")
}

/// A word whose durations are multiples of `1/denom` with total scaled
/// length at most `max_units`, so it fits the Greene oracle.
pub fn small_word<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: usize,
    max_units: u64,
    denom: u64,
) -> TimedWord {
    let mut units_left = rng.gen_range(0..=max_units);
    let mut raw = Vec::new();
    while units_left > 0 {
        let units = rng.gen_range(1..=units_left.min(3));
        units_left -= units;
        raw.push((
            rng.gen_range(1..=alphabet),
            Duration::from_ratio(units, denom),
        ));
    }
    TimedWord::new(alphabet, raw).expect("letters drawn from the alphabet")
}

/// A weakly increasing word.
pub fn row<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: usize,
    max_segments: usize,
    denom_bound: u64,
) -> TimedWord {
    let mut letters: Vec<usize> = (0..rng.gen_range(0..=max_segments))
        .map(|_| rng.gen_range(1..=alphabet))
        .collect();
    letters.sort_unstable();
    let raw: Vec<_> = letters
        .into_iter()
        .map(|c| (c, positive_duration(rng, denom_bound)))
        .collect();
    TimedWord::new(alphabet, raw).expect("letters drawn from the alphabet")
}

/// A tableau obtained as the insertion tableau of a random word.
pub fn tableau<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: usize,
    max_segments: usize,
    denom_bound: u64,
) -> TimedTableau {
    insertion_tableau(&word(rng, alphabet, max_segments, denom_bound))
}

/// An `m x n` matrix with entries `p/q`, `q <= denom_bound`, each entry
/// independently zero with probability `zero_prob`.
pub fn matrix<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    n: usize,
    denom_bound: u64,
    zero_prob: f64,
) -> NonNegMatrix {
    let mut a = NonNegMatrix::zeros(m, n).expect("m, n >= 1");
    for i in 0..m {
        for j in 0..n {
            if !rng.gen_bool(zero_prob) {
                a.set(i, j, positive_duration(rng, denom_bound));
            }
        }
    }
    a
}

/// An `m x n` matrix with integer entries in `0..=max_entry`.
pub fn integer_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    n: usize,
    max_entry: u64,
) -> NonNegMatrix {
    let mut a = NonNegMatrix::zeros(m, n).expect("m, n >= 1");
    for i in 0..m {
        for j in 0..n {
            a.set(i, j, Duration::from_integer(rng.gen_range(0..=max_entry)));
        }
    }
    a
}
