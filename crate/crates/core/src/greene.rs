//! Greene invariants `a_k(w)`: the largest total length of `k` pairwise
//! disjoint subwords of `w` that are rows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::duration::Duration;
use crate::error::{Error, Result};
use crate::insertion::insertion_tableau;
use crate::word::TimedWord;

/// Default bound on the integer-scaled length accepted by the oracle.
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// `a_k(w)`, read off the shape of the insertion tableau.
pub fn greene(word: &TimedWord, k: usize) -> Duration {
    insertion_tableau(word).shape().partial_sum(k)
}

/// `a_k(w)` by exhaustive search, independent of insertion.
///
/// The word is scaled by the common denominator of its durations into a
/// word of unit letters; scaling maps row subwords to row subwords, so
/// `a_k` scales with it. Every assignment of unit letters to `k` slots
/// (or to none) with each slot weakly increasing is explored; assignments
/// are merged when their slots end in the same multiset of letters, which
/// leaves the maximum unchanged.
pub fn greene_oracle(word: &TimedWord, k: usize, cap: usize) -> Result<Duration> {
    let (letters, scale) = unit_letters(word, cap)?;
    let best = max_rows_cover(&letters, k);
    Ok(Duration::new(BigRational::new(BigInt::from(best), scale)).expect("nonnegative"))
}

/// Expands `word` into unit letters after multiplying by the lcm of the
/// denominators. Returns the letters and the lcm.
fn unit_letters(word: &TimedWord, cap: usize) -> Result<(Vec<usize>, BigInt)> {
    let scale = word
        .segments()
        .iter()
        .fold(BigInt::one(), |acc, s| acc.lcm(s.duration.denom()));
    let mut letters = Vec::new();
    let mut total = BigInt::from(0);
    for segment in word.segments() {
        let units = segment.duration.numer() * (&scale / segment.duration.denom());
        total += &units;
        if total > BigInt::from(cap) {
            let size = word
                .segments()
                .iter()
                .map(|s| s.duration.numer() * (&scale / s.duration.denom()))
                .sum::<BigInt>();
            return Err(Error::OracleTooLarge {
                size: size.to_string(),
                cap,
            });
        }
        let units = units.to_usize().expect("bounded by cap");
        letters.extend(std::iter::repeat_n(segment.letter, units));
    }
    Ok((letters, scale))
}

/// Maximum number of unit letters coverable by `k` disjoint weakly
/// increasing subsequences. Slot tails are kept sorted with 0 for an
/// unused slot.
fn max_rows_cover(letters: &[usize], k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let mut states: HashMap<Vec<usize>, u64> = HashMap::new();
    states.insert(vec![0; k], 0);
    for &letter in letters {
        let mut next: HashMap<Vec<usize>, u64> = HashMap::with_capacity(states.len() * 2);
        for (tails, count) in &states {
            relax(&mut next, tails.clone(), *count);
            let mut tried = None;
            for slot in 0..k {
                if tails[slot] <= letter && tried != Some(tails[slot]) {
                    tried = Some(tails[slot]);
                    let mut grown = tails.clone();
                    grown[slot] = letter;
                    grown.sort_unstable();
                    relax(&mut next, grown, count + 1);
                }
            }
        }
        states = next;
    }
    states.values().copied().max().unwrap_or(0)
}

fn relax(states: &mut HashMap<Vec<usize>, u64>, key: Vec<usize>, value: u64) {
    let entry = states.entry(key).or_insert(value);
    if *entry < value {
        *entry = value;
    }
}
