//! Timed row insertion, its inverse, tableau insertion and deletion.

use crate::duration::Duration;
use crate::error::{Error, Result};
use crate::tableau::{dominates, interleaves, RealPartition, TimedTableau};
use crate::word::TimedWord;

/// Where a single-letter insertion `c^t` lands in a row `u`.
///
/// With `t0` the first time `u` exceeds `c`, the row splits as
/// `u = prefix · bumped · suffix` and the new row is `prefix · c^t · suffix`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LetterInsertion {
    pub prefix: TimedWord,
    pub bumped: TimedWord,
    pub suffix: TimedWord,
}

/// One step of row insertion of `c^t` into the row `u`.
pub(crate) fn insert_letter(u: &TimedWord, letter: usize, t: &Duration) -> LetterInsertion {
    let n = u.alphabet();
    let mut t0 = Duration::zero();
    let mut found = false;
    for segment in u.segments() {
        if segment.letter > letter {
            found = true;
            break;
        }
        t0 += &segment.duration;
    }
    let length = u.len();
    if !found {
        return LetterInsertion {
            prefix: u.clone(),
            bumped: TimedWord::empty(n),
            suffix: TimedWord::empty(n),
        };
    }
    let tail = &length - &t0;
    // ties bump the whole tail
    let cut = if tail > *t { &t0 + t } else { length.clone() };
    let slice = |a: &Duration, b: &Duration| u.slice(a, b).expect("cut points lie inside u");
    LetterInsertion {
        prefix: slice(&Duration::zero(), &t0),
        bumped: slice(&t0, &cut),
        suffix: slice(&cut, &length),
    }
}

/// `RINS(u, v) = (bumped, new_row)`.
pub fn rins(u: &TimedWord, v: &TimedWord) -> Result<(TimedWord, TimedWord)> {
    u.assert_row()?;
    v.assert_row()?;
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: u.alphabet(),
            right: v.alphabet(),
        });
    }
    let n = u.alphabet();
    let mut bumped = TimedWord::empty(n);
    let mut row = u.clone();
    for segment in v.segments() {
        let step = insert_letter(&row, segment.letter, &segment.duration);
        bumped = bumped.concat(&step.bumped)?;
        let letter = TimedWord::letter(n, segment.letter, segment.duration.clone())?;
        row = TimedWord::concat_all(n, [&step.prefix, &letter, &step.suffix])?;
    }
    Ok((bumped, row))
}

/// The unique `(u, v)` with `l(u) = r` and `RINS(u, v) = (bumped, new_row)`.
pub fn rins_inverse(
    bumped: &TimedWord,
    new_row: &TimedWord,
    r: &Duration,
) -> Result<(TimedWord, TimedWord)> {
    bumped.assert_row()?;
    new_row.assert_row()?;
    if bumped.alphabet() != new_row.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: new_row.alphabet(),
            right: bumped.alphabet(),
        });
    }
    let new_len = new_row.len();
    if *r > new_len {
        return Err(Error::Precondition(format!(
            "r = {} exceeds the new row length {}",
            r, new_len
        )));
    }
    if bumped.len() > *r {
        return Err(Error::Precondition(format!(
            "bumped length {} exceeds r = {}",
            bumped.len(),
            r
        )));
    }
    if !dominates(new_row, bumped)? {
        return Err(Error::Precondition(format!(
            "{} does not lie under {}",
            new_row, bumped
        )));
    }
    let (head, tail) = new_row.split_at(r)?;
    let (v1_sharp, u1_sharp) = rins(&head.sharp(), &bumped.sharp())?;
    let u = u1_sharp.sharp();
    let v = v1_sharp.sharp().concat(&tail)?;
    let (check_bumped, check_row) = rins(&u, &v)?;
    if check_bumped != *bumped || check_row != *new_row {
        return Err(Error::ReconstructionMismatch(format!(
            "RINS({}, {}) = ({}, {})",
            u, v, check_bumped, check_row
        )));
    }
    Ok((u, v))
}

/// `INSERT(T, v)`: cascades row insertion up the rows of `T`.
pub fn insert(tableau: &TimedTableau, v: &TimedWord) -> Result<TimedTableau> {
    v.assert_row()?;
    if v.alphabet() != tableau.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: tableau.alphabet(),
            right: v.alphabet(),
        });
    }
    let mut rows = Vec::with_capacity(tableau.num_rows() + 1);
    let mut carry = v.clone();
    for row in tableau.rows() {
        if carry.is_empty() {
            rows.push(row.clone());
            continue;
        }
        let (bumped, new_row) = rins(row, &carry)?;
        rows.push(new_row);
        carry = bumped;
    }
    if !carry.is_empty() {
        rows.push(carry);
    }
    TimedTableau::from_rows(tableau.alphabet(), rows)
}

/// `DELETE_lam(T2) = (v, T)` with `shape(T) = lam` and `INSERT(T, v) = T2`.
pub fn delete(tableau: &TimedTableau, lam: &RealPartition) -> Result<(TimedWord, TimedTableau)> {
    let mu = tableau.shape();
    let rows = tableau.rows();
    let l = lam.num_parts();
    if !interleaves(&mu, lam) || !(l == rows.len() || l + 1 == rows.len()) {
        return Err(Error::Interleaving(format!(
            "{} does not interleave the shape {}",
            lam, mu
        )));
    }
    let n = tableau.alphabet();
    let mut carry = rows.get(l).cloned().unwrap_or_else(|| TimedWord::empty(n));
    let mut old_rows = vec![TimedWord::empty(n); l];
    for i in (0..l).rev() {
        let (row, inserted) = rins_inverse(&carry, &rows[i], &lam.parts()[i])?;
        old_rows[i] = row;
        carry = inserted;
    }
    let smaller = TimedTableau::from_rows(n, old_rows)?;
    if insert(&smaller, &carry)? != *tableau {
        return Err(Error::ReconstructionMismatch(format!(
            "INSERT({}, {}) does not reproduce {}",
            smaller, carry, tableau
        )));
    }
    Ok((carry, smaller))
}

/// `P(w)`: insert the rows of `w` in reading order into the empty tableau.
pub fn insertion_tableau(word: &TimedWord) -> TimedTableau {
    word.row_decomposition()
        .iter()
        .fold(TimedTableau::empty(word.alphabet()), |tableau, row| {
            insert(&tableau, row).expect("rows of the decomposition are rows")
        })
}
