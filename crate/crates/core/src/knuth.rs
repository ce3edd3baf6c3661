//! Timed Knuth relations, certificate traces and plactic equivalence.
//!
//! For rows `x`, `y`, `z` with `xyz` a row, the two relations are
//!
//! ```text
//! (K1)  x z y  ==  z x y    if l(z) = l(y) and y(l(y)-) < z(0)
//! (K2)  y x z  ==  y z x    if l(x) = l(y) and x(l(x)-) < y(0)
//! ```
//!
//! A [`KnuthMove`] names one such rewrite inside a word by the offset of the
//! rewritten factor and the lengths of `x`, `y` and `z`. Moves are located by
//! time rather than by segment index since they may cut through segments.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::duration::Duration;
use crate::error::{Error, Result};
use crate::insertion::{insert_letter, insertion_tableau};
use crate::tableau::TimedTableau;
use crate::word::TimedWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    K1,
    K2,
}

/// `Forward` rewrites the left-hand side of the relation into the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnuthMove {
    pub kind: MoveKind,
    pub direction: Direction,
    pub offset: Duration,
    pub lx: Duration,
    pub ly: Duration,
    pub lz: Duration,
}

/// Factor roles in the order they appear in a word.
#[derive(Clone, Copy)]
enum Role {
    X,
    Y,
    Z,
}

impl KnuthMove {
    pub fn new(
        kind: MoveKind,
        direction: Direction,
        offset: Duration,
        lx: Duration,
        ly: Duration,
        lz: Duration,
    ) -> Self {
        KnuthMove {
            kind,
            direction,
            offset,
            lx,
            ly,
            lz,
        }
    }

    /// The move undoing this one.
    pub fn reverse(&self) -> Self {
        let direction = match self.direction {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        };
        KnuthMove {
            direction,
            ..self.clone()
        }
    }

    /// Identity moves: some factor is empty.
    pub fn is_degenerate(&self) -> bool {
        self.lx.is_zero() || self.ly.is_zero() || self.lz.is_zero()
    }

    pub fn factor_len(&self) -> Duration {
        &(&self.lx + &self.ly) + &self.lz
    }

    fn sides(&self) -> ([Role; 3], [Role; 3]) {
        use Role::*;
        let (lhs, rhs) = match self.kind {
            MoveKind::K1 => ([X, Z, Y], [Z, X, Y]),
            MoveKind::K2 => ([Y, X, Z], [Y, Z, X]),
        };
        match self.direction {
            Direction::Forward => (lhs, rhs),
            Direction::Backward => (rhs, lhs),
        }
    }

    fn role_len(&self, role: Role) -> &Duration {
        match role {
            Role::X => &self.lx,
            Role::Y => &self.ly,
            Role::Z => &self.lz,
        }
    }
}

impl fmt::Display for KnuthMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let direction = match self.direction {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        };
        write!(
            f,
            "{:?} {} @{} ({}, {}, {})",
            self.kind, direction, self.offset, self.lx, self.ly, self.lz
        )
    }
}

/// Rewrites the factor of `word` at `[offset, offset + lx + ly + lz)`
/// after checking it matches the move's source side.
pub fn apply_move(word: &TimedWord, mv: &KnuthMove) -> Result<TimedWord> {
    if mv.is_degenerate() {
        return Err(Error::InvalidMove(format!("{} has an empty factor", mv)));
    }
    let end = &mv.offset + &mv.factor_len();
    let length = word.len();
    if end > length {
        return Err(Error::InvalidMove(format!(
            "{} reaches past the word length {}",
            mv, length
        )));
    }
    let (source, target) = mv.sides();
    let mut pieces: [Option<TimedWord>; 3] = [None, None, None];
    let mut cursor = mv.offset.clone();
    for role in source {
        let next = &cursor + mv.role_len(role);
        pieces[role as usize] = Some(word.slice(&cursor, &next)?);
        cursor = next;
    }
    let [x, y, z] = pieces.map(|p| p.expect("every role is sliced"));
    let n = word.alphabet();
    let xyz = TimedWord::concat_all(n, [&x, &y, &z])?;
    if !xyz.is_row() {
        return Err(Error::InvalidMove(format!(
            "{}: xyz = {} is not a row",
            mv, xyz
        )));
    }
    let ok = match mv.kind {
        MoveKind::K1 => mv.lz == mv.ly && y.last_letter() < z.first_letter(),
        MoveKind::K2 => mv.lx == mv.ly && x.last_letter() < y.first_letter(),
    };
    if !ok {
        return Err(Error::InvalidMove(format!(
            "{}: length or strict inequality condition fails for x = {}, y = {}, z = {}",
            mv, x, y, z
        )));
    }
    let by_role = |role: Role| match role {
        Role::X => &x,
        Role::Y => &y,
        Role::Z => &z,
    };
    let prefix = word.slice(&Duration::zero(), &mv.offset)?;
    let suffix = word.slice(&end, &length)?;
    let [a, b, c] = target.map(by_role);
    TimedWord::concat_all(n, [&prefix, a, b, c, &suffix])
}

/// Applies every move of `trace` in order.
pub fn replay(word: &TimedWord, trace: &[KnuthMove]) -> Result<TimedWord> {
    trace
        .iter()
        .try_fold(word.clone(), |w, mv| apply_move(&w, mv))
}

/// `P(w)` together with a sequence of Knuth moves carrying `w` to the
/// reading word of `P(w)`.
///
/// Follows the insertion of each row: when `c^t` displaces a segment `y` of
/// a row `x' y x''`, the local rewrite is
/// `x' (y x'' c) -K2-> x' y c x''` and then `(x' y c) x'' -K1-> y x' c x''`.
pub fn normalize_with_trace(word: &TimedWord) -> (TimedTableau, Vec<KnuthMove>) {
    // a reading word is its own insertion tableau; the bumps the fold would
    // perform compose to the identity
    if let Ok(tableau) = TimedTableau::from_reading_word(word) {
        return (tableau, Vec::new());
    }
    let n = word.alphabet();
    let mut trace = Vec::new();
    let mut tableau = TimedTableau::empty(n);
    for incoming in word.row_decomposition() {
        // rows above the one being inserted into
        let mut above: Duration = tableau.len();
        let mut new_rows = Vec::with_capacity(tableau.num_rows() + 1);
        let mut carry = incoming;
        for row in tableau.rows() {
            above -= &row.len();
            if carry.is_empty() {
                new_rows.push(row.clone());
                continue;
            }
            let mut bumped = TimedWord::empty(n);
            let mut current = row.clone();
            for segment in carry.segments() {
                let base = &above + &bumped.len();
                let step = insert_letter(&current, segment.letter, &segment.duration);
                let displaced = step.bumped.len();
                if !displaced.is_zero() {
                    let lx_prime = step.prefix.len();
                    let lx_second = step.suffix.len();
                    if !lx_second.is_zero() {
                        trace.push(KnuthMove::new(
                            MoveKind::K2,
                            Direction::Backward,
                            &base + &lx_prime,
                            displaced.clone(),
                            displaced.clone(),
                            lx_second,
                        ));
                    }
                    if !lx_prime.is_zero() {
                        trace.push(KnuthMove::new(
                            MoveKind::K1,
                            Direction::Forward,
                            base.clone(),
                            lx_prime,
                            displaced.clone(),
                            displaced,
                        ));
                    }
                }
                bumped = bumped.concat(&step.bumped).expect("same alphabet");
                let letter = TimedWord::letter(n, segment.letter, segment.duration.clone())
                    .expect("letter from a word over n");
                current = TimedWord::concat_all(n, [&step.prefix, &letter, &step.suffix])
                    .expect("same alphabet");
            }
            new_rows.push(current);
            carry = bumped;
        }
        if !carry.is_empty() {
            new_rows.push(carry);
        }
        tableau = TimedTableau::from_rows(n, new_rows).expect("insertion yields a tableau");
    }
    debug_assert_eq!(tableau, insertion_tableau(word));
    (tableau, trace)
}

/// Plactic equivalence, decided by comparing insertion tableaux.
pub fn equivalent(v: &TimedWord, w: &TimedWord) -> Result<bool> {
    if v.alphabet() != w.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: v.alphabet(),
            right: w.alphabet(),
        });
    }
    Ok(insertion_tableau(v) == insertion_tableau(w))
}
