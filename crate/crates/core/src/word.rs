//! Timed words: finite right-continuous step functions `[0, l) -> {1, ..., n}`
//! stored as canonical exponential strings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::duration::Duration;
use crate::error::{Error, Result};

/// One constant piece `letter^duration` of a timed word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub letter: usize,
    pub duration: Duration,
}

impl Segment {
    pub fn new(letter: usize, duration: Duration) -> Self {
        Segment { letter, duration }
    }
}

/// A timed word over the alphabet `{1, ..., alphabet}`.
///
/// Always canonical: every segment has positive duration and adjacent
/// segments carry different letters, so structural equality is equality
/// of the underlying step functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TimedWord {
    alphabet: usize,
    segments: Vec<Segment>,
}

impl TimedWord {
    pub fn empty(alphabet: usize) -> Self {
        TimedWord {
            alphabet,
            segments: Vec::new(),
        }
    }

    /// Builds the canonical word for a raw exponential string: zero
    /// durations are dropped and equal neighbours merged.
    pub fn new<I>(alphabet: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Duration)>,
    {
        let mut word = TimedWord::empty(alphabet);
        for (letter, duration) in raw {
            if letter == 0 || letter > alphabet {
                return Err(Error::LetterOutOfRange { letter, alphabet });
            }
            word.push(letter, duration);
        }
        Ok(word)
    }

    /// Single-segment word `letter^duration`.
    pub fn letter(alphabet: usize, letter: usize, duration: Duration) -> Result<Self> {
        TimedWord::new(alphabet, [(letter, duration)])
    }

    /// Parses the text format `L^D L^D ...`.
    ///
    /// With `alphabet == None` the alphabet is the largest letter present
    /// (0 for the empty word).
    pub fn parse(text: &str, alphabet: Option<usize>) -> Result<Self> {
        let mut raw = Vec::new();
        for (position, token) in tokens(text) {
            let parse_err = |message: String| Error::Parse { position, message };
            let (letter, duration) = token
                .split_once('^')
                .ok_or_else(|| parse_err(format!("expected `L^D`, found `{}`", token)))?;
            if letter.is_empty() || !letter.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(format!("invalid letter `{}`", letter)));
            }
            let letter: usize = letter
                .parse()
                .map_err(|_| parse_err(format!("invalid letter `{}`", letter)))?;
            if letter == 0 {
                return Err(parse_err("letters start at 1".to_string()));
            }
            let duration: Duration = duration.parse().map_err(|e| match e {
                Error::NegativeDuration(v) => Error::NegativeDuration(v),
                _ => parse_err(format!("invalid duration `{}`", duration)),
            })?;
            raw.push((letter, duration));
        }
        let max_letter = raw.iter().map(|(c, _)| *c).max().unwrap_or(0);
        let alphabet = alphabet.unwrap_or(max_letter);
        TimedWord::new(alphabet, raw)
    }

    fn push(&mut self, letter: usize, duration: Duration) {
        if duration.is_zero() {
            return;
        }
        match self.segments.last_mut() {
            Some(last) if last.letter == letter => last.duration += duration,
            _ => self.segments.push(Segment { letter, duration }),
        }
    }

    fn push_segments<'a>(&mut self, segments: impl IntoIterator<Item = &'a Segment>) {
        for segment in segments {
            self.push(segment.letter, segment.duration.clone());
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Total duration `l(w)`.
    pub fn len(&self) -> Duration {
        self.segments.iter().map(|s| &s.duration).sum()
    }

    /// `w(t)` for `0 <= t < l(w)`.
    pub fn at(&self, t: &Duration) -> Option<usize> {
        let mut end = Duration::zero();
        for segment in &self.segments {
            end += &segment.duration;
            if *t < end {
                return Some(segment.letter);
            }
        }
        None
    }

    pub fn first_letter(&self) -> Option<usize> {
        self.segments.first().map(|s| s.letter)
    }

    /// `lim_{t -> l(w)^-} w(t)`.
    pub fn last_letter(&self) -> Option<usize> {
        self.segments.last().map(|s| s.letter)
    }

    /// Same word viewed over a different alphabet.
    pub fn with_alphabet(&self, alphabet: usize) -> Result<Self> {
        if let Some(letter) = self.segments.iter().map(|s| s.letter).max() {
            if letter > alphabet {
                return Err(Error::LetterOutOfRange { letter, alphabet });
            }
        }
        Ok(TimedWord {
            alphabet,
            segments: self.segments.clone(),
        })
    }

    /// `w_{[a, b)}`, the word of length `b - a` with `w_{[a,b)}(t) = w(a + t)`.
    pub fn slice(&self, start: &Duration, end: &Duration) -> Result<Self> {
        let length = self.len();
        if start > end || *end > length {
            return Err(Error::IntervalOutOfBounds {
                start: start.to_string(),
                end: end.to_string(),
                length: length.to_string(),
            });
        }
        let mut out = TimedWord::empty(self.alphabet);
        let mut seg_start = Duration::zero();
        for segment in &self.segments {
            let seg_end = &seg_start + &segment.duration;
            if seg_start >= *end {
                break;
            }
            if seg_end > *start {
                let lo = if seg_start > *start {
                    &seg_start
                } else {
                    start
                };
                let hi = if seg_end < *end { &seg_end } else { end };
                out.push(segment.letter, hi - lo);
            }
            seg_start = seg_end;
        }
        Ok(out)
    }

    /// Splits at `t`: `(w_{[0,t)}, w_{[t,l))`.
    pub fn split_at(&self, t: &Duration) -> Result<(Self, Self)> {
        let length = self.len();
        Ok((self.slice(&Duration::zero(), t)?, self.slice(t, &length)?))
    }

    pub fn concat(&self, other: &TimedWord) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        let mut out = self.clone();
        out.push_segments(&other.segments);
        Ok(out)
    }

    /// Concatenation of several words over the same alphabet.
    pub fn concat_all<'a, I>(alphabet: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a TimedWord>,
    {
        let mut out = TimedWord::empty(alphabet);
        for word in words {
            if word.alphabet != alphabet {
                return Err(Error::AlphabetMismatch {
                    left: alphabet,
                    right: word.alphabet,
                });
            }
            out.push_segments(&word.segments);
        }
        Ok(out)
    }

    /// Component `i - 1` is the total duration of letter `i`.
    pub fn weight(&self) -> Vec<Duration> {
        let mut weight = vec![Duration::zero(); self.alphabet];
        for segment in &self.segments {
            weight[segment.letter - 1] += &segment.duration;
        }
        weight
    }

    /// The subword cut out by `set`.
    pub fn subword(&self, set: &IntervalSet) -> Result<Self> {
        let length = self.len();
        let mut out = TimedWord::empty(self.alphabet);
        for (start, end) in set.intervals() {
            if *end > length {
                return Err(Error::IntervalOutOfBounds {
                    start: start.to_string(),
                    end: end.to_string(),
                    length: length.to_string(),
                });
            }
            let piece = self.slice(start, end)?;
            out.push_segments(&piece.segments);
        }
        Ok(out)
    }

    /// Schützenberger involution: reverse positions and the alphabet order.
    pub fn sharp(&self) -> Self {
        let n = self.alphabet;
        TimedWord {
            alphabet: n,
            segments: self
                .segments
                .iter()
                .rev()
                .map(|s| Segment::new(n + 1 - s.letter, s.duration.clone()))
                .collect(),
        }
    }

    /// Deletes every letter above `k`; the result lives over `{1, ..., k}`.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        if k > self.alphabet {
            return Err(Error::RestrictOutOfRange {
                k,
                alphabet: self.alphabet,
            });
        }
        let mut out = TimedWord::empty(k);
        out.push_segments(self.segments.iter().filter(|s| s.letter <= k));
        Ok(out)
    }

    /// True iff the word is weakly increasing.
    pub fn is_row(&self) -> bool {
        self.segments.windows(2).all(|w| w[0].letter < w[1].letter)
    }

    /// Maximal rows in reading order: cuts are exactly the strict descents.
    pub fn row_decomposition(&self) -> Vec<TimedWord> {
        let mut rows: Vec<TimedWord> = Vec::new();
        let mut current = TimedWord::empty(self.alphabet);
        for segment in &self.segments {
            if let Some(last) = current.last_letter() {
                if segment.letter < last {
                    rows.push(std::mem::replace(
                        &mut current,
                        TimedWord::empty(self.alphabet),
                    ));
                }
            }
            current.segments.push(segment.clone());
        }
        if !current.is_empty() {
            rows.push(current);
        }
        rows
    }

    /// Multiplies every duration by `factor`.
    pub fn scale(&self, factor: &Duration) -> Self {
        let mut out = TimedWord::empty(self.alphabet);
        for segment in &self.segments {
            out.push(segment.letter, &segment.duration * factor);
        }
        out
    }

    pub(crate) fn assert_row(&self) -> Result<()> {
        if self.is_row() {
            Ok(())
        } else {
            Err(Error::NotARow(self.to_string()))
        }
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    // split_whitespace yields subslices of `text`
    text.split_whitespace()
        .map(move |token| (token.as_ptr() as usize - text.as_ptr() as usize, token))
}

impl fmt::Display for TimedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, segment) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", segment.letter, segment.duration)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TimedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅[n={}]", self.alphabet)
        } else {
            write!(f, "{}[n={}]", self, self.alphabet)
        }
    }
}

/// A finite disjoint union of half-open rational intervals, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalSet {
    intervals: Vec<(Duration, Duration)>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<(Duration, Duration)>) -> Result<Self> {
        for (i, (start, end)) in intervals.iter().enumerate() {
            if start >= end {
                return Err(Error::IntervalOutOfBounds {
                    start: start.to_string(),
                    end: end.to_string(),
                    length: "?".to_string(),
                });
            }
            if i > 0 && intervals[i - 1].1 > *start {
                return Err(Error::OverlappingIntervals(i));
            }
        }
        Ok(IntervalSet { intervals })
    }

    pub fn intervals(&self) -> impl Iterator<Item = &(Duration, Duration)> {
        self.intervals.iter()
    }

    pub fn measure(&self) -> Duration {
        self.intervals.iter().map(|(a, b)| b - a).sum()
    }
}
