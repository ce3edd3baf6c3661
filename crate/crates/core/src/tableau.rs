//! Timed tableaux, real partitions and Gelfand-Tsetlin patterns.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::duration::Duration;
use crate::error::{Error, Result};
use crate::word::TimedWord;

/// A weakly decreasing sequence of nonnegative durations, trailing zeros
/// stripped.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RealPartition {
    parts: Vec<Duration>,
}

impl RealPartition {
    pub fn new(mut parts: Vec<Duration>) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!(
                "part {} ({}) is smaller than part {} ({})",
                i + 1,
                parts[i],
                i + 2,
                parts[i + 1]
            )));
        }
        while parts.last().is_some_and(Duration::is_zero) {
            parts.pop();
        }
        Ok(RealPartition { parts })
    }

    pub fn empty() -> Self {
        RealPartition::default()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[Duration] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Part `i` (zero-based); zero past the end.
    pub fn part(&self, i: usize) -> Duration {
        self.parts.get(i).cloned().unwrap_or_else(Duration::zero)
    }

    /// Exactly `len` parts, zero padded.
    pub fn padded(&self, len: usize) -> Result<Vec<Duration>> {
        if self.parts.len() > len {
            return Err(Error::Precondition(format!(
                "partition {} has more than {} parts",
                self, len
            )));
        }
        Ok((0..len).map(|i| self.part(i)).collect())
    }

    pub fn total(&self) -> Duration {
        self.parts.iter().sum()
    }

    /// `λ_1 + ... + λ_k`.
    pub fn partial_sum(&self, k: usize) -> Duration {
        self.parts.iter().take(k).sum()
    }
}

impl FromStr for RealPartition {
    type Err = Error;

    /// Comma or whitespace separated parts, optionally in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Duration>>>()?;
        RealPartition::new(parts)
    }
}

impl fmt::Display for RealPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", part)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RealPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RealPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<Duration>::deserialize(deserializer)?;
        RealPartition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Whether `smaller` sits between the parts of `larger`:
/// `larger_1 >= smaller_1 >= larger_2 >= smaller_2 >= ...`, zero padded.
pub fn interleaves(larger: &RealPartition, smaller: &RealPartition) -> bool {
    let len = larger.num_parts().max(smaller.num_parts());
    (0..len).all(|i| larger.part(i) >= smaller.part(i) && smaller.part(i) >= larger.part(i + 1))
}

/// Dominance `u ◁ v`: `l(u) >= l(v)` and `u(t) < v(t)` on `[0, l(v))`.
pub fn dominates(u: &TimedWord, v: &TimedWord) -> Result<bool> {
    u.assert_row()?;
    v.assert_row()?;
    if u.len() < v.len() {
        return Ok(false);
    }
    // merged sweep over the segment boundaries of u and v on [0, l(v))
    let us = u.segments();
    let mut ui = 0;
    let mut u_left = us.first().map(|s| s.duration.clone());
    for seg in v.segments() {
        let mut v_left = seg.duration.clone();
        while v_left.is_positive() {
            let Some(left) = u_left.as_mut() else {
                return Ok(false);
            };
            if us[ui].letter >= seg.letter {
                return Ok(false);
            }
            let step = left.min_of(&v_left).clone();
            *left -= &step;
            v_left -= &step;
            if left.is_zero() {
                ui += 1;
                u_left = us.get(ui).map(|s| s.duration.clone());
            }
        }
    }
    Ok(true)
}

/// A timed tableau, stored as its rows `u_1 ◁ u_2 ◁ ... ◁ u_l`
/// (bottom row first). Always valid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TimedTableau {
    alphabet: usize,
    rows: Vec<TimedWord>,
}

impl TimedTableau {
    pub fn empty(alphabet: usize) -> Self {
        TimedTableau {
            alphabet,
            rows: Vec::new(),
        }
    }

    /// Validates the dominance chain. Empty rows may only trail and are
    /// dropped.
    pub fn from_rows(alphabet: usize, rows: Vec<TimedWord>) -> Result<Self> {
        for row in &rows {
            if row.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    left: alphabet,
                    right: row.alphabet(),
                });
            }
            row.assert_row()?;
        }
        for (i, pair) in rows.windows(2).enumerate() {
            if !dominates(&pair[0], &pair[1])? {
                return Err(Error::NotATableau {
                    lower: i + 1,
                    upper: i + 2,
                });
            }
        }
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(TimedTableau { alphabet, rows })
    }

    /// The tableau whose reading word is `word`, if there is one.
    pub fn from_reading_word(word: &TimedWord) -> Result<Self> {
        let mut rows = word.row_decomposition();
        rows.reverse();
        TimedTableau::from_rows(word.alphabet(), rows)
    }

    /// Either rows separated by `;` (bottom row first) or one reading word.
    pub fn parse(text: &str, alphabet: Option<usize>) -> Result<Self> {
        if text.contains(';') {
            let words = text
                .split(';')
                .map(|row| TimedWord::parse(row, None))
                .collect::<Result<Vec<_>>>()?;
            let n =
                alphabet.unwrap_or_else(|| words.iter().map(|w| w.alphabet()).max().unwrap_or(0));
            let rows = words
                .iter()
                .map(|w| w.with_alphabet(n))
                .collect::<Result<Vec<_>>>()?;
            TimedTableau::from_rows(n, rows)
        } else {
            TimedTableau::from_reading_word(&TimedWord::parse(text, alphabet)?)
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Rows bottom-up: `rows()[0]` is `u_1`, the longest.
    pub fn rows(&self) -> &[TimedWord] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `u_l u_{l-1} ... u_1`.
    pub fn reading_word(&self) -> TimedWord {
        TimedWord::concat_all(self.alphabet, self.rows.iter().rev())
            .expect("rows share the tableau alphabet")
    }

    pub fn shape(&self) -> RealPartition {
        RealPartition::new(self.rows.iter().map(TimedWord::len).collect())
            .expect("row lengths of a tableau decrease")
    }

    pub fn weight(&self) -> Vec<Duration> {
        self.reading_word().weight()
    }

    pub fn len(&self) -> Duration {
        self.rows.iter().map(TimedWord::len).sum()
    }

    pub fn with_alphabet(&self, alphabet: usize) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.with_alphabet(alphabet))
            .collect::<Result<Vec<_>>>()?;
        Ok(TimedTableau { alphabet, rows })
    }

    /// Restriction of the reading word to `{1, ..., k}`, again a tableau.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.restrict(k))
            .collect::<Result<Vec<_>>>()?;
        TimedTableau::from_rows(k, rows)
    }

    /// `INFL_mu(self, m)`: the tableau of shape `mu` over `{1, ..., m}`
    /// whose restriction to `m - 1` is `self`.
    pub fn inflate(&self, mu: &RealPartition, m: usize) -> Result<Self> {
        let max_letter = self
            .rows
            .iter()
            .flat_map(|r| r.segments())
            .map(|s| s.letter)
            .max()
            .unwrap_or(0);
        if m == 0 || max_letter >= m {
            return Err(Error::Precondition(format!(
                "tableau letters must be below {}",
                m
            )));
        }
        let lambda = self.shape();
        if mu.num_parts() > self.num_rows() + 1 || !interleaves(mu, &lambda) {
            return Err(Error::Interleaving(format!(
                "{} does not lie between the parts of {}",
                lambda, mu
            )));
        }
        let mut rows = Vec::with_capacity(mu.num_parts());
        for (i, target) in mu.parts().iter().enumerate() {
            let base = match self.rows.get(i) {
                Some(row) => row.with_alphabet(m)?,
                None => TimedWord::empty(m),
            };
            let extra = target - &base.len();
            rows.push(base.concat(&TimedWord::letter(m, m, extra)?)?);
        }
        TimedTableau::from_rows(m, rows)
    }

    pub fn to_gt(&self) -> GTPattern {
        let rows = (1..=self.alphabet)
            .map(|k| {
                self.restrict(k)
                    .expect("k within alphabet")
                    .shape()
                    .padded(k)
                    .expect("a tableau over k letters has at most k rows")
            })
            .collect();
        GTPattern { rows }
    }

    /// Inverse of [`TimedTableau::to_gt`].
    pub fn from_gt(pattern: &GTPattern) -> Result<Self> {
        let mut tableau = TimedTableau::empty(0);
        for (k, row) in pattern.rows.iter().enumerate() {
            let mu = RealPartition::new(row.clone())
                .map_err(|e| Error::InvalidPattern(e.to_string()))?;
            tableau = tableau.inflate(&mu, k + 1)?;
        }
        Ok(tableau)
    }
}

impl fmt::Display for TimedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}", row)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TimedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[n={}]{{{}}}", self.alphabet, self)
    }
}

/// A Gelfand-Tsetlin pattern: `rows()[k-1]` is `λ^{(k)}`, of length `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GTPattern {
    rows: Vec<Vec<Duration>>,
}

impl GTPattern {
    /// Checks the triangle and `λ^{(k)}_i >= λ^{(k-1)}_i >= λ^{(k)}_{i+1}`.
    pub fn new(rows: Vec<Vec<Duration>>) -> Result<Self> {
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(Error::InvalidPattern(format!(
                    "row {} has {} entries",
                    k + 1,
                    row.len()
                )));
            }
            if k > 0 {
                let below = &rows[k - 1];
                for i in 0..k {
                    if !(row[i] >= below[i] && below[i] >= row[i + 1]) {
                        return Err(Error::InvalidPattern(format!(
                            "interleaving fails between rows {} and {} at position {}",
                            k,
                            k + 1,
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(GTPattern { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Duration>] {
        &self.rows
    }

    /// `λ^{(k)}` for `1 <= k <= size`.
    pub fn row(&self, k: usize) -> &[Duration] {
        &self.rows[k - 1]
    }

    /// The top row as a partition.
    pub fn shape(&self) -> RealPartition {
        RealPartition::new(self.rows.last().cloned().unwrap_or_default())
            .expect("pattern rows are partitions")
    }
}

impl<'de> Deserialize<'de> for GTPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Duration>>::deserialize(deserializer)?;
        GTPattern::new(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duration::d;

    fn w(text: &str, n: usize) -> TimedWord {
        TimedWord::parse(text, Some(n)).unwrap()
    }

    fn p(text: &str) -> RealPartition {
        text.parse().unwrap()
    }

    fn example_one() -> TimedTableau {
        TimedTableau::from_reading_word(&w("3^0.8 4^1.1 1^1.4 2^1.6 3^0.7", 5)).unwrap()
    }

    #[test]
    fn partition_normalizes_trailing_zeros() {
        assert_eq!(p("3.7, 1.9, 0, 0"), p("(3.7,1.9)"));
        assert_eq!(p("3.7, 1.9, 0").num_parts(), 2);
        assert!(matches!(
            "1, 2".parse::<RealPartition>(),
            Err(Error::NotAPartition(_))
        ));
        assert_eq!(p("2,1").padded(3).unwrap(), vec![d("2"), d("1"), d("0")]);
        assert!(p("2,1").padded(1).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&w("1^1.4 2^1.6 3^0.7", 4), &w("3^0.8 4^1.1", 4)).unwrap());
        assert!(!dominates(&w("1^1", 1), &w("1^1", 1)).unwrap());
        assert!(!dominates(&w("1^0.5", 2), &w("2^0.6", 2)).unwrap());
        assert!(matches!(
            dominates(&w("2^1 1^1", 2), &w("2^1", 2)),
            Err(Error::NotARow(_))
        ));
    }

    #[test]
    fn dominance_checks_every_boundary() {
        // u = 1^1 3^1, v = 2^0.5 3^1: at t = 1, u = 3 and v = 3
        assert!(!dominates(&w("1^1 3^1", 3), &w("2^0.5 3^1", 3)).unwrap());
        assert!(dominates(&w("1^1 3^1", 4), &w("2^0.5 4^1", 4)).unwrap());
        assert!(dominates(&w("1^1", 2), &TimedWord::empty(2)).unwrap());
    }

    #[test]
    fn from_reading_word_examples() {
        let t = example_one();
        assert_eq!(t.rows(), &[w("1^1.4 2^1.6 3^0.7", 5), w("3^0.8 4^1.1", 5)]);
        assert_eq!(t.shape(), p("3.7, 1.9"));
        let single = TimedTableau::from_reading_word(&w("1^0.5", 1)).unwrap();
        assert_eq!(single.num_rows(), 1);
        assert_eq!(
            TimedTableau::from_reading_word(&w("2^0.2 1^0.1", 2)),
            Err(Error::NotATableau { lower: 1, upper: 2 })
        );
    }

    #[test]
    fn shape_examples() {
        assert_eq!(TimedTableau::empty(3).shape(), RealPartition::empty());
        let t = TimedTableau::parse("1^2.1 2^1.1 3^0.5; 2^0.7 3^0.3 4^0.9; 3^0.7 4^0.2", Some(4))
            .unwrap();
        assert_eq!(t.shape(), p("3.7, 1.9, 0.9"));
        assert_eq!(
            t.reading_word(),
            w("3^0.7 4^0.2 2^0.7 3^0.3 4^0.9 1^2.1 2^1.1 3^0.5", 4)
        );
    }

    #[test]
    fn interleaves_examples() {
        assert!(interleaves(&p("3.7, 1.9, 0.9"), &p("3.7, 1.9")));
        assert!(!interleaves(&p("1.0"), &p("2.0")));
        let x = p("2, 1, 1");
        assert!(interleaves(&x, &x));
        assert!(!interleaves(&p("1"), &p("1, 0.5")));
        assert!(interleaves(&p("1"), &RealPartition::empty()));
        assert!(!interleaves(&p("1, 1"), &RealPartition::empty()));
    }

    #[test]
    fn inflate_examples() {
        let t = TimedTableau::parse("1^0.5", Some(1)).unwrap();
        let inflated = t.inflate(&p("0.8, 0.3"), 2).unwrap();
        assert_eq!(inflated.rows(), &[w("1^0.5 2^0.3", 2), w("2^0.3", 2)]);
        assert_eq!(inflated.restrict(1).unwrap(), t);

        let same = t.inflate(&t.shape(), 2).unwrap();
        assert_eq!(same, t.with_alphabet(2).unwrap());

        let grown = TimedTableau::empty(0).inflate(&p("1.0"), 1).unwrap();
        assert_eq!(grown.rows(), &[w("1^1", 1)]);

        assert!(matches!(
            t.inflate(&p("0.8, 0.6"), 2),
            Err(Error::Interleaving(_))
        ));
        assert!(matches!(
            t.inflate(&p("0.4"), 2),
            Err(Error::Interleaving(_))
        ));
    }

    #[test]
    fn gt_examples() {
        let t = example_one();
        let g = t.to_gt();
        let expected: Vec<Vec<Duration>> = vec![
            vec![d("1.4")],
            vec![d("3.0"), d("0")],
            vec![d("3.7"), d("0.8"), d("0")],
            vec![d("3.7"), d("1.9"), d("0"), d("0")],
            vec![d("3.7"), d("1.9"), d("0"), d("0"), d("0")],
        ];
        assert_eq!(g.rows(), expected.as_slice());
        assert_eq!(TimedTableau::from_gt(&g).unwrap(), t);

        let empty = TimedTableau::empty(2).to_gt();
        assert_eq!(empty.rows(), &[vec![d("0")], vec![d("0"), d("0")]]);
        assert_eq!(
            TimedTableau::from_gt(&empty).unwrap(),
            TimedTableau::empty(2)
        );

        let single = TimedTableau::parse("1^0.5", Some(1)).unwrap();
        assert_eq!(single.to_gt().rows(), &[vec![d("0.5")]]);
        let back = TimedTableau::from_gt(&GTPattern::new(vec![vec![d("0.5")]]).unwrap()).unwrap();
        assert_eq!(back, single);
    }

    #[test]
    fn gt_validation() {
        assert!(GTPattern::new(vec![vec![d("1")], vec![d("0.5"), d("0")]]).is_err());
        assert!(GTPattern::new(vec![vec![d("1")], vec![d("2")]]).is_err());
        let json = r#"[["1"],["2","0.5"]]"#;
        let g: GTPattern = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), json);
        assert!(serde_json::from_str::<GTPattern>(r#"[["1"],["0.5","0"]]"#).is_err());
    }
}
