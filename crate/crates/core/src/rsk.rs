//! The real RSK correspondence between nonnegative rational matrices and
//! pairs of timed tableaux of equal shape.
//!
//! Three independent forward algorithms are provided and must agree
//! exactly: [`rsk`] (insertion tableaux of the column and row words),
//! [`rsk_recording`] (insertion plus recording by inflation) and
//! [`rsk_shadows`] (light and shadows on the matrix itself).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::duration::Duration;
use crate::error::{Error, Result};
use crate::greene::greene_oracle;
use crate::insertion::{delete, insert, insertion_tableau};
use crate::tableau::TimedTableau;
use crate::word::TimedWord;

/// An `m x n` matrix of nonnegative durations, `m, n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NonNegMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Duration>,
}

impl NonNegMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix(format!("{}x{} matrix", rows, cols)));
        }
        Ok(NonNegMatrix {
            rows,
            cols,
            entries: vec![Duration::zero(); rows * cols],
        })
    }

    pub fn from_rows(rows: Vec<Vec<Duration>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".to_string()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                rows[i].len(),
                n
            )));
        }
        Ok(NonNegMatrix {
            rows: m,
            cols: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses lines of comma separated entries (`0.16`, `3/8`, ...).
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| Error::Parse {
                position: e.position().map_or(0, |p| p.byte() as usize),
                message: e.to_string(),
            })?;
            let row = record
                .iter()
                .map(str::parse)
                .collect::<Result<Vec<Duration>>>()?;
            rows.push(row);
        }
        NonNegMatrix::from_rows(rows)
    }

    /// Parses `{"m": .., "n": .., "entries": [[..], ..]}`; entries may be
    /// strings or JSON numbers (read through their decimal text).
    pub fn parse_json(text: &str) -> Result<Self> {
        let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: e.to_string(),
        })?;
        let rows = file
            .entries
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|value| match value {
                        serde_json::Value::String(s) => s.parse(),
                        serde_json::Value::Number(n) => n.to_string().parse(),
                        other => Err(Error::InvalidMatrix(format!("bad entry {}", other))),
                    })
                    .collect::<Result<Vec<Duration>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let matrix = NonNegMatrix::from_rows(rows)?;
        if matrix.rows != file.m || matrix.cols != file.n {
            return Err(Error::InvalidMatrix(format!(
                "declared {}x{}, found {}x{}",
                file.m, file.n, matrix.rows, matrix.cols
            )));
        }
        Ok(matrix)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(Duration::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixFile {
            m: self.rows,
            n: self.cols,
            entries: (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .map(|e| serde_json::Value::String(e.to_string()))
                        .collect()
                })
                .collect(),
        })
        .expect("matrix serializes")
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// Zero-based access.
    pub fn get(&self, i: usize, j: usize) -> &Duration {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Duration) {
        self.entries[i * self.cols + j] = value;
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut Duration {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Duration] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Duration] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Duration::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = NonNegMatrix::zeros(self.cols, self.rows).expect("nonempty");
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<Duration> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<Duration> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn total(&self) -> Duration {
        self.entries.iter().sum()
    }

    pub fn scale(&self, factor: &Duration) -> Self {
        NonNegMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// The submatrix of the first `j` columns.
    pub fn first_columns(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.cols {
            return Err(Error::InvalidMatrix(format!(
                "column count {} outside 1..={}",
                j, self.cols
            )));
        }
        NonNegMatrix::from_rows((0..self.rows).map(|i| self.row(i)[..j].to_vec()).collect())
    }

    /// Support entries, 1-based.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut points = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j).is_positive() {
                    points.push((i + 1, j + 1));
                }
            }
        }
        points
    }
}

impl fmt::Debug for NonNegMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let line: Vec<String> = self.row(i).iter().map(Duration::to_string).collect();
            f.write_str(&line.join(", "))?;
        }
        f.write_str("]")
    }
}

impl FromStr for NonNegMatrix {
    type Err = Error;

    /// JSON if the text starts with `{`, CSV otherwise.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            NonNegMatrix::parse_json(s)
        } else {
            NonNegMatrix::parse_csv(s)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    m: usize,
    n: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

/// `u_A`: column numbers read along the rows, timed by the entries.
pub fn column_word(a: &NonNegMatrix) -> TimedWord {
    let raw = (0..a.rows).flat_map(|i| (0..a.cols).map(move |j| (j + 1, a.get(i, j).clone())));
    TimedWord::new(a.cols, raw).expect("column letters are in range")
}

/// `v_A`: row numbers read along the columns.
pub fn row_word(a: &NonNegMatrix) -> TimedWord {
    column_word(&a.transpose())
}

/// The word `1^{a_i1} ... n^{a_in}` of row `i` (zero-based).
pub fn matrix_row_word(a: &NonNegMatrix, i: usize) -> TimedWord {
    TimedWord::new(
        a.cols,
        a.row(i).iter().enumerate().map(|(j, e)| (j + 1, e.clone())),
    )
    .expect("column letters are in range")
}

/// The output `(P, Q)` of the correspondence; `P` is over the column
/// alphabet and `Q` over the row alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RskPair {
    pub p: TimedTableau,
    pub q: TimedTableau,
}

/// `RSK(A) = (P(u_A), P(v_A))`.
pub fn rsk(a: &NonNegMatrix) -> RskPair {
    RskPair {
        p: insertion_tableau(&column_word(a)),
        q: insertion_tableau(&row_word(a)),
    }
}

/// Insertion-recording: insert the matrix rows into `P` one at a time
/// and record each new shape in `Q` by inflation with the row index.
pub fn rsk_recording(a: &NonNegMatrix) -> RskPair {
    let mut p = TimedTableau::empty(a.cols);
    let mut q = TimedTableau::empty(0);
    for i in 0..a.rows {
        p = insert(&p, &matrix_row_word(a, i)).expect("matrix rows are rows");
        q = q
            .inflate(&p.shape(), i + 1)
            .expect("insertion shapes interleave");
    }
    RskPair { p, q }
}

/// Leading points, 1-based, ordered by increasing column and hence
/// decreasing row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeadingSequence {
    points: Vec<(usize, usize)>,
}

impl LeadingSequence {
    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }
}

/// Which antichain of the support the shadows algorithm peels.
///
/// Only [`LeadingRule::Minimal`] computes the correspondence;
/// `Maximal` exists so that differential tests can inject a known fault.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeadingRule {
    #[default]
    Minimal,
    Maximal,
}

/// Minimal elements of `supp(A)` under the product order.
pub fn leading_points(a: &NonNegMatrix) -> Result<LeadingSequence> {
    leading_points_with(a, LeadingRule::Minimal)
}

pub fn leading_points_with(a: &NonNegMatrix, rule: LeadingRule) -> Result<LeadingSequence> {
    let support = a.support();
    if support.is_empty() {
        return Err(Error::ZeroMatrix);
    }
    let below = |p: &(usize, usize), q: &(usize, usize)| p != q && p.0 <= q.0 && p.1 <= q.1;
    let mut points: Vec<(usize, usize)> = support
        .iter()
        .filter(|point| match rule {
            LeadingRule::Minimal => !support.iter().any(|other| below(other, point)),
            LeadingRule::Maximal => !support.iter().any(|other| below(point, other)),
        })
        .copied()
        .collect();
    points.sort_by_key(|&(_, j)| j);
    Ok(LeadingSequence { points })
}

/// Light-and-shadows: each outer pass peels leading antichains off the
/// matrix, producing one row of `P` and `Q`, and continues on the shadow
/// matrix of the pass.
pub fn rsk_shadows(a: &NonNegMatrix) -> RskPair {
    rsk_shadows_with(a, LeadingRule::Minimal).expect("minimal leading points yield tableaux")
}

pub fn rsk_shadows_with(a: &NonNegMatrix, rule: LeadingRule) -> Result<RskPair> {
    let (m, n) = (a.rows, a.cols);
    let mut light = a.clone();
    let mut p_rows = Vec::new();
    let mut q_rows = Vec::new();
    while !light.is_zero() {
        let mut shadow = NonNegMatrix::zeros(m, n)?;
        let mut p_raw = Vec::new();
        let mut q_raw = Vec::new();
        while !light.is_zero() {
            let leading = leading_points_with(&light, rule)?;
            let points = leading.points();
            let peel = points
                .iter()
                .map(|&(i, j)| light.get(i - 1, j - 1))
                .min()
                .expect("leading points are nonempty")
                .clone();
            for &(i, j) in points {
                *light.entry_mut(i - 1, j - 1) -= &peel;
            }
            // consecutive leading points (i_s, j_s), (i_{s+1}, j_{s+1}) cast
            // their shadow on (i_s, j_{s+1})
            for pair in points.windows(2) {
                let (row, col) = (pair[0].0, pair[1].1);
                *shadow.entry_mut(row - 1, col - 1) += &peel;
            }
            let first_col = points[0].1;
            let last_row = points[points.len() - 1].0;
            p_raw.push((first_col, peel.clone()));
            q_raw.push((last_row, peel));
        }
        p_rows.push(TimedWord::new(n, p_raw)?);
        q_rows.push(TimedWord::new(m, q_raw)?);
        light = shadow;
    }
    Ok(RskPair {
        p: TimedTableau::from_rows(n, p_rows)?,
        q: TimedTableau::from_rows(m, q_rows)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Direct,
    Recording,
    Shadows,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Direct, Algorithm::Recording, Algorithm::Shadows];

    pub fn run(self, a: &NonNegMatrix) -> RskPair {
        match self {
            Algorithm::Direct => rsk(a),
            Algorithm::Recording => rsk_recording(a),
            Algorithm::Shadows => rsk_shadows(a),
        }
    }
}

/// Recovers `A` from `(P, Q)` by deleting matrix rows from `P` in reverse,
/// reading the intermediate shapes off the restrictions of `Q`.
pub fn rsk_inverse(p: &TimedTableau, q: &TimedTableau) -> Result<NonNegMatrix> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(
            p.shape().to_string(),
            q.shape().to_string(),
        ));
    }
    let (m, n) = (q.alphabet(), p.alphabet());
    let mut matrix = NonNegMatrix::zeros(m, n)?;
    let mut p = p.clone();
    let mut q = q.clone();
    for i in (1..=m).rev() {
        let q_below = q.restrict(i - 1)?;
        let (row, smaller) = delete(&p, &q_below.shape())?;
        if !row.is_row() {
            return Err(Error::ReconstructionMismatch(format!(
                "deleted word {} is not a row",
                row
            )));
        }
        for (j, value) in row.weight().into_iter().enumerate() {
            matrix.set(i - 1, j, value);
        }
        p = smaller;
        q = q_below;
    }
    if !p.is_empty() {
        return Err(Error::ReconstructionMismatch(format!(
            "letters left over after deleting every row: {}",
            p
        )));
    }
    Ok(matrix)
}

/// `(λ^{(j)}_1 + ... + λ^{(j)}_k, max weight of <= k chains in the first
/// j columns)` where `λ = GT(P)`; the two sides must agree.
pub fn gt_partial_sum_check(
    a: &NonNegMatrix,
    j: usize,
    k: usize,
    cap: usize,
) -> Result<(Duration, Duration)> {
    if j == 0 || j > a.cols || k == 0 {
        return Err(Error::Precondition(format!(
            "need 1 <= j <= {} and k >= 1, got j = {}, k = {}",
            a.cols, j, k
        )));
    }
    let pattern = rsk(a).p.to_gt();
    let lhs = pattern.row(j).iter().take(k).sum();
    let rhs = greene_oracle(&column_word(&a.first_columns(j)?), k, cap)?;
    Ok((lhs, rhs))
}

/// Same check for `GT(Q)` and the first `i` rows, through the transpose.
pub fn gt_partial_sum_check_rows(
    a: &NonNegMatrix,
    i: usize,
    k: usize,
    cap: usize,
) -> Result<(Duration, Duration)> {
    gt_partial_sum_check(&a.transpose(), i, k, cap)
}
