//! Seeded differential testing on random matrices, with shrinking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use timed_plactic::{
    column_word, greene, greene_oracle, gt_partial_sum_check, gt_partial_sum_check_rows,
    insertion_tableau, normalize_with_trace, random, replay, rsk, rsk_inverse, rsk_recording,
    rsk_shadows_with, Duration, Error, LeadingRule, NonNegMatrix, RskPair, TimedTableau,
    DEFAULT_ORACLE_CAP,
};

use crate::commands::CliError;
use crate::output;
use crate::{Fault, Format};

pub struct FuzzConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_m: usize,
    pub max_n: usize,
    pub denom_bound: u64,
    pub fault: Option<Fault>,
}

type Check = fn(&NonNegMatrix, LeadingRule) -> Result<(), String>;

const PROPERTIES: [(&str, Check); 9] = [
    ("triple-agreement", triple_agreement),
    ("shape-equality", shape_equality),
    ("weights", weights),
    ("inverse", inverse),
    ("transpose-symmetry", transpose_symmetry),
    ("homogeneity", homogeneity),
    ("knuth-trace", knuth_trace),
    ("greene-oracle", greene_agreement),
    ("gt-partial-sums", gt_partial_sums),
];

fn rule_for(fault: Option<Fault>) -> LeadingRule {
    match fault {
        Some(Fault::MaxLeadingPoints) => LeadingRule::Maximal,
        None => LeadingRule::Minimal,
    }
}

fn triple_agreement(a: &NonNegMatrix, rule: LeadingRule) -> Result<(), String> {
    let direct = rsk(a);
    let recording = rsk_recording(a);
    if direct != recording {
        return Err(format!(
            "direct P = {}, Q = {}; recording P = {}, Q = {}",
            direct.p, direct.q, recording.p, recording.q
        ));
    }
    match rsk_shadows_with(a, rule) {
        Ok(shadows) if shadows == direct => Ok(()),
        Ok(shadows) => Err(format!(
            "direct P = {}, Q = {}; shadows P = {}, Q = {}",
            direct.p, direct.q, shadows.p, shadows.q
        )),
        Err(e) => Err(format!("shadows failed: {}", e)),
    }
}

fn shape_equality(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    let pair = rsk(a);
    if pair.p.shape() == pair.q.shape() {
        Ok(())
    } else {
        Err(format!("shapes {} and {}", pair.p.shape(), pair.q.shape()))
    }
}

fn weights(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    let pair = rsk(a);
    if pair.p.weight() != a.col_sums() {
        return Err(format!(
            "weight(P) = {:?}, column sums {:?}",
            pair.p.weight(),
            a.col_sums()
        ));
    }
    if pair.q.weight() != a.row_sums() {
        return Err(format!(
            "weight(Q) = {:?}, row sums {:?}",
            pair.q.weight(),
            a.row_sums()
        ));
    }
    Ok(())
}

fn inverse(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    let pair = rsk(a);
    match rsk_inverse(&pair.p, &pair.q) {
        Ok(b) if &b == a => Ok(()),
        Ok(b) => Err(format!("inverse gave\n{}", b.to_csv())),
        Err(e) => Err(e.to_string()),
    }
}

fn transpose_symmetry(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    let pair = rsk(a);
    let swapped = rsk(&a.transpose());
    if swapped.p == pair.q && swapped.q == pair.p {
        Ok(())
    } else {
        Err(format!("RSK(A^T) = ({}, {})", swapped.p, swapped.q))
    }
}

fn scale_tableau(t: &TimedTableau, c: &Duration) -> TimedTableau {
    TimedTableau::from_rows(t.alphabet(), t.rows().iter().map(|r| r.scale(c)).collect())
        .expect("scaling keeps rows")
}

fn homogeneity(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    let c = Duration::from_ratio(5, 3);
    let pair = rsk(a);
    let scaled = rsk(&a.scale(&c));
    let expected = RskPair {
        p: scale_tableau(&pair.p, &c),
        q: scale_tableau(&pair.q, &c),
    };
    if scaled == expected {
        Ok(())
    } else {
        Err(format!("RSK(5/3 A) = ({}, {})", scaled.p, scaled.q))
    }
}

fn knuth_trace(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    let w = column_word(a);
    let (p, moves) = normalize_with_trace(&w);
    if p != insertion_tableau(&w) {
        return Err(format!("normal form {} differs from P(w)", p));
    }
    match replay(&w, &moves) {
        Ok(end) if end == p.reading_word() => Ok(()),
        Ok(end) => Err(format!("trace ends at {}", end)),
        Err(e) => Err(e.to_string()),
    }
}

/// `None` when the instance is too large for the oracle.
fn within_cap<T>(result: Result<T, Error>) -> Result<Option<T>, String> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::OracleTooLarge { .. }) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

fn greene_agreement(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    let w = column_word(a);
    for k in 1..=3 {
        if let Some(oracle) = within_cap(greene_oracle(&w, k, DEFAULT_ORACLE_CAP))? {
            let fast = greene(&w, k);
            if fast != oracle {
                return Err(format!("a_{} = {}, oracle {}", k, fast, oracle));
            }
        }
    }
    Ok(())
}

fn gt_partial_sums(a: &NonNegMatrix, _: LeadingRule) -> Result<(), String> {
    for j in 1..=a.num_cols() {
        for k in 1..=j {
            if let Some((lhs, rhs)) = within_cap(gt_partial_sum_check(a, j, k, DEFAULT_ORACLE_CAP))?
            {
                if lhs != rhs {
                    return Err(format!("GT(P) j = {}, k = {}: {} vs {}", j, k, lhs, rhs));
                }
            }
        }
    }
    for i in 1..=a.num_rows() {
        for k in 1..=i {
            if let Some((lhs, rhs)) =
                within_cap(gt_partial_sum_check_rows(a, i, k, DEFAULT_ORACLE_CAP))?
            {
                if lhs != rhs {
                    return Err(format!("GT(Q) i = {}, k = {}: {} vs {}", i, k, lhs, rhs));
                }
            }
        }
    }
    Ok(())
}

/// First failing property, as `(index into PROPERTIES, detail)`.
fn first_failure(a: &NonNegMatrix, rule: LeadingRule) -> Option<(usize, String)> {
    PROPERTIES
        .iter()
        .enumerate()
        .find_map(|(i, (_, check))| check(a, rule).err().map(|detail| (i, detail)))
}

fn without_row(a: &NonNegMatrix, skip: usize) -> NonNegMatrix {
    let rows = (0..a.num_rows())
        .filter(|&i| i != skip)
        .map(|i| a.row(i).to_vec())
        .collect();
    NonNegMatrix::from_rows(rows).expect("at least one row remains")
}

fn without_col(a: &NonNegMatrix, skip: usize) -> NonNegMatrix {
    without_row(&a.transpose(), skip).transpose()
}

fn simpler_entries(x: &Duration) -> Vec<Duration> {
    let r = x.as_rational();
    let mut out = Vec::new();
    for candidate in [r.floor(), r.ceil()] {
        if let Ok(c) = Duration::new(candidate) {
            if c.is_positive() && &c != x && !out.contains(&c) {
                out.push(c);
            }
        }
    }
    if !x.is_integer() || *x > 1u64 {
        let one = Duration::one();
        if !out.contains(&one) {
            out.push(one);
        }
    }
    out
}

/// Candidates in the order: fewer rows or columns, zeroed entries,
/// simpler entries.
fn shrink_candidates(a: &NonNegMatrix) -> Vec<NonNegMatrix> {
    let mut out = Vec::new();
    if a.num_rows() > 1 {
        out.extend((0..a.num_rows()).map(|i| without_row(a, i)));
    }
    if a.num_cols() > 1 {
        out.extend((0..a.num_cols()).map(|j| without_col(a, j)));
    }
    for i in 0..a.num_rows() {
        for j in 0..a.num_cols() {
            if !a.get(i, j).is_zero() {
                let mut b = a.clone();
                b.set(i, j, Duration::zero());
                out.push(b);
            }
        }
    }
    for i in 0..a.num_rows() {
        for j in 0..a.num_cols() {
            for value in simpler_entries(a.get(i, j)) {
                let mut b = a.clone();
                b.set(i, j, value);
                out.push(b);
            }
        }
    }
    out
}

/// Greedily shrinks `a` while `fails` keeps holding.
pub fn shrink(a: &NonNegMatrix, fails: impl Fn(&NonNegMatrix) -> bool) -> NonNegMatrix {
    let mut current = a.clone();
    'outer: loop {
        for candidate in shrink_candidates(&current) {
            if fails(&candidate) {
                current = candidate;
                continue 'outer;
            }
        }
        return current;
    }
}

/// Shrinks a matrix on which the three default algorithms disagree.
pub fn shrink_agreement(a: &NonNegMatrix) -> (NonNegMatrix, &'static str, String) {
    let fails = |b: &NonNegMatrix| triple_agreement(b, LeadingRule::Minimal).is_err();
    let shrunk = shrink(a, fails);
    let detail = triple_agreement(&shrunk, LeadingRule::Minimal)
        .err()
        .unwrap_or_default();
    (shrunk, "triple-agreement", detail)
}

struct CaseFailure {
    case: usize,
    property: &'static str,
    detail: String,
    matrix: NonNegMatrix,
    shrunk: NonNegMatrix,
}

fn case_matrix(config: &FuzzConfig, case: usize) -> NonNegMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(case as u64);
    let m = rng.gen_range(1..=config.max_m);
    let n = rng.gen_range(1..=config.max_n);
    random::matrix(&mut rng, m, n, config.denom_bound, 0.3)
}

fn run_case(config: &FuzzConfig, case: usize) -> Option<CaseFailure> {
    let rule = rule_for(config.fault);
    let a = case_matrix(config, case);
    let (index, _) = first_failure(&a, rule)?;
    let (property, check) = PROPERTIES[index];
    let shrunk = shrink(&a, |b| check(b, rule).is_err());
    let detail = check(&shrunk, rule).err().unwrap_or_default();
    Some(CaseFailure {
        case,
        property,
        detail,
        matrix: a,
        shrunk,
    })
}

pub fn run(config: &FuzzConfig, format: Format) -> Result<String, CliError> {
    if config.cases > 0 && (config.max_m == 0 || config.max_n == 0 || config.denom_bound == 0) {
        return Err(CliError::Input(
            "max-m, max-n and denom-bound must be at least 1".into(),
        ));
    }
    let mut failures: Vec<CaseFailure> = (0..config.cases)
        .into_par_iter()
        .filter_map(|case| run_case(config, case))
        .collect();
    failures.sort_by_key(|f| f.case);

    let text = match format {
        Format::Json => {
            let value = json!({
                "seed": config.seed,
                "cases": config.cases,
                "max_m": config.max_m,
                "max_n": config.max_n,
                "denom_bound": config.denom_bound,
                "fault": config.fault.map(|_| "max-leading-points"),
                "properties": PROPERTIES.iter().map(|(name, _)| *name).collect::<Vec<_>>(),
                "passed": config.cases - failures.len(),
                "failed": failures.len(),
                "failures": failures.iter().map(failure_json).collect::<Vec<_>>(),
            });
            output::pretty(&value)
        }
        Format::Text => {
            let mut text = format!(
                "seed {}: {} cases, {} passed, {} failed\n",
                config.seed,
                config.cases,
                config.cases - failures.len(),
                failures.len()
            );
            for f in &failures {
                text.push_str(&format!(
                    "case {}: {} failed\n  detail: {}\n  shrunk to {}x{}:\n{}",
                    f.case,
                    f.property,
                    f.detail,
                    f.shrunk.num_rows(),
                    f.shrunk.num_cols(),
                    f.shrunk.to_csv()
                ));
            }
            text
        }
    };
    if failures.is_empty() {
        Ok(text)
    } else {
        Err(CliError::Failure {
            message: format!("{} of {} cases failed", failures.len(), config.cases),
            report: Some(text),
        })
    }
}

fn failure_json(f: &CaseFailure) -> Value {
    json!({
        "case": f.case,
        "property": f.property,
        "detail": f.detail,
        "matrix": f.matrix.to_csv(),
        "shrunk": {
            "m": f.shrunk.num_rows(),
            "n": f.shrunk.num_cols(),
            "matrix": f.shrunk.to_csv(),
        },
    })
}
