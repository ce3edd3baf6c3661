use serde_json::{json, Value};
use timed_plactic::{Duration, GTPattern, KnuthMove, RealPartition, TimedTableau, TimedWord};

use crate::commands::CliError;

pub fn durations(values: &[Duration]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(v.to_exact_string()))
            .collect(),
    )
}

pub fn partition(lam: &RealPartition) -> Value {
    durations(lam.parts())
}

pub fn tableau(t: &TimedTableau) -> Value {
    json!({
        "alphabet": t.alphabet(),
        "rows": t.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "reading_word": t.reading_word().to_string(),
        "shape": partition(&t.shape()),
        "weight": durations(&t.weight()),
    })
}

pub fn gt(pattern: &GTPattern) -> Value {
    Value::Array(pattern.rows().iter().map(|row| durations(row)).collect())
}

pub fn trace(moves: &[KnuthMove]) -> Value {
    serde_json::to_value(moves).expect("moves serialize")
}

/// Reads a tableau back from the object written by [`tableau`].
pub fn parse_tableau(value: &Value) -> Result<TimedTableau, CliError> {
    let alphabet = value
        .get("alphabet")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Input("tableau needs an integer \"alphabet\"".into()))?
        as usize;
    let rows = value
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("tableau needs a \"rows\" list".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            let text = row
                .as_str()
                .ok_or_else(|| CliError::Input("tableau rows must be strings".into()))?;
            Ok(TimedWord::parse(text, Some(alphabet))?)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(TimedTableau::from_rows(alphabet, rows)?)
}

pub fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    text
}

pub fn tableau_text(t: &TimedTableau) -> String {
    let mut out = String::new();
    if t.is_empty() {
        out.push_str("(empty)\n");
    }
    for row in t.rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out.push_str(&format!("shape: {}\n", t.shape()));
    out.push_str(&format!("weight: {}\n", list_text(&t.weight())));
    out
}

pub fn list_text(values: &[Duration]) -> String {
    values
        .iter()
        .map(Duration::to_exact_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn trace_text(moves: &[KnuthMove]) -> String {
    moves
        .iter()
        .map(|m| {
            format!(
                "{:?} {:?} offset={} lx={} ly={} lz={}\n",
                m.kind, m.direction, m.offset, m.lx, m.ly, m.lz
            )
        })
        .collect()
}

pub fn gt_text(pattern: &GTPattern) -> String {
    pattern
        .rows()
        .iter()
        .map(|row| format!("{}\n", list_text(row)))
        .collect()
}
