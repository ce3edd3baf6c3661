use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use serde_json::{json, Value};
use timed_plactic::{
    delete as delete_rows, equivalent, greene as greene_value, greene_oracle, insert as insert_row,
    insertion_tableau, normalize_with_trace, replay, rsk_inverse as invert, Algorithm, Error,
    GTPattern, KnuthMove, NonNegMatrix, RealPartition, RskPair, TimedTableau, TimedWord,
};

use crate::fuzz;
use crate::output;
use crate::render::{self, RenderSpec};
use crate::{AlgoChoice, Format};

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit code 2.
    Input(String),
    /// A property or agreement check failed: exit code 1.
    Failure {
        message: String,
        report: Option<String>,
    },
}

impl CliError {
    pub fn report(&self) -> ExitCode {
        match self {
            CliError::Input(message) => {
                eprintln!("error: {}", message);
                ExitCode::from(2)
            }
            CliError::Failure { message, .. } => {
                eprintln!("failure: {}", message);
                ExitCode::from(1)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CmdResult = Result<String, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {}", path.display(), e)))
}

fn parse_json(text: &str, what: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid {} JSON: {}", what, e)))
}

fn word(text: &str, n: Option<usize>) -> Result<TimedWord, CliError> {
    Ok(TimedWord::parse(text, n)?)
}

fn tableau(text: &str, n: Option<usize>) -> Result<TimedTableau, CliError> {
    Ok(TimedTableau::parse(text, n)?)
}

pub fn ptab(text: &str, n: Option<usize>, with_trace: bool, format: Format) -> CmdResult {
    let w = word(text, n)?;
    let (p, moves) = if with_trace {
        let (p, moves) = normalize_with_trace(&w);
        (p, Some(moves))
    } else {
        (insertion_tableau(&w), None)
    };
    Ok(match format {
        Format::Json => {
            let mut value = json!({ "word": w.to_string(), "tableau": output::tableau(&p) });
            if let Some(moves) = &moves {
                value["trace"] = output::trace(moves);
            }
            output::pretty(&value)
        }
        Format::Text => {
            let mut text = output::tableau_text(&p);
            if let Some(moves) = &moves {
                text.push_str(&format!("trace: {} moves\n", moves.len()));
                text.push_str(&output::trace_text(moves));
            }
            text
        }
    })
}

pub fn insert(t: &str, row: &str, n: Option<usize>, format: Format) -> CmdResult {
    let t = tableau(t, n)?;
    let v = word(row, Some(n.unwrap_or_else(|| t.alphabet())))?;
    let n = t.alphabet().max(v.alphabet());
    let result = insert_row(&t.with_alphabet(n)?, &v.with_alphabet(n)?)?;
    Ok(match format {
        Format::Json => output::pretty(&json!({ "tableau": output::tableau(&result) })),
        Format::Text => output::tableau_text(&result),
    })
}

pub fn delete(t: &str, shape: &str, n: Option<usize>, format: Format) -> CmdResult {
    let t = tableau(t, n)?;
    let lam: RealPartition = shape.parse()?;
    let (row, smaller) = delete_rows(&t, &lam)?;
    Ok(match format {
        Format::Json => output::pretty(&json!({
            "row": row.to_string(),
            "tableau": output::tableau(&smaller),
        })),
        Format::Text => format!("row: {}\n{}", row, output::tableau_text(&smaller)),
    })
}

pub fn greene(
    text: &str,
    k: Option<usize>,
    with_oracle: bool,
    cap: usize,
    n: Option<usize>,
    format: Format,
) -> CmdResult {
    let w = word(text, n)?;
    let k = k.unwrap_or_else(|| insertion_tableau(&w).num_rows().max(1));
    let values: Vec<_> = (1..=k).map(|i| greene_value(&w, i)).collect();
    let oracle = if with_oracle {
        Some(
            (1..=k)
                .map(|i| greene_oracle(&w, i, cap))
                .collect::<Result<Vec<_>, _>>()?,
        )
    } else {
        None
    };
    let text = match format {
        Format::Json => {
            let mut value = json!({ "word": w.to_string(), "greene": output::durations(&values) });
            if let Some(oracle) = &oracle {
                value["oracle"] = output::durations(oracle);
            }
            output::pretty(&value)
        }
        Format::Text => {
            let mut text = format!("greene: {}\n", output::list_text(&values));
            if let Some(oracle) = &oracle {
                text.push_str(&format!("oracle: {}\n", output::list_text(oracle)));
            }
            text
        }
    };
    match oracle {
        Some(oracle) if oracle != values => Err(CliError::Failure {
            message: "fast Greene invariants disagree with the oracle".into(),
            report: Some(text),
        }),
        _ => Ok(text),
    }
}

pub fn knuth_equal(left: &str, right: &str, n: Option<usize>, format: Format) -> CmdResult {
    let v = word(left, n)?;
    let w = word(right, n)?;
    let n = v.alphabet().max(w.alphabet());
    let (v, w) = (v.with_alphabet(n)?, w.with_alphabet(n)?);
    let same = equivalent(&v, &w)?;
    Ok(match format {
        Format::Json => output::pretty(&json!({
            "equivalent": same,
            "left": output::tableau(&insertion_tableau(&v)),
            "right": output::tableau(&insertion_tableau(&w)),
        })),
        Format::Text => format!("{}\n", same),
    })
}

pub fn knuth_trace(
    text: &str,
    n: Option<usize>,
    replay_file: Option<&Path>,
    format: Format,
) -> CmdResult {
    let w = word(text, n)?;
    let Some(path) = replay_file else {
        let (p, moves) = normalize_with_trace(&w);
        return Ok(match format {
            Format::Json => output::pretty(&json!({
                "word": w.to_string(),
                "tableau": output::tableau(&p),
                "trace": output::trace(&moves),
            })),
            Format::Text => output::trace_text(&moves),
        });
    };
    let value = parse_json(&read(path)?, "trace")?;
    let moves = value.get("trace").cloned().unwrap_or(value);
    let moves: Vec<KnuthMove> = serde_json::from_value(moves)
        .map_err(|e| CliError::Input(format!("invalid trace: {}", e)))?;
    let expected = insertion_tableau(&w);
    let (result, problem) = match replay(&w, &moves) {
        Ok(end) if end == expected.reading_word() => (Some(end), None),
        Ok(end) => {
            let problem = format!(
                "trace ends at {} which is not the reading word of P(w)",
                end
            );
            (Some(end), Some(problem))
        }
        Err(e) => (None, Some(e.to_string())),
    };
    let text = match format {
        Format::Json => output::pretty(&json!({
            "valid": problem.is_none(),
            "moves": moves.len(),
            "result": result.as_ref().map(|r| r.to_string()),
            "error": problem,
        })),
        Format::Text => match &problem {
            None => format!("valid: {} moves\n", moves.len()),
            Some(p) => format!("invalid: {}\n", p),
        },
    };
    match problem {
        None => Ok(text),
        Some(message) => Err(CliError::Failure {
            message,
            report: Some(text),
        }),
    }
}

fn rsk_json(a: &NonNegMatrix, algorithm: &str, pair: &RskPair, emit_gt: bool) -> Value {
    let mut value = json!({
        "m": a.num_rows(),
        "n": a.num_cols(),
        "algorithm": algorithm,
        "P": output::tableau(&pair.p),
        "Q": output::tableau(&pair.q),
        "shape": output::partition(&pair.p.shape()),
    });
    if emit_gt {
        value["gt"] = json!({
            "P": output::gt(&pair.p.to_gt()),
            "Q": output::gt(&pair.q.to_gt()),
        });
    }
    value
}

fn algorithm_name(algo: Algorithm) -> &'static str {
    match algo {
        Algorithm::Direct => "direct",
        Algorithm::Recording => "recording",
        Algorithm::Shadows => "shadows",
    }
}

pub fn rsk(
    path: &Path,
    algo: AlgoChoice,
    emit_gt: bool,
    timing: bool,
    format: Format,
) -> CmdResult {
    let a: NonNegMatrix = read(path)?.parse()?;
    let algorithms: Vec<Algorithm> = match algo {
        AlgoChoice::Direct => vec![Algorithm::Direct],
        AlgoChoice::Recording => vec![Algorithm::Recording],
        AlgoChoice::Shadows => vec![Algorithm::Shadows],
        AlgoChoice::All => Algorithm::ALL.to_vec(),
    };
    let mut results = Vec::new();
    for &alg in &algorithms {
        let start = Instant::now();
        let pair = alg.run(&a);
        results.push((alg, pair, start.elapsed()));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    if !agree {
        let (shrunk, property, _) = fuzz::shrink_agreement(&a);
        let report = json!({
            "agreement": false,
            "results": results
                .iter()
                .map(|(alg, pair, _)| rsk_json(&a, algorithm_name(*alg), pair, false))
                .collect::<Vec<_>>(),
            "counterexample": { "property": property, "matrix": shrunk.to_csv() },
        });
        return Err(CliError::Failure {
            message: "RSK algorithms disagree".into(),
            report: Some(output::pretty(&report)),
        });
    }
    let (_, pair, _) = &results[0];
    let name = match algo {
        AlgoChoice::All => "all",
        _ => algorithm_name(results[0].0),
    };
    Ok(match format {
        Format::Json => {
            let mut value = rsk_json(&a, name, pair, emit_gt);
            if algo == AlgoChoice::All {
                value["agreement"] = Value::Bool(true);
            }
            if timing {
                let mut times = serde_json::Map::new();
                for (alg, _, elapsed) in &results {
                    times.insert(
                        algorithm_name(*alg).to_string(),
                        json!(elapsed.as_secs_f64() * 1e3),
                    );
                }
                value["timing_ms"] = Value::Object(times);
            }
            output::pretty(&value)
        }
        Format::Text => {
            let mut text = format!(
                "P:\n{}Q:\n{}",
                output::tableau_text(&pair.p),
                output::tableau_text(&pair.q)
            );
            if emit_gt {
                text.push_str(&format!(
                    "GT(P):\n{}GT(Q):\n{}",
                    output::gt_text(&pair.p.to_gt()),
                    output::gt_text(&pair.q.to_gt())
                ));
            }
            if timing {
                for (alg, _, elapsed) in &results {
                    text.push_str(&format!(
                        "{}: {:.3} ms\n",
                        algorithm_name(*alg),
                        elapsed.as_secs_f64() * 1e3
                    ));
                }
            }
            text
        }
    })
}

pub fn rsk_inverse(path: &Path, format: Format) -> CmdResult {
    let value = parse_json(&read(path)?, "rsk")?;
    let field = |name: &str| {
        value
            .get(name)
            .ok_or_else(|| CliError::Input(format!("rsk output lacks \"{}\"", name)))
    };
    let p = output::parse_tableau(field("P")?)?;
    let q = output::parse_tableau(field("Q")?)?;
    let a = invert(&p, &q)?;
    Ok(match format {
        Format::Json => output::pretty(&a.to_json()),
        Format::Text => a.to_csv(),
    })
}

pub fn gt(
    t: Option<&str>,
    n: Option<usize>,
    pattern_file: Option<&Path>,
    format: Format,
) -> CmdResult {
    match (t, pattern_file) {
        (Some(text), None) => {
            let t = tableau(text, n)?;
            let pattern = t.to_gt();
            Ok(match format {
                Format::Json => output::pretty(&json!({
                    "tableau": output::tableau(&t),
                    "pattern": output::gt(&pattern),
                })),
                Format::Text => output::gt_text(&pattern),
            })
        }
        (None, Some(path)) => {
            let value = parse_json(&read(path)?, "pattern")?;
            let rows = value.get("pattern").cloned().unwrap_or(value);
            let pattern: GTPattern = serde_json::from_value(rows)
                .map_err(|e| CliError::Input(format!("invalid pattern: {}", e)))?;
            let t = TimedTableau::from_gt(&pattern)?;
            Ok(match format {
                Format::Json => output::pretty(&json!({
                    "tableau": output::tableau(&t),
                    "pattern": output::gt(&pattern),
                })),
                Format::Text => output::tableau_text(&t),
            })
        }
        _ => Err(CliError::Input("give either a tableau or --pattern".into())),
    }
}

pub fn viz(input: &str, n: Option<usize>, pixels_per_unit: f64, row_height: f64) -> CmdResult {
    let t = if input.contains(';') {
        tableau(input, n)?
    } else {
        insertion_tableau(&word(input, n)?)
    };
    let spec =
        RenderSpec::new(pixels_per_unit, row_height, t.alphabet()).map_err(CliError::Input)?;
    Ok(render::svg(&t, &spec))
}
