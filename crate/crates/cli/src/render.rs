//! SVG pictures of timed tableaux: one band per row, `u_1` on top.

use std::fmt::Write;

use timed_plactic::{Duration, TimedTableau};

pub struct RenderSpec {
    pub pixels_per_unit: f64,
    pub row_height: f64,
    /// `palette[c - 1]` fills letter `c`.
    pub palette: Vec<String>,
}

impl RenderSpec {
    /// Evenly spaced hues, one per letter of the alphabet.
    pub fn new(pixels_per_unit: f64, row_height: f64, alphabet: usize) -> Result<Self, String> {
        if !(pixels_per_unit.is_finite() && pixels_per_unit > 0.0) {
            return Err(format!(
                "pixels per unit must be positive, got {}",
                pixels_per_unit
            ));
        }
        if !(row_height.is_finite() && row_height > 0.0) {
            return Err(format!("row height must be positive, got {}", row_height));
        }
        let palette = (0..alphabet)
            .map(|i| format!("hsl({},70%,60%)", px(360.0 * i as f64 / alphabet as f64)))
            .collect();
        Ok(RenderSpec {
            pixels_per_unit,
            row_height,
            palette,
        })
    }
}

fn px(value: f64) -> String {
    let text = format!("{:.3}", value);
    let text = text.trim_end_matches('0').trim_end_matches('.');
    if text.is_empty() || text == "-0" {
        "0".to_string()
    } else {
        text.to_string()
    }
}

pub fn svg(t: &TimedTableau, spec: &RenderSpec) -> String {
    let width = t.shape().part(0).to_f64() * spec.pixels_per_unit;
    let height = t.num_rows() as f64 * spec.row_height;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = px(width),
        h = px(height)
    )
    .unwrap();
    for (i, row) in t.rows().iter().enumerate() {
        let y = i as f64 * spec.row_height;
        writeln!(
            out,
            r#"  <g class="row" data-row="{}" data-length="{}">"#,
            i + 1,
            row.len()
        )
        .unwrap();
        let mut start = Duration::zero();
        for seg in row.segments() {
            writeln!(
                out,
                r#"    <rect x="{}" y="{}" width="{}" height="{}" fill="{}" data-letter="{}" data-duration="{}"/>"#,
                px(start.to_f64() * spec.pixels_per_unit),
                px(y),
                px(seg.duration.to_f64() * spec.pixels_per_unit),
                px(spec.row_height),
                spec.palette[seg.letter - 1],
                seg.letter,
                seg.duration
            )
            .unwrap();
            start += seg.duration.clone();
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}
