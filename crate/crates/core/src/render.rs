//! Text, SVG and JSON renderings of a source patch and its image.

use std::fmt::Write;

use serde::Serialize;

use crate::factormap::Code;
use crate::suspension::{SuspensionPoint, TilePatch};
use crate::{QLin, Result};

/// SVG user units per unit of length.
pub const SVG_SCALE: f64 = 40.0;
const ROW_HEIGHT: f64 = 30.0;
const MARGIN: f64 = 20.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Svg,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatchPair {
    pub source: TilePatch,
    pub image: TilePatch,
}

/// Patches of half-width `half_width` around `sp` (canonicalized) and around
/// its image.
pub fn patch_pair(code: &Code, sp: &SuspensionPoint, half_width: &QLin) -> Result<PatchPair> {
    let sp = code.source().canonical(&sp.base, &sp.height)?;
    let image = code.apply(&sp)?;
    Ok(PatchPair {
        source: code.source().patch(&sp, half_width)?,
        image: code.target().patch(&image, half_width)?,
    })
}

pub fn render(pair: &PatchPair, format: Format) -> String {
    match format {
        Format::Text => text(pair),
        Format::Svg => svg(pair),
        Format::Json => serde_json::to_string_pretty(pair).expect("patches serialize") + "\n",
    }
}

fn text_row(name: &str, patch: &TilePatch, out: &mut String) {
    writeln!(out, "{name}").unwrap();
    for t in &patch.tiles {
        writeln!(
            out,
            "  [{:>9.5}, {:>9.5})  {}  {}",
            t.left.to_f64(),
            t.right().to_f64(),
            t.label,
            t.length
        )
        .unwrap();
    }
}

/// One line per tile: approximate endpoints, label, exact length.
pub fn text(pair: &PatchPair) -> String {
    let mut out = String::new();
    text_row("source", &pair.source, &mut out);
    text_row("image", &pair.image, &mut out);
    out
}

pub fn svg(pair: &PatchPair) -> String {
    let ends = [&pair.source, &pair.image]
        .iter()
        .flat_map(|p| [p.left_end(), p.right_end()])
        .flatten()
        .map(|v| v.to_f64())
        .collect::<Vec<_>>();
    let lo = ends.iter().cloned().fold(0.0, f64::min);
    let hi = ends.iter().cloned().fold(0.0, f64::max);
    let width = (hi - lo) * SVG_SCALE + 2.0 * MARGIN;
    let height = 2.0 * ROW_HEIGHT + 3.0 * MARGIN;
    let x = |v: f64| (v - lo) * SVG_SCALE + MARGIN;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    for (row, (name, patch)) in [("source", &pair.source), ("image", &pair.image)].into_iter().enumerate() {
        let y = MARGIN + row as f64 * (ROW_HEIGHT + MARGIN);
        writeln!(out, r#"  <g class="{name}">"#).unwrap();
        for t in &patch.tiles {
            let (l, r) = (x(t.left.to_f64()), x(t.right().to_f64()));
            let fill = if t.label.0 % 2 == 0 { "#dde6f0" } else { "#f0e2cc" };
            writeln!(
                out,
                r##"    <rect x="{l:.2}" y="{y:.2}" width="{:.2}" height="{ROW_HEIGHT:.2}" fill="{fill}" stroke="#333"/>"##,
                r - l
            )
            .unwrap();
            writeln!(
                out,
                r#"    <text x="{:.2}" y="{:.2}" text-anchor="middle" dominant-baseline="middle" font-size="12">{}</text>"#,
                (l + r) / 2.0,
                y + ROW_HEIGHT / 2.0,
                t.label
            )
            .unwrap();
        }
        writeln!(out, "  </g>").unwrap();
    }
    let o = x(0.0);
    writeln!(
        out,
        r##"  <line class="origin" x1="{o:.2}" y1="{:.2}" x2="{o:.2}" y2="{:.2}" stroke="#c00" stroke-width="2"/>"##,
        MARGIN / 2.0,
        height - MARGIN / 2.0
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
