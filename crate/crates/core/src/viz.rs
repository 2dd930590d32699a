//! SVG diagram of the region for a coprime pair.
//!
//! Output is plain SVG 1.1 text. Every marker carries a class attribute
//! (`green`, `blue`, `red`, `highlight`) so the document can be checked by
//! parsing instead of by looking at pixels. Positive y points up.

use std::fmt::Write;

use crate::arith::CoprimePair;
use crate::error::{FrobError, Result};
use crate::region::{enumerate_region, linear_form, LatticePoint};

/// Largest `a·b` we are willing to draw.
pub const MAX_RENDER_PRODUCT: i64 = 5000;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Pixels per lattice unit.
    pub scale: f64,
    /// Write each point's value `ax + by` next to it.
    pub show_values: bool,
    pub highlight: Vec<LatticePoint>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 24.0,
            show_values: false,
            highlight: Vec::new(),
        }
    }
}

struct Canvas {
    scale: f64,
    a: i64,
}

impl Canvas {
    fn px(&self, x: f64) -> f64 {
        (x + 1.0) * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        (self.a as f64 + 1.0 - y) * self.scale
    }
}

pub fn render_region_svg(pair: CoprimePair, opts: &RenderOptions) -> Result<String> {
    if !(opts.scale.is_finite() && opts.scale > 0.0) {
        return Err(FrobError::Domain(format!(
            "scale must be positive, got {}",
            opts.scale
        )));
    }
    if pair.product() > MAX_RENDER_PRODUCT {
        return Err(FrobError::Resource(format!(
            "a·b = {} is above the drawing cap {MAX_RENDER_PRODUCT}",
            pair.product()
        )));
    }
    let (a, b) = (pair.a(), pair.b());
    let region = enumerate_region(pair)?;
    let cv = Canvas { scale: opts.scale, a };
    let s = opts.scale;
    let width = (b as f64 + 2.0) * s;
    let height = (2.0 * a as f64 + 2.0) * s;

    let mut out = String::new();
    // writes into a String cannot fail
    let w = &mut out;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(w, "<title>Lattice region for (a, b) = ({a}, {b})</title>").unwrap();
    writeln!(
        w,
        r#"<rect class="background" x="0" y="0" width="{width:.2}" height="{height:.2}" fill="white"/>"#
    )
    .unwrap();

    let line = |w: &mut String, class: &str, from: (f64, f64), to: (f64, f64), extra: &str| {
        writeln!(
            w,
            r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"{extra}/>"#,
            cv.px(from.0),
            cv.py(from.1),
            cv.px(to.0),
            cv.py(to.1),
        )
        .unwrap();
    };
    let axis_style = r##" stroke="#888888" stroke-width="1""##;
    line(w, "axis", (-1.0, 0.0), (b as f64 + 1.0, 0.0), axis_style);
    line(
        w,
        "axis",
        (0.0, -(a as f64) - 1.0),
        (0.0, a as f64 + 1.0),
        axis_style,
    );
    // ax + by = ab, ax + by = 0, and the dashed cutoff ax + by = b
    line(
        w,
        "guide-upper",
        (0.0, a as f64),
        (b as f64, 0.0),
        r##" stroke="#444444" stroke-width="1.5""##,
    );
    line(
        w,
        "guide-zero",
        (0.0, 0.0),
        (b as f64, -(a as f64)),
        r##" stroke="#444444" stroke-width="1.5""##,
    );
    line(
        w,
        "guide-cutoff",
        (0.0, 1.0),
        (b as f64, 1.0 - a as f64),
        r##" stroke="#ff8c00" stroke-width="1.5" stroke-dasharray="6,4""##,
    );

    let radius = 0.18 * s;
    let layers = [
        ("green", "#2e8b57", &region.green),
        ("blue", "#1f5fbf", &region.blue),
        ("red", "#c0392b", &region.red),
    ];
    for (class, fill, points) in layers {
        for p in points.iter() {
            writeln!(
                w,
                r#"<circle class="{class}" cx="{:.2}" cy="{:.2}" r="{radius:.2}" fill="{fill}"/>"#,
                cv.px(p.x as f64),
                cv.py(p.y as f64),
            )
            .unwrap();
        }
    }
    for p in &opts.highlight {
        writeln!(
            w,
            r##"<circle class="highlight" cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="#000000" stroke-width="2"/>"##,
            cv.px(p.x as f64),
            cv.py(p.y as f64),
            0.34 * s,
        )
        .unwrap();
    }

    if opts.show_values {
        let mut labelled: Vec<LatticePoint> = layers
            .iter()
            .flat_map(|(_, _, pts)| pts.iter().copied())
            .chain(opts.highlight.iter().copied())
            .collect();
        labelled.sort_unstable();
        labelled.dedup();
        let font = 0.4 * s;
        for p in labelled {
            writeln!(
                w,
                r#"<text class="value" x="{:.2}" y="{:.2}" font-size="{font:.2}" font-family="sans-serif">{}</text>"#,
                cv.px(p.x as f64) + 0.22 * s,
                cv.py(p.y as f64) - 0.22 * s,
                linear_form(pair, p),
            )
            .unwrap();
        }
    }
    writeln!(w, "</svg>").unwrap();
    Ok(out)
}
