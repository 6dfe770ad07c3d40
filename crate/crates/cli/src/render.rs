//! SVG figures of hexagons and horodisk chains.
//!
//! The unit disk fills a `0 0 1000 1000` viewBox with the y axis pointing up:
//! `(x, y)` is drawn at `(500 + 500x, 500 - 500y)`.

use std::fmt::Write as _;

use seven_circles::prelude::*;

use crate::error::{CliError, Result};
use crate::scene::{Layer, RenderOptions};

const HALF: f64 = 500.0;

fn sx(z: Complex64) -> f64 {
    HALF + HALF * z.re
}

fn sy(z: Complex64) -> f64 {
    HALF - HALF * z.im
}

fn pt(z: Complex64) -> String {
    format!("{:.3} {:.3}", sx(z), sy(z))
}

/// Path command drawing the geodesic segment from `p` to `q` on `carrier`,
/// starting from the current point `p`.
fn geodesic_step(carrier: Carrier, p: Complex64, q: Complex64) -> String {
    match carrier {
        Carrier::Diameter { .. } => format!("L {}", pt(q)),
        Carrier::OrthoCircle { center, radius } => {
            let cross = (p - center).conj() * (q - center);
            let sweep = if cross.im > 0.0 { 0 } else { 1 };
            let r = HALF * radius;
            format!("A {r:.3} {r:.3} 0 0 {sweep} {}", pt(q))
        }
    }
}

fn geodesic_path(g: &Geodesic) -> String {
    let (a, b) = g.endpoints();
    format!(
        "M {} {}",
        pt(a.u()),
        geodesic_step(g.carrier(), a.u(), b.u())
    )
}

fn line(out: &mut String, class: &str, a: Complex64, b: Complex64) {
    writeln!(
        out,
        r#"  <line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
        sx(a),
        sy(a),
        sx(b),
        sy(b)
    )
    .expect("writing to a String");
}

fn path(out: &mut String, class: &str, d: &str) {
    writeln!(out, r#"  <path class="{class}" d="{d}"/>"#).expect("writing to a String");
}

fn circle(out: &mut String, class: &str, c: Complex64, r: f64) {
    writeln!(
        out,
        r#"  <circle class="{class}" cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
        sx(c),
        sy(c),
        HALF * r
    )
    .expect("writing to a String");
}

/// Draws `hex` with horodisks of the given sizes. Output depends only on the
/// arguments.
pub fn render_svg(hex: &IdealHexagon, sizes: &[f64; 6], opts: &RenderOptions) -> Result<String> {
    if opts.width == 0 {
        return Err(CliError::Input("width must be positive".into()));
    }
    if !(opts.stroke_width > 0.0 && opts.stroke_width.is_finite()) {
        return Err(CliError::Input("stroke width must be positive".into()));
    }
    let on = |l: Layer| opts.layers.contains(&l);
    let u = hex.vertices().map(|v| v.u());
    let stroke = opts.stroke_width * 1000.0 / opts.width as f64;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 1000 1000">"#,
        w = opts.width
    )
    .unwrap();
    writeln!(
        out,
        "<style>\n  * {{ fill: none; stroke-width: {stroke:.3}; }}\n  \
         .boundary {{ stroke: black; }}\n  \
         .horodisk {{ stroke: #1f77b4; fill: #1f77b4; fill-opacity: 0.12; }}\n  \
         .klein-side, .geodesic-side {{ stroke: #444; }}\n  \
         .klein-diagonal, .geodesic-diagonal {{ stroke: #d62728; }}\n  \
         .small-triangle {{ stroke: #2ca02c; fill: #2ca02c; fill-opacity: 0.35; }}\n  \
         .triple-point {{ stroke: none; fill: #2ca02c; }}\n</style>"
    )
    .unwrap();
    circle(&mut out, "boundary", Complex64::new(0.0, 0.0), 1.0);

    if on(Layer::Chain) {
        for (v, s) in hex.vertices().iter().zip(sizes) {
            let h = Horodisk::new(*v, *s)?;
            circle(
                &mut out,
                "horodisk",
                h.euclidean_center(),
                h.euclidean_radius(),
            );
        }
    }
    if on(Layer::Klein) {
        for k in 0..6 {
            line(&mut out, "klein-side", u[k], u[(k + 1) % 6]);
        }
        for k in 0..3 {
            line(&mut out, "klein-diagonal", u[k], u[k + 3]);
        }
    }
    if on(Layer::Poincare) {
        let v = hex.vertices();
        for k in 0..6 {
            path(
                &mut out,
                "geodesic-side",
                &geodesic_path(&Geodesic::new(v[k], v[(k + 1) % 6])?),
            );
        }
        for d in main_diagonals(hex) {
            path(&mut out, "geodesic-diagonal", &geodesic_path(&d));
        }
    }
    if on(Layer::Triangle) {
        let t = small_triangle(hex)?;
        if t.is_degenerate() {
            circle(&mut out, "triple-point", t.centroid(), 0.008);
        } else {
            let q = t.vertices().map(|p| p.to_complex());
            let mut d = format!("M {}", pt(q[0]));
            for k in 0..3 {
                let (a, b) = (&t.vertices()[k], &t.vertices()[(k + 1) % 3]);
                let g = Geodesic::through(a, b)?;
                write!(d, " {}", geodesic_step(g.carrier(), q[k], q[(k + 1) % 3])).unwrap();
            }
            d.push_str(" Z");
            path(&mut out, "small-triangle", &d);
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
