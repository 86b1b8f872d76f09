//! SVG 1.1 view of a planar net: lattice edges coloured by sublattice parity
//! (the two dual pairs in blue and red tones), optional overlay of the
//! classical conics Q(u) for the recovered parameters.

use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::{DiscreteNet, USequences};
use std::fmt::Write;

/// Samples per overlaid conic.
pub const CONIC_SAMPLES: usize = 256;
const WIDTH: f64 = 800.0;
const PAD: f64 = 20.0;

// parity (q₁ mod 2, q₂ mod 2) → stroke; (0,0)/(1,1) and (1,0)/(0,1) are dual pairs
const CLASSES: [([i64; 2], &str); 4] = [
    ([0, 0], "#1f4e9c"),
    ([1, 1], "#c0392b"),
    ([1, 0], "#6a9fe0"),
    ([0, 1], "#e8877c"),
];

#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub conics: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { conics: true }
    }
}

struct View {
    xmin: f64,
    ymax: f64,
    s: f64,
    height: f64,
}

impl View {
    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (PAD + (p[0] - self.xmin) * self.s, PAD + (self.ymax - p[1]) * self.s)
    }
}

/// Conic Q(u) of the family as a list of polylines (a hyperbola has two branches),
/// cut at radius `reach`.
pub fn conic_polylines(fam: &ConfocalFamily, u: f64, reach: f64) -> Vec<Vec<[f64; 2]>> {
    let a = fam.semiaxes();
    let (p, q) = (a[0] + u, a[1] + u);
    if p <= 0.0 {
        return Vec::new();
    }
    let (ra, tau) = (p.sqrt(), std::f64::consts::TAU);
    if q > 0.0 {
        let rb = q.sqrt();
        let line = (0..=CONIC_SAMPLES)
            .map(|j| {
                let t = tau * j as f64 / CONIC_SAMPLES as f64;
                [ra * t.cos(), rb * t.sin()]
            })
            .collect();
        return vec![line];
    }
    let rb = (-q).sqrt();
    let tmax = (reach / ra).max(1.0).acosh().max((reach / rb).asinh());
    let half = CONIC_SAMPLES / 2;
    [1.0, -1.0]
        .iter()
        .map(|side| {
            (0..half)
                .map(|j| {
                    let t = -tmax + 2.0 * tmax * j as f64 / (half - 1) as f64;
                    [side * ra * t.cosh(), rb * t.sinh()]
                })
                .collect()
        })
        .collect()
}

/// Render a 2D net. Edges with an absent endpoint are omitted.
pub fn render_svg(
    net: &DiscreteNet,
    fam: &ConfocalFamily,
    useqs: &USequences,
    opts: &SvgOptions,
) -> Result<String> {
    if net.dim() != 2 {
        return Err(Error::Usage(format!("svg needs a planar net, got dimension {}", net.dim())));
    }
    let pts: Vec<[f64; 2]> = net
        .indices()
        .filter_map(|i| net.point(&i).map(|p| [p[0], p[1]]))
        .collect();
    if pts.is_empty() {
        return Err(Error::Usage("net has no points".into()));
    }
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in &pts {
        xmin = xmin.min(p[0]);
        xmax = xmax.max(p[0]);
        ymin = ymin.min(p[1]);
        ymax = ymax.max(p[1]);
    }
    let span = (xmax - xmin).max(ymax - ymin).max(1e-12);
    let s = (WIDTH - 2.0 * PAD) / span;
    let view = View {
        xmin,
        ymax,
        s,
        height: (ymax - ymin) * s + 2.0 * PAD,
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{h:.1}" viewBox="0 0 {WIDTH} {h:.1}">"#,
        h = view.height
    );
    let _ = writeln!(
        out,
        r#"<defs><clipPath id="frame"><rect x="0" y="0" width="{WIDTH}" height="{:.1}"/></clipPath></defs>"#,
        view.height
    );

    if opts.conics {
        let reach = xmin.abs().max(xmax.abs()).max(ymin.abs()).max(ymax.abs()) * 1.5;
        let _ = writeln!(out, r##"<g class="conics" fill="none" stroke="#999999" stroke-width="0.5" clip-path="url(#frame)">"##);
        for (axis, seq) in useqs.axes.iter().enumerate() {
            for (j, u) in seq.values.iter().enumerate() {
                let Some(u) = u else { continue };
                for line in conic_polylines(fam, *u, reach) {
                    let _ = write!(out, r#"<polyline data-axis="{axis}" data-key="{}" points=""#, seq.lo_key + j as i64);
                    for p in line {
                        let (x, y) = view.map(p);
                        let _ = write!(out, "{x:.2},{y:.2} ");
                    }
                    let _ = writeln!(out, r#""/>"#);
                }
            }
        }
        let _ = writeln!(out, "</g>");
    }

    for (parity, colour) in CLASSES {
        let _ = writeln!(
            out,
            r#"<g class="sublattice-{}{}" stroke="{colour}" stroke-width="1.2" fill="none">"#,
            parity[0], parity[1]
        );
        for idx in net.indices() {
            if idx.parity().iter().map(|&p| p as i64).ne(parity.iter().copied()) {
                continue;
            }
            let Some(p) = net.point(&idx) else { continue };
            for axis in 0..2 {
                let Some(q) = net.point(&idx.shifted(axis, 2)) else { continue };
                let (x1, y1) = view.map([p[0], p[1]]);
                let (x2, y2) = view.map([q[0], q[1]]);
                let _ = writeln!(out, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
            }
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{generate, Kind};

    #[test]
    fn four_sublattice_groups() {
        let g = generate(&Kind::fig_trig(), None).unwrap();
        let s = render_svg(&g.net, &g.family, &g.useqs, &SvgOptions::default()).unwrap();
        assert_eq!(s.matches("class=\"sublattice-").count(), 4);
        assert!(s.contains("<polyline"));
    }

    #[test]
    fn hyperbola_has_two_branches() {
        let fam = ConfocalFamily::new(vec![2.0, 1.0]).unwrap();
        let b = conic_polylines(&fam, -1.5, 3.0);
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].len() + b[1].len(), CONIC_SAMPLES);
    }
}
