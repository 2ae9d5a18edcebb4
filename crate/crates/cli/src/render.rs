//! SVG drawing of a family with its hull, boundary word and certificates.
//! Floating point is used for drawing only.

use std::fmt::Write;

use convex_order::geom::hull_of_bodies;
use convex_order::{Family, Line};
use num::ToPrimitive;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 60.0;
const LEGEND: f64 = 160.0;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

pub struct Overlay {
    pub line: Option<Line>,
    /// Member indices; each body gets its position as a label.
    pub ordering: Option<Vec<usize>>,
}

struct View {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl View {
    fn new(f: &Family) -> View {
        let pts: Vec<(f64, f64)> = f
            .iter()
            .flat_map(|b| b.vertices().iter().map(|p| p.to_f64()))
            .collect();
        let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        let extent = (max_x - min_x).max(max_y - min_y).max(1e-9);
        View {
            min_x,
            max_y,
            scale: (SIZE - 2.0 * MARGIN) / extent,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            MARGIN + (x - self.min_x) * self.scale,
            MARGIN + (self.max_y - y) * self.scale,
        )
    }

    /// Inverse of `map`.
    fn unmap(&self, (sx, sy): (f64, f64)) -> (f64, f64) {
        (
            (sx - MARGIN) / self.scale + self.min_x,
            self.max_y - (sy - MARGIN) / self.scale,
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn points_attr(pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The line clipped to the drawing square, in screen coordinates.
fn clip_line(view: &View, line: &Line) -> Option<((f64, f64), (f64, f64))> {
    let (a, b, c) = line.coefficients();
    let f = |v: &num::BigInt| v.to_f64().unwrap_or(f64::NAN);
    let (a, b, c) = (f(a), f(b), f(c));
    let (x0, y1) = view.unmap((0.0, 0.0));
    let (x1, y0) = view.unmap((SIZE, SIZE));
    let mut hits = Vec::new();
    if b.abs() > 1e-12 {
        for x in [x0, x1] {
            let y = (c - a * x) / b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a.abs() > 1e-12 {
        for y in [y0, y1] {
            let x = (c - b * y) / a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    (hits.len() >= 2).then(|| (view.map(hits[0]), view.map(hits[hits.len() - 1])))
}

pub fn render(f: &Family, overlay: &Overlay) -> String {
    let view = View::new(f);
    let mut svg = String::new();
    let width = SIZE + LEGEND;
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{h}" viewBox="0 0 {width} {h}">"#,
        h = SIZE + 40.0
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let hull = hull_of_bodies(f.bodies());
    if let Ok(h) = &hull {
        let pts: Vec<_> = h
            .hull
            .vertices()
            .iter()
            .map(|p| view.map(p.to_f64()))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="none" stroke="black" stroke-dasharray="6 4"/>"#,
            points_attr(&pts)
        );
    }

    for (i, b) in f.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts: Vec<_> = b.vertices().iter().map(|p| view.map(p.to_f64())).collect();
        match pts.len() {
            1 => {
                let _ = writeln!(
                    svg,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{color}"/>"#,
                    pts[0].0, pts[0].1
                );
            }
            2 => {
                let _ = writeln!(
                    svg,
                    r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="3"/>"#,
                    pts[0].0, pts[0].1, pts[1].0, pts[1].1
                );
            }
            _ => {
                let _ = writeln!(
                    svg,
                    r#"<polygon points="{}" fill="{color}" fill-opacity="0.35" stroke="{color}"/>"#,
                    points_attr(&pts)
                );
            }
        }
        let (cx, cy) = view.map(b.centroid().to_f64());
        let mut label = escape(b.id());
        if let Some(pos) = overlay
            .ordering
            .as_ref()
            .and_then(|o| o.iter().position(|&m| m == i))
        {
            let _ = write!(label, " #{}", pos + 1);
        }
        let _ = writeln!(
            svg,
            r#"<text x="{cx:.2}" y="{cy:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{label}</text>"#
        );
    }

    if let Some(((x1, y1), (x2, y2))) = overlay.line.as_ref().and_then(|l| clip_line(&view, l)) {
        let _ = writeln!(
            svg,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#d62728" stroke-width="2"/>"##
        );
    }

    // legend
    for (i, b) in f.iter().enumerate() {
        let y = MARGIN + 22.0 * i as f64;
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            svg,
            r#"<rect x="{x:.2}" y="{ry:.2}" width="14" height="14" fill="{color}"/><text x="{tx:.2}" y="{y:.2}" font-family="sans-serif" font-size="14">{id}</text>"#,
            x = SIZE,
            ry = y - 12.0,
            tx = SIZE + 20.0,
            id = escape(b.id())
        );
    }

    let caption = match &hull {
        Ok(h) => format!(
            "boundary word: ({})",
            h.word
                .iter()
                .map(|&i| f.id(i))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        Err(e) => format!("boundary word undefined: {e}"),
    };
    let _ = writeln!(
        svg,
        r#"<text x="{MARGIN}" y="{y}" font-family="sans-serif" font-size="16">{}</text>"#,
        escape(&caption),
        y = SIZE + 20.0
    );
    svg.push_str("</svg>\n");
    svg
}
