//! Deterministic SVG rendering of graphs and routed paths.
//!
//! Output depends only on the inputs: coordinates are formatted with a
//! fixed 9-decimal format and elements are emitted in index order, so
//! the same graph and trace always produce byte-identical SVG.

use crate::analysis::{bounding_triangle, canonical_points, decompose_phases};
use crate::geometry::{rational_to_f64, Point};
use crate::graph::ThetaGraph;
use crate::router::{RouteTrace, StepKind};
use num_traits::Signed;
use std::fmt::Write;

const CANVAS: f64 = 1000.0;
const MARGIN_FRACTION: f64 = 0.05;

struct Mapper {
    min_x: f64,
    min_y: f64,
    scale: f64,
    margin: f64,
    width: f64,
    height: f64,
}

impl Mapper {
    fn new(points: &[Point]) -> Mapper {
        let xs: Vec<f64> = points.iter().map(|p| rational_to_f64(&p.x)).collect();
        let ys: Vec<f64> = points.iter().map(|p| rational_to_f64(&p.y)).collect();
        let min_x = xs.iter().copied().fold(f64::INFINITY, f64::min);
        let max_x = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min_y = ys.iter().copied().fold(f64::INFINITY, f64::min);
        let max_y = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let span = (max_x - min_x).max(max_y - min_y).max(1e-12);
        let margin = CANVAS * MARGIN_FRACTION;
        let scale = (CANVAS - 2.0 * margin) / span;
        let width = (max_x - min_x) * scale + 2.0 * margin;
        let height = (max_y - min_y) * scale + 2.0 * margin;
        Mapper {
            min_x,
            min_y,
            scale,
            margin,
            width,
            height,
        }
    }

    fn x(&self, p: &Point) -> f64 {
        (rational_to_f64(&p.x) - self.min_x) * self.scale + self.margin
    }

    /// SVG y grows downward; flip so larger y is higher on screen.
    fn y(&self, p: &Point) -> f64 {
        self.height - ((rational_to_f64(&p.y) - self.min_y) * self.scale + self.margin)
    }

    fn width(&self) -> f64 {
        self.width
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.9}")
}

fn line(out: &mut String, m: &Mapper, a: &Point, b: &Point, style: &str) {
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {} />"#,
        fmt(m.x(a)),
        fmt(m.y(a)),
        fmt(m.x(b)),
        fmt(m.y(b)),
        style
    );
}

/// Renders a graph, optionally overlaying a routed trace and the
/// per-phase bounding triangles.
pub fn render_svg(g: &ThetaGraph, trace: Option<&RouteTrace>, show_triangles: bool) -> String {
    let m = Mapper::new(&g.points);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt(m.width()),
        fmt(m.height),
        fmt(m.width()),
        fmt(m.height)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // Graph edges, in (vertex, cone) order.
    for (v, _cone, w) in g.edges() {
        line(
            &mut out,
            &m,
            &g.points[v],
            &g.points[w],
            r##"stroke="#c8c8c8" stroke-width="1""##,
        );
    }

    if let Some(tr) = trace {
        let t = &g.points[tr.target];
        // Dashed diagonals of both slopes through the target.
        let span = &g.points.iter().map(|p| (&p.x - &t.x).abs()).fold(
            num_rational::BigRational::from_integer(1.into()),
            |acc, v| if v > acc { v } else { acc },
        ) * num_rational::BigRational::from_integer(2.into());
        let diag_style =
            r##"stroke="#999999" stroke-width="1" stroke-dasharray="8,6""##;
        let a1 = Point::new(&t.x - &span, &t.y + &span);
        let b1 = Point::new(&t.x + &span, &t.y - &span);
        line(&mut out, &m, &a1, &b1, diag_style);
        let a2 = Point::new(&t.x - &span, &t.y - &span);
        let b2 = Point::new(&t.x + &span, &t.y + &span);
        line(&mut out, &m, &a2, &b2, diag_style);

        if show_triangles {
            // Bounding triangles come from the canonical-frame phase
            // geometry; map their corners back to the input frame.
            let canon = canonical_points(g, tr);
            let inv = tr.canon.invert();
            let decomp = decompose_phases(tr);
            for phase in &decomp.phases {
                let p = &canon[phase.start];
                let q = &canon[phase.greedy_to];
                let tri = bounding_triangle(p, q);
                if tri.degenerate {
                    continue;
                }
                let corners: Vec<Point> = tri
                    .vertices
                    .iter()
                    .map(|v| {
                        let w = inv.apply(v);
                        Point::new(&w.x + &t.x, &w.y + &t.y)
                    })
                    .collect();
                let pts: Vec<String> = corners
                    .iter()
                    .map(|c| format!("{},{}", fmt(m.x(c)), fmt(m.y(c))))
                    .collect();
                let _ = writeln!(
                    out,
                    r##"<polygon points="{}" fill="#ffd70033" stroke="#caa300" stroke-width="1"/>"##,
                    pts.join(" ")
                );
            }
        }

        // Routed steps: greedy in blue, sweep in red.
        for step in &tr.steps {
            let style = match step.kind {
                StepKind::Greedy => r##"stroke="#1f4fd8" stroke-width="2.5""##,
                StepKind::Sweep => r##"stroke="#d82020" stroke-width="2.5""##,
            };
            line(&mut out, &m, &g.points[step.from], &g.points[step.to], style);
        }
    }

    // Vertices last so they sit on top of edges.
    for (i, p) in g.points.iter().enumerate() {
        let (radius, fill) = match trace {
            Some(tr) if i == tr.source => (6.0, "#1f4fd8"),
            Some(tr) if i == tr.target => (6.0, "#d82020"),
            _ => (2.5, "#333333"),
        };
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            fmt(m.x(p)),
            fmt(m.y(p)),
            fmt(radius),
            fill
        );
    }
    out.push_str("</svg>\n");
    out
}
