//! Deterministic SVG output.

use theta4::graph::build_theta_graph;
use theta4::instances::gen_uniform;
use theta4::render::render_svg;
use theta4::router::{route, StepKind};

#[test]
fn output_is_byte_identical_across_runs() {
    let g = build_theta_graph(gen_uniform(25, 55).unwrap().points, 4).unwrap();
    let tr = route(&g, 0, 1).unwrap();
    let a = render_svg(&g, Some(&tr), true);
    let b = render_svg(&g, Some(&tr), true);
    assert_eq!(a, b);
}

#[test]
fn route_overlay_draws_every_step_with_its_color() {
    let g = build_theta_graph(gen_uniform(25, 56).unwrap().points, 4).unwrap();
    let tr = route(&g, 0, 1).unwrap();
    let svg = render_svg(&g, Some(&tr), false);
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    let greedy = tr.steps.iter().filter(|s| s.kind == StepKind::Greedy).count();
    let sweeps = tr.steps.len() - greedy;
    // One blue line per greedy step plus the blue source marker; one red
    // line per sweep step plus the red target marker.
    assert_eq!(svg.matches("#1f4fd8").count(), greedy + 1);
    assert_eq!(svg.matches("#d82020").count(), sweeps + 1);
    // Two dashed diagonals through the target.
    assert_eq!(svg.matches("stroke-dasharray").count(), 2);
}

#[test]
fn plain_graph_render_has_no_route_colors() {
    let g = build_theta_graph(gen_uniform(10, 57).unwrap().points, 4).unwrap();
    let svg = render_svg(&g, None, false);
    assert_eq!(svg.matches("#1f4fd8").count(), 0);
    assert_eq!(svg.matches("#d82020").count(), 0);
    // One circle per vertex.
    assert_eq!(svg.matches("<circle").count(), g.len());
}

#[test]
fn triangle_overlay_appears_only_when_requested() {
    let g = build_theta_graph(gen_uniform(25, 58).unwrap().points, 4).unwrap();
    let tr = route(&g, 0, 1).unwrap();
    let without = render_svg(&g, Some(&tr), false);
    let with = render_svg(&g, Some(&tr), true);
    assert_eq!(without.matches("<polygon").count(), 0);
    assert!(with.matches("<polygon").count() >= 1);
}
