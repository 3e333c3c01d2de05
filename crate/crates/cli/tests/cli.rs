//! End-to-end tests of the command-line interface: exit-code contract,
//! output determinism, and the whole pipeline over temp files.

use std::path::Path;
use std::process::{Command, Output};

fn theta4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta4"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn missing_input_file_is_a_usage_error() {
    let out = theta4(&["route", "-i", "/nonexistent/points.txt"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn single_point_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("one.txt");
    write(&p, "0 0\n");
    let out = theta4(&["verify", "-i", p.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_flags_are_rejected() {
    let out = theta4(&["route", "--definitely-not-a-flag"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bad_epsilon_is_a_usage_error() {
    assert_eq!(code(&theta4(&["lowerbound", "--epsilon", "0"])), 2);
    assert_eq!(code(&theta4(&["lowerbound", "--epsilon", "1/2"])), 2);
    assert_eq!(code(&theta4(&["gen", "--kind", "lowerbound"])), 2); // epsilon required
}

#[test]
fn two_point_route_has_ratio_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("two.txt");
    write(&p, "0 0\n30 40\n");
    let out = theta4(&["route", "-i", p.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ratio: 1.000000000"), "{text}");
    assert!(text.contains("steps: 1"), "{text}");
}

#[test]
fn verify_all_pairs_passes_on_a_random_instance() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("inst.txt");
    let gen = theta4(&[
        "gen", "--kind", "uniform", "--n", "30", "--seed", "12",
        "-o", p.to_str().unwrap(),
    ]);
    assert_eq!(code(&gen), 0);
    let out = theta4(&["verify", "-i", p.to_str().unwrap(), "--all-pairs"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    for p in [&a, &b] {
        let out = theta4(&[
            "gen", "--kind", "cluster", "--n", "40", "--seed", "5",
            "-o", p.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        "same seed must produce identical files"
    );
}

#[test]
fn pipeline_produces_deterministic_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("pts.txt");
    let trace = dir.path().join("trace.json");
    let svg1 = dir.path().join("r1.svg");
    let svg2 = dir.path().join("r2.svg");

    let gen = theta4(&[
        "gen", "--kind", "uniform", "--n", "25", "--seed", "3",
        "-o", points.to_str().unwrap(),
    ]);
    assert_eq!(code(&gen), 0);

    let route1 = theta4(&[
        "route", "-i", points.to_str().unwrap(),
        "--trace", trace.to_str().unwrap(),
        "--svg", svg1.to_str().unwrap(),
    ]);
    assert_eq!(code(&route1), 0);
    let first_stdout = stdout(&route1);

    let route2 = theta4(&[
        "route", "-i", points.to_str().unwrap(),
        "--svg", svg2.to_str().unwrap(),
    ]);
    assert_eq!(code(&route2), 0);
    assert_eq!(first_stdout, stdout(&route2), "stdout must be deterministic");
    assert_eq!(
        std::fs::read(&svg1).unwrap(),
        std::fs::read(&svg2).unwrap(),
        "SVG bytes must be deterministic"
    );

    // Re-render from the saved trace; must also be stable and honor the
    // triangle overlay flag.
    let svg3 = dir.path().join("r3.svg");
    let render = theta4(&[
        "render", "--points", points.to_str().unwrap(),
        "--trace", trace.to_str().unwrap(),
        "--svg", svg3.to_str().unwrap(),
        "--show-triangles",
    ]);
    assert_eq!(code(&render), 0);
    let svg = std::fs::read_to_string(&svg3).unwrap();
    assert!(svg.contains("<polygon"));
}

#[test]
fn build_then_verify_report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("pts.txt");
    let graph = dir.path().join("g.json");
    let report = dir.path().join("rep.json");
    theta4(&[
        "gen", "--kind", "grid", "--n", "16", "-o", points.to_str().unwrap(),
    ]);
    let build = theta4(&[
        "build", "-i", points.to_str().unwrap(), "-o", graph.to_str().unwrap(),
    ]);
    assert_eq!(code(&build), 0);
    assert!(graph.exists());

    let verify = theta4(&[
        "verify", "-i", points.to_str().unwrap(),
        "--source", "0", "--target", "15",
        "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(code(&verify), 0);
    let rep = std::fs::read_to_string(&report).unwrap();
    assert!(rep.contains("proof_chain"));
    assert!(rep.contains("linf_monotone"));
}

#[test]
fn ratio_command_reports_both_ratios() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("pts.txt");
    theta4(&[
        "gen", "--kind", "uniform", "--n", "30", "--seed", "4",
        "-o", points.to_str().unwrap(),
    ]);
    let out = theta4(&[
        "ratio", "-i", points.to_str().unwrap(), "--spanning", "--routing",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let grab = |tag: &str| -> f64 {
        text.lines()
            .find(|l| l.starts_with(tag))
            .and_then(|l| l.split(':').nth(1))
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or_else(|| panic!("missing {tag} in {text}"))
    };
    let spanning = grab("max spanning ratio");
    let routing = grab("max routing ratio");
    assert!(spanning <= routing + 1e-9);
    assert!(routing <= 17.0 + 1e-9);
}

#[test]
fn lowerbound_prints_the_measured_ratio() {
    let out = theta4(&["lowerbound", "--epsilon", "1/8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("measured ratio:"), "{text}");
    assert!(text.contains("asymptotic target"), "{text}");
}
