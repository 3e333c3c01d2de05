//! Command-line front end: generate instances, build graphs, route,
//! verify analysis invariants, measure ratios, and render SVG figures.
//!
//! Exit codes: 0 success, 1 check or bound violation, 2 usage/IO error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use theta4::analysis::{
    check_trace, decompose_phases, routing_ratio, spanning_ratio, trace_length,
};
use theta4::geometry::{l2_distance, rational_to_f64};
use theta4::graph::{build_theta_graph, validate_graph, ThetaGraph};
use theta4::instances::{
    format_points, gen_cluster, gen_grid, gen_lower_bound, gen_uniform, load_points,
    LabeledInstance,
};
use theta4::io::{report_to_json, trace_from_json, trace_to_json};
use theta4::render::render_svg;
use theta4::router::{cone_route, route};

#[derive(Parser)]
#[command(name = "theta4", version, about = "Theta-4 graphs, local routing, and analysis checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance and write it in the point-file format.
    Gen(GenArgs),
    /// Build a Theta-k graph from a point file and write it as JSON.
    Build(BuildArgs),
    /// Route between two vertices and report length, ratio, and phases.
    Route(RouteArgs),
    /// Run graph validation and every trace checker.
    Verify(VerifyArgs),
    /// Report worst-case spanning/routing ratios over ordered pairs.
    Ratio(RatioArgs),
    /// Generate the adversarial family and measure its routed ratio.
    Lowerbound(LowerboundArgs),
    /// Render a point set and a routed trace as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Uniform,
    Cluster,
    Grid,
    Lowerbound,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    /// The k=4 clean/dirty router.
    Theta4,
    /// Greedy cone routing (baseline for general k).
    Cone,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Number of points (ignored for lowerbound).
    #[arg(long, default_value_t = 50)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Epsilon for the lowerbound family, as a rational or decimal.
    #[arg(long)]
    epsilon: Option<String>,
    /// Output point file (stdout if omitted).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Output graph JSON (stdout if omitted).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RouteArgs {
    #[arg(long, short)]
    input: PathBuf,
    /// Source vertex (default: the point file's directive or extreme pair).
    #[arg(long)]
    source: Option<usize>,
    /// Target vertex (same defaulting as --source).
    #[arg(long)]
    target: Option<usize>,
    /// Write the trace as JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write an SVG of the routed path.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, short)]
    input: PathBuf,
    /// Check every ordered pair instead of one source/target pair.
    #[arg(long)]
    all_pairs: bool,
    #[arg(long)]
    source: Option<usize>,
    #[arg(long)]
    target: Option<usize>,
    /// Write a JSON report of every check.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct RatioArgs {
    #[arg(long, short)]
    input: PathBuf,
    /// Report the spanning ratio (shortest path / Euclidean).
    #[arg(long)]
    spanning: bool,
    /// Report the routing ratio (routed path / Euclidean).
    #[arg(long)]
    routing: bool,
    #[arg(long, default_value_t = 4)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Algorithm::Theta4)]
    algorithm: Algorithm,
}

#[derive(Args)]
struct LowerboundArgs {
    /// Epsilon as a rational ("1/10") or decimal ("0.1").
    #[arg(long)]
    epsilon: String,
    /// Also write the instance as a point file.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    points: PathBuf,
    /// Trace JSON produced by `route --trace`.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    svg: PathBuf,
    /// Overlay the per-phase bounding triangles.
    #[arg(long)]
    show_triangles: bool,
}

/// Errors that should map to exit code 2 (usage / IO).
fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Errors that should map to exit code 1 (violated check or bound).
fn check_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("check failed: {msg}");
    ExitCode::from(1)
}

fn parse_epsilon(text: &str) -> Option<BigRational> {
    theta4::instances::parse_points(&format!("{text} 0"))
        .ok()?
        .points
        .pop()
        .map(|p| p.x)
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<(), std::io::Error> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_graph_and_endpoints(
    input: &Path,
    source: Option<usize>,
    target: Option<usize>,
    k: usize,
) -> Result<(ThetaGraph, usize, usize), String> {
    let mut file = load_points(input).map_err(|e| e.to_string())?;
    file.source = source.or(file.source);
    file.target = target.or(file.target);
    let (s, t) = file.endpoints().map_err(|e| e.to_string())?;
    let g = build_theta_graph(file.points, k).map_err(|e| e.to_string())?;
    if s >= g.len() || t >= g.len() {
        return Err(format!("vertex id out of range (n = {})", g.len()));
    }
    if s == t {
        return Err("source equals target".into());
    }
    Ok((g, s, t))
}

fn cmd_gen(args: &GenArgs) -> ExitCode {
    let instance: Result<LabeledInstance, _> = match args.kind {
        Kind::Uniform => gen_uniform(args.n, args.seed),
        Kind::Cluster => gen_cluster(args.n, args.seed),
        Kind::Grid => gen_grid(args.n, args.seed),
        Kind::Lowerbound => {
            let Some(eps_text) = &args.epsilon else {
                return usage_err("--epsilon is required for --kind lowerbound");
            };
            let Some(eps) = parse_epsilon(eps_text) else {
                return usage_err(format!("cannot parse epsilon {eps_text:?}"));
            };
            gen_lower_bound(&eps)
        }
    };
    let instance = match instance {
        Ok(i) => i,
        Err(e) => return usage_err(e),
    };
    let text = format_points(&instance.points, Some(instance.source), Some(instance.target));
    match write_or_print(&args.output, &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_err(e),
    }
}

fn cmd_build(args: &BuildArgs) -> ExitCode {
    let file = match load_points(&args.input) {
        Ok(f) => f,
        Err(e) => return usage_err(e),
    };
    let g = match build_theta_graph(file.points, args.k) {
        Ok(g) => g,
        Err(e) => return usage_err(e),
    };
    let problems = validate_graph(&g);
    if !problems.is_empty() {
        return check_err(problems.join("; "));
    }
    let json = match theta4::io::graph_to_json(&g) {
        Ok(j) => j,
        Err(e) => return usage_err(e),
    };
    match write_or_print(&args.output, &json) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_err(e),
    }
}

fn cmd_route(args: &RouteArgs) -> ExitCode {
    let (g, s, t) = match load_graph_and_endpoints(&args.input, args.source, args.target, 4) {
        Ok(v) => v,
        Err(e) => return usage_err(e),
    };
    let trace = match route(&g, s, t) {
        Ok(tr) => tr,
        Err(e) => return usage_err(e),
    };
    let routed = trace_length(&g, &trace);
    let direct = l2_distance(&g.points[s], &g.points[t]);
    let decomp = decompose_phases(&trace);
    println!("routed length: {routed:.9}");
    println!("euclidean distance: {direct:.9}");
    println!("ratio: {:.9}", routed / direct);
    println!("steps: {}", trace.steps.len());
    println!("phases: {}", decomp.phases.len());
    if let Some(path) = &args.trace {
        let json = match trace_to_json(&trace) {
            Ok(j) => j,
            Err(e) => return usage_err(e),
        };
        if let Err(e) = std::fs::write(path, json) {
            return usage_err(e);
        }
    }
    if let Some(path) = &args.svg {
        if let Err(e) = std::fs::write(path, render_svg(&g, Some(&trace), false)) {
            return usage_err(e);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let file = match load_points(&args.input) {
        Ok(f) => f,
        Err(e) => return usage_err(e),
    };
    let endpoints = match file.endpoints() {
        Ok(p) => p,
        Err(e) => return usage_err(e),
    };
    let g = match build_theta_graph(file.points, 4) {
        Ok(g) => g,
        Err(e) => return usage_err(e),
    };
    let problems = validate_graph(&g);
    if !problems.is_empty() {
        return check_err(problems.join("; "));
    }
    let pairs: Vec<(usize, usize)> = if args.all_pairs {
        (0..g.len())
            .flat_map(|s| (0..g.len()).map(move |t| (s, t)))
            .filter(|(s, t)| s != t)
            .collect()
    } else {
        let s = args.source.unwrap_or(endpoints.0);
        let t = args.target.unwrap_or(endpoints.1);
        if s >= g.len() || t >= g.len() || s == t {
            return usage_err("invalid source/target pair");
        }
        vec![(s, t)]
    };
    let mut reports = Vec::new();
    let mut failures = 0u64;
    for (s, t) in pairs {
        let trace = match route(&g, s, t) {
            Ok(tr) => tr,
            Err(e) => return check_err(format!("routing {s} -> {t}: {e}")),
        };
        let report = check_trace(&g, &trace);
        if !report.all_passed() {
            failures += 1;
            for item in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("pair ({s}, {t}) check {}: {}", item.name, item.details);
            }
        }
        reports.push(report);
    }
    if let Some(path) = &args.report {
        let json = if reports.len() == 1 {
            report_to_json(&reports[0])
        } else {
            serde_json::to_string_pretty(&reports).map_err(|e| theta4::Error::Json(e.to_string()))
        };
        let json = match json {
            Ok(j) => j,
            Err(e) => return usage_err(e),
        };
        if let Err(e) = std::fs::write(path, json) {
            return usage_err(e);
        }
    }
    if failures > 0 {
        return check_err(format!("{failures} pair(s) failed"));
    }
    println!("all checks passed ({} report(s))", reports.len());
    ExitCode::SUCCESS
}

fn cmd_ratio(args: &RatioArgs) -> ExitCode {
    let file = match load_points(&args.input) {
        Ok(f) => f,
        Err(e) => return usage_err(e),
    };
    if file.points.len() < 2 {
        return usage_err("need at least 2 points");
    }
    let g = match build_theta_graph(file.points, args.k) {
        Ok(g) => g,
        Err(e) => return usage_err(e),
    };
    let n = g.len();
    let want_routing = args.routing || !args.spanning;
    let mut max_span: f64 = 0.0;
    let mut max_route: f64 = 0.0;
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            if args.spanning {
                max_span = max_span.max(spanning_ratio(&g, s, t));
            }
            if want_routing {
                let r = match args.algorithm {
                    Algorithm::Theta4 => match routing_ratio(&g, s, t) {
                        Ok(r) => r,
                        Err(e) => return check_err(format!("routing {s} -> {t}: {e}")),
                    },
                    Algorithm::Cone => match cone_route(&g, s, t) {
                        Ok(path) => {
                            let len: f64 = path
                                .windows(2)
                                .map(|w| l2_distance(&g.points[w[0]], &g.points[w[1]]))
                                .sum();
                            len / l2_distance(&g.points[s], &g.points[t])
                        }
                        Err(e) => return check_err(format!("cone routing {s} -> {t}: {e}")),
                    },
                };
                max_route = max_route.max(r);
            }
        }
    }
    if args.spanning {
        println!("max spanning ratio: {max_span:.9}");
    }
    if want_routing {
        println!("max routing ratio: {max_route:.9}");
    }
    ExitCode::SUCCESS
}

fn cmd_lowerbound(args: &LowerboundArgs) -> ExitCode {
    let Some(eps) = parse_epsilon(&args.epsilon) else {
        return usage_err(format!("cannot parse epsilon {:?}", args.epsilon));
    };
    let instance = match gen_lower_bound(&eps) {
        Ok(i) => i,
        Err(e) => return usage_err(e),
    };
    if let Some(path) = &args.output {
        let text = format_points(&instance.points, Some(instance.source), Some(instance.target));
        if let Err(e) = std::fs::write(path, text) {
            return usage_err(e);
        }
    }
    let n = instance.points.len();
    let g = match build_theta_graph(instance.points, 4) {
        Ok(g) => g,
        Err(e) => return usage_err(e),
    };
    let ratio = match routing_ratio(&g, instance.source, instance.target) {
        Ok(r) => r,
        Err(e) => return check_err(e),
    };
    let expected = instance
        .expected_ratio
        .as_ref()
        .map(rational_to_f64)
        .unwrap_or(f64::NAN);
    println!("epsilon: {}", eps.to_f64().unwrap_or(f64::NAN));
    println!("points: {n}");
    println!("measured ratio: {ratio:.9}");
    println!("asymptotic target (17 - 44 epsilon): {expected:.9}");
    if ratio + 1e-9 < expected {
        println!(
            "shortfall: measured ratio is {:.9} below the asymptotic target",
            expected - ratio
        );
    }
    ExitCode::SUCCESS
}

fn cmd_render(args: &RenderArgs) -> ExitCode {
    let file = match load_points(&args.points) {
        Ok(f) => f,
        Err(e) => return usage_err(e),
    };
    let g = match build_theta_graph(file.points, 4) {
        Ok(g) => g,
        Err(e) => return usage_err(e),
    };
    let trace = match &args.trace {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match trace_from_json(&text) {
                Ok(tr) => Some(tr),
                Err(e) => return usage_err(e),
            },
            Err(e) => return usage_err(e),
        },
        None => None,
    };
    let svg = render_svg(&g, trace.as_ref(), args.show_triangles);
    match std::fs::write(&args.svg, svg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_err(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Build(args) => cmd_build(args),
        Command::Route(args) => cmd_route(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Ratio(args) => cmd_ratio(args),
        Command::Lowerbound(args) => cmd_lowerbound(args),
        Command::Render(args) => cmd_render(args),
    }
}
