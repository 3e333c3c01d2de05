//! Certification of routed paths.
//!
//! Every check works in the *canonical frame*: translate so the target
//! sits at the origin, then apply the trace's recorded symmetry so the
//! source lies in the sector `{ x < 0, y >= 0, x + y <= 0 }` and the
//! sweep diagonal becomes the slope -1 line `x + y = 0` through the
//! origin (written `L-` below; the slope +1 line through the origin is
//! `L+`).
//!
//! A trace decomposes into an optional *prefix* of sweep steps followed
//! by *phases*; phase `i` is one greedy edge `p_i -> q_i` plus the
//! maximal run of sweep steps after it, ending at `p_{i+1}` (the last
//! phase ends at the target). The checks certify, step by step, that
//! the routed length is at most 17 times the straight-line distance:
//!
//! 1. the L-infinity distance to the target never increases;
//! 2. the decomposition reassembles the trace and each sweep tail is
//!    monotone in both coordinates;
//! 3. each phase's bounding triangle contains no other input point and
//!    stays inside one diagonal quadrant;
//! 4. the charge segments (projections of the phases onto `L-`) are
//!    pairwise disjoint within each quadrant group;
//! 5. total charge is at most `4 * l1(p1', t)` where `p1'` is the
//!    vertical projection of `p_1` onto `L-`;
//! 6. each phase's Euclidean length is at most its L1 surrogate;
//! 7. each phase potential is at most twice its charge, the potentials
//!    telescope exactly, and the full chain of inequalities ends below
//!    `17 * l2(s, t)`.

use crate::error::Error;
use crate::geometry::{
    cone_index, diagonal_projection, l1_distance, l2_distance, l2_squared, linf_distance,
    rational_to_f64,
    vertical_projection, Coord, Point, SlopeSign,
};
use crate::graph::{ThetaGraph, VertexId};
use crate::router::{route, RouteTrace, StepKind};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Relative tolerance for comparisons that go through f64.
pub const FLOAT_RTOL: f64 = 1e-9;

/// Result of one named check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Versioned bundle of check results for one routed trace.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub version: u32,
    pub checks: Vec<CheckItem>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, details: String) {
        self.checks.push(CheckItem {
            name: name.to_string(),
            passed,
            details,
        });
    }
}

/// One phase of a decomposed trace, as indices into the trace's vertex
/// sequence (so it stays valid in any frame).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phase {
    /// Vertex where the greedy edge starts (`p_i`).
    pub start: VertexId,
    /// Endpoint of the greedy edge (`q_i`).
    pub greedy_to: VertexId,
    /// Vertices visited by the sweep tail, in order (empty if none);
    /// the last entry, or `greedy_to`, is `p_{i+1}`.
    pub tail: Vec<VertexId>,
}

impl Phase {
    /// Final vertex of the phase (`p_{i+1}`).
    pub fn end(&self) -> VertexId {
        *self.tail.last().unwrap_or(&self.greedy_to)
    }
}

/// Prefix-plus-phases decomposition of a trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Vertices covered by the leading sweep run, from the source to
    /// `p_1` inclusive (just `[source]` when the source steps greedily).
    pub prefix: Vec<VertexId>,
    pub phases: Vec<Phase>,
}

/// Splits a trace into its prefix sweep run and greedy-rooted phases.
pub fn decompose_phases(trace: &RouteTrace) -> Decomposition {
    let mut prefix = vec![trace.source];
    let mut steps = trace.steps.iter().peekable();
    while let Some(s) = steps.peek() {
        if s.kind == StepKind::Sweep {
            prefix.push(s.to);
            steps.next();
        } else {
            break;
        }
    }
    let mut phases = Vec::new();
    while let Some(g) = steps.next() {
        debug_assert_eq!(g.kind, StepKind::Greedy);
        let mut tail = Vec::new();
        while let Some(s) = steps.peek() {
            if s.kind == StepKind::Sweep {
                tail.push(s.to);
                steps.next();
            } else {
                break;
            }
        }
        phases.push(Phase {
            start: g.from,
            greedy_to: g.to,
            tail,
        });
    }
    Decomposition { prefix, phases }
}

/// The four quadrants cut out by the two diagonals through the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quadrant {
    North,
    East,
    South,
    West,
}

/// Quadrant of a nonzero canonical-frame point. Boundary points are
/// assigned deterministically: on `L-`, upper-left goes North and
/// lower-right goes South; on `L+`, upper-right goes East and lower-left
/// goes West.
pub fn quadrant_of(p: &Point) -> Quadrant {
    let a = &p.x + &p.y; // sign vs L-
    let b = &p.y - &p.x; // sign vs L+
    assert!(
        !(a.is_zero() && b.is_zero()),
        "quadrant_of: point at the origin"
    );
    if a.is_positive() {
        // b == 0 is the upper-right ray of L+, assigned East.
        if b.is_positive() {
            Quadrant::North
        } else {
            Quadrant::East
        }
    } else if a.is_negative() {
        // b == 0 is the lower-left ray of L+, assigned West.
        if b.is_negative() {
            Quadrant::South
        } else {
            Quadrant::West
        }
    } else if b.is_positive() {
        Quadrant::North
    } else {
        Quadrant::South
    }
}

/// Canonical-frame image of all graph points for one trace: each point
/// becomes `sigma(p - t)`, so the target is the origin.
pub fn canonical_points(g: &ThetaGraph, trace: &RouteTrace) -> Vec<Point> {
    let t = &g.points[trace.target];
    g.points
        .iter()
        .map(|p| trace.canon.apply(&p.sub(t)))
        .collect()
}

/// Bounding triangle of one phase in the canonical frame: the region cut
/// out by `L-`, the axis-parallel line through `p` (horizontal when `p`
/// is North/South, vertical when East/West), and the slope +1 line
/// through `q`.
#[derive(Clone, Debug)]
pub struct BoundingTriangle {
    pub vertices: [Point; 3],
    pub degenerate: bool,
}

fn minus_plus_intersection(c_minus: &Coord, c_plus: &Coord) -> Point {
    // x + y = c_minus and y - x = c_plus.
    let two = crate::geometry::coord_int(2);
    Point::new((c_minus - c_plus) / &two, (c_minus + c_plus) / &two)
}

/// Builds the bounding triangle for a greedy edge `p -> q` (canonical
/// frame, target at the origin).
pub fn bounding_triangle(p: &Point, q: &Point) -> BoundingTriangle {
    let c_plus = &q.y - &q.x; // L+ through q: y - x = c_plus
    let zero = Coord::zero();
    // The triangle must fit inside the union of the greedy cone of `p`
    // (the cone containing the target) and its sweep cone (the cone the
    // sweep edges live in, determined by which side of L- `p` lies on).
    // When the two cones are adjacent their union is a halfplane and the
    // axis line through `p` is that halfplane's boundary.  When they
    // coincide the union is a quarter plane bounded by both axis lines,
    // and the line is chosen so the triangle stays inside it.
    let side = &p.x + &p.y;
    let gc = cone_index(p, q, 4);
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    let horizontal = if side.is_negative() {
        match gc {
            0 => false,          // greedy C0, sweep C1: right halfplane
            2 => true,           // greedy C2, sweep C1: upper halfplane
            _ => dx >= dy,       // greedy C1 == sweep C1: quarter plane
        }
    } else if side.is_positive() {
        match gc {
            2 => false,          // greedy C2, sweep C3: left halfplane
            0 => true,           // greedy C0, sweep C3: lower halfplane
            _ => dx <= dy,       // greedy C3 == sweep C3: quarter plane
        }
    } else {
        matches!(quadrant_of(p), Quadrant::North | Quadrant::South)
    };
    let (v1, v3) = if horizontal {
        // Line y = p.y meets L- at (-p.y, p.y) and L+q at (p.y - c_plus, p.y).
        (
            Point::new(-p.y.clone(), p.y.clone()),
            Point::new(&p.y - &c_plus, p.y.clone()),
        )
    } else {
        // Line x = p.x meets L- at (p.x, -p.x) and L+q at (p.x, p.x + c_plus).
        (
            Point::new(p.x.clone(), -p.x.clone()),
            Point::new(p.x.clone(), &p.x + &c_plus),
        )
    };
    let v2 = minus_plus_intersection(&zero, &c_plus);
    let vertices = [v1, v2, v3];
    let degenerate = triangle_area2(&vertices).is_zero();
    BoundingTriangle {
        vertices,
        degenerate,
    }
}

/// Twice a point's coordinates as machine integers, when exact and small
/// enough for overflow-free i128 cross products downstream.
fn double_to_i64(p: &Point) -> Option<(i64, i64)> {
    use num_traits::ToPrimitive;
    const LIMIT: i64 = 1 << 59;
    let two = crate::geometry::coord_int(2);
    let x = &p.x * &two;
    let y = &p.y * &two;
    if !x.is_integer() || !y.is_integer() {
        return None;
    }
    let (xi, yi) = (x.numer().to_i64()?, y.numer().to_i64()?);
    (xi.abs() <= LIMIT && yi.abs() <= LIMIT).then_some((xi, yi))
}

/// Strict interior test on doubled integer coordinates; mirrors
/// [`BoundingTriangle::strictly_contains`] exactly.
fn strictly_contains_i64(v: &[(i64, i64); 3], p: (i64, i64)) -> bool {
    let cross = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| -> i128 {
        (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
    };
    let orient = cross(v[0], v[1], v[2]);
    if orient == 0 {
        return false; // degenerate
    }
    (0..3).all(|i| {
        let s = cross(v[i], v[(i + 1) % 3], p);
        if orient < 0 {
            s < 0
        } else {
            s > 0
        }
    })
}

/// Twice the signed area of a triangle.
fn triangle_area2(v: &[Point; 3]) -> Coord {
    let ax = &v[1].x - &v[0].x;
    let ay = &v[1].y - &v[0].y;
    let bx = &v[2].x - &v[0].x;
    let by = &v[2].y - &v[0].y;
    &ax * &by - &ay * &bx
}

impl BoundingTriangle {
    /// The vertices with coordinates doubled, as machine integers, when
    /// that conversion is exact and small enough.
    fn doubled_i64(&self) -> Option<[(i64, i64); 3]> {
        let v: Vec<(i64, i64)> = self
            .vertices
            .iter()
            .map(double_to_i64)
            .collect::<Option<_>>()?;
        Some([v[0], v[1], v[2]])
    }

    /// Strict interior membership (boundary points do not count).
    pub fn strictly_contains(&self, p: &Point) -> bool {
        if self.degenerate {
            return false;
        }
        let orient = triangle_area2(&self.vertices);
        let flip = orient.is_negative();
        for i in 0..3 {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % 3];
            let cross = (&b.x - &a.x) * (&p.y - &a.y) - (&b.y - &a.y) * (&p.x - &a.x);
            let inside = if flip {
                cross.is_negative()
            } else {
                cross.is_positive()
            };
            if !inside {
                return false;
            }
        }
        true
    }

    /// True when no two vertices lie strictly on opposite sides of either
    /// diagonal through the origin, i.e. the triangle fits in one closed
    /// quadrant.
    pub fn single_quadrant(&self) -> bool {
        for f in [
            |p: &Point| &p.x + &p.y,
            |p: &Point| &p.y - &p.x,
        ] {
            let signs: Vec<Coord> = self.vertices.iter().map(f).collect();
            let pos = signs.iter().any(|s| s.is_positive());
            let neg = signs.iter().any(|s| s.is_negative());
            if pos && neg {
                return false;
            }
        }
        true
    }
}

/// Canonical-frame geometry of one phase.
struct PhaseGeom {
    p: Point,
    q: Point,
    p_next: Point,
    p_bar: Point,
    q_bar: Point,
    p_next_bar: Point,
    quadrant: Quadrant,
    /// Indices into the graph's point list, for the Euclidean length.
    path: Vec<VertexId>,
}

fn phase_geoms(pts: &[Point], dec: &Decomposition) -> Vec<PhaseGeom> {
    let t = Point::origin();
    dec.phases
        .iter()
        .map(|ph| {
            let p = pts[ph.start].clone();
            let q = pts[ph.greedy_to].clone();
            let p_next = pts[ph.end()].clone();
            let mut path = vec![ph.start, ph.greedy_to];
            path.extend(ph.tail.iter().copied());
            PhaseGeom {
                p_bar: diagonal_projection(&p, &t, SlopeSign::Minus),
                q_bar: diagonal_projection(&q, &t, SlopeSign::Minus),
                p_next_bar: diagonal_projection(&p_next, &t, SlopeSign::Minus),
                quadrant: quadrant_of(&p),
                p,
                q,
                p_next,
                path,
            }
        })
        .collect()
}

/// Phase potential: `l1(p, q) + l1(q, pbar_next) - l1(p, pbar)` (exact).
fn potential(g: &PhaseGeom) -> Coord {
    l1_distance(&g.p, &g.q) + l1_distance(&g.q, &g.p_next_bar) - l1_distance(&g.p, &g.p_bar)
}

/// Charge of a phase: length of its projection segment on `L-` (exact).
fn charge(g: &PhaseGeom) -> Coord {
    l1_distance(&g.p_bar, &g.q_bar)
}

fn euclidean_path_length(pts: &[Point], path: &[VertexId]) -> f64 {
    path.windows(2)
        .map(|w| l2_distance(&pts[w[0]], &pts[w[1]]))
        .sum()
}

fn float_le(a: f64, b: f64) -> bool {
    a <= b * (1.0 + FLOAT_RTOL) + 1e-12
}

/// Runs every certification check for one routed trace and returns the
/// full report.
pub fn check_trace(g: &ThetaGraph, trace: &RouteTrace) -> CheckReport {
    let mut report = CheckReport {
        version: 1,
        checks: Vec::new(),
    };
    let pts = canonical_points(g, trace);
    let verts = trace.vertices();
    let dec = decompose_phases(trace);

    // 1. L-infinity distance to the target never increases.
    {
        let origin = Point::origin();
        let mut ok = true;
        let mut detail = String::new();
        for w in verts.windows(2) {
            let a = linf_distance(&pts[w[0]], &origin);
            let b = linf_distance(&pts[w[1]], &origin);
            if b > a {
                ok = false;
                detail = format!("step {} -> {}: linf grew from {} to {}", w[0], w[1], a, b);
                break;
            }
        }
        report.push(
            "linf_monotone",
            ok,
            if ok {
                format!("{} steps, linf non-increasing", verts.len() - 1)
            } else {
                detail
            },
        );
    }

    // 2. Decomposition reassembles the trace; sweep tails are monotone.
    {
        let mut rebuilt = dec.prefix.clone();
        for ph in &dec.phases {
            rebuilt.push(ph.greedy_to);
            rebuilt.extend(ph.tail.iter().copied());
        }
        let reassembles = rebuilt == verts;
        let mut tails_monotone = true;
        for ph in &dec.phases {
            let mut chain = vec![ph.greedy_to];
            chain.extend(ph.tail.iter().copied());
            let dxs: Vec<Coord> = chain
                .windows(2)
                .map(|w| &pts[w[1]].x - &pts[w[0]].x)
                .collect();
            let dys: Vec<Coord> = chain
                .windows(2)
                .map(|w| &pts[w[1]].y - &pts[w[0]].y)
                .collect();
            let mono = |ds: &[Coord]| {
                ds.iter().all(|d| !d.is_negative()) || ds.iter().all(|d| !d.is_positive())
            };
            if !(mono(&dxs) && mono(&dys)) {
                tails_monotone = false;
            }
        }
        report.push(
            "phase_decomposition",
            reassembles && tails_monotone,
            format!(
                "prefix {} sweeps, {} phases, reassembles = {}, tails monotone = {}",
                dec.prefix.len() - 1,
                dec.phases.len(),
                reassembles,
                tails_monotone
            ),
        );
    }

    let geoms = phase_geoms(&pts, &dec);

    // 3. Bounding triangles: empty of other input points, one quadrant.
    {
        // Doubled integer coordinates (when they fit) let the emptiness
        // scan run on machine integers; a triangle vertex may sit on a
        // half-integer point, so doubling restores integrality. The
        // result is identical to the exact rational scan.
        let doubled: Option<Vec<(i64, i64)>> = pts.iter().map(double_to_i64).collect();
        let mut ok = true;
        let mut detail = String::new();
        for (i, pg) in geoms.iter().enumerate() {
            let tri = bounding_triangle(&pg.p, &pg.q);
            if !tri.single_quadrant() {
                ok = false;
                detail = format!("phase {i}: triangle straddles a diagonal");
                break;
            }
            let hit = match (&doubled, tri.doubled_i64()) {
                (Some(d), Some(t2)) => d
                    .iter()
                    .position(|&p2| strictly_contains_i64(&t2, p2)),
                _ => (0..pts.len()).find(|&v| tri.strictly_contains(&pts[v])),
            };
            if let Some(v) = hit {
                ok = false;
                detail = format!("phase {i}: point {v} strictly inside the bounding triangle");
                break;
            }
        }
        report.push(
            "bounding_triangles",
            ok,
            if ok {
                format!("{} triangles empty and quadrant-confined", geoms.len())
            } else {
                detail
            },
        );
    }

    // 4. Charge segments disjoint within each quadrant group.
    {
        // Parametrize L- by u: the point (-u, u); open intervals.
        let param = |p: &Point| p.y.clone();
        let mut ok = true;
        let mut detail = String::new();
        for quad in [
            Quadrant::North,
            Quadrant::East,
            Quadrant::South,
            Quadrant::West,
        ] {
            let ivals: Vec<(Coord, Coord)> = geoms
                .iter()
                .filter(|g| g.quadrant == quad)
                .map(|g| {
                    let a = param(&g.p_bar);
                    let b = param(&g.q_bar);
                    if a <= b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .filter(|(a, b)| a != b)
                .collect();
            for i in 0..ivals.len() {
                for j in (i + 1)..ivals.len() {
                    let (al, ah) = &ivals[i];
                    let (bl, bh) = &ivals[j];
                    if !(ah <= bl || bh <= al) {
                        ok = false;
                        detail = format!(
                            "{quad:?}: intervals [{al}, {ah}] and [{bl}, {bh}] overlap"
                        );
                    }
                }
            }
        }
        report.push(
            "charges_disjoint",
            ok,
            if ok {
                "charge segments pairwise disjoint in every quadrant group".into()
            } else {
                detail
            },
        );
    }

    let p1 = pts[*dec.prefix.last().unwrap()].clone();
    let origin = Point::origin();
    let p1_drop = vertical_projection(&p1, &origin, SlopeSign::Minus);
    let budget = crate::geometry::coord_int(4) * l1_distance(&p1_drop, &origin);
    let total_charge: Coord = geoms.iter().map(charge).sum();

    // 5. Total charge fits the budget 4 * l1(p1', t).
    report.push(
        "charge_budget",
        total_charge <= budget,
        format!("total charge {total_charge} <= budget {budget}"),
    );

    // 6. Phase lengths: l2(phase) <= l1(p, q) + l1(q, p_next).
    {
        let mut ok = true;
        let mut detail = String::new();
        for (i, pg) in geoms.iter().enumerate() {
            let len = euclidean_path_length(&pts, &pg.path);
            let bound =
                rational_to_f64(&(l1_distance(&pg.p, &pg.q) + l1_distance(&pg.q, &pg.p_next)));
            if !float_le(len, bound) {
                ok = false;
                detail = format!("phase {i}: l2 length {len} exceeds l1 surrogate {bound}");
                break;
            }
        }
        report.push(
            "phase_lengths",
            ok,
            if ok {
                "every phase is within its taxicab surrogate".into()
            } else {
                detail
            },
        );
    }

    // 7a. Potential lemma: potential(i) <= 2 * charge(i), exactly.
    {
        let two = crate::geometry::coord_int(2);
        let bad = geoms
            .iter()
            .enumerate()
            .find(|(_, pg)| potential(pg) > &two * charge(pg));
        report.push(
            "potential_lemma",
            bad.is_none(),
            match bad {
                None => "every phase potential is at most twice its charge".into(),
                Some((i, pg)) => format!(
                    "phase {i}: potential {} exceeds 2 * charge {}",
                    potential(pg),
                    charge(pg)
                ),
            },
        );
    }

    // 7b. Telescoping identity for the potentials, exactly.
    {
        let sum_potentials: Coord = geoms.iter().map(potential).sum();
        let direct: Coord = geoms
            .iter()
            .map(|pg| l1_distance(&pg.p, &pg.q) + l1_distance(&pg.q, &pg.p_next_bar))
            .sum::<Coord>()
            - geoms
                .iter()
                .map(|pg| l1_distance(&pg.p, &pg.p_bar))
                .sum::<Coord>();
        report.push(
            "telescoping",
            sum_potentials == direct,
            format!("sum of potentials {sum_potentials} matches regrouped sum {direct}"),
        );
    }

    // 7c. Full chain: l2(path) <= l1(s, pbar_1) + sum(potentials)
    //                         <= l1(s, pbar_1) + 2 * total charge
    //                         <= l1(s, pbar_1) + 8 * l1(p1', t)
    //                         <= 17 * l2(s, t).
    {
        let s_c = pts[trace.source].clone();
        let p1_bar = diagonal_projection(&p1, &origin, SlopeSign::Minus);
        let head = l1_distance(&s_c, &p1_bar);
        let sum_potentials: Coord = geoms.iter().map(potential).sum();
        let two = crate::geometry::coord_int(2);

        let a = euclidean_path_length(&pts, &verts);
        let b_exact = &head + &sum_potentials;
        let c_exact = &head + &two * &total_charge;
        let d_exact = &head + &two * &budget;
        let e = 17.0 * l2_distance(&g.points[trace.source], &g.points[trace.target]);

        let link1 = float_le(a, rational_to_f64(&b_exact));
        let link2 = b_exact <= c_exact;
        let link3 = c_exact <= d_exact;
        let link4 = float_le(rational_to_f64(&d_exact), e);
        report.push(
            "proof_chain",
            link1 && link2 && link3 && link4,
            format!(
                "l2 path {a} <= {} <= {} <= {} <= 17*l2(s,t) = {e} \
                 (links: {link1}, {link2}, {link3}, {link4})",
                rational_to_f64(&b_exact),
                rational_to_f64(&c_exact),
                rational_to_f64(&d_exact),
            ),
        );
    }

    report
}

/// Euclidean length of a trace's path in the original frame.
pub fn trace_length(g: &ThetaGraph, trace: &RouteTrace) -> f64 {
    euclidean_path_length(&g.points, &trace.vertices())
}

/// Ratio of the routed path length to the straight-line distance.
pub fn routing_ratio(g: &ThetaGraph, s: VertexId, t: VertexId) -> Result<f64, Error> {
    let trace = route(g, s, t)?;
    Ok(trace_length(g, &trace) / l2_distance(&g.points[s], &g.points[t]))
}

#[derive(Clone, Copy, PartialEq)]
struct HeapEntry {
    dist: f64,
    vertex: VertexId,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Min-heap on distance via reversed comparison; ties on vertex id
        // keep the order total despite f64 weights (NaN never occurs).
        other
            .dist
            .partial_cmp(&self.dist)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Directed single-source shortest-path distances (Euclidean weights).
pub fn shortest_path_distances(g: &ThetaGraph, s: VertexId) -> Vec<f64> {
    let n = g.len();
    let mut dist = vec![f64::INFINITY; n];
    dist[s] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        vertex: s,
    });
    while let Some(HeapEntry { dist: d, vertex: v }) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for i in 0..g.k {
            if let Some(w) = g.neighbor(v, i) {
                let nd = d + l2_distance(&g.points[v], &g.points[w]);
                if nd < dist[w] {
                    dist[w] = nd;
                    heap.push(HeapEntry {
                        dist: nd,
                        vertex: w,
                    });
                }
            }
        }
    }
    dist
}

/// Directed shortest-path distance between two vertices.
pub fn shortest_path(g: &ThetaGraph, s: VertexId, t: VertexId) -> f64 {
    shortest_path_distances(g, s)[t]
}

/// Ratio of the shortest graph path to the straight-line distance.
pub fn spanning_ratio(g: &ThetaGraph, s: VertexId, t: VertexId) -> f64 {
    shortest_path(g, s, t) / l2_distance(&g.points[s], &g.points[t])
}

/// Picks the pair of vertices at maximum Euclidean distance (exact
/// comparison; ties broken toward the lexicographically smallest index
/// pair).
pub fn extreme_pair(points: &[Point]) -> Option<(VertexId, VertexId)> {
    if points.len() < 2 {
        return None;
    }
    let mut best = (0, 1);
    let mut best_d = l2_squared(&points[0], &points[1]);
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = l2_squared(&points[i], &points[j]);
            if d > best_d {
                best_d = d;
                best = (i, j);
            }
        }
    }
    Some(best)
}
