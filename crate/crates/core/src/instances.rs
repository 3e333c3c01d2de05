//! Instance generators and point-file I/O.
//!
//! Generators are deterministic functions of their parameters. The
//! adversarial family built by [`gen_lower_bound`] arranges a square
//! spiral of "small step" chains so that the router is forced to walk
//! the long way around the target several times.

use crate::analysis::extreme_pair;
use crate::error::Error;
use crate::geometry::{coord_int, Coord, Point};
use crate::graph::VertexId;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::fmt::Write as _;

/// Families of generated instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Uniform,
    Cluster,
    Grid,
    LowerBound,
}

/// Upper end of the accepted epsilon range for the adversarial family
/// (margins inside the construction need roughly epsilon <= 1/8).
pub const LOWER_BOUND_MAX_EPSILON: &str = "1/8";

/// A generated point set with a designated source/target pair.
#[derive(Clone, Debug)]
pub struct LabeledInstance {
    pub points: Vec<Point>,
    pub source: VertexId,
    pub target: VertexId,
    /// Target ratio the adversarial family approaches (17 - 44 epsilon);
    /// absent for random instances.
    pub expected_ratio: Option<Coord>,
}

const LATTICE: i64 = 1_000_000;

/// Uniform random points on an integer lattice; duplicates are redrawn.
/// Source/target is the Euclidean-extreme pair.
pub fn gen_uniform(n: usize, seed: u64) -> Result<LabeledInstance, Error> {
    if n < 2 {
        return Err(Error::TooFewPoints(2, n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let xy: (i64, i64) = (rng.gen_range(0..=LATTICE), rng.gen_range(0..=LATTICE));
        if seen.insert(xy) {
            points.push(Point::from_ints(xy.0, xy.1));
        }
    }
    finish(points)
}

/// Clustered points: about sqrt(n) lattice cluster centers with small
/// integer offsets around each.
pub fn gen_cluster(n: usize, seed: u64) -> Result<LabeledInstance, Error> {
    if n < 2 {
        return Err(Error::TooFewPoints(2, n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc1u64.rotate_left(32));
    let k = (n as f64).sqrt().ceil() as usize;
    let centers: Vec<(i64, i64)> = (0..k)
        .map(|_| (rng.gen_range(0..=LATTICE), rng.gen_range(0..=LATTICE)))
        .collect();
    let spread = 5_000;
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let (cx, cy) = centers[rng.gen_range(0..k)];
        let xy = (
            cx + rng.gen_range(-spread..=spread),
            cy + rng.gen_range(-spread..=spread),
        );
        if seen.insert(xy) {
            points.push(Point::from_ints(xy.0, xy.1));
        }
    }
    finish(points)
}

/// Axis-aligned grid (torture test for cone-boundary ties). The seed is
/// accepted for interface uniformity but the grid is fully determined by
/// `n`.
pub fn gen_grid(n: usize, _seed: u64) -> Result<LabeledInstance, Error> {
    if n < 2 {
        return Err(Error::TooFewPoints(2, n));
    }
    let side = (n as f64).sqrt().ceil() as i64;
    let mut points = Vec::with_capacity(n);
    'outer: for row in 0..side {
        for col in 0..side {
            if points.len() == n {
                break 'outer;
            }
            points.push(Point::from_ints(col * 1000, row * 1000));
        }
    }
    finish(points)
}

fn finish(points: Vec<Point>) -> Result<LabeledInstance, Error> {
    let (source, target) = extreme_pair(&points).expect("n >= 2");
    Ok(LabeledInstance {
        points,
        source,
        target,
        expected_ratio: None,
    })
}

/// Builder that collects spiral points and rejects accidental duplicates.
struct SpiralBuilder {
    points: Vec<Point>,
    seen: HashSet<Point>,
}

impl SpiralBuilder {
    fn new() -> Self {
        SpiralBuilder {
            points: Vec::new(),
            seen: HashSet::new(),
        }
    }

    fn push(&mut self, p: Point) -> usize {
        assert!(
            self.seen.insert(p.clone()),
            "spiral construction produced a duplicate point {p:?}"
        );
        self.points.push(p);
        self.points.len() - 1
    }

    /// Pushes the interior points of the straight chain from `a`
    /// (exclusive) to `b` (exclusive), roughly `step`-spaced.
    fn chain(&mut self, a: &Point, b: &Point, step: &Coord) {
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        let len = dx.abs().max(dy.abs());
        let n = (&len / step)
            .ceil()
            .to_integer()
            .to_usize()
            .expect("chain length fits usize")
            .max(1);
        let nq = BigRational::from_integer(BigInt::from(n));
        for i in 1..n {
            let f = BigRational::from_integer(BigInt::from(i)) / &nq;
            self.push(Point::new(&a.x + &dx * &f, &a.y + &dy * &f));
        }
    }
}

/// Adversarial spiral instance driving the routed ratio toward the
/// theoretical ceiling as `epsilon` shrinks.
///
/// Layout (target at the origin, outer radius 1, then rescaled to an
/// integer lattice): the source sits at the middle of the left edge; a
/// chain of small sweep steps climbs the left edge; greedy edges and
/// sweep chains then spiral around the target along the left edge,
/// bottom row, right side, and top row, finishing with a staircase that
/// descends parallel to the slope +1 diagonal into the target. Every
/// margin is a fixed multiple of `epsilon`, so the measured routed ratio
/// grows as `epsilon` shrinks; the documented asymptotic target is
/// `17 - 44 epsilon`.
pub fn gen_lower_bound(epsilon: &Coord) -> Result<LabeledInstance, Error> {
    let max: Coord = "1/8".parse::<BigRational>().expect("constant parses");
    if !epsilon.is_positive() || epsilon > &max {
        return Err(Error::BadEpsilon {
            got: epsilon.to_string(),
        });
    }
    let one = Coord::one();
    let two = coord_int(2);

    // Margin unit and derived spacings; see the module docs for roles.
    let g = epsilon / coord_int(6); // primary margin unit
    let c0 = g.clone(); // coarse chain spacing (left edge, bottom row)
    let c = &g / &two; // top-row chain spacing
    let ct = &g / coord_int(3); // staircase step
    let k0 = &ct / &two; // staircase distance band below the +1 diagonal
    let del = epsilon * epsilon / coord_int(8); // micro offset
    let lam = &del * epsilon; // micro slant for staircase steps

    let e1 = coord_int(4) * &g; // depth of p1 below the -1 diagonal
    let m = g.clone(); // bottom row height above the bottom edge
    let big_x = &one - &two * &g; // bottom row right end
    let y2 = &one - coord_int(3) * &g; // top row height
    let sig3 = &g / &two; // p3 height above the -1 diagonal
    let b3 = coord_int(3) * &g / &two; // q3 offset left of the top-right reach
    let d3 = &g / &two; // q3 offset below the top row
    let sig5 = &g / &two; // staircase landing height above the -1 diagonal

    let mut b = SpiralBuilder::new();

    // Anchor vertices of the spiral.
    let s = Point::new(-&one, del.clone());
    let p1 = Point::new(-&one + &del, &one - &del - &e1);
    let q1 = Point::new(-&one + &two * &del, -&one + &m);
    let p2 = Point::new(big_x.clone(), -&one + &m);
    let q2 = Point::new(&big_x - &del, y2.clone());
    let p3 = Point::new(&sig3 - &y2, y2.clone());
    let q3 = Point::new(&y2 - &b3, &y2 - &d3);
    let t = Point::origin();

    let source = b.push(s.clone());
    // Sweep chain up the left edge, then the first greedy target.
    b.chain(&s, &p1, &c0);
    b.push(p1);
    b.push(q1.clone());
    // Sweep chain right along the bottom row.
    b.chain(&q1, &p2, &c0);
    b.push(p2);
    b.push(q2.clone());
    // Sweep chain left along the top row.
    b.chain(&q2, &p3, &c);
    b.push(p3);
    b.push(q3.clone());

    // Staircase: from q3, mostly-down steps until the point is within
    // `k0`..`k0 + ct` below the +1 diagonal, then alternate mostly-left
    // and mostly-down steps, hugging the diagonal toward the target;
    // stop once the -1 diagonal is within `sig5` and the last move was
    // downward (so the landing point sits strictly below the +1
    // diagonal and its projection stays clear of other charges).
    let mut cur = q3;
    loop {
        let k = &cur.x - &cur.y; // signed distance band below the +1 diagonal
        let reach = &cur.x + &cur.y; // height above the -1 diagonal
        if reach <= sig5 && k >= k0 {
            break;
        }
        cur = if k < k0 {
            Point::new(&cur.x - &lam, &cur.y - &ct)
        } else {
            Point::new(&cur.x - &ct, &cur.y - &lam)
        };
        b.push(cur.clone());
    }
    let target = b.push(t);

    // Rescale to a common-denominator integer lattice: ratios are
    // scale-invariant and single-limb integers compare much faster.
    let mut denom_lcm = BigInt::one();
    for p in &b.points {
        denom_lcm = num_integer::lcm(denom_lcm, p.x.denom().clone());
        denom_lcm = num_integer::lcm(denom_lcm, p.y.denom().clone());
    }
    let scale = BigRational::from_integer(denom_lcm);
    let points = b
        .points
        .into_iter()
        .map(|p| Point::new(&p.x * &scale, &p.y * &scale))
        .collect();

    let expected = coord_int(17) - coord_int(44) * epsilon;
    Ok(LabeledInstance {
        points,
        source,
        target,
        expected_ratio: Some(expected),
    })
}

/// Parses one coordinate token: integer, decimal, or "p/q" rational.
fn parse_coord(tok: &str) -> Option<Coord> {
    if let Some((p, q)) = tok.split_once('/') {
        let num: BigInt = p.parse().ok()?;
        let den: BigInt = q.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = tok.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int: BigInt = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let frac: BigInt = frac_part.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = int.magnitude().clone() * den.magnitude().clone() + frac.magnitude().clone();
        let mut v = BigRational::new(BigInt::from(mag), den);
        if negative {
            v = -v;
        }
        return Some(v);
    }
    let int: BigInt = tok.parse().ok()?;
    Some(BigRational::from_integer(int))
}

/// Parsed point file: points plus optional source/target directives.
#[derive(Clone, Debug)]
pub struct PointFile {
    pub points: Vec<Point>,
    pub source: Option<VertexId>,
    pub target: Option<VertexId>,
}

impl PointFile {
    /// Resolves source/target, defaulting to the Euclidean-extreme pair.
    pub fn endpoints(&self) -> Result<(VertexId, VertexId), Error> {
        let n = self.points.len();
        // The farthest-pair default is quadratic; only compute it when an
        // endpoint is actually missing.
        let (s, t) = match (self.source, self.target) {
            (Some(s), Some(t)) => (s, t),
            (s, t) => {
                let (ds, dt) = extreme_pair(&self.points).ok_or(Error::TooFewPoints(2, n))?;
                (s.unwrap_or(ds), t.unwrap_or(dt))
            }
        };
        if s >= n || t >= n {
            return Err(Error::VertexOutOfRange(s.max(t), n));
        }
        if s == t {
            return Err(Error::SourceEqualsTarget);
        }
        Ok((s, t))
    }
}

/// Parses the plain-text point format: one "X Y" pair per line, `#`
/// comments, optional "source: i" / "target: j" directives.
pub fn parse_points(text: &str) -> Result<PointFile, Error> {
    let mut points = Vec::new();
    let mut source = None;
    let mut target = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::PointParse {
            line: idx + 1,
            msg,
        };
        if let Some(rest) = line.strip_prefix("source:") {
            source = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad source index: {e}")))?,
            );
            continue;
        }
        if let Some(rest) = line.strip_prefix("target:") {
            target = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad target index: {e}")))?,
            );
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(xs), Some(ys), None) = (it.next(), it.next(), it.next()) else {
            return Err(err(format!("expected 'X Y', got {line:?}")));
        };
        let x = parse_coord(xs).ok_or_else(|| err(format!("bad coordinate {xs:?}")))?;
        let y = parse_coord(ys).ok_or_else(|| err(format!("bad coordinate {ys:?}")))?;
        points.push(Point::new(x, y));
    }
    for (i, p) in points.iter().enumerate() {
        if let Some(j) = points[..i].iter().position(|q| q == p) {
            return Err(Error::PointParse {
                line: 0,
                msg: format!("duplicate point at indices {j} and {i}"),
            });
        }
    }
    Ok(PointFile {
        points,
        source,
        target,
    })
}

/// Renders points (and optional endpoints) in the plain-text format;
/// `parse_points` round-trips the output bit-exactly.
pub fn format_points(
    points: &[Point],
    source: Option<VertexId>,
    target: Option<VertexId>,
) -> String {
    let mut out = String::new();
    if let Some(s) = source {
        let _ = writeln!(out, "source: {s}");
    }
    if let Some(t) = target {
        let _ = writeln!(out, "target: {t}");
    }
    for p in points {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Reads a point file from disk.
pub fn load_points(path: &std::path::Path) -> Result<PointFile, Error> {
    parse_points(&std::fs::read_to_string(path)?)
}

/// Writes a point file to disk.
pub fn save_points(
    path: &std::path::Path,
    points: &[Point],
    source: Option<VertexId>,
    target: Option<VertexId>,
) -> Result<(), Error> {
    std::fs::write(path, format_points(points, source, target))?;
    Ok(())
}
