//! Theta-k graph construction.
//!
//! Every vertex gets at most one outgoing edge per cone: the edge to the
//! point in that cone whose projection onto the cone bisector is minimal.
//! For k = 4 the comparison is exact (the projection is proportional to
//! the L1 distance); ties are broken toward the lexicographically
//! smallest (x, y) point so construction is deterministic.

use crate::error::Error;
use crate::geometry::{cone_index, projection_key4, projection_length, Point};
use std::cmp::Ordering;
use std::collections::HashMap;

/// Index of a vertex in a [`ThetaGraph`].
pub type VertexId = usize;

/// A Theta-k graph over a planar point set.
#[derive(Clone, Debug)]
pub struct ThetaGraph {
    pub k: usize,
    pub points: Vec<Point>,
    /// `out[v][i]` is the out-neighbor of `v` in cone `i`, if any.
    pub out: Vec<Vec<Option<VertexId>>>,
}

impl ThetaGraph {
    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Out-neighbor of `v` in cone `i`.
    pub fn neighbor(&self, v: VertexId, cone: usize) -> Option<VertexId> {
        self.out[v][cone]
    }

    /// All edges as (from, cone, to) triples.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, usize, VertexId)> + '_ {
        self.out.iter().enumerate().flat_map(|(v, cones)| {
            cones
                .iter()
                .enumerate()
                .filter_map(move |(i, n)| n.map(|w| (v, i, w)))
        })
    }
}

/// Orders candidate endpoints within one cone: smaller bisector
/// projection wins; exact ties go to the lexicographically smaller point.
fn better4(pts: &[Point], apex: VertexId, a: VertexId, b: VertexId) -> bool {
    let ka = projection_key4(&pts[apex], &pts[a]);
    let kb = projection_key4(&pts[apex], &pts[b]);
    match ka.cmp(&kb) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => pts[a] < pts[b],
    }
}

/// Builds the Theta-k graph over `points`.
///
/// Rejects duplicate points (they would make cone membership ambiguous).
/// Runs in O(n^2 k) time; k = 4 uses exact arithmetic throughout.
pub fn build_theta_graph(points: Vec<Point>, k: usize) -> Result<ThetaGraph, Error> {
    if k < 2 {
        return Err(Error::UnsupportedK(k, "need at least 2 cones"));
    }
    let mut seen: HashMap<&Point, usize> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(Error::DuplicatePoint(j, i));
        }
        seen.insert(p, i);
    }
    drop(seen);

    let n = points.len();
    let mut out = vec![vec![None; k]; n];
    if k == 4 {
        if let Some(ints) = small_int_coords(&points) {
            build4_small(&ints, &mut out);
            return Ok(ThetaGraph { k, points, out });
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let i = cone_index(&points[u], &points[v], k);
            let slot = &mut out[u][i];
            let replace = match *slot {
                None => true,
                Some(w) => {
                    if k == 4 {
                        better4(&points, u, v, w)
                    } else {
                        let pv = projection_length(&points[u], &points[v], k);
                        let pw = projection_length(&points[u], &points[w], k);
                        pv < pw || (pv == pw && points[v] < points[w])
                    }
                }
            };
            if replace {
                *slot = Some(v);
            }
        }
    }
    Ok(ThetaGraph { k, points, out })
}

/// Integer coordinates small enough that cone tests and L1 keys cannot
/// overflow an i64; `None` if any coordinate is fractional or too large.
fn small_int_coords(points: &[Point]) -> Option<Vec<(i64, i64)>> {
    use num_traits::ToPrimitive;
    // |dx| + |dy| of two in-range coordinates must not overflow i64.
    const LIMIT: i64 = 1 << 60;
    points
        .iter()
        .map(|p| {
            if !p.x.is_integer() || !p.y.is_integer() {
                return None;
            }
            let x = p.x.numer().to_i64()?;
            let y = p.y.numer().to_i64()?;
            (x.abs() <= LIMIT && y.abs() <= LIMIT).then_some((x, y))
        })
        .collect()
}

/// k = 4 construction on small integer coordinates; identical semantics
/// to the general loop (same cone rule, L1 key, lexicographic ties) but
/// on machine integers.
fn build4_small(pts: &[(i64, i64)], out: &mut [Vec<Option<VertexId>>]) {
    let n = pts.len();
    for u in 0..n {
        // (key, point) of the current best per cone.
        let mut best: [Option<(i64, (i64, i64))>; 4] = [None; 4];
        let mut best_id: [Option<VertexId>; 4] = [None; 4];
        let (ux, uy) = pts[u];
        for (v, &(vx, vy)) in pts.iter().enumerate() {
            if v == u {
                continue;
            }
            let (dx, dy) = (vx - ux, vy - uy);
            let i = if dx >= 0 && dy < 0 {
                0
            } else if dx > 0 && dy >= 0 {
                1
            } else if dx <= 0 && dy > 0 {
                2
            } else {
                3
            };
            let cand = (dx.abs() + dy.abs(), (vx, vy));
            if best[i].is_none_or(|b| cand < b) {
                best[i] = Some(cand);
                best_id[i] = Some(v);
            }
        }
        out[u][..4].copy_from_slice(&best_id);
    }
}

/// Structural validation: every recorded neighbor must live in its cone,
/// and no other point in that cone may beat it. Returns the list of
/// violations as human-readable strings (empty means valid).
pub fn validate_graph(g: &ThetaGraph) -> Vec<String> {
    let mut issues = Vec::new();
    let n = g.len();
    // The edge set is uniquely determined (ties are broken
    // deterministically), so on small integer inputs validation can
    // recompute the graph with machine integers and compare.
    if g.k == 4 {
        if let Some(ints) = small_int_coords(&g.points) {
            let mut expect = vec![vec![None; 4]; n];
            build4_small(&ints, &mut expect);
            for (u, row) in expect.iter().enumerate() {
                for (i, want) in row.iter().enumerate() {
                    if g.out[u][i] != *want {
                        issues.push(format!(
                            "vertex {u} cone {i}: expected {:?}, found {:?}",
                            want, g.out[u][i]
                        ));
                    }
                }
            }
            return issues;
        }
    }
    for u in 0..n {
        for i in 0..g.k {
            match g.out[u][i] {
                Some(w) => {
                    if w >= n {
                        issues.push(format!("vertex {u} cone {i}: neighbor {w} out of range"));
                        continue;
                    }
                    if cone_index(&g.points[u], &g.points[w], g.k) != i {
                        issues.push(format!("vertex {u} cone {i}: neighbor {w} not in cone"));
                    }
                }
                None => {
                    // No edge recorded: the cone must actually be empty.
                    if (0..n).any(|v| {
                        v != u && cone_index(&g.points[u], &g.points[v], g.k) == i
                    }) {
                        issues.push(format!("vertex {u} cone {i}: missing edge"));
                    }
                    continue;
                }
            }
            let w = g.out[u][i].unwrap();
            for v in 0..n {
                if v == u || v == w {
                    continue;
                }
                if cone_index(&g.points[u], &g.points[v], g.k) != i {
                    continue;
                }
                let beats = if g.k == 4 {
                    better4(&g.points, u, v, w)
                } else {
                    let pv = projection_length(&g.points[u], &g.points[v], g.k);
                    let pw = projection_length(&g.points[u], &g.points[w], g.k);
                    pv < pw || (pv == pw && g.points[v] < g.points[w])
                };
                if beats {
                    issues.push(format!(
                        "vertex {u} cone {i}: point {v} beats recorded neighbor {w}"
                    ));
                }
            }
        }
    }
    issues
}
