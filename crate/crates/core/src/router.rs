//! Local routing on Theta-4 graphs.
//!
//! The router is memoryless and local: each step sees only the current
//! vertex, its at-most-four out-neighbors, and the target. A fixed
//! diagonal line through the target (slope +1 or -1, chosen once from the
//! direction of the source) splits the plane; on each step the router
//! either takes the *greedy* edge (the cone containing the target) or,
//! when the greedy move could stray, a *sweep* edge toward the diagonal.
//!
//! The rule for when to sweep: let `c` be the sweep cone for the current
//! vertex's side of the diagonal. The vertex is *clean* when its
//! neighbor in `c` is absent, on the diagonal, or across it; it is dirty
//! when that neighbor stays strictly on the same side. Clean vertices
//! step greedily, dirty ones sweep.

use crate::error::Error;
use crate::geometry::{
    canonical_symmetry, cone_index, side_of_diagonal, Point, Side, SlopeSign, Symmetry,
};
use crate::graph::{ThetaGraph, VertexId};
use serde::{Deserialize, Serialize};

/// Whether a routing step was a greedy step or a sweep step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Greedy,
    Sweep,
}

/// One traversed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub from: VertexId,
    pub to: VertexId,
    pub kind: StepKind,
}

/// Full record of one routed path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteTrace {
    pub source: VertexId,
    pub target: VertexId,
    /// Slope of the diagonal through the target used for sweeping.
    pub diagonal: SlopeSign,
    /// Symmetry mapping `source - target` into the canonical sector; the
    /// analysis uses it to reason in a single frame.
    pub canon: Symmetry,
    pub steps: Vec<TraceStep>,
}

impl RouteTrace {
    /// Vertex sequence, source first, target last.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut v = vec![self.source];
        v.extend(self.steps.iter().map(|s| s.to));
        v
    }
}

/// Picks the diagonal for a source/target pair, together with the
/// symmetry that maps `s - t` into the canonical sector. In the
/// canonical frame the diagonal always has slope -1; its preimage has
/// slope -1 exactly when the symmetry preserves diagonal slopes (an even
/// number of quarter-turns plus reflections).
pub fn choose_diagonal(s: &Point, t: &Point) -> (SlopeSign, Symmetry) {
    let sigma = canonical_symmetry(&s.sub(t));
    let swaps = (sigma.rot + sigma.reflect as u8) % 2 == 1;
    let diag = if swaps {
        SlopeSign::Plus
    } else {
        SlopeSign::Minus
    };
    (diag, sigma)
}

/// Sweep cone for a vertex strictly on `side` of the diagonal, if any
/// (`None` when the vertex sits on the diagonal).
pub fn sweep_cone(diagonal: SlopeSign, side: Side) -> Option<usize> {
    match (diagonal, side) {
        (_, Side::On) => None,
        (SlopeSign::Minus, Side::Negative) => Some(1),
        (SlopeSign::Minus, Side::Positive) => Some(3),
        (SlopeSign::Plus, Side::Positive) => Some(0),
        (SlopeSign::Plus, Side::Negative) => Some(2),
    }
}

/// Everything a single routing step is allowed to look at.
#[derive(Clone, Debug)]
pub struct LocalView {
    pub current: Point,
    /// Out-neighbor positions by cone index.
    pub neighbors: [Option<Point>; 4],
    pub target: Point,
    pub diagonal: SlopeSign,
}

/// Decides the next step from local information only: returns the cone
/// whose edge to follow and whether the step is greedy or a sweep.
pub fn step(view: &LocalView) -> (usize, StepKind) {
    debug_assert_ne!(view.current, view.target);
    let side = side_of_diagonal(&view.current, &view.target, view.diagonal);
    if let Some(sc) = sweep_cone(view.diagonal, side) {
        let dirty = view.neighbors[sc]
            .as_ref()
            .is_some_and(|w| side_of_diagonal(w, &view.target, view.diagonal) == side);
        if dirty {
            return (sc, StepKind::Sweep);
        }
    }
    (cone_index(&view.current, &view.target, 4), StepKind::Greedy)
}

/// True when the vertex would take a greedy step toward `t`.
pub fn is_clean(g: &ThetaGraph, v: VertexId, t: VertexId, diagonal: SlopeSign) -> bool {
    let view = local_view(g, v, t, diagonal);
    matches!(step(&view), (_, StepKind::Greedy))
}

fn local_view(g: &ThetaGraph, v: VertexId, t: VertexId, diagonal: SlopeSign) -> LocalView {
    let nb = |i: usize| g.neighbor(v, i).map(|w| g.points[w].clone());
    LocalView {
        current: g.points[v].clone(),
        neighbors: [nb(0), nb(1), nb(2), nb(3)],
        target: g.points[t].clone(),
        diagonal,
    }
}

/// Routes from `s` to `t` in a Theta-4 graph, recording every step.
///
/// Fails if the graph is not a Theta-4 graph, if `s == t`, or if the walk
/// has not reached `t` after n steps (which would indicate a bug, since
/// the walk provably visits distinct vertices).
pub fn route(g: &ThetaGraph, s: VertexId, t: VertexId) -> Result<RouteTrace, Error> {
    if g.k != 4 {
        return Err(Error::UnsupportedK(g.k, "local routing requires k = 4"));
    }
    let n = g.len();
    if s >= n || t >= n {
        return Err(Error::VertexOutOfRange(s.max(t), n));
    }
    if s == t {
        return Err(Error::SourceEqualsTarget);
    }
    let (diagonal, canon) = choose_diagonal(&g.points[s], &g.points[t]);
    let mut steps = Vec::new();
    let mut v = s;
    while v != t {
        if steps.len() >= n {
            return Err(Error::StepLimitExceeded(n));
        }
        let view = local_view(g, v, t, diagonal);
        let (cone, kind) = step(&view);
        let w = g
            .neighbor(v, cone)
            .expect("chosen cone is nonempty (it contains the target or a dirty witness)");
        steps.push(TraceStep { from: v, to: w, kind });
        v = w;
    }
    Ok(RouteTrace {
        source: s,
        target: t,
        diagonal,
        canon,
        steps,
    })
}

/// Cone-greedy routing for general k: always follow the edge in the cone
/// containing the target. Returns the visited vertex sequence.
///
/// Guaranteed to terminate for k >= 7 (each step strictly shrinks the
/// distance to the target); for smaller k it may exceed the step cap.
pub fn cone_route(g: &ThetaGraph, s: VertexId, t: VertexId) -> Result<Vec<VertexId>, Error> {
    let n = g.len();
    if s >= n || t >= n {
        return Err(Error::VertexOutOfRange(s.max(t), n));
    }
    if s == t {
        return Err(Error::SourceEqualsTarget);
    }
    let cap = 4 * n + 16;
    let mut path = vec![s];
    let mut v = s;
    while v != t {
        if path.len() > cap {
            return Err(Error::StepLimitExceeded(cap));
        }
        let cone = cone_index(&g.points[v], &g.points[t], g.k);
        let w = g
            .neighbor(v, cone)
            .expect("cone containing the target is nonempty");
        path.push(w);
        v = w;
    }
    Ok(path)
}
