//! JSON serialization for graphs, traces, and check reports.
//!
//! Coordinates are exact rationals; each is written as a
//! `[numer, denom]` pair of arbitrary-precision JSON integers so that a
//! load/save round trip is bit-exact.

use crate::analysis::CheckReport;
use crate::error::Error;
use crate::geometry::{Coord, Point, SlopeSign, Symmetry};
use crate::graph::{ThetaGraph, VertexId};
use crate::router::{RouteTrace, StepKind, TraceStep};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

fn bigint_to_number(v: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("integer string is a valid JSON number")
}

fn number_to_bigint(n: &serde_json::Number) -> Result<BigInt, Error> {
    BigInt::from_str(&n.to_string())
        .map_err(|_| Error::Json(format!("expected integer, got {n}")))
}

fn coord_to_json(c: &Coord) -> [serde_json::Number; 2] {
    [bigint_to_number(c.numer()), bigint_to_number(c.denom())]
}

fn coord_from_json(pair: &[serde_json::Number; 2]) -> Result<Coord, Error> {
    let numer = number_to_bigint(&pair[0])?;
    let denom = number_to_bigint(&pair[1])?;
    if denom == BigInt::from(0) {
        return Err(Error::Json("zero denominator".into()));
    }
    Ok(BigRational::new(numer, denom))
}

#[derive(Serialize, Deserialize)]
struct PointWire {
    x: [serde_json::Number; 2],
    y: [serde_json::Number; 2],
}

#[derive(Serialize, Deserialize)]
struct GraphWire {
    k: usize,
    points: Vec<PointWire>,
    out: Vec<Vec<Option<VertexId>>>,
}

/// Serializes a graph to a JSON string.
pub fn graph_to_json(g: &ThetaGraph) -> Result<String, Error> {
    let wire = GraphWire {
        k: g.k,
        points: g
            .points
            .iter()
            .map(|p| PointWire {
                x: coord_to_json(&p.x),
                y: coord_to_json(&p.y),
            })
            .collect(),
        out: g.out.clone(),
    };
    Ok(serde_json::to_string_pretty(&wire)?)
}

/// Deserializes a graph from a JSON string, validating shape invariants.
pub fn graph_from_json(text: &str) -> Result<ThetaGraph, Error> {
    let wire: GraphWire = serde_json::from_str(text)?;
    if wire.out.len() != wire.points.len() {
        return Err(Error::Json(format!(
            "out table has {} rows for {} points",
            wire.out.len(),
            wire.points.len()
        )));
    }
    let mut points = Vec::with_capacity(wire.points.len());
    for pw in &wire.points {
        points.push(Point::new(coord_from_json(&pw.x)?, coord_from_json(&pw.y)?));
    }
    let n = points.len();
    for row in &wire.out {
        if row.len() != wire.k {
            return Err(Error::Json(format!(
                "out row has {} cones, expected {}",
                row.len(),
                wire.k
            )));
        }
        for w in row.iter().flatten() {
            if *w >= n {
                return Err(Error::VertexOutOfRange(*w, n));
            }
        }
    }
    Ok(ThetaGraph {
        k: wire.k,
        points,
        out: wire.out,
    })
}

#[derive(Serialize, Deserialize)]
struct TraceWire {
    source: VertexId,
    target: VertexId,
    diagonal: SlopeSign,
    canon: Symmetry,
    steps: Vec<StepWire>,
}

#[derive(Serialize, Deserialize)]
struct StepWire {
    from: VertexId,
    to: VertexId,
    kind: StepKind,
}

/// Serializes a route trace to a JSON string.
pub fn trace_to_json(trace: &RouteTrace) -> Result<String, Error> {
    let wire = TraceWire {
        source: trace.source,
        target: trace.target,
        diagonal: trace.diagonal,
        canon: trace.canon,
        steps: trace
            .steps
            .iter()
            .map(|s| StepWire {
                from: s.from,
                to: s.to,
                kind: s.kind,
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&wire)?)
}

/// Deserializes a route trace from a JSON string.
pub fn trace_from_json(text: &str) -> Result<RouteTrace, Error> {
    let wire: TraceWire = serde_json::from_str(text)?;
    Ok(RouteTrace {
        source: wire.source,
        target: wire.target,
        diagonal: wire.diagonal,
        canon: wire.canon,
        steps: wire
            .steps
            .into_iter()
            .map(|s| TraceStep {
                from: s.from,
                to: s.to,
                kind: s.kind,
            })
            .collect(),
    })
}

/// Serializes a check report to a JSON string.
pub fn report_to_json(report: &CheckReport) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(report)?)
}

/// Deserializes a check report from a JSON string.
pub fn report_from_json(text: &str) -> Result<CheckReport, Error> {
    Ok(serde_json::from_str(text)?)
}
