//! Exact planar geometry over arbitrary-precision rationals.
//!
//! Cones are numbered counterclockwise starting from the negative y-axis:
//! for k cones, cone `i` covers angles `[2*pi*i/k, 2*pi*(i+1)/k)` measured
//! counterclockwise from straight down. For k = 4 this gives the four
//! axis-aligned quarter-plane cones, and membership reduces to exact sign
//! tests on the coordinate differences:
//!
//! - cone 0: `dx >= 0 && dy < 0`  (down-right, owns the downward axis)
//! - cone 1: `dx > 0 && dy >= 0`  (up-right, owns the rightward axis)
//! - cone 2: `dx <= 0 && dy > 0`  (up-left, owns the upward axis)
//! - cone 3: `dx < 0 && dy <= 0`  (down-left, owns the leftward axis)

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact rational coordinate.
pub type Coord = BigRational;

/// Convenience constructor for an integer-valued coordinate.
pub fn coord_int(n: i64) -> Coord {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `n / d`.
pub fn coord_ratio(n: i64, d: i64) -> Coord {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A point in the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(coord_int(x), coord_int(y))
    }

    pub fn origin() -> Self {
        Point::new(Coord::zero(), Coord::zero())
    }

    /// Component-wise difference `self - other`.
    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    /// Component-wise sum.
    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    /// Best-effort conversion to f64 coordinates.
    pub fn to_f64(&self) -> (f64, f64) {
        (rational_to_f64(&self.x), rational_to_f64(&self.y))
    }
}

/// Converts a rational to the nearest f64, falling back to a quotient of
/// component approximations when the exact conversion is unavailable.
pub fn rational_to_f64(r: &Coord) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Which side of an oriented line a point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Negative,
    On,
    Positive,
}

impl Side {
    fn of(v: &Coord) -> Side {
        if v.is_zero() {
            Side::On
        } else if v.is_positive() {
            Side::Positive
        } else {
            Side::Negative
        }
    }
}

/// Slope sign of a diagonal line: `Minus` has slope -1, `Plus` has slope +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlopeSign {
    Minus,
    Plus,
}

/// Side of `p` relative to the diagonal of the given slope through `t`.
///
/// For `Minus` (line `x + y = t.x + t.y`), `Positive` means above the line
/// (upper-right half-plane). For `Plus` (line `y - x = t.y - t.x`),
/// `Positive` means above the line (upper-left half-plane).
pub fn side_of_diagonal(p: &Point, t: &Point, slope: SlopeSign) -> Side {
    match slope {
        SlopeSign::Minus => Side::of(&(&p.x + &p.y - &t.x - &t.y)),
        SlopeSign::Plus => Side::of(&(&p.y - &p.x - (&t.y - &t.x))),
    }
}

/// Index of the cone (apex `from`, counterclockwise from straight down)
/// containing `to`. For k = 4 the test is exact; other k use f64 angles.
///
/// Panics if `from == to` (the zero vector lies in no cone).
pub fn cone_index(from: &Point, to: &Point, k: usize) -> usize {
    let dx = &to.x - &from.x;
    let dy = &to.y - &from.y;
    assert!(
        !(dx.is_zero() && dy.is_zero()),
        "cone_index: coincident points"
    );
    if k == 4 {
        return if !dx.is_negative() && dy.is_negative() {
            0
        } else if dx.is_positive() && !dy.is_negative() {
            1
        } else if !dx.is_positive() && dy.is_positive() {
            2
        } else {
            3
        };
    }
    let (fx, fy) = (rational_to_f64(&dx), rational_to_f64(&dy));
    let tau = std::f64::consts::TAU;
    // Angle counterclockwise from the negative y-axis, in [0, tau).
    let theta = (fy.atan2(fx) + std::f64::consts::FRAC_PI_2).rem_euclid(tau);
    ((theta / (tau / k as f64)) as usize).min(k - 1)
}

/// Unit bisector direction of cone `i` (out of k), as f64 components.
pub fn cone_bisector(i: usize, k: usize) -> (f64, f64) {
    let tau = std::f64::consts::TAU;
    // Bisector angle, counterclockwise from the negative y-axis.
    let theta = tau * (i as f64 + 0.5) / k as f64;
    // Rotate the downward unit vector (0, -1) by theta counterclockwise.
    (theta.sin(), -theta.cos())
}

/// Length of the projection of `to - from` onto the bisector of the cone
/// of `from` that contains `to`.
pub fn projection_length(from: &Point, to: &Point, k: usize) -> f64 {
    let i = cone_index(from, to, k);
    let (bx, by) = cone_bisector(i, k);
    let d = to.sub(from);
    rational_to_f64(&d.x) * bx + rational_to_f64(&d.y) * by
}

/// Exact comparison key for projections within a k = 4 cone: the
/// projection of `to - from` onto the cone bisector is proportional to
/// this quantity (|dx| + |dy|, i.e. the L1 distance), so comparing keys
/// compares projections.
pub fn projection_key4(from: &Point, to: &Point) -> Coord {
    l1_distance(from, to)
}

/// Orthogonal projection of `p` onto the diagonal of the given slope
/// through `t` (exact).
pub fn diagonal_projection(p: &Point, t: &Point, slope: SlopeSign) -> Point {
    let d = p.sub(t);
    let two = coord_int(2);
    match slope {
        SlopeSign::Minus => {
            let u = (&d.x - &d.y) / &two;
            t.add(&Point::new(u.clone(), -u))
        }
        SlopeSign::Plus => {
            let u = (&d.x + &d.y) / &two;
            t.add(&Point::new(u.clone(), u))
        }
    }
}

/// Vertical projection of `p` (moving parallel to the y-axis) onto the
/// diagonal of the given slope through `t`.
pub fn vertical_projection(p: &Point, t: &Point, slope: SlopeSign) -> Point {
    let y = match slope {
        SlopeSign::Minus => &t.x + &t.y - &p.x,
        SlopeSign::Plus => &t.y - &t.x + &p.x,
    };
    Point::new(p.x.clone(), y)
}

/// Horizontal projection of `p` (moving parallel to the x-axis) onto the
/// diagonal of the given slope through `t`.
pub fn horizontal_projection(p: &Point, t: &Point, slope: SlopeSign) -> Point {
    let x = match slope {
        SlopeSign::Minus => &t.x + &t.y - &p.y,
        SlopeSign::Plus => &p.y - &t.y + &t.x,
    };
    Point::new(x, p.y.clone())
}

/// Exact L1 (taxicab) distance.
pub fn l1_distance(a: &Point, b: &Point) -> Coord {
    (&a.x - &b.x).abs() + (&a.y - &b.y).abs()
}

/// Exact L-infinity (chebyshev) distance.
pub fn linf_distance(a: &Point, b: &Point) -> Coord {
    let dx = (&a.x - &b.x).abs();
    let dy = (&a.y - &b.y).abs();
    if dx >= dy {
        dx
    } else {
        dy
    }
}

/// Exact squared Euclidean distance.
pub fn l2_squared(a: &Point, b: &Point) -> Coord {
    let dx = &a.x - &b.x;
    let dy = &a.y - &b.y;
    &dx * &dx + &dy * &dy
}

/// Euclidean distance as f64.
pub fn l2_distance(a: &Point, b: &Point) -> f64 {
    rational_to_f64(&l2_squared(a, b)).sqrt()
}

/// An element of the symmetry group of the square: `rot` quarter-turns
/// counterclockwise, followed (if `reflect`) by reflection across the
/// vertical axis (x -> -x).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symmetry {
    pub rot: u8,
    pub reflect: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry {
        rot: 0,
        reflect: false,
    };

    /// All 8 elements in a fixed enumeration order (rotations first).
    pub fn all() -> [Symmetry; 8] {
        let mut out = [Symmetry::IDENTITY; 8];
        for (idx, s) in out.iter_mut().enumerate() {
            *s = Symmetry {
                rot: (idx % 4) as u8,
                reflect: idx >= 4,
            };
        }
        out
    }

    /// Applies the symmetry to a vector (about the origin).
    pub fn apply(&self, p: &Point) -> Point {
        let mut x = p.x.clone();
        let mut y = p.y.clone();
        for _ in 0..self.rot {
            let nx = -y;
            y = x;
            x = nx;
        }
        if self.reflect {
            x = -x;
        }
        Point::new(x, y)
    }

    /// Group composition: `self.compose(other)` applies `other` first.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        let reflect = self.reflect ^ other.reflect;
        let rot = if other.reflect {
            (other.rot + 4 - self.rot) % 4
        } else {
            (self.rot + other.rot) % 4
        };
        Symmetry { rot, reflect }
    }

    /// Group inverse.
    pub fn invert(&self) -> Symmetry {
        if self.reflect {
            *self
        } else {
            Symmetry {
                rot: (4 - self.rot) % 4,
                reflect: false,
            }
        }
    }

    /// Image of k = 4 cone `m` under this symmetry: a quarter-turn sends
    /// cone m to cone m+1; the reflection swaps cones m and 3-m.
    pub fn map_cone(&self, m: usize) -> usize {
        let r = (m + self.rot as usize) % 4;
        if self.reflect {
            (3 + 4 - r % 4) % 4
        } else {
            r
        }
    }
}

/// Returns the first symmetry (in [`Symmetry::all`] order) that maps the
/// nonzero vector `d` into the canonical sector
/// `{ x < 0, y >= 0, x + y <= 0 }` (directions from 135 to 180 degrees,
/// both ends included).
pub fn canonical_symmetry(d: &Point) -> Symmetry {
    assert!(
        !(d.x.is_zero() && d.y.is_zero()),
        "canonical_symmetry: zero vector"
    );
    for s in Symmetry::all() {
        let q = s.apply(d);
        if q.x.is_negative() && !q.y.is_negative() && !(&q.x + &q.y).is_positive() {
            return s;
        }
    }
    unreachable!("the 8 sector images cover every direction")
}
