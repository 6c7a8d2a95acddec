//! Robust planar primitives: points, segments, simple polylines, exact
//! segment intersection, and decomposition of the plane complement of a
//! curve union into connected components.
//!
//! Topology decisions (does this segment cross that one?) go through exact
//! arithmetic and never flip under rounding; metric decisions (how far apart
//! are these curves?) use floating point with explicit margins.

mod decompose;
mod exact;
mod grid;
mod polyline;
mod segment;

pub use decompose::{decompose_complement, ComplementDecomposition, Face, FaceQuery};
pub use exact::{orient2d, point_on_segment, Orientation};
pub(crate) use grid::ring_cells as grid_ring;
pub use grid::SegmentGrid;
pub use polyline::{
    hausdorff, hausdorff_one_sided, polyline_min_distance, subarc, ArcParam, Polyline,
    SimplicityViolation,
};
pub use segment::{
    crossing_point, point_segment_distance, segment_segment_distance, segments_relation,
    SegRelation,
};

use serde::{Deserialize, Serialize};
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

/// A point of the plane. Both coordinates are finite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite point");
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, treating points as plane vectors.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    fn div(self, s: f64) -> Point {
        Point::new(self.x / s, self.y / s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

pub fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

/// Axis-aligned box, used both as map domain and as subdivision cell.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Box2 {
    pub lo: Point,
    pub hi: Point,
}

impl Box2 {
    pub fn new(lo: Point, hi: Point) -> Self {
        assert!(lo.x <= hi.x && lo.y <= hi.y, "inverted box");
        Box2 { lo, hi }
    }

    pub fn from_coords(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Box2::new(pt(x0.min(x1), y0.min(y1)), pt(x0.max(x1), y0.max(y1)))
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.lo.x && p.x <= self.hi.x && p.y >= self.lo.y && p.y <= self.hi.y
    }

    pub fn center(&self) -> Point {
        Point::new((self.lo.x + self.hi.x) * 0.5, (self.lo.y + self.hi.y) * 0.5)
    }

    pub fn width(&self) -> f64 {
        self.hi.x - self.lo.x
    }

    pub fn height(&self) -> f64 {
        self.hi.y - self.lo.y
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    pub fn inflate(&self, margin: f64) -> Box2 {
        Box2::new(
            pt(self.lo.x - margin, self.lo.y - margin),
            pt(self.hi.x + margin, self.hi.y + margin),
        )
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            self.lo,
            pt(self.hi.x, self.lo.y),
            self.hi,
            pt(self.lo.x, self.hi.y),
        ]
    }

    /// Closed counterclockwise boundary polyline.
    pub fn boundary(&self) -> Polyline {
        Polyline::closed(self.corners().to_vec()).expect("box boundary is simple")
    }

    pub fn hull_with(&self, other: &Box2) -> Box2 {
        Box2::new(
            pt(self.lo.x.min(other.lo.x), self.lo.y.min(other.lo.y)),
            pt(self.hi.x.max(other.hi.x), self.hi.y.max(other.hi.y)),
        )
    }

    pub fn of_points(points: &[Point]) -> Option<Box2> {
        let first = points.first()?;
        let mut lo = *first;
        let mut hi = *first;
        for p in points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some(Box2::new(lo, hi))
    }
}

/// Working resolutions shared by the sampled predicates.
///
/// `eps_sep` is the separation margin below which two sets are not
/// considered certifiably disjoint, `h_sample` the arclength pitch used
/// when walking curves, and `tol_fix` the target diameter of certified
/// fixed-point boxes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eps_sep: f64,
    pub h_sample: f64,
    pub tol_fix: f64,
}

impl Tolerances {
    pub fn new(eps_sep: f64, h_sample: f64, tol_fix: f64) -> Result<Self, GeomError> {
        let t = Tolerances {
            eps_sep,
            h_sample,
            tol_fix,
        };
        t.validate(1.0)?;
        Ok(t)
    }

    /// All entries positive, and the separation margin must dominate the
    /// sampling pitch scaled by the steepest map in scope.
    pub fn validate(&self, max_lipschitz: f64) -> Result<(), GeomError> {
        if !(self.eps_sep > 0.0 && self.h_sample > 0.0 && self.tol_fix > 0.0) {
            return Err(GeomError::BadTolerances(
                "tolerances must be strictly positive".into(),
            ));
        }
        if self.eps_sep <= 2.0 * self.h_sample * max_lipschitz {
            return Err(GeomError::BadTolerances(format!(
                "eps_sep {} must exceed 2 * h_sample * Lipschitz = {}",
                self.eps_sep,
                2.0 * self.h_sample * max_lipschitz
            )));
        }
        Ok(())
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_sep: 1e-3,
            h_sample: 1e-4,
            tol_fix: 1e-9,
        }
    }
}

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("polyline needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("consecutive duplicate vertex at index {0}")]
    DuplicateVertex(usize),
    #[error("polyline is not simple: segments {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("arc parameter {0} outside [0, 1]")]
    ParamOutOfRange(f64),
    #[error("bad tolerances: {0}")]
    BadTolerances(String),
    #[error("resolution too coarse: {0}")]
    ResolutionTooCoarse(String),
}
