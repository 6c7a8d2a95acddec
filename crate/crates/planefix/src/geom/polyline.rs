//! Simple polygonal curves with a normalized arclength parameter.
//!
//! A `Polyline` is the polygonal stand-in for the arcs and circles of plane
//! topology. Open polylines carry an order homeomorphism onto [0, 1]
//! (`ArcParam`), which realizes subarc notation like "the piece between
//! parameters t1 and t2". Curves from map images are flattened before they
//! get here, so every predicate below works on straight segments only.
//! Wild (non-rectifiable) arcs are outside the representable range.

use super::exact::{orient2d, Orientation};
use super::segment::{point_segment_closest, segments_relation, SegRelation};
use super::{GeomError, Point};
use serde::{Deserialize, Serialize};

/// Simple polygonal curve, open (arc) or closed (circle).
///
/// Invariants: consecutive vertices distinct; no two non-adjacent segments
/// intersect; adjacent segments meet only at the shared vertex. A degenerate
/// single-point "arc" (empty interior) is representable and stands for the
/// subarc `[x, x]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    vertices: Vec<Point>,
    closed: bool,
    #[serde(skip)]
    cum_len: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimplicityViolation {
    pub seg_a: usize,
    pub seg_b: usize,
    pub near: Point,
}

impl Polyline {
    /// Open polyline through `vertices`. Validates vertex count and
    /// consecutive distinctness; simplicity is checked separately.
    pub fn open(vertices: Vec<Point>) -> Result<Self, GeomError> {
        Self::build(vertices, false)
    }

    pub fn closed(vertices: Vec<Point>) -> Result<Self, GeomError> {
        Self::build(vertices, true)
    }

    /// Single-point degenerate arc (the empty half-open interval case).
    pub fn degenerate(p: Point) -> Self {
        Polyline {
            vertices: vec![p],
            closed: false,
            cum_len: vec![0.0],
        }
    }

    fn build(vertices: Vec<Point>, closed: bool) -> Result<Self, GeomError> {
        if vertices.len() < 2 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        for i in 1..vertices.len() {
            if vertices[i] == vertices[i - 1] {
                return Err(GeomError::DuplicateVertex(i));
            }
        }
        if closed && vertices.first() == vertices.last() {
            return Err(GeomError::DuplicateVertex(vertices.len() - 1));
        }
        let mut p = Polyline {
            vertices,
            closed,
            cum_len: Vec::new(),
        };
        p.rebuild_cache();
        Ok(p)
    }

    fn rebuild_cache(&mut self) {
        let n = self.vertices.len();
        let mut cum = Vec::with_capacity(n + 1);
        cum.push(0.0);
        for i in 1..n {
            cum.push(cum[i - 1] + self.vertices[i].dist(self.vertices[i - 1]));
        }
        if self.closed && n > 1 {
            cum.push(cum[n - 1] + self.vertices[n - 1].dist(self.vertices[0]));
        }
        self.cum_len = cum;
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn len_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn total_length(&self) -> f64 {
        *self.cum_len.last().unwrap_or(&0.0)
    }

    pub fn first(&self) -> Point {
        self.vertices[0]
    }

    pub fn last(&self) -> Point {
        *self.vertices.last().unwrap()
    }

    /// Number of segments (n-1 open, n closed).
    pub fn seg_count(&self) -> usize {
        if self.is_degenerate() {
            0
        } else if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    pub fn segment(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        (0..self.seg_count()).map(move |i| self.segment(i))
    }

    /// First pair of segments violating simplicity, if any.
    ///
    /// Adjacent segments are allowed to meet only at the shared vertex, and
    /// for a closed curve the last segment connects back to the first under
    /// the same rule.
    pub fn simplicity_violation(&self) -> Option<SimplicityViolation> {
        let m = self.seg_count();
        for i in 0..m {
            for j in (i + 1)..m {
                let adjacent = j == i + 1 || (self.closed && i == 0 && j == m - 1);
                let (a1, a2) = self.segment(i);
                let (b1, b2) = self.segment(j);
                match segments_relation(a1, a2, b1, b2) {
                    SegRelation::Disjoint => {}
                    SegRelation::Crossing(p) => {
                        return Some(SimplicityViolation {
                            seg_a: i,
                            seg_b: j,
                            near: p,
                        })
                    }
                    SegRelation::Overlap => {
                        return Some(SimplicityViolation {
                            seg_a: i,
                            seg_b: j,
                            near: a2,
                        })
                    }
                    SegRelation::Touching(p) => {
                        let shared = if j == i + 1 {
                            Some(a2)
                        } else if self.closed && i == 0 && j == m - 1 {
                            Some(a1)
                        } else {
                            None
                        };
                        if shared != Some(p) {
                            return Some(SimplicityViolation {
                                seg_a: i,
                                seg_b: j,
                                near: p,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.simplicity_violation().is_none()
    }

    /// Point at normalized arclength t in [0, 1].
    pub fn point_at(&self, t: f64) -> Point {
        assert!(!self.is_degenerate(), "degenerate polyline has no parameter");
        let total = self.total_length();
        let target = t.clamp(0.0, 1.0) * total;
        let segs = self.seg_count();
        // cum_len[i] is arclength at the start of segment i.
        match self
            .cum_len
            .binary_search_by(|v| v.partial_cmp(&target).unwrap())
        {
            Ok(i) => {
                if i < self.vertices.len() {
                    self.vertices[i]
                } else {
                    self.vertices[0]
                }
            }
            Err(i) => {
                let seg = (i - 1).min(segs - 1);
                let (a, b) = self.segment(seg);
                let seg_len = self.cum_len[seg + 1] - self.cum_len[seg];
                let local = if seg_len > 0.0 {
                    (target - self.cum_len[seg]) / seg_len
                } else {
                    0.0
                };
                a.lerp(b, local)
            }
        }
    }

    /// Normalized parameter of vertex i.
    pub fn param_of_vertex(&self, i: usize) -> f64 {
        self.cum_len[i] / self.total_length()
    }

    /// Nearest point on the polyline: (distance, parameter, point).
    pub fn project(&self, p: Point) -> (f64, f64, Point) {
        if self.is_degenerate() {
            let v = self.vertices[0];
            return (p.dist(v), 0.0, v);
        }
        let mut best = (f64::INFINITY, 0.0, self.vertices[0]);
        for i in 0..self.seg_count() {
            let (a, b) = self.segment(i);
            let (d, q) = point_segment_closest(p, a, b);
            if d < best.0 {
                let seg_len = self.cum_len[i + 1] - self.cum_len[i];
                let local = if seg_len > 0.0 { q.dist(a) / seg_len } else { 0.0 };
                let t = (self.cum_len[i] + local.clamp(0.0, 1.0) * seg_len) / self.total_length();
                best = (d, t, q);
            }
        }
        best
    }

    pub fn distance_to_point(&self, p: Point) -> f64 {
        self.project(p).0
    }

    /// Signed area by the shoelace formula (closed curves only).
    /// Positive for counterclockwise vertex order.
    pub fn signed_area(&self) -> f64 {
        assert!(self.closed, "signed area needs a closed curve");
        let n = self.vertices.len();
        let mut acc = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            acc += a.cross(b);
        }
        acc * 0.5
    }

    /// Whether `p` lies strictly inside this closed simple curve, by exact
    /// crossing parity along a ray. Points on the curve report `false`.
    pub fn contains_interior(&self, p: Point) -> bool {
        assert!(self.closed);
        for i in 0..self.seg_count() {
            let (a, b) = self.segment(i);
            if super::exact::point_on_segment(p, a, b) {
                return false;
            }
        }
        // Crossing parity of the upward vertical ray from p, counting each
        // segment once via the half-open rule on x.
        let mut inside = false;
        for i in 0..self.seg_count() {
            let (a, b) = self.segment(i);
            if (a.x > p.x) != (b.x > p.x) {
                let side = orient2d(a, b, p);
                let upward = b.x > a.x;
                if (upward && side == Orientation::Ccw) || (!upward && side == Orientation::Cw) {
                    inside = !inside;
                }
            }
        }
        inside
    }

    pub fn reversed(&self) -> Polyline {
        let mut v = self.vertices.clone();
        v.reverse();
        let mut p = Polyline {
            vertices: v,
            closed: self.closed,
            cum_len: Vec::new(),
        };
        p.rebuild_cache();
        p
    }

    pub fn bounding_box(&self) -> super::Box2 {
        super::Box2::of_points(&self.vertices).expect("nonempty polyline")
    }

    /// Evenly spaced sample points at arclength pitch `h`, vertices included.
    pub fn sample_points(&self, h: f64) -> Vec<Point> {
        if self.is_degenerate() {
            return vec![self.vertices[0]];
        }
        let mut out = Vec::new();
        for i in 0..self.seg_count() {
            let (a, b) = self.segment(i);
            let len = a.dist(b);
            let steps = (len / h).ceil().max(1.0) as usize;
            for k in 0..steps {
                out.push(a.lerp(b, k as f64 / steps as f64));
            }
        }
        if self.closed {
            out.push(self.vertices[0]);
        } else {
            out.push(self.last());
        }
        out
    }
}

/// Normalized arclength parameter on an open host polyline.
///
/// The parameterization is the monotone bijection between [0, 1] and the
/// curve induced by arclength; t = 0 and t = 1 are the two endpoints. The
/// induced order realizes the subarc notation `[x, y]_A`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcParam {
    pub t: f64,
}

impl ArcParam {
    pub fn new(t: f64) -> Result<Self, GeomError> {
        if !(0.0..=1.0).contains(&t) {
            return Err(GeomError::ParamOutOfRange(t));
        }
        Ok(ArcParam { t })
    }
}

/// Subarc of `host` between parameters t1 and t2 (order-insensitive).
///
/// `t1 == t2` yields the degenerate single-point arc, standing for the empty
/// half-open intervals `(x, x]` of arc notation.
pub fn subarc(host: &Polyline, t1: f64, t2: f64) -> Result<Polyline, GeomError> {
    assert!(!host.is_closed(), "subarc is defined on open arcs");
    for t in [t1, t2] {
        if !(0.0..=1.0).contains(&t) {
            return Err(GeomError::ParamOutOfRange(t));
        }
    }
    let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
    if lo == hi {
        return Ok(Polyline::degenerate(host.point_at(lo)));
    }
    let total = host.total_length();
    let (slo, shi) = (lo * total, hi * total);
    let mut verts = vec![host.point_at(lo)];
    for i in 1..host.len_vertices() {
        let s = host.cum_len[i];
        if s > slo && s < shi {
            let v = host.vertices[i];
            if *verts.last().unwrap() != v {
                verts.push(v);
            }
        }
    }
    let end = host.point_at(hi);
    if *verts.last().unwrap() != end {
        verts.push(end);
    }
    if verts.len() < 2 {
        return Ok(Polyline::degenerate(verts[0]));
    }
    Polyline::open(verts)
}

/// Minimum distance between two polylines (0 when they intersect), with the
/// closest pair of points.
pub fn polyline_min_distance(a: &Polyline, b: &Polyline) -> (f64, Point, Point) {
    if a.is_degenerate() {
        let p = a.vertices[0];
        let (d, _, q) = b.project(p);
        return (d, p, q);
    }
    if b.is_degenerate() {
        let q = b.vertices[0];
        let (d, _, p) = a.project(q);
        return (d, p, q);
    }
    let mut best = (f64::INFINITY, a.first(), b.first());
    for i in 0..a.seg_count() {
        let (a1, a2) = a.segment(i);
        let seg_box = super::Box2::of_points(&[a1, a2]).unwrap().inflate(best.0);
        for j in 0..b.seg_count() {
            let (b1, b2) = b.segment(j);
            if b1.x.min(b2.x) > seg_box.hi.x
                || b1.x.max(b2.x) < seg_box.lo.x
                || b1.y.min(b2.y) > seg_box.hi.y
                || b1.y.max(b2.y) < seg_box.lo.y
            {
                continue;
            }
            let d = super::segment::segment_segment_distance(a1, a2, b1, b2);
            if d < best.0 {
                let (p, q) = closest_pair_on_segments(a1, a2, b1, b2);
                best = (d, p, q);
            }
        }
    }
    best
}

fn closest_pair_on_segments(a1: Point, a2: Point, b1: Point, b2: Point) -> (Point, Point) {
    let mut best = (f64::INFINITY, a1, b1);
    for (p, s1, s2, swap) in [
        (a1, b1, b2, false),
        (a2, b1, b2, false),
        (b1, a1, a2, true),
        (b2, a1, a2, true),
    ] {
        let (d, q) = point_segment_closest(p, s1, s2);
        if d < best.0 {
            best = if swap { (d, q, p) } else { (d, p, q) };
        }
    }
    (best.1, best.2)
}

/// One-sided Hausdorff distance from `a` to `b`, sampling `a` at pitch `h`.
pub fn hausdorff_one_sided(a: &Polyline, b: &Polyline, h: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for p in a.sample_points(h) {
        worst = worst.max(b.distance_to_point(p));
    }
    worst
}

/// Two-sided Hausdorff distance at sampling pitch `h`.
pub fn hausdorff(a: &Polyline, b: &Polyline, h: f64) -> f64 {
    hausdorff_one_sided(a, b, h).max(hausdorff_one_sided(b, a, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;

    #[test]
    fn unit_square_is_simple() {
        let sq = Polyline::closed(vec![
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 1.0),
            pt(0.0, 1.0),
        ])
        .unwrap();
        assert!(sq.is_simple());
        assert!((sq.signed_area() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bowtie_is_not_simple() {
        let bow = Polyline::closed(vec![
            pt(0.0, 0.0),
            pt(1.0, 1.0),
            pt(1.0, 0.0),
            pt(0.0, 1.0),
        ])
        .unwrap();
        let v = bow.simplicity_violation().expect("bowtie crosses itself");
        // The crossing pair is (0, 2): segments (0,0)-(1,1) and (1,0)-(0,1).
        assert_eq!((v.seg_a, v.seg_b), (0, 2));
    }

    #[test]
    fn two_vertex_segment_is_simple() {
        let seg = Polyline::open(vec![pt(0.0, 0.0), pt(1.0, 0.0)]).unwrap();
        assert!(seg.is_simple());
    }

    #[test]
    fn subarc_basic() {
        let seg = Polyline::open(vec![pt(0.0, 0.0), pt(2.0, 0.0)]).unwrap();
        let sub = subarc(&seg, 0.25, 0.75).unwrap();
        assert_eq!(sub.first(), pt(0.5, 0.0));
        assert_eq!(sub.last(), pt(1.5, 0.0));
    }

    #[test]
    fn subarc_degenerate() {
        let seg = Polyline::open(vec![pt(0.0, 0.0), pt(2.0, 0.0)]).unwrap();
        let sub = subarc(&seg, 0.3, 0.3).unwrap();
        assert!(sub.is_degenerate());
        assert_eq!(sub.first(), pt(0.6, 0.0));
    }

    #[test]
    fn subarc_whole_reproduces_host() {
        let host = Polyline::open(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0)]).unwrap();
        let sub = subarc(&host, 0.0, 1.0).unwrap();
        assert_eq!(sub.vertices(), host.vertices());
    }

    #[test]
    fn point_at_and_project_roundtrip() {
        let host = Polyline::open(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0)]).unwrap();
        for k in 0..=10 {
            let t = k as f64 / 10.0;
            let p = host.point_at(t);
            let (d, t2, _) = host.project(p);
            assert!(d < 1e-12);
            assert!((t - t2).abs() < 1e-12);
        }
    }

    #[test]
    fn containment_parity() {
        let sq = Polyline::closed(vec![
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 1.0),
            pt(0.0, 1.0),
        ])
        .unwrap();
        assert!(sq.contains_interior(pt(0.5, 0.5)));
        assert!(!sq.contains_interior(pt(1.5, 0.5)));
        assert!(!sq.contains_interior(pt(1.0, 0.5)));
    }

    #[test]
    fn hausdorff_of_shifted_segment() {
        let a = Polyline::open(vec![pt(0.0, 0.0), pt(1.0, 0.0)]).unwrap();
        let b = Polyline::open(vec![pt(0.0, 0.1), pt(1.0, 0.1)]).unwrap();
        let h = hausdorff(&a, &b, 0.01);
        assert!((h - 0.1).abs() < 1e-12);
    }
}
