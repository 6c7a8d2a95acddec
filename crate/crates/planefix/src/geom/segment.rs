//! Segment-segment classification and floating-point distance helpers.
//!
//! The relation kind (disjoint / touching / crossing / overlap) is decided
//! exactly; reported intersection points are floating-point witnesses.

use super::exact::{orient2d, point_on_segment, Orientation};
use super::Point;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SegRelation {
    Disjoint,
    /// Proper transversal crossing at an interior point of both segments.
    Crossing(Point),
    /// Contact at an endpoint of at least one segment, no crossing.
    Touching(Point),
    /// Collinear segments sharing more than one point.
    Overlap,
}

/// Exact relation of closed segments [a1, a2] and [b1, b2].
pub fn segments_relation(a1: Point, a2: Point, b1: Point, b2: Point) -> SegRelation {
    let d1 = orient2d(b1, b2, a1).sign();
    let d2 = orient2d(b1, b2, a2).sign();
    let d3 = orient2d(a1, a2, b1).sign();
    let d4 = orient2d(a1, a2, b2).sign();

    if d1 * d2 < 0 && d3 * d4 < 0 {
        return SegRelation::Crossing(crossing_point(a1, a2, b1, b2));
    }

    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        // Collinear: check 1-D overlap along the dominant axis.
        let (alo, ahi, blo, bhi, horizontal) =
            if (a2.x - a1.x).abs().max((b2.x - b1.x).abs()) >= (a2.y - a1.y).abs().max((b2.y - b1.y).abs()) {
                (
                    a1.x.min(a2.x),
                    a1.x.max(a2.x),
                    b1.x.min(b2.x),
                    b1.x.max(b2.x),
                    true,
                )
            } else {
                (
                    a1.y.min(a2.y),
                    a1.y.max(a2.y),
                    b1.y.min(b2.y),
                    b1.y.max(b2.y),
                    false,
                )
            };
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        if lo > hi {
            return SegRelation::Disjoint;
        }
        if lo == hi {
            let touch = if horizontal {
                let y = if a1.x == lo { a1.y } else { a2.y };
                Point::new(lo, y)
            } else {
                let x = if a1.y == lo { a1.x } else { a2.x };
                Point::new(x, lo)
            };
            return SegRelation::Touching(touch);
        }
        return SegRelation::Overlap;
    }

    // Non-collinear with some zero orientation: possible endpoint contact.
    for (p, s1, s2) in [(a1, b1, b2), (a2, b1, b2), (b1, a1, a2), (b2, a1, a2)] {
        if point_on_segment(p, s1, s2) {
            return SegRelation::Touching(p);
        }
    }
    SegRelation::Disjoint
}

/// Approximate crossing point of two segments known to properly cross.
pub fn crossing_point(a1: Point, a2: Point, b1: Point, b2: Point) -> Point {
    let r = a2 - a1;
    let s = b2 - b1;
    let denom = r.cross(s);
    if denom == 0.0 {
        return a1.lerp(a2, 0.5);
    }
    let t = (b1 - a1).cross(s) / denom;
    a1.lerp(a2, t.clamp(0.0, 1.0))
}

/// Distance from `p` to the closed segment [a, b], with the closest point.
pub fn point_segment_closest(p: Point, a: Point, b: Point) -> (f64, Point) {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return (p.dist(a), a);
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    let q = a.lerp(b, t);
    (p.dist(q), q)
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    point_segment_closest(p, a, b).0
}

/// Minimum distance between closed segments (0 when they intersect).
pub fn segment_segment_distance(a1: Point, a2: Point, b1: Point, b2: Point) -> f64 {
    if let SegRelation::Crossing(_) | SegRelation::Touching(_) | SegRelation::Overlap =
        segments_relation(a1, a2, b1, b2)
    {
        return 0.0;
    }
    point_segment_distance(a1, b1, b2)
        .min(point_segment_distance(a2, b1, b2))
        .min(point_segment_distance(b1, a1, a2))
        .min(point_segment_distance(b2, a1, a2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;

    #[test]
    fn crossing() {
        let rel = segments_relation(pt(0.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0), pt(1.0, 0.0));
        match rel {
            SegRelation::Crossing(p) => {
                assert!((p.x - 0.5).abs() < 1e-12 && (p.y - 0.5).abs() < 1e-12)
            }
            other => panic!("expected crossing, got {other:?}"),
        }
    }

    #[test]
    fn touching_at_endpoint() {
        let rel = segments_relation(pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 0.0), pt(2.0, 1.0));
        assert_eq!(rel, SegRelation::Touching(pt(1.0, 0.0)));
    }

    #[test]
    fn collinear_overlap_and_gap() {
        assert_eq!(
            segments_relation(pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 0.0), pt(3.0, 0.0)),
            SegRelation::Overlap
        );
        assert_eq!(
            segments_relation(pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0), pt(3.0, 0.0)),
            SegRelation::Disjoint
        );
        assert_eq!(
            segments_relation(pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 0.0), pt(3.0, 0.0)),
            SegRelation::Touching(pt(1.0, 0.0))
        );
    }

    #[test]
    fn distances() {
        assert!((point_segment_distance(pt(0.0, 1.0), pt(-1.0, 0.0), pt(1.0, 0.0)) - 1.0).abs() < 1e-15);
        let d = segment_segment_distance(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 2.0), pt(1.0, 2.0));
        assert!((d - 2.0).abs() < 1e-15);
        let d0 = segment_segment_distance(pt(0.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0), pt(1.0, 0.0));
        assert_eq!(d0, 0.0);
    }
}
