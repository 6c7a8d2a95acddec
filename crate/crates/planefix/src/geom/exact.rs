//! Exact sign of the 2x2 orientation determinant.
//!
//! A cheap floating-point filter handles almost every query; when the
//! result lands inside the rounding error bound the determinant is
//! recomputed in exact dyadic-rational arithmetic, so the reported sign
//! is always the true one.

use super::Point;
use num_bigint::BigInt;
use num_traits::Signed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Counterclockwise turn (positive determinant).
    Ccw,
    /// Clockwise turn (negative determinant).
    Cw,
    Collinear,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Ccw => 1,
            Orientation::Cw => -1,
            Orientation::Collinear => 0,
        }
    }
}

// Error coefficient for the naive determinant evaluation (Shewchuk's
// first-stage bound: (3 + 16 eps) eps).
const CCW_ERRBOUND: f64 = 3.330669073875473e-16;

/// Orientation of the triple (a, b, c): sign of cross(b - a, c - a).
pub fn orient2d(a: Point, b: Point, c: Point) -> Orientation {
    let detleft = (a.x - c.x) * (b.y - c.y);
    let detright = (a.y - c.y) * (b.x - c.x);
    let det = detleft - detright;

    let detsum = if detleft > 0.0 {
        if detright <= 0.0 {
            return sign_of(det);
        }
        detleft + detright
    } else if detleft < 0.0 {
        if detright >= 0.0 {
            return sign_of(det);
        }
        -detleft - detright
    } else {
        return sign_of(det);
    };

    if det.abs() >= CCW_ERRBOUND * detsum {
        return sign_of(det);
    }
    orient2d_exact(a, b, c)
}

fn sign_of(v: f64) -> Orientation {
    if v > 0.0 {
        Orientation::Ccw
    } else if v < 0.0 {
        Orientation::Cw
    } else {
        Orientation::Collinear
    }
}

/// Dyadic rational m * 2^e with exact integer mantissa.
#[derive(Clone, Debug)]
struct Dyadic {
    m: BigInt,
    e: i64,
}

impl Dyadic {
    fn from_f64(v: f64) -> Dyadic {
        debug_assert!(v.is_finite());
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_bits == 0 {
            (frac as i64, -1074)
        } else {
            ((frac | (1u64 << 52)) as i64, exp_bits - 1075)
        };
        Dyadic {
            m: BigInt::from(sign * m),
            e,
        }
    }

    fn sub(&self, other: &Dyadic) -> Dyadic {
        let e = self.e.min(other.e);
        let ma = &self.m << (self.e - e) as usize;
        let mb = &other.m << (other.e - e) as usize;
        Dyadic { m: ma - mb, e }
    }

    fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            m: &self.m * &other.m,
            e: self.e + other.e,
        }
    }
}

fn orient2d_exact(a: Point, b: Point, c: Point) -> Orientation {
    let ax = Dyadic::from_f64(a.x);
    let ay = Dyadic::from_f64(a.y);
    let bx = Dyadic::from_f64(b.x);
    let by = Dyadic::from_f64(b.y);
    let cx = Dyadic::from_f64(c.x);
    let cy = Dyadic::from_f64(c.y);

    let det = ax
        .sub(&cx)
        .mul(&by.sub(&cy))
        .sub(&ay.sub(&cy).mul(&bx.sub(&cx)));

    if det.m.is_positive() {
        Orientation::Ccw
    } else if det.m.is_negative() {
        Orientation::Cw
    } else {
        Orientation::Collinear
    }
}

/// Whether `p` lies on the closed segment [a, b]. Exact.
pub fn point_on_segment(p: Point, a: Point, b: Point) -> bool {
    if orient2d(a, b, p) != Orientation::Collinear {
        return false;
    }
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;

    #[test]
    fn clear_cases() {
        assert_eq!(
            orient2d(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)),
            Orientation::Ccw
        );
        assert_eq!(
            orient2d(pt(0.0, 0.0), pt(0.0, 1.0), pt(1.0, 0.0)),
            Orientation::Cw
        );
        assert_eq!(
            orient2d(pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0)),
            Orientation::Collinear
        );
    }

    #[test]
    fn near_degenerate_is_exact() {
        // Points almost on the line y = x; the fp determinant underflows the
        // error bound and the exact path must decide.
        let a = pt(0.0, 0.0);
        let b = pt(1e17, 1e17);
        let on = pt(12345.0, 12345.0);
        let above = pt(12345.0, 12345.000000000002);
        let below = pt(12345.0, 12344.999999999998);
        assert_eq!(orient2d(a, b, on), Orientation::Collinear);
        assert_eq!(orient2d(a, b, above), Orientation::Ccw);
        assert_eq!(orient2d(a, b, below), Orientation::Cw);
    }

    #[test]
    fn antisymmetry_under_swap() {
        let a = pt(0.1, 0.7);
        let b = pt(2.3, -1.1);
        let c = pt(0.9, 0.95);
        let o1 = orient2d(a, b, c);
        let o2 = orient2d(b, a, c);
        assert_eq!(o1.sign(), -o2.sign());
    }

    #[test]
    fn on_segment() {
        assert!(point_on_segment(pt(0.5, 0.5), pt(0.0, 0.0), pt(1.0, 1.0)));
        assert!(!point_on_segment(pt(1.5, 1.5), pt(0.0, 0.0), pt(1.0, 1.0)));
        assert!(!point_on_segment(pt(0.5, 0.6), pt(0.0, 0.0), pt(1.0, 1.0)));
        assert!(point_on_segment(pt(1.0, 1.0), pt(0.0, 0.0), pt(1.0, 1.0)));
    }
}
