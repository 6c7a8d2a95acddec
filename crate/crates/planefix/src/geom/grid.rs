//! Uniform bucket index over curve segments, for distance queries and
//! exact crossing tests against a whole curve system.

use super::segment::{point_segment_distance, segments_relation, SegRelation};
use super::{Box2, Point, Polyline};

#[derive(Clone, Debug)]
struct Entry {
    a: Point,
    b: Point,
    curve: usize,
    seg: usize,
}

#[derive(Clone, Debug)]
pub struct SegmentGrid {
    origin: Point,
    cell: f64,
    nx: i64,
    ny: i64,
    buckets: Vec<Vec<u32>>,
    entries: Vec<Entry>,
}

impl SegmentGrid {
    pub fn build(curves: &[Polyline], bounds: Box2, cell: f64) -> Self {
        let nx = ((bounds.width() / cell).ceil() as i64 + 1).max(1);
        let ny = ((bounds.height() / cell).ceil() as i64 + 1).max(1);
        let mut grid = SegmentGrid {
            origin: bounds.lo,
            cell,
            nx,
            ny,
            buckets: vec![Vec::new(); (nx * ny) as usize],
            entries: Vec::new(),
        };
        for (ci, curve) in curves.iter().enumerate() {
            for si in 0..curve.seg_count() {
                let (a, b) = curve.segment(si);
                let id = grid.entries.len() as u32;
                grid.entries.push(Entry {
                    a,
                    b,
                    curve: ci,
                    seg: si,
                });
                for idx in grid.cells_of_bbox(a, b) {
                    grid.buckets[idx].push(id);
                }
            }
        }
        grid
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn cell_of(&self, p: Point) -> (i64, i64) {
        let ix = ((p.x - self.origin.x) / self.cell).floor() as i64;
        let iy = ((p.y - self.origin.y) / self.cell).floor() as i64;
        (ix.clamp(0, self.nx - 1), iy.clamp(0, self.ny - 1))
    }

    fn cells_of_bbox(&self, a: Point, b: Point) -> Vec<usize> {
        let (x0, y0) = self.cell_of(Point::new(a.x.min(b.x), a.y.min(b.y)));
        let (x1, y1) = self.cell_of(Point::new(a.x.max(b.x), a.y.max(b.y)));
        let mut out = Vec::new();
        for iy in y0..=y1 {
            for ix in x0..=x1 {
                out.push((iy * self.nx + ix) as usize);
            }
        }
        out
    }

    /// Minimum distance from `p` to the indexed segments, by expanding ring
    /// search. Returns `f64::INFINITY` for an empty index.
    pub fn distance(&self, p: Point) -> f64 {
        if self.entries.is_empty() {
            return f64::INFINITY;
        }
        let (cx, cy) = self.cell_of(p);
        let max_ring = self.nx.max(self.ny);
        let mut best = f64::INFINITY;
        let mut ring = 0;
        loop {
            for (ix, iy) in ring_cells(cx, cy, ring, self.nx, self.ny) {
                for &id in &self.buckets[(iy * self.nx + ix) as usize] {
                    let e = &self.entries[id as usize];
                    best = best.min(point_segment_distance(p, e.a, e.b));
                }
            }
            // Cells at ring r have every point at distance >= (r-1) * cell,
            // so once best is below that bound it is final.
            if best.is_finite() && best <= (ring as f64 - 1.0) * self.cell {
                return best;
            }
            if ring > max_ring {
                return best;
            }
            ring += 1;
        }
    }

    /// Exact test: does segment [a, b] intersect any indexed segment?
    /// Touching contacts count. Returns the first hit (curve, seg index).
    pub fn segment_hits(&self, a: Point, b: Point) -> Option<(usize, usize, Point)> {
        let mut ids: Vec<u32> = Vec::new();
        for idx in self.cells_of_bbox(a, b) {
            ids.extend_from_slice(&self.buckets[idx]);
        }
        ids.sort_unstable();
        ids.dedup();
        let mut hit: Option<(usize, usize, Point)> = None;
        {
            for id in ids {
                let e = &self.entries[id as usize];
                match segments_relation(a, b, e.a, e.b) {
                    SegRelation::Disjoint => {}
                    SegRelation::Crossing(p)
                    | SegRelation::Touching(p) => {
                        let cand = (e.curve, e.seg, p);
                        if hit.map_or(true, |h| (h.0, h.1) > (cand.0, cand.1)) {
                            hit = Some(cand);
                        }
                    }
                    SegRelation::Overlap => {
                        let cand = (e.curve, e.seg, e.a);
                        if hit.map_or(true, |h| (h.0, h.1) > (cand.0, cand.1)) {
                            hit = Some(cand);
                        }
                    }
                }
            }
        }
        hit
    }
}

pub(crate) fn ring_cells(cx: i64, cy: i64, ring: i64, nx: i64, ny: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    if ring == 0 {
        if cx >= 0 && cx < nx && cy >= 0 && cy < ny {
            out.push((cx, cy));
        }
        return out;
    }
    for ix in (cx - ring)..=(cx + ring) {
        for iy in [cy - ring, cy + ring] {
            if ix >= 0 && ix < nx && iy >= 0 && iy < ny {
                out.push((ix, iy));
            }
        }
    }
    for iy in (cy - ring + 1)..=(cy + ring - 1) {
        for ix in [cx - ring, cx + ring] {
            if ix >= 0 && ix < nx && iy >= 0 && iy < ny {
                out.push((ix, iy));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;

    #[test]
    fn distance_and_hits() {
        let seg = Polyline::open(vec![pt(0.0, 0.0), pt(10.0, 0.0)]).unwrap();
        let grid = SegmentGrid::build(
            &[seg],
            Box2::from_coords(-1.0, -1.0, 11.0, 1.0),
            0.5,
        );
        assert!((grid.distance(pt(5.0, 0.75)) - 0.75).abs() < 1e-12);
        assert!(grid.segment_hits(pt(5.0, -1.0), pt(5.0, 1.0)).is_some());
        assert!(grid.segment_hits(pt(5.0, 0.25), pt(5.0, 1.0)).is_none());
    }
}
