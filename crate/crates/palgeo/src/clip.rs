//! Convex clipping and area set operations.

use crate::point::Point2;
use crate::polygon::ConvexPolygon;

/// Clips a convex polygon (vertex list, CCW) against the half-plane
/// `n . x <= off`. One Sutherland-Hodgman pass.
pub(crate) fn clip_halfplane(subject: &[Point2], n: Point2, off: f64) -> Vec<Point2> {
    let mut out = Vec::with_capacity(subject.len() + 1);
    clip_halfplane_into(subject, n, off, &mut out);
    out
}

/// Allocation-free variant writing into `out`.
pub(crate) fn clip_halfplane_into(subject: &[Point2], n: Point2, off: f64, out: &mut Vec<Point2>) {
    out.clear();
    let m = subject.len();
    for i in 0..m {
        let cur = subject[i];
        let next = subject[(i + 1) % m];
        let dc = n.dot(cur) - off;
        let dn = n.dot(next) - off;
        if dc <= 0.0 {
            out.push(cur);
            if dn > 0.0 {
                out.push(cur + (next - cur) * (dc / (dc - dn)));
            }
        } else if dn <= 0.0 {
            out.push(cur + (next - cur) * (dc / (dc - dn)));
        }
    }
}

/// Intersection of two convex polygons; `None` when the interiors are
/// disjoint (or the overlap is degenerate).
pub fn intersection(k: &ConvexPolygon, j: &ConvexPolygon) -> Option<ConvexPolygon> {
    let mut cur: Vec<Point2> = k.vertices().to_vec();
    let mut buf: Vec<Point2> = Vec::with_capacity(cur.len() + 4);
    for (n, off) in j.halfplanes() {
        clip_halfplane_into(&cur, n, off, &mut buf);
        std::mem::swap(&mut cur, &mut buf);
        if cur.len() < 3 {
            return None;
        }
    }
    ConvexPolygon::from_points(&cur).ok()
}

/// Area of the intersection without building a canonical polygon.
pub(crate) fn intersection_area_raw(subject: &[Point2], clip_planes: &[(Point2, f64)]) -> f64 {
    let mut cur: Vec<Point2> = subject.to_vec();
    let mut buf: Vec<Point2> = Vec::with_capacity(cur.len() + 4);
    for &(n, off) in clip_planes {
        clip_halfplane_into(&cur, n, off, &mut buf);
        std::mem::swap(&mut cur, &mut buf);
        if cur.len() < 3 {
            return 0.0;
        }
    }
    shoelace(&cur)
}

pub(crate) fn shoelace(pts: &[Point2]) -> f64 {
    let m = pts.len();
    let mut a = 0.0;
    for i in 0..m {
        a += pts[i].cross(pts[(i + 1) % m]);
    }
    0.5 * a
}

/// `|K delta J| = |K| + |J| - 2 |K inter J|`.
pub fn symmetric_difference_area(k: &ConvexPolygon, j: &ConvexPolygon) -> f64 {
    let inter = intersection_area_raw(k.vertices(), &j.halfplanes());
    (k.area() + j.area() - 2.0 * inter).max(0.0)
}
