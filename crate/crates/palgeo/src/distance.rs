//! Distances between convex bodies.

use crate::point::Point2;
use crate::polygon::ConvexPolygon;

/// Euclidean distance from a point to a convex body (zero inside).
#[inline]
pub fn point_to_body_distance(p: Point2, body: &ConvexPolygon) -> f64 {
    body.distance_to(p)
}

/// Directed Hausdorff distance `sup_{x in from} dist(x, to)`.
///
/// For convex polygons the supremum of the convex function `dist(., to)`
/// is attained at a vertex of `from`, so vertices suffice.
pub fn directed_hausdorff(from: &ConvexPolygon, to: &ConvexPolygon) -> f64 {
    from.vertices()
        .iter()
        .map(|&v| to.distance_to(v))
        .fold(0.0, f64::max)
}

/// Hausdorff distance between convex polygons.
pub fn hausdorff(k: &ConvexPolygon, j: &ConvexPolygon) -> f64 {
    directed_hausdorff(k, j).max(directed_hausdorff(j, k))
}

/// Whether `k` is contained in the `eps`-neighborhood of `j`.
///
/// By convexity it is enough that every vertex of `k` lies within `eps`
/// of `j`.
pub fn neighborhood_contains(k: &ConvexPolygon, j: &ConvexPolygon, eps: f64) -> bool {
    k.vertices().iter().all(|&v| j.distance_to(v) <= eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;
    use approx::assert_relative_eq;

    #[test]
    fn identical_bodies() {
        let sq = shapes::rectangle(1.0, 1.0).unwrap();
        assert_eq!(hausdorff(&sq, &sq), 0.0);
        assert!(neighborhood_contains(&sq, &sq, 0.0));
    }

    #[test]
    fn concentric_ngon_disks() {
        // 256-gons standing in for concentric disks of circumradius 1 and 2
        let inner = shapes::regular_ngon(256, (std::f64::consts::PI / 256.0).cos()).unwrap();
        let outer = shapes::regular_ngon(256, 2.0 * (std::f64::consts::PI / 256.0).cos()).unwrap();
        let d = hausdorff(&inner, &outer);
        assert!((d - 1.0).abs() < 1e-3, "d = {d}");
    }

    #[test]
    fn disk_in_triangle_sixth() {
        // disk of inradius w/2 concentric and aligned with a width-w triangle
        let w = 1.0;
        let tri = shapes::regular_ngon(3, w / 3.0).unwrap();
        let c = crate::indisk::chebyshev_indisk(&tri).center;
        let disk = shapes::regular_ngon(256, w / 2.0).unwrap().translated(c);
        let d = hausdorff(&tri, &disk);
        assert!((d - w / 6.0).abs() < 2e-3, "d = {d}");
    }

    #[test]
    fn nested_squares_containment() {
        let small = shapes::rectangle(1.0, 1.0).unwrap();
        let big = small
            .scaled(2.0)
            .translated(Point2::new(-0.5, -0.5));
        // small is strictly inside big
        assert!(neighborhood_contains(&small, &big, 0.0));
        assert!(!neighborhood_contains(&big, &small, 0.4));
        assert!(neighborhood_contains(
            &big,
            &small,
            std::f64::consts::SQRT_2 / 2.0 + 1e-12
        ));
    }

    #[test]
    fn consistent_with_hausdorff() {
        let a = shapes::rectangle(2.0, 1.0).unwrap();
        let b = shapes::regular_ngon(7, 0.8).unwrap();
        let d = hausdorff(&a, &b);
        let eps = d + 1e-12 * a.diameter().max(b.diameter());
        assert!(neighborhood_contains(&a, &b, eps));
        assert!(neighborhood_contains(&b, &a, eps));
    }
}
