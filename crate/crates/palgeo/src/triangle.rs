//! Triangle constructions: metrics, equilateral factories, the tangent
//! (circumscribed) triangle of a body, and closed-form Hausdorff bounds.

use crate::error::{Error, Result};
use crate::indisk::Indisk;
use crate::point::Point2;
use crate::polygon::{ConvexPolygon, Tolerances};

/// Side lengths, heights, and angles of a triangle, consistently sorted:
/// `sides[0] >= sides[1] >= sides[2]`, `heights[0] <= heights[1] <=
/// heights[2]` (so `sides[i] * heights[i] = 2 area` for each pairing),
/// `angles[0] >= angles[1] >= angles[2]`. The width of a triangle is its
/// smallest height.
#[derive(Clone, Copy, Debug)]
pub struct TriangleMetrics {
    pub sides: [f64; 3],
    pub heights: [f64; 3],
    pub angles: [f64; 3],
    pub width: f64,
    pub inradius: f64,
    pub area: f64,
}

/// Computes metrics of a 3-vertex polygon.
pub fn triangle_metrics(t: &ConvexPolygon) -> Result<TriangleMetrics> {
    if t.len() != 3 {
        return Err(Error::NotATriangle(t.len()));
    }
    let v = t.vertices();
    let mut sides = [
        v[1].distance(v[2]),
        v[2].distance(v[0]),
        v[0].distance(v[1]),
    ];
    sides.sort_by(|a, b| b.total_cmp(a));
    let area = t.area();
    let heights = [
        2.0 * area / sides[0],
        2.0 * area / sides[1],
        2.0 * area / sides[2],
    ];
    // law of cosines; angle opposite the larger side is larger
    let angle_opp = |s: f64, p: f64, q: f64| ((p * p + q * q - s * s) / (2.0 * p * q)).acos();
    let angles = [
        angle_opp(sides[0], sides[1], sides[2]),
        angle_opp(sides[1], sides[2], sides[0]),
        angle_opp(sides[2], sides[0], sides[1]),
    ];
    Ok(TriangleMetrics {
        sides,
        heights,
        angles,
        width: heights[0],
        inradius: 2.0 * area / (sides[0] + sides[1] + sides[2]),
        area,
    })
}

/// Placement of an equilateral triangle: barycenter, rotation of the
/// first vertex direction (reduced modulo the triangle's 3-fold
/// symmetry), and minimal width.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct EquilateralPlacement {
    pub center: Point2,
    pub rotation: f64,
    pub width: f64,
}

const THIRD_TURN: f64 = 2.0 * std::f64::consts::PI / 3.0;

impl EquilateralPlacement {
    /// Normalizes the rotation into `[0, 2 pi / 3)`.
    pub fn new(center: Point2, rotation: f64, width: f64) -> Self {
        EquilateralPlacement {
            center,
            rotation: rotation.rem_euclid(THIRD_TURN),
            width,
        }
    }

    /// Vertices without canonicalization, for hot paths.
    pub(crate) fn raw_vertices(&self) -> [Point2; 3] {
        let r = 2.0 * self.width / 3.0;
        let base = self.rotation + std::f64::consts::FRAC_PI_2;
        [
            self.center + Point2::unit(base) * r,
            self.center + Point2::unit(base + THIRD_TURN) * r,
            self.center + Point2::unit(base + 2.0 * THIRD_TURN) * r,
        ]
    }
}

/// Equilateral triangle with barycenter at `placement.center`, one vertex
/// in direction `rotation + pi/2`, and the given minimal width (side
/// `2 w / sqrt(3)`, inradius `w / 3`, circumradius `2 w / 3`).
pub fn equilateral(placement: &EquilateralPlacement) -> ConvexPolygon {
    ConvexPolygon::from_points(&placement.raw_vertices()).expect("equilateral placement is valid")
}

/// Triangle bounded by the tangent lines to the disk `(center, radius)`
/// at three contact points. The contacts must not be collinear through
/// the disk center.
pub fn tangent_triangle(center: Point2, radius: f64, contacts: [Point2; 3]) -> Result<ConvexPolygon> {
    let line = |p: Point2| {
        let n = (p - center).normalized();
        (n, n.dot(p))
    };
    let lines = [line(contacts[0]), line(contacts[1]), line(contacts[2])];
    let mut verts = [Point2::ZERO; 3];
    for i in 0..3 {
        let (n1, c1) = lines[i];
        let (n2, c2) = lines[(i + 1) % 3];
        let det = n1.cross(n2);
        if det.abs() < 1e-12 {
            return Err(Error::NotThreeContact);
        }
        verts[i] = Point2::new((c1 * n2.y - c2 * n1.y) / det, (n1.x * c2 - n2.x * c1) / det);
    }
    let _ = radius;
    ConvexPolygon::from_points(&verts).map_err(|_| Error::NotThreeContact)
}

/// The circumscribed triangle of a body: tangent lines to its indisk at
/// three contacts in acute configuration. It contains the body and has
/// the same inradius; its width is at least the body's.
pub fn circumscribed_triangle(_k: &ConvexPolygon, disk: &Indisk) -> Result<ConvexPolygon> {
    let triple = disk.acute_triple().ok_or(Error::NotThreeContact)?;
    tangent_triangle(disk.center, disk.radius, triple)
}

/// `d_H` between a disk of radius `r_d` and a concentric equilateral
/// triangle of width `w_e`, in closed form.
pub fn disk_triangle_hausdorff(r_d: f64, w_e: f64) -> f64 {
    if r_d <= w_e / 2.0 {
        w_e * (2.0 / 3.0 - r_d / w_e)
    } else {
        w_e * (r_d / w_e - 1.0 / 3.0)
    }
}

/// Upper bound for `d_H(T, E)` when `E` is an equilateral triangle of
/// width `w_e <= width(T)` aligned to `T`'s width with its base on the
/// largest side: `sqrt(3) width(T) / tan(gamma) - w_e`, `gamma` the
/// smallest interior angle.
pub fn triangle_hausdorff_bound(t: &TriangleMetrics, w_e: f64) -> Result<f64> {
    if w_e > t.width * (1.0 + 1e-12) {
        return Err(Error::InvalidWidth {
            requested: w_e,
            max: t.width,
        });
    }
    Ok(3f64.sqrt() * t.width / t.angles[2].tan() - w_e)
}

/// Upper bound for `d_H(K, T_K)` from the circumscribed triangle's
/// metrics: `(s1 - s3) + s3 (h1 - w) / h1` with `w` the body width.
pub fn body_triangle_hausdorff_bound(t: &TriangleMetrics, w_body: f64) -> f64 {
    (t.sides[0] - t.sides[2]) + t.sides[2] * (t.heights[0] - w_body) / t.heights[0]
}

/// The aligned equilateral of the triangle bound: base on the largest
/// side of `t` with the base midpoint at the foot of the smallest
/// height, apex toward the opposite vertex.
pub fn aligned_equilateral(t: &ConvexPolygon, w_e: f64) -> Result<ConvexPolygon> {
    if t.len() != 3 {
        return Err(Error::NotATriangle(t.len()));
    }
    let v = t.vertices();
    // largest side by length, stable on ties by edge index
    let mut best = 0;
    let mut best_len = f64::MIN;
    for i in 0..3 {
        let len = v[i].distance(v[(i + 1) % 3]);
        if len > best_len * (1.0 + 1e-15) {
            best_len = len;
            best = i;
        }
    }
    let a = v[best];
    let b = v[(best + 1) % 3];
    let apex = v[(best + 2) % 3];
    let metrics = triangle_metrics(t)?;
    if w_e > metrics.width * (1.0 + 1e-12) {
        return Err(Error::InvalidWidth {
            requested: w_e,
            max: metrics.width,
        });
    }
    let d = (b - a).normalized();
    let foot = a + d * (apex - a).dot(d);
    let up = (apex - foot).normalized();
    let half_base = w_e / 3f64.sqrt();
    ConvexPolygon::from_points(&[foot - d * half_base, foot + d * half_base, foot + up * w_e])
}

/// Right-hand side of the convex-body asymmetry bound built from the
/// circumscribed triangle:
/// `(s1-s3)/w + s3 (wT - w)/(w wT) + (sqrt3/tan gamma)(wT/w) - 1`.
pub fn asymmetry_upper_bound(k: &ConvexPolygon) -> Result<f64> {
    asymmetry_upper_bound_with(k, &Tolerances::default())
}

pub fn asymmetry_upper_bound_with(k: &ConvexPolygon, tol: &Tolerances) -> Result<f64> {
    let disk = crate::indisk::chebyshev_indisk_with(k, tol);
    let t = circumscribed_triangle(k, &disk)?;
    let m = triangle_metrics(&t)?;
    let w = k.minimal_width().0;
    let wt = m.width;
    Ok((m.sides[0] - m.sides[2]) / w
        + m.sides[2] * (wt - w) / (w * wt)
        + (3f64.sqrt() / m.angles[2].tan()) * (wt / w)
        - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::hausdorff;
    use crate::indisk::chebyshev_indisk;
    use crate::shapes;
    use approx::assert_relative_eq;

    #[test]
    fn equilateral_metrics() {
        let a = 2.0; // side
        let t = shapes::triangle_from_sides(a, a, a).unwrap();
        let m = triangle_metrics(&t).unwrap();
        for s in m.sides {
            assert_relative_eq!(s, a, epsilon = 1e-12);
        }
        for g in m.angles {
            assert_relative_eq!(g, std::f64::consts::FRAC_PI_3, epsilon = 1e-12);
        }
        assert_relative_eq!(m.width, a * 3f64.sqrt() / 2.0, epsilon = 1e-12);
        assert_relative_eq!(m.inradius, a / (2.0 * 3f64.sqrt()), epsilon = 1e-12);
    }

    #[test]
    fn metrics_345() {
        let t = shapes::triangle_from_sides(3.0, 4.0, 5.0).unwrap();
        let m = triangle_metrics(&t).unwrap();
        assert_relative_eq!(m.area, 6.0, epsilon = 1e-12);
        assert_relative_eq!(m.inradius, 1.0, epsilon = 1e-12);
        assert_relative_eq!(m.width, 2.4, epsilon = 1e-12);
        // s_i h_i = 2A for every pairing
        for i in 0..3 {
            assert_relative_eq!(m.sides[i] * m.heights[i], 2.0 * m.area, epsilon = 1e-12);
        }
        assert_relative_eq!(
            m.angles[0] + m.angles[1] + m.angles[2],
            std::f64::consts::PI,
            epsilon = 1e-12
        );
    }

    #[test]
    fn family_width_is_base_height() {
        let k = shapes::isosceles_family(0.05).unwrap();
        let m = triangle_metrics(&k).unwrap();
        assert_relative_eq!(m.width, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn equilateral_factory_matches_reference_vertices() {
        let p = EquilateralPlacement::new(Point2::new(0.0, 1.0 / 3.0), 0.0, 1.0);
        let e = equilateral(&p);
        let s = 1.0 / 3f64.sqrt();
        let expect = [
            Point2::new(-s, 0.0),
            Point2::new(s, 0.0),
            Point2::new(0.0, 1.0),
        ];
        for w in expect {
            assert!(
                e.vertices().iter().any(|v| v.distance(w) < 1e-14),
                "missing vertex {w:?}"
            );
        }
        assert_relative_eq!(e.minimal_width().0, 1.0, epsilon = 1e-13);
        let d = chebyshev_indisk(&e);
        assert_relative_eq!(d.radius, 1.0 / 3.0, epsilon = 1e-12);
        // circumradius 2w/3 from the barycenter
        let far = e
            .vertices()
            .iter()
            .map(|v| v.distance(p.center))
            .fold(0.0f64, f64::max);
        assert_relative_eq!(far, 2.0 / 3.0, epsilon = 1e-13);
    }

    #[test]
    fn circumscribed_triangle_of_triangle_is_itself() {
        let t = shapes::triangle_from_sides(3.0, 4.0, 5.0).unwrap();
        let d = chebyshev_indisk(&t);
        let tk = circumscribed_triangle(&t, &d).unwrap();
        assert!(hausdorff(&t, &tk) < 1e-9);
    }

    #[test]
    fn hexagon_tangent_triangle_equilateral() {
        // tangent lines at alternating contacts of a regular hexagon
        let hex = shapes::regular_ngon(6, 1.0).unwrap();
        let d = chebyshev_indisk(&hex);
        let tri = circumscribed_triangle(&hex, &d).unwrap();
        let m = triangle_metrics(&tri).unwrap();
        assert_relative_eq!(m.sides[0], m.sides[2], epsilon = 1e-9);
        assert_relative_eq!(m.inradius, d.radius, epsilon = 1e-9);
        // the hexagon is inside its tangent triangle
        let slack = 1e-9 * hex.diameter();
        assert!(hex.vertices().iter().all(|&v| tri.contains(v, slack)));
    }

    #[test]
    fn square_has_no_tangent_triangle() {
        let sq = shapes::rectangle(1.0, 1.0).unwrap();
        let d = chebyshev_indisk(&sq);
        assert!(matches!(
            circumscribed_triangle(&sq, &d),
            Err(Error::NotThreeContact)
        ));
        assert!(matches!(
            asymmetry_upper_bound(&sq),
            Err(Error::NotThreeContact)
        ));
    }

    #[test]
    fn disk_triangle_formula_branches() {
        let w = 1.0;
        assert_relative_eq!(disk_triangle_hausdorff(w / 2.0, w), w / 6.0);
        assert_relative_eq!(disk_triangle_hausdorff(w / 3.0, w), w / 3.0);
        assert_relative_eq!(disk_triangle_hausdorff(2.0 * w / 3.0, w), w / 3.0);
    }

    #[test]
    fn triangle_bound_tight_for_equilateral() {
        let t = shapes::triangle_from_sides(2.0, 2.0, 2.0).unwrap();
        let m = triangle_metrics(&t).unwrap();
        let b = triangle_hausdorff_bound(&m, m.width).unwrap();
        assert_relative_eq!(b, 0.0, epsilon = 1e-12);
        assert!(triangle_hausdorff_bound(&m, m.width + 0.1).is_err());
    }

    #[test]
    fn triangle_bound_dominates_aligned_distance_345() {
        let t = shapes::triangle_from_sides(3.0, 4.0, 5.0).unwrap();
        let m = triangle_metrics(&t).unwrap();
        let w_e = m.width;
        let e = aligned_equilateral(&t, w_e).unwrap();
        let measured = hausdorff(&t, &e);
        let bound = triangle_hausdorff_bound(&m, w_e).unwrap();
        let gamma = (3f64 / 5.0).asin();
        assert_relative_eq!(
            bound,
            3f64.sqrt() * 2.4 / gamma.tan() - 2.4,
            epsilon = 1e-12
        );
        assert!(bound >= measured - 1e-12, "bound {bound} measured {measured}");
    }

    #[test]
    fn body_bound_zero_for_equilateral() {
        let t = shapes::triangle_from_sides(1.0, 1.0, 1.0).unwrap();
        let m = triangle_metrics(&t).unwrap();
        assert_relative_eq!(body_triangle_hausdorff_bound(&m, m.width), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn asymmetry_bound_vanishes_for_equilateral() {
        let e = shapes::regular_ngon(3, 1.0 / 3.0).unwrap();
        let b = asymmetry_upper_bound(&e).unwrap();
        assert!(b.abs() < 1e-9, "bound = {b}");
    }
}
