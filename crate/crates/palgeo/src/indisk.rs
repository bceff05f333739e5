//! Largest inscribed disk of a convex polygon.
//!
//! The indisk solves the linear program `max r` subject to
//! `n_i . c + r <= c_i` over the polygon's edge half-planes. Optima sit at
//! vertices of the feasible set, i.e. at triples of active constraints, so
//! the solver enumerates edge triples and keeps the best feasible
//! candidate. When the optimal center is a segment (rectangles), the
//! lexicographically smallest optimal center is returned, which makes
//! contact points and downstream quantities deterministic.

use crate::error::Result;
use crate::point::{lex_xy, Point2};
use crate::polygon::{ConvexPolygon, Tolerances};

/// Contact configuration of an indisk per the classical dichotomy: the
/// disk either touches in two diametrically opposite points or in three
/// points forming an acute-angled triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactCase {
    TwoDiametral,
    ThreeAcute,
}

/// The largest inscribed disk, its boundary contacts, and their
/// classification.
#[derive(Clone, Debug)]
pub struct Indisk {
    pub center: Point2,
    pub radius: f64,
    /// Tangency points on active edges, ordered by edge index.
    pub contacts: Vec<Point2>,
    pub case: ContactCase,
}

impl Indisk {
    /// First triple of contacts forming a strictly acute triangle, in
    /// index order, if any.
    pub fn acute_triple(&self) -> Option<[Point2; 3]> {
        let c = &self.contacts;
        for i in 0..c.len() {
            for j in (i + 1)..c.len() {
                for k in (j + 1)..c.len() {
                    if is_acute(c[i], c[j], c[k]) {
                        return Some([c[i], c[j], c[k]]);
                    }
                }
            }
        }
        None
    }
}

fn is_acute(a: Point2, b: Point2, c: Point2) -> bool {
    // strictly acute with a relative margin so right angles perturbed by
    // floating noise are rejected
    let corner = |u: Point2, v: Point2| u.dot(v) > 1e-9 * u.norm() * v.norm();
    corner(b - a, c - a) && corner(a - b, c - b) && corner(a - c, b - c)
}

/// Computes the indisk with default tolerances.
pub fn chebyshev_indisk(poly: &ConvexPolygon) -> Indisk {
    chebyshev_indisk_with(poly, &Tolerances::default())
}

pub fn chebyshev_indisk_with(poly: &ConvexPolygon, tol: &Tolerances) -> Indisk {
    let hp = poly.halfplanes();
    let m = hp.len();
    let scale = poly.diameter();

    // Pass 1: best feasible radius over constraint triples.
    let mut best_r = f64::MIN;
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                if let Some((c, r)) = solve_triple(hp[i], hp[j], hp[k]) {
                    if r > best_r && feasible(&hp, c, r, 1e-10 * scale) {
                        best_r = r;
                    }
                }
            }
        }
    }

    // Pass 2: among optimal candidates, lexicographically smallest center.
    let tie = (tol.geom * scale).max(1e-14 * scale);
    let mut center: Option<Point2> = None;
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                if let Some((c, r)) = solve_triple(hp[i], hp[j], hp[k]) {
                    if r >= best_r - tie && feasible(&hp, c, r, 1e-10 * scale) {
                        center = Some(match center {
                            Some(cur) if lex_xy(&cur, &c).is_le() => cur,
                            _ => c,
                        });
                    }
                }
            }
        }
    }
    let center = center.expect("valid polygon has an indisk");
    let radius = hp
        .iter()
        .map(|&(n, off)| off - n.dot(center))
        .fold(f64::MAX, f64::min);

    // Contacts: active edges, projected to the tangency point.
    let active_tol = (tol.geom * scale).max(1e-13 * scale);
    let mut contacts: Vec<Point2> = Vec::new();
    for &(n, off) in &hp {
        let d = off - n.dot(center);
        if d - radius <= active_tol {
            let p = center + n * d;
            if !contacts.iter().any(|q| q.distance(p) <= active_tol) {
                contacts.push(p);
            }
        }
    }

    let case = classify(&contacts, center, radius, tol.geom);
    Indisk {
        center,
        radius,
        contacts,
        case,
    }
}

/// Solves `n_a.c + r = o_a`, same for b and c; `None` when near-singular.
fn solve_triple(
    (na, oa): (Point2, f64),
    (nb, ob): (Point2, f64),
    (nc, oc): (Point2, f64),
) -> Option<(Point2, f64)> {
    // 3x3 system in (cx, cy, r) with unit normal rows; determinant by
    // cofactor expansion along the r-column of ones.
    let det = (nb - na).cross(nc - na);
    if det.abs() < 1e-9 {
        return None;
    }
    // Cramer's rule.
    let dx = oa * (nb.y - nc.y) + ob * (nc.y - na.y) + oc * (na.y - nb.y);
    let dy = oa * (nc.x - nb.x) + ob * (na.x - nc.x) + oc * (nb.x - na.x);
    let dr = oa * nb.cross(nc) + ob * nc.cross(na) + oc * na.cross(nb);
    let inv = 1.0 / det;
    let c = Point2::new(dx * inv, dy * inv);
    let r = dr * inv;
    if r <= 0.0 || !c.is_finite() || !r.is_finite() {
        return None;
    }
    Some((c, r))
}

fn feasible(hp: &[(Point2, f64)], c: Point2, r: f64, slack: f64) -> bool {
    hp.iter().all(|&(n, off)| n.dot(c) + r <= off + slack)
}

fn classify(contacts: &[Point2], center: Point2, radius: f64, tol_geom: f64) -> ContactCase {
    // Diametral pair: two contact vectors cancelling to within tol*r.
    let diametral = |t: f64| {
        for i in 0..contacts.len() {
            for j in (i + 1)..contacts.len() {
                let s = (contacts[i] - center) + (contacts[j] - center);
                if s.norm() <= t * radius {
                    return true;
                }
            }
        }
        false
    };
    if diametral(tol_geom) {
        return ContactCase::TwoDiametral;
    }
    for i in 0..contacts.len() {
        for j in (i + 1)..contacts.len() {
            for k in (j + 1)..contacts.len() {
                if is_acute(contacts[i], contacts[j], contacts[k]) {
                    return ContactCase::ThreeAcute;
                }
            }
        }
    }
    // Boundary-degenerate: treat the most nearly antipodal pair as diametral.
    ContactCase::TwoDiametral
}

/// Maximal distance from the indisk center to the body (attained at a
/// vertex by convexity).
pub fn max_center_distance(poly: &ConvexPolygon, disk: &Indisk) -> f64 {
    poly.vertices()
        .iter()
        .map(|v| v.distance(disk.center))
        .fold(0.0, f64::max)
}

/// Inner parallel body: intersection of the inward edge offsets by `eps`.
pub fn erode(poly: &ConvexPolygon, eps: f64) -> Result<ConvexPolygon> {
    use crate::error::Error;
    if !(eps > 0.0) {
        return Err(Error::Domain(format!(
            "erosion distance must be positive, got {eps}"
        )));
    }
    let mut current: Vec<Point2> = poly.vertices().to_vec();
    for (n, off) in poly.halfplanes() {
        current = crate::clip::clip_halfplane(&current, n, off - eps);
        if current.len() < 3 {
            let r = chebyshev_indisk(poly).radius;
            return Err(Error::EmptyErosion { eps, inradius: r });
        }
    }
    ConvexPolygon::from_points(&current).map_err(|_| {
        let r = chebyshev_indisk(poly).radius;
        Error::EmptyErosion {
            eps,
            inradius: r,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;
    use approx::assert_relative_eq;

    #[test]
    fn equilateral_three_acute() {
        // width 1 triangle has inradius 1/3
        let tri = shapes::regular_ngon(3, 1.0 / 3.0).unwrap();
        let d = chebyshev_indisk(&tri);
        assert_relative_eq!(d.radius, 1.0 / 3.0, epsilon = 1e-12);
        assert_eq!(d.case, ContactCase::ThreeAcute);
        assert_eq!(d.contacts.len(), 3);
        for p in &d.contacts {
            assert_relative_eq!(p.distance(d.center), d.radius, epsilon = 1e-12);
        }
    }

    #[test]
    fn unit_square_two_diametral() {
        let sq = shapes::rectangle(1.0, 1.0).unwrap();
        let d = chebyshev_indisk(&sq);
        assert_relative_eq!(d.radius, 0.5, epsilon = 1e-12);
        assert_eq!(d.case, ContactCase::TwoDiametral);
        // all four edge midpoints are contacts, and a diametral pair exists
        assert_eq!(d.contacts.len(), 4);
        let has_pair = d.contacts.iter().enumerate().any(|(i, p)| {
            d.contacts[i + 1..]
                .iter()
                .any(|q| ((*p - d.center) + (*q - d.center)).norm() <= 1e-12)
        });
        assert!(has_pair);
    }

    #[test]
    fn rectangle_lex_smallest_center() {
        let rect = shapes::rectangle(3.0, 1.0).unwrap();
        let d = chebyshev_indisk(&rect);
        assert_relative_eq!(d.radius, 0.5, epsilon = 1e-12);
        assert_relative_eq!(d.center.x, 0.5, epsilon = 1e-10);
        assert_relative_eq!(d.center.y, 0.5, epsilon = 1e-10);
        assert_eq!(d.case, ContactCase::TwoDiametral);
    }

    #[test]
    fn right_triangle_345_inradius_one() {
        // oracle: r = 2|T| / P
        let tri = shapes::triangle_from_sides(3.0, 4.0, 5.0).unwrap();
        let d = chebyshev_indisk(&tri);
        let oracle = 2.0 * tri.area() / tri.perimeter();
        assert_relative_eq!(d.radius, oracle, epsilon = 1e-12);
        assert_relative_eq!(d.radius, 1.0, epsilon = 1e-12);
        assert_eq!(d.case, ContactCase::ThreeAcute);
    }

    #[test]
    fn hexagon_contacts_and_case() {
        let hex = shapes::regular_ngon(6, 1.0).unwrap();
        let d = chebyshev_indisk(&hex);
        assert_relative_eq!(d.radius, 1.0, epsilon = 1e-12);
        // six active edges; opposite pairs are diametral
        assert_eq!(d.contacts.len(), 6);
        assert_eq!(d.case, ContactCase::TwoDiametral);
        // an acute (alternating) triple still exists for tangent constructions
        assert!(d.acute_triple().is_some());
    }

    #[test]
    fn erode_square() {
        let sq = shapes::rectangle(1.0, 1.0).unwrap();
        let small = erode(&sq, 0.1).unwrap();
        assert_relative_eq!(small.area(), 0.64, epsilon = 1e-12);
        let c = small.centroid();
        assert_relative_eq!(c.x, 0.5, epsilon = 1e-12);
        assert_relative_eq!(c.y, 0.5, epsilon = 1e-12);
        assert!(matches!(
            erode(&sq, 0.5),
            Err(crate::error::Error::EmptyErosion { .. })
        ));
        assert!(erode(&sq, -1.0).is_err());
    }

    #[test]
    fn erode_equilateral_is_scaling() {
        // (E)_{-eps} = (1 - eps/r(E)) E about the incenter
        let e = shapes::regular_ngon(3, 1.0 / 3.0).unwrap();
        let eps = 0.1;
        let eroded = erode(&e, eps).unwrap();
        let lambda = 1.0 - eps / (1.0 / 3.0);
        let c = chebyshev_indisk(&e).center;
        let expected = ConvexPolygon::from_points(
            &e.vertices()
                .iter()
                .map(|&v| c + (v - c) * lambda)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_relative_eq!(eroded.area(), expected.area(), epsilon = 1e-12);
        assert!(crate::distance::hausdorff(&eroded, &expected) < 1e-12);
    }
}
