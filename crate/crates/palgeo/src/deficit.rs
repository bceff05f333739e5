//! Scalar deficit functions and per-body deficit profiles.
//!
//! The central quantities: the area deficit `|K|/w^2 - 1/sqrt3`, the
//! inradius deficit `eta = r/w - 1/3`, and the lower-bound functions
//! `phi` (of `r/w`) and `psi` (of `r/w` and `m/w`, where `m` is the
//! maximal distance from the indisk center to the body).

use crate::error::{Error, Result};
use crate::indisk::{chebyshev_indisk, max_center_distance};
use crate::point::Point2;
use crate::polygon::ConvexPolygon;

/// Tolerated floating drift past domain boundaries before erroring.
const DRIFT: f64 = 1e-12;

pub const INV_SQRT3: f64 = 0.5773502691896257645091487805019574556;

fn acos_clamped(v: f64) -> Result<f64> {
    if v > 1.0 + DRIFT || v < -1.0 - DRIFT {
        return Err(Error::Domain(format!("arccos argument {v} out of range")));
    }
    Ok(v.clamp(-1.0, 1.0).acos())
}

fn sqrt_clamped(v: f64) -> Result<f64> {
    if v < -DRIFT {
        return Err(Error::Domain(format!("sqrt argument {v} negative")));
    }
    Ok(v.max(0.0).sqrt())
}

/// `phi(x) = 3 x^2 (pi/3 - arccos(x/(1-x))) + 3 x sqrt(1-2x)` on
/// `[1/3, 1/2]`; strictly increasing, `phi(1/3) = 1/sqrt3`,
/// `phi(1/2) = pi/4`.
pub fn phi(x: f64) -> Result<f64> {
    if x < 1.0 / 3.0 - DRIFT || x > 0.5 + DRIFT {
        return Err(Error::Domain(format!("phi argument {x} outside [1/3, 1/2]")));
    }
    let x = x.clamp(1.0 / 3.0, 0.5);
    let a = acos_clamped(x / (1.0 - x))?;
    Ok(3.0 * x * x * (std::f64::consts::FRAC_PI_3 - a) + 3.0 * x * sqrt_clamped(1.0 - 2.0 * x)?)
}

/// The two addends of `phi'`: `f(x) = 6x (pi/3 - arccos(x/(1-x)))`
/// (increasing) and `g(x) = 3 (1-2x)^{3/2} / (1-x)` (decreasing).
pub fn phi_prime_parts(x: f64) -> Result<(f64, f64)> {
    if x < 1.0 / 3.0 - DRIFT || x > 0.5 + DRIFT {
        return Err(Error::Domain(format!(
            "phi' argument {x} outside [1/3, 1/2]"
        )));
    }
    let x = x.clamp(1.0 / 3.0, 0.5);
    let a = acos_clamped(x / (1.0 - x))?;
    let f = 6.0 * x * (std::f64::consts::FRAC_PI_3 - a);
    let g = 3.0 * (1.0 - 2.0 * x).max(0.0).powf(1.5) / (1.0 - x);
    Ok((f, g))
}

pub fn phi_prime(x: f64) -> Result<f64> {
    let (f, g) = phi_prime_parts(x)?;
    Ok(f + g)
}

/// `psi(x, y)` on `{1/3 <= x <= 1/2, y >= 1-x}`; increasing in both
/// variables, `psi(x, 1-x) = phi(x)`, and `psi >= 1/sqrt3`.
pub fn psi(x: f64, y: f64) -> Result<f64> {
    if x < 1.0 / 3.0 - DRIFT || x > 0.5 + DRIFT {
        return Err(Error::Domain(format!("psi x={x} outside [1/3, 1/2]")));
    }
    let x = x.clamp(1.0 / 3.0, 0.5);
    if y < 1.0 - x - DRIFT {
        return Err(Error::Domain(format!("psi y={y} below 1-x={}", 1.0 - x)));
    }
    let y = y.max(1.0 - x).max(x);
    let a1 = acos_clamped(x / (1.0 - x))?;
    let a2 = acos_clamped(x / y)?;
    Ok(std::f64::consts::PI * x * x + 2.0 * x * sqrt_clamped(1.0 - 2.0 * x)?
        - 2.0 * x * x * a1
        + x * sqrt_clamped(y * y - x * x)?
        - x * x * a2)
}

/// Area of the convex hull of a radius-`r` disk and an external point at
/// distance `d`, minus the disk: `r sqrt(d^2 - r^2) - r^2 arccos(r/d)`.
pub fn curved_triangle_area(r: f64, d: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    if d < r * (1.0 - DRIFT) {
        return Err(Error::Domain(format!(
            "apex distance {d} smaller than radius {r}"
        )));
    }
    let d = d.max(r);
    Ok(r * sqrt_clamped(d * d - r * r)? - r * r * acos_clamped(r / d)?)
}

/// Maximal distance from the indisk center to the body; attained at a
/// vertex by convexity, and at least `w - r`.
pub fn m_of(k: &ConvexPolygon, disk: &crate::indisk::Indisk) -> f64 {
    max_center_distance(k, disk)
}

/// Per-body record of the width, inradius, deficit quantities, and the
/// two lower bounds.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct DeficitProfile {
    pub width: f64,
    pub inradius: f64,
    /// Maximal distance from the indisk center used (recorded below).
    pub m: f64,
    pub area: f64,
    /// `area / width^2 - 1/sqrt3`, nonnegative by the Pal inequality.
    pub pal_deficit: f64,
    /// `inradius / width - 1/3`, in `[0, 1/6]`.
    pub eta: f64,
    pub phi_bound: f64,
    pub psi_bound: f64,
    /// Chebyshev center the profile was computed from.
    pub indisk_center: Point2,
}

/// Computes the full deficit profile of a body.
pub fn profile(k: &ConvexPolygon) -> Result<DeficitProfile> {
    let disk = chebyshev_indisk(k);
    let width = k.minimal_width().0;
    let area = k.area();
    let m = m_of(k, &disk);
    let x = (disk.radius / width).clamp(1.0 / 3.0, 0.5);
    let y = (m / width).max(1.0 - x);
    Ok(DeficitProfile {
        width,
        inradius: disk.radius,
        m,
        area,
        pal_deficit: area / (width * width) - INV_SQRT3,
        eta: disk.radius / width - 1.0 / 3.0,
        phi_bound: phi(x)?,
        psi_bound: psi(x, y)?,
        indisk_center: disk.center,
    })
}

/// Refined lower bound for `eta` from the circumscribed triangle:
/// `r (wT - w) / (w wT) + (s1 - s3) / (3 (s1 + s2 + s3))`.
pub fn refined_eta_lower_bound(k: &ConvexPolygon) -> Result<f64> {
    let disk = chebyshev_indisk(k);
    let t = crate::triangle::circumscribed_triangle(k, &disk)?;
    let m = crate::triangle::triangle_metrics(&t)?;
    let w = k.minimal_width().0;
    let wt = m.heights[0];
    Ok(disk.radius * (wt - w) / (w * wt)
        + (m.sides[0] - m.sides[2]) / (3.0 * (m.sides[0] + m.sides[1] + m.sides[2])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;
    use approx::assert_relative_eq;

    // frozen via 60-digit evaluation of the closed form
    const PHI_AT_04: f64 = 0.635598177301709922519492606543539999560297693099660279687315;
    const PSI_THIRD_ONE: f64 = 0.678751874859974194297506157141813460375593042460510870785304;

    #[test]
    fn phi_endpoints_and_midpoint() {
        assert_relative_eq!(phi(1.0 / 3.0).unwrap(), INV_SQRT3, epsilon = 1e-15);
        assert_relative_eq!(
            phi(0.5).unwrap(),
            std::f64::consts::FRAC_PI_4,
            epsilon = 1e-15
        );
        assert_relative_eq!(phi(0.4).unwrap(), PHI_AT_04, epsilon = 1e-15);
        assert!(phi(0.2).is_err());
        assert!(phi(0.6).is_err());
    }

    #[test]
    fn phi_prime_limits_and_split() {
        // x -> 1/3+: f -> 0, g -> sqrt(3)/2
        let (f, g) = phi_prime_parts(1.0 / 3.0).unwrap();
        assert_relative_eq!(f, 0.0, epsilon = 1e-12);
        assert_relative_eq!(g, 3f64.sqrt() / 2.0, epsilon = 1e-12);
        // g(2/5) = 1/sqrt5 and it is the smaller addend there
        let (f, g) = phi_prime_parts(0.4).unwrap();
        assert_relative_eq!(g, 1.0 / 5f64.sqrt(), epsilon = 1e-15);
        assert!(g < f);
    }

    #[test]
    fn psi_matches_phi_on_lower_edge() {
        for i in 0..50 {
            let x = 1.0 / 3.0 + (0.5 - 1.0 / 3.0) * (i as f64) / 49.0;
            assert_relative_eq!(
                psi(x, 1.0 - x).unwrap(),
                phi(x).unwrap(),
                epsilon = 1e-13
            );
        }
        assert_relative_eq!(
            psi(0.5, 0.5).unwrap(),
            std::f64::consts::FRAC_PI_4,
            epsilon = 1e-15
        );
        assert_relative_eq!(psi(1.0 / 3.0, 1.0).unwrap(), PSI_THIRD_ONE, epsilon = 1e-15);
        assert!(psi(1.0 / 3.0, 1.0).unwrap() > psi(1.0 / 3.0, 2.0 / 3.0).unwrap());
        assert!(psi(0.4, 0.4).is_err());
    }

    #[test]
    fn curved_triangle_closed_form() {
        assert_relative_eq!(curved_triangle_area(1.0, 1.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(
            curved_triangle_area(1.0, 2.0).unwrap(),
            3f64.sqrt() - std::f64::consts::FRAC_PI_3,
            epsilon = 1e-15
        );
        assert!(curved_triangle_area(1.0, 0.5).is_err());
    }

    #[test]
    fn curved_triangle_polygonal_oracle() {
        // hull of a 4096-gon disk and one external point, minus the disk
        let r = 1.0;
        let d = 2.0;
        let n = 4096;
        let mut pts: Vec<Point2> = (0..n)
            .map(|k| Point2::unit(std::f64::consts::TAU * k as f64 / n as f64) * r)
            .collect();
        pts.push(Point2::new(d, 0.0));
        let hull = ConvexPolygon::from_points(&pts).unwrap();
        let disk_area = shapes::regular_ngon(n, r * (std::f64::consts::PI / n as f64).cos())
            .unwrap()
            .area();
        let oracle = hull.area() - disk_area;
        assert!(
            (oracle - curved_triangle_area(r, d).unwrap()).abs() < 1e-4,
            "oracle {oracle}"
        );
    }

    #[test]
    fn reconstruction_identity() {
        // |D| + 3 curved(r, w - r) = w^2 phi(r / w)
        let w = 1.0;
        for r in [0.34, 0.4, 0.45, 0.49] {
            let lhs = std::f64::consts::PI * r * r
                + 3.0 * curved_triangle_area(r, w - r).unwrap();
            let rhs = w * w * phi(r / w).unwrap();
            assert_relative_eq!(lhs, rhs, epsilon = 1e-13);
        }
    }

    #[test]
    fn profile_equilateral() {
        let e = shapes::regular_ngon(3, 1.0 / 3.0).unwrap();
        let p = profile(&e).unwrap();
        assert!(p.pal_deficit.abs() < 1e-11);
        assert!(p.eta.abs() < 1e-11);
        assert_relative_eq!(p.phi_bound, INV_SQRT3, epsilon = 1e-11);
        // m = circumradius = 2w/3 from the incenter
        assert_relative_eq!(p.m, 2.0 / 3.0, epsilon = 1e-10);
    }

    #[test]
    fn profile_disk_standin() {
        let d = shapes::regular_ngon(256, 0.5).unwrap();
        let p = profile(&d).unwrap();
        assert!((p.eta - 1.0 / 6.0).abs() < 1e-3);
        assert!((p.phi_bound - std::f64::consts::FRAC_PI_4).abs() < 1e-3);
        assert!((p.pal_deficit - (std::f64::consts::FRAC_PI_4 - INV_SQRT3)).abs() < 1e-3);
    }

    #[test]
    fn profile_family_deficit_exact() {
        for eps in [0.1, 0.01] {
            let k = shapes::isosceles_family(eps).unwrap();
            let p = profile(&k).unwrap();
            assert_relative_eq!(p.pal_deficit, eps, epsilon = 1e-12);
            // eta ~ eps / (2 sqrt 3) to first order
            let expect = eps / (2.0 * 3f64.sqrt());
            assert!((p.eta - expect).abs() < 0.15 * expect, "eta {}", p.eta);
        }
    }

    #[test]
    fn m_of_square() {
        let sq = shapes::rectangle(1.0, 1.0).unwrap();
        let disk = chebyshev_indisk(&sq);
        assert_relative_eq!(
            m_of(&sq, &disk),
            std::f64::consts::SQRT_2 / 2.0,
            epsilon = 1e-10
        );
    }

    #[test]
    fn refined_bound_cases() {
        let e = shapes::regular_ngon(3, 1.0 / 3.0).unwrap();
        let b = refined_eta_lower_bound(&e).unwrap();
        assert!(b.abs() < 1e-10);

        let k = shapes::isosceles_family(0.1).unwrap();
        let b = refined_eta_lower_bound(&k).unwrap();
        let p = profile(&k).unwrap();
        assert!(b > 0.0);
        assert!(b <= p.eta + 1e-12, "bound {b} eta {}", p.eta);

        let sq = shapes::rectangle(1.0, 1.0).unwrap();
        assert!(refined_eta_lower_bound(&sq).is_err());
    }
}
