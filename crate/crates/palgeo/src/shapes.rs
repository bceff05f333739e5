//! Deterministic shape generators and polygon file I/O.

use crate::error::{Error, Result};
use crate::point::Point2;
use crate::polygon::ConvexPolygon;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;

/// Convex hull of `n` points drawn uniformly in a disk of radius `scale`.
///
/// The generator is counter-based (ChaCha8 seeded from `seed`), so the
/// same arguments always produce bit-identical polygons. If a draw is
/// degenerate the sampling continues deterministically until a valid
/// hull appears.
pub fn random_convex(n: usize, seed: u64, scale: f64) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::Domain(format!("need n >= 3 points, got {n}")));
    }
    if !(scale > 0.0) {
        return Err(Error::Domain(format!("scale must be positive, got {scale}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pts: Vec<Point2> = (0..n)
            .map(|_| {
                let r = scale * rng.gen::<f64>().sqrt();
                let phi = std::f64::consts::TAU * rng.gen::<f64>();
                Point2::new(r * phi.cos(), r * phi.sin())
            })
            .collect();
        if let Ok(poly) = ConvexPolygon::from_points(&pts) {
            return Ok(poly);
        }
    }
}

/// Regular `n`-gon of the given inradius with one edge midpoint on the
/// positive x-axis.
pub fn regular_ngon(n: usize, inradius: f64) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::Domain(format!("need n >= 3 sides, got {n}")));
    }
    if !(inradius > 0.0) {
        return Err(Error::Domain(format!(
            "inradius must be positive, got {inradius}"
        )));
    }
    let half = std::f64::consts::PI / n as f64;
    let circum = inradius / half.cos();
    let pts: Vec<Point2> = (0..n)
        .map(|k| Point2::unit(half * (2 * k as i64 - 1) as f64) * circum)
        .collect();
    ConvexPolygon::from_points(&pts)
}

/// The isosceles sharpness family: vertices `(0, 1)` and
/// `(+-(1/sqrt3 + eps), 0)`, valid for `0 < eps <= 0.2`.
pub fn isosceles_family(eps: f64) -> Result<ConvexPolygon> {
    if !(eps > 0.0 && eps <= 0.2) {
        return Err(Error::Domain(format!(
            "family parameter must lie in (0, 0.2], got {eps}"
        )));
    }
    let b = 1.0 / 3f64.sqrt() + eps;
    ConvexPolygon::from_points(&[
        Point2::new(0.0, 1.0),
        Point2::new(-b, 0.0),
        Point2::new(b, 0.0),
    ])
}

/// Axis-aligned `w x h` rectangle with a corner at the origin.
pub fn rectangle(w: f64, h: f64) -> Result<ConvexPolygon> {
    if !(w > 0.0 && h > 0.0) {
        return Err(Error::Domain(format!(
            "rectangle sides must be positive, got {w} x {h}"
        )));
    }
    ConvexPolygon::from_points(&[
        Point2::new(0.0, 0.0),
        Point2::new(w, 0.0),
        Point2::new(w, h),
        Point2::new(0.0, h),
    ])
}

/// Triangle with the given side lengths (strict triangle inequality),
/// placed with the side `c` on the x-axis.
pub fn triangle_from_sides(a: f64, b: f64, c: f64) -> Result<ConvexPolygon> {
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::Domain("side lengths must be positive".into()));
    }
    if a + b <= c || b + c <= a || c + a <= b {
        return Err(Error::Domain(format!(
            "sides {a}, {b}, {c} violate the strict triangle inequality"
        )));
    }
    let x = (b * b + c * c - a * a) / (2.0 * c);
    let y_sq = b * b - x * x;
    if y_sq <= 0.0 {
        return Err(Error::Domain(format!(
            "sides {a}, {b}, {c} give a degenerate triangle"
        )));
    }
    ConvexPolygon::from_points(&[
        Point2::new(0.0, 0.0),
        Point2::new(c, 0.0),
        Point2::new(x, y_sq.sqrt()),
    ])
}

/// Loads a polygon from a JSON file `{"vertices": [[x, y], ...]}`.
pub fn from_file(path: impl AsRef<Path>) -> Result<ConvexPolygon> {
    let text = std::fs::read_to_string(path)?;
    let poly: ConvexPolygon = serde_json::from_str(&text)?;
    Ok(poly)
}

/// Writes a polygon in canonical vertex order.
pub fn to_file(poly: &ConvexPolygon, path: impl AsRef<Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(poly)?;
    std::fs::write(path, text)?;
    Ok(())
}

/// Shape description used by corpus builders and the command line.
#[derive(Clone, Debug)]
pub enum ShapeSpec {
    RandomConvex { n: usize, seed: u64, scale: f64 },
    RegularNgon { n: usize, inradius: f64 },
    Rectangle { w: f64, h: f64 },
    Triangle { a: f64, b: f64, c: f64 },
    IsoscelesFamily { eps: f64 },
    FromFile { path: std::path::PathBuf },
}

impl ShapeSpec {
    pub fn build(&self) -> Result<ConvexPolygon> {
        match self {
            ShapeSpec::RandomConvex { n, seed, scale } => random_convex(*n, *seed, *scale),
            ShapeSpec::RegularNgon { n, inradius } => regular_ngon(*n, *inradius),
            ShapeSpec::Rectangle { w, h } => rectangle(*w, *h),
            ShapeSpec::Triangle { a, b, c } => triangle_from_sides(*a, *b, *c),
            ShapeSpec::IsoscelesFamily { eps } => isosceles_family(*eps),
            ShapeSpec::FromFile { path } => from_file(path),
        }
    }
}

/// Named corpora for verification runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    /// Random hulls, 8..=64 points per body.
    Random,
    /// Regular n-gons, n cycling through 3..=64.
    RegularNgons,
    /// Rectangles with aspect ratio log-uniform in [1, 100].
    Rectangles,
    /// Triangles with random angles.
    Triangles,
    /// The isosceles family, eps log-spaced in [1e-4, 0.2].
    Isosceles,
}

impl CorpusKind {
    pub fn parse(s: &str) -> Option<CorpusKind> {
        match s {
            "random" => Some(CorpusKind::Random),
            "ngon" | "ngons" => Some(CorpusKind::RegularNgons),
            "rectangles" | "rect" => Some(CorpusKind::Rectangles),
            "triangles" | "tri" => Some(CorpusKind::Triangles),
            "isosceles" | "keps" => Some(CorpusKind::Isosceles),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CorpusKind::Random => "random",
            CorpusKind::RegularNgons => "ngon",
            CorpusKind::Rectangles => "rectangles",
            CorpusKind::Triangles => "triangles",
            CorpusKind::Isosceles => "isosceles",
        }
    }
}

/// Builds `n` bodies of the given kind, deterministically from `seed`.
pub fn corpus(kind: CorpusKind, n: usize, seed: u64) -> Vec<(String, ConvexPolygon)> {
    let mut out = Vec::with_capacity(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n {
        let id = format!("{}-{i:04}", kind.name());
        let poly = match kind {
            CorpusKind::Random => {
                let pts = rng.gen_range(8..=64);
                let body_seed = rng.gen::<u64>();
                random_convex(pts, body_seed, 1.0).expect("random hull")
            }
            CorpusKind::RegularNgons => {
                let sides = 3 + (i % 62);
                regular_ngon(sides, 1.0).expect("regular ngon")
            }
            CorpusKind::Rectangles => {
                let aspect = 100f64.powf(rng.gen::<f64>());
                rectangle(aspect, 1.0).expect("rectangle")
            }
            CorpusKind::Triangles => loop {
                let a1 = rng.gen_range(0.15..std::f64::consts::PI - 0.3);
                let a2 = rng.gen_range(0.15..(std::f64::consts::PI - a1 - 0.15).max(0.16));
                let a3 = std::f64::consts::PI - a1 - a2;
                if a3 < 0.15 {
                    continue;
                }
                // sine rule with unit circumdiameter
                if let Ok(t) = triangle_from_sides(a1.sin(), a2.sin(), a3.sin()) {
                    break t;
                }
            },
            CorpusKind::Isosceles => {
                let t = if n == 1 { 0.0 } else { i as f64 / (n - 1) as f64 };
                let eps = 0.2 * (1e-4f64 / 0.2).powf(t);
                isosceles_family(eps).expect("family member")
            }
        };
        out.push((id, poly));
    }
    out
}
