//! Convex polygons in canonical form.
//!
//! A [`ConvexPolygon`] stores its vertices in strictly counterclockwise
//! order with no three consecutive vertices collinear, starting from the
//! lexicographically smallest vertex (lowest `y`, then lowest `x`). All
//! constructors go through the convex hull, so equality of canonical
//! vertex lists is meaningful.

use crate::error::{Error, Result};
use crate::point::{lex_xy, lex_yx, point_segment_distance, Point2};
use serde::{Deserialize, Serialize};

/// Geometric and optimizer tolerances.
///
/// `geom` is relative to the shape diameter and guards predicates
/// (collinearity, constraint activity); `opt` is the convergence
/// tolerance of derivative-free searches.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub geom: f64,
    pub opt: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        // Double precision leaves ~1e-16; a 1e3 safety factor on predicates
        // and a looser optimizer tolerance.
        Tolerances {
            geom: 1e-12,
            opt: 1e-9,
        }
    }
}

/// A convex polygon in canonical counterclockwise form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonData", into = "PolygonData")]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

/// Wire format: `{"vertices": [[x, y], ...]}` in any order; canonical on load.
#[derive(Serialize, Deserialize)]
struct PolygonData {
    vertices: Vec<[f64; 2]>,
}

impl TryFrom<PolygonData> for ConvexPolygon {
    type Error = Error;
    fn try_from(data: PolygonData) -> Result<Self> {
        let pts: Vec<Point2> = data
            .vertices
            .iter()
            .map(|&[x, y]| Point2::new(x, y))
            .collect();
        ConvexPolygon::from_points(&pts)
    }
}

impl From<ConvexPolygon> for PolygonData {
    fn from(poly: ConvexPolygon) -> Self {
        PolygonData {
            vertices: poly.vertices.iter().map(|p| [p.x, p.y]).collect(),
        }
    }
}

impl ConvexPolygon {
    /// Builds the canonical convex hull of `points` with default tolerances.
    ///
    /// Collinear interior points are dropped; the starting vertex is the
    /// lexicographic minimum by `(y, x)`. Fails with `DegenerateInput` when
    /// the hull has fewer than three vertices or vanishing area.
    pub fn from_points(points: &[Point2]) -> Result<Self> {
        Self::from_points_with(points, &Tolerances::default())
    }

    pub fn from_points_with(points: &[Point2], tol: &Tolerances) -> Result<Self> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::DegenerateInput("non-finite coordinate".into()));
        }
        if points.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "need at least 3 points, got {}",
                points.len()
            )));
        }

        let mut pts = points.to_vec();
        pts.sort_by(lex_xy);
        pts.dedup_by(|a, b| a == b);

        // Scale for relative predicates: coordinate spread of the input.
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for p in &pts {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
        let scale = (max_x - min_x).max(max_y - min_y);
        let cross_tol = tol.geom * scale * scale;

        let hull = monotone_chain(&pts, cross_tol);
        if hull.len() < 3 {
            return Err(Error::DegenerateInput(
                "hull has fewer than 3 vertices".into(),
            ));
        }
        let poly = ConvexPolygon {
            vertices: canonical_start(hull),
        };
        if poly.area() <= cross_tol {
            return Err(Error::DegenerateInput("hull has zero area".into()));
        }
        Ok(poly)
    }

    /// The canonical counterclockwise vertex list.
    #[inline]
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Iterator over directed edges `(v_i, v_{i+1})`.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Shoelace area; strictly positive for canonical polygons.
    pub fn area(&self) -> f64 {
        0.5 * self
            .edges()
            .map(|(a, b)| a.cross(b))
            .sum::<f64>()
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.distance(b)).sum()
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point2 {
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut a = 0.0;
        for (p, q) in self.edges() {
            let w = p.cross(q);
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
            a += w;
        }
        Point2::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    /// Length of the orthogonal projection onto the direction `theta`.
    pub fn directional_width(&self, theta: f64) -> f64 {
        let u = Point2::unit(theta);
        let mut lo = f64::MAX;
        let mut hi = f64::MIN;
        for v in &self.vertices {
            let t = v.dot(u);
            lo = lo.min(t);
            hi = hi.max(t);
        }
        hi - lo
    }

    /// Minimal width and the projection direction attaining it.
    ///
    /// The minimum over directions is attained with one supporting line
    /// along an edge and the other through a vertex, so it suffices to
    /// scan edges and take the farthest vertex from each edge line.
    /// Ties are broken toward the smallest direction angle in `[0, pi)`.
    pub fn minimal_width(&self) -> (f64, f64) {
        let n = self.vertices.len();
        let mut best = f64::MAX;
        let mut best_theta = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let d = (b - a).normalized();
            let inward = d.perp();
            let mut w = 0.0f64;
            for v in &self.vertices {
                w = w.max(inward.dot(*v - a));
            }
            let mut theta = inward.y.atan2(inward.x);
            if theta < 0.0 {
                theta += std::f64::consts::PI;
            }
            if theta >= std::f64::consts::PI {
                theta -= std::f64::consts::PI;
            }
            if w < best || (w == best && theta < best_theta) {
                best = w;
                best_theta = theta;
            }
        }
        (best, best_theta)
    }

    /// Convenience accessor for the minimal-width value.
    #[inline]
    pub fn width(&self) -> f64 {
        self.minimal_width().0
    }

    /// Maximal pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let n = self.vertices.len();
        let mut best = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                best = best.max(self.vertices[i].distance(self.vertices[j]));
            }
        }
        best
    }

    /// True when `p` lies inside or on the boundary (within `slack`).
    pub fn contains(&self, p: Point2, slack: f64) -> bool {
        self.edges().all(|(a, b)| (b - a).cross(p - a) >= -slack)
    }

    /// Euclidean distance from `p` to the body; zero inside.
    pub fn distance_to(&self, p: Point2) -> f64 {
        if self.contains(p, 0.0) {
            return 0.0;
        }
        self.edges()
            .map(|(a, b)| point_segment_distance(p, a, b))
            .fold(f64::MAX, f64::min)
    }

    pub fn translated(&self, t: Point2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: canonical_start(self.vertices.iter().map(|&v| v + t).collect()),
        }
    }

    /// Rotation about the origin; the result is re-canonicalized.
    pub fn rotated(&self, theta: f64) -> ConvexPolygon {
        ConvexPolygon {
            vertices: canonical_start(self.vertices.iter().map(|v| v.rotated(theta)).collect()),
        }
    }

    /// Scaling about the origin by `s > 0`.
    pub fn scaled(&self, s: f64) -> ConvexPolygon {
        ConvexPolygon {
            vertices: canonical_start(self.vertices.iter().map(|&v| v * s).collect()),
        }
    }

    /// Outward unit normals and offsets of the edge lines: `n_i . x <= c_i`.
    pub(crate) fn halfplanes(&self) -> Vec<(Point2, f64)> {
        self.edges()
            .map(|(a, b)| {
                let n = Point2::new(b.y - a.y, a.x - b.x).normalized();
                (n, n.dot(a))
            })
            .collect()
    }
}

/// Andrew's monotone chain; input sorted by `(x, y)` and deduplicated.
/// Pops within `cross_tol` so collinear points are removed.
fn monotone_chain(pts: &[Point2], cross_tol: f64) -> Vec<Point2> {
    let cross = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts {
        while lower.len() >= 2
            && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= cross_tol
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= cross_tol
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Rotates the cyclic list so it starts at the `(y, x)`-minimal vertex.
fn canonical_start(vertices: Vec<Point2>) -> Vec<Point2> {
    let start = vertices
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| lex_yx(a, b))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = Vec::with_capacity(vertices.len());
    out.extend_from_slice(&vertices[start..]);
    out.extend_from_slice(&vertices[..start]);
    out
}
