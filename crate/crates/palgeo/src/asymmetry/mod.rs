//! Asymmetries of a convex body relative to equilateral triangles of the
//! same width.
//!
//! Three functionals: the Hausdorff asymmetry (`alpha`), the Fraenkel
//! asymmetry (`fraenkel`, symmetric-difference area), and the truncated
//! asymmetry (`beta = min(alpha, 1/6)`, the disk's value).
//!
//! Both minimizations run over equilateral placements: rotation in
//! `[0, 2 pi / 3)` (the triangle's symmetry quotient) times barycenters
//! in a box of side `2 diam(K)` around the centroid. The search is
//! stratified: a translation grid per rotation sample, local
//! derivative-free refinement of every stratum that could still win, and
//! a final joint polish. The reported `certificate_gap` is a Lipschitz
//! bound on how far below the reported value the true minimum over the
//! searched box could sit.

mod optim;

use crate::error::{Error, Result};
use crate::point::{point_segment_distance, Point2};
use crate::polygon::ConvexPolygon;
use crate::triangle::{equilateral, EquilateralPlacement};
use optim::NelderMead;
use rayon::prelude::*;

const THIRD_TURN: f64 = 2.0 * std::f64::consts::PI / 3.0;

/// Search budget and tolerance of the placement optimizer.
#[derive(Clone, Copy, Debug)]
pub struct OptimizerConfig {
    /// Rotation samples over `[0, 2 pi / 3)`.
    pub theta_samples: usize,
    /// Translation grid points per axis over the placement box.
    pub translation_grid: usize,
    /// Function-evaluation budget per local refinement.
    pub refine_iterations: usize,
    /// Convergence tolerance on the objective.
    pub tol_opt: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            theta_samples: 360,
            translation_grid: 33,
            refine_iterations: 200,
            tol_opt: 1e-9,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.theta_samples == 0 || self.translation_grid == 0 || self.refine_iterations == 0 {
            return Err(Error::Domain("optimizer counts must be >= 1".into()));
        }
        Ok(())
    }
}

/// Result of an asymmetry minimization.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct AsymmetryResult {
    pub value: f64,
    pub optimal: EquilateralPlacement,
    pub evaluations: usize,
    pub converged: bool,
    /// Lipschitz grid bound on suboptimality over the searched box.
    pub certificate_gap: f64,
}

/// Normalized Hausdorff distance to the placed equilateral triangle.
/// The placement width must equal the body width.
pub fn hausdorff_objective(k: &ConvexPolygon, p: &EquilateralPlacement) -> Result<f64> {
    let w = k.minimal_width().0;
    if (p.width - w).abs() > 1e-9 * w {
        return Err(Error::WidthMismatch {
            expected: w,
            got: p.width,
        });
    }
    Ok(crate::distance::hausdorff(k, &equilateral(p)) / w)
}

/// Hausdorff asymmetry: global minimum of `d_H(K, E)/w` over equilateral
/// triangles `E` of the body's width.
pub fn alpha(k: &ConvexPolygon, cfg: &OptimizerConfig) -> AsymmetryResult {
    let obj = HausdorffObjective {
        k,
        width: k.minimal_width().0,
    };
    optimize(k, &obj, cfg)
}

/// Fraenkel asymmetry: global minimum of `|K delta E| / w^2`.
pub fn fraenkel(k: &ConvexPolygon, cfg: &OptimizerConfig) -> AsymmetryResult {
    let width = k.minimal_width().0;
    let obj = FraenkelObjective {
        k,
        width,
        area_k: k.area(),
        area_e: width * width * crate::deficit::INV_SQRT3,
    };
    optimize(k, &obj, cfg)
}

/// Truncated asymmetry `min(alpha, 1/6)`.
pub fn beta(k: &ConvexPolygon, cfg: &OptimizerConfig) -> f64 {
    alpha(k, cfg).value.min(1.0 / 6.0)
}

// ---------------------------------------------------------------------
// objectives

trait PlacementObjective: Sync {
    /// Triangle vertex offsets from the barycenter for a rotation.
    fn offsets(&self, rot: f64) -> [Point2; 3];
    /// Objective at `center`; may return early with any value exceeding
    /// `cutoff` once that is certain.
    fn eval(&self, center: Point2, offs: &[Point2; 3], cutoff: f64, ws: &mut Workspace) -> f64;
    /// Lipschitz constant per unit center translation.
    fn lipschitz_translation(&self) -> f64;
    /// Lipschitz constant per radian of rotation.
    fn lipschitz_rotation(&self) -> f64;
    fn width(&self) -> f64;
}

#[derive(Default)]
struct Workspace {
    buf_a: Vec<Point2>,
    buf_b: Vec<Point2>,
}

fn triangle_offsets(rot: f64, width: f64) -> [Point2; 3] {
    let r = 2.0 * width / 3.0;
    let base = rot + std::f64::consts::FRAC_PI_2;
    [
        Point2::unit(base) * r,
        Point2::unit(base + THIRD_TURN) * r,
        Point2::unit(base + 2.0 * THIRD_TURN) * r,
    ]
}

#[inline]
fn dist_point_triangle(p: Point2, t: &[Point2; 3]) -> f64 {
    let inside = (t[1] - t[0]).cross(p - t[0]) >= 0.0
        && (t[2] - t[1]).cross(p - t[1]) >= 0.0
        && (t[0] - t[2]).cross(p - t[2]) >= 0.0;
    if inside {
        return 0.0;
    }
    point_segment_distance(p, t[0], t[1])
        .min(point_segment_distance(p, t[1], t[2]))
        .min(point_segment_distance(p, t[2], t[0]))
}

struct HausdorffObjective<'a> {
    k: &'a ConvexPolygon,
    width: f64,
}

impl PlacementObjective for HausdorffObjective<'_> {
    fn offsets(&self, rot: f64) -> [Point2; 3] {
        triangle_offsets(rot, self.width)
    }

    fn eval(&self, center: Point2, offs: &[Point2; 3], cutoff: f64, _ws: &mut Workspace) -> f64 {
        let tri = [center + offs[0], center + offs[1], center + offs[2]];
        let limit = cutoff * self.width;
        let mut m = 0.0f64;
        for v in tri {
            m = m.max(self.k.distance_to(v));
            if m > limit {
                return m / self.width;
            }
        }
        for &v in self.k.vertices() {
            m = m.max(dist_point_triangle(v, &tri));
            if m > limit {
                return m / self.width;
            }
        }
        m / self.width
    }

    fn lipschitz_translation(&self) -> f64 {
        // Hausdorff distance is 1-Lipschitz under translating one body.
        1.0 / self.width
    }

    fn lipschitz_rotation(&self) -> f64 {
        // Rotation about the barycenter moves points by at most the
        // circumradius 2w/3.
        2.0 / 3.0
    }

    fn width(&self) -> f64 {
        self.width
    }
}

struct FraenkelObjective<'a> {
    k: &'a ConvexPolygon,
    width: f64,
    area_k: f64,
    area_e: f64,
}

impl PlacementObjective for FraenkelObjective<'_> {
    fn offsets(&self, rot: f64) -> [Point2; 3] {
        triangle_offsets(rot, self.width)
    }

    fn eval(&self, center: Point2, offs: &[Point2; 3], cutoff: f64, ws: &mut Workspace) -> f64 {
        let w2 = self.width * self.width;
        let tri = [center + offs[0], center + offs[1], center + offs[2]];
        // intersection area needed to beat the cutoff
        let need = 0.5 * (self.area_k + self.area_e - cutoff * w2);

        ws.buf_a.clear();
        ws.buf_a.extend_from_slice(self.k.vertices());
        for i in 0..3 {
            let a = tri[i];
            let b = tri[(i + 1) % 3];
            // outward normal of the CCW triangle edge
            let n = Point2::new(b.y - a.y, a.x - b.x);
            let off = n.dot(a);
            crate::clip::clip_halfplane_into(&ws.buf_a, n, off, &mut ws.buf_b);
            std::mem::swap(&mut ws.buf_a, &mut ws.buf_b);
            if ws.buf_a.len() < 3 {
                return (self.area_k + self.area_e) / w2;
            }
            // the running area only shrinks with further clipping
            let upper = crate::clip::shoelace(&ws.buf_a);
            if upper < need {
                return (self.area_k + self.area_e - 2.0 * upper) / w2;
            }
        }
        let inter = crate::clip::shoelace(&ws.buf_a);
        (self.area_k + self.area_e - 2.0 * inter).max(0.0) / w2
    }

    fn lipschitz_translation(&self) -> f64 {
        // |E delta E'| <= P(E) |shift|, P(E) = 2 sqrt3 w
        2.0 * 3f64.sqrt() / self.width
    }

    fn lipschitz_rotation(&self) -> f64 {
        // sweep bound P(E) * circumradius = (4 sqrt3 / 3) w^2
        4.0 * 3f64.sqrt() / 3.0
    }

    fn width(&self) -> f64 {
        self.width
    }
}

// ---------------------------------------------------------------------
// stratified search

struct Stratum {
    rot: f64,
    grid_min: f64,
    best_center: Point2,
    evals: usize,
}

fn optimize(k: &ConvexPolygon, obj: &dyn PlacementObjective, cfg: &OptimizerConfig) -> AsymmetryResult {
    cfg.validate().expect("optimizer config");
    let centroid = k.centroid();
    let diam = k.diameter();
    let half = diam;
    let g = cfg.translation_grid;
    let step = if g > 1 { 2.0 * half / (g - 1) as f64 } else { 0.0 };
    let dtheta = THIRD_TURN / cfg.theta_samples as f64;

    // grid scan per rotation stratum
    let strata: Vec<Stratum> = (0..cfg.theta_samples)
        .into_par_iter()
        .map(|i| {
            let rot = i as f64 * dtheta;
            let offs = obj.offsets(rot);
            let mut ws = Workspace::default();
            let mut best = f64::MAX;
            let mut best_center = centroid;
            let mut evals = 0usize;
            for ix in 0..g {
                for iy in 0..g {
                    let c = if g > 1 {
                        Point2::new(
                            centroid.x - half + ix as f64 * step,
                            centroid.y - half + iy as f64 * step,
                        )
                    } else {
                        centroid
                    };
                    let v = obj.eval(c, &offs, best, &mut ws);
                    evals += 1;
                    if v < best {
                        best = v;
                        best_center = c;
                    }
                }
            }
            Stratum {
                rot,
                grid_min: best,
                best_center,
                evals,
            }
        })
        .collect();

    let mut evaluations: usize = strata.iter().map(|s| s.evals).sum();
    let grid_global = strata
        .iter()
        .map(|s| s.grid_min)
        .fold(f64::MAX, f64::min);

    let l_c = obj.lipschitz_translation();
    let l_rot = obj.lipschitz_rotation();
    let cell_radius = if g > 1 {
        step * std::f64::consts::SQRT_2 / 2.0
    } else {
        half * std::f64::consts::SQRT_2
    };

    // refine every stratum that could still contain the global minimum
    let refine_threshold = grid_global + l_c * cell_radius;
    let nm = NelderMead {
        max_evals: cfg.refine_iterations,
        ftol: cfg.tol_opt,
    };
    let init_scale = if step > 0.0 { step } else { diam / 8.0 };
    let refined: Vec<(usize, f64, Point2)> = strata
        .par_iter()
        .enumerate()
        .filter(|(_, s)| s.grid_min <= refine_threshold)
        .map(|(i, s)| {
            let offs = obj.offsets(s.rot);
            let mut ws = Workspace::default();
            let out = nm.minimize(
                |x: &[f64; 2]| {
                    obj.eval(Point2::new(x[0], x[1]), &offs, f64::MAX, &mut ws)
                },
                [s.best_center.x, s.best_center.y],
                [init_scale, init_scale],
            );
            (i, out.value.min(s.grid_min), if out.value < s.grid_min {
                Point2::new(out.point[0], out.point[1])
            } else {
                s.best_center
            })
        })
        .collect();
    // winner with lowest-rotation tie-break (stable because strata are indexed)
    let mut win_idx = usize::MAX;
    let mut win_val = f64::MAX;
    let mut win_center = centroid;
    for &(i, v, c) in &refined {
        if v < win_val || (v == win_val && i < win_idx) {
            win_idx = i;
            win_val = v;
            win_center = c;
        }
    }
    evaluations += refined.len() * cfg.refine_iterations;

    // joint polish over (x, y, rotation)
    let mut ws = Workspace::default();
    let polish = nm.minimize(
        |x: &[f64; 3]| {
            let offs = obj.offsets(x[2]);
            obj.eval(Point2::new(x[0], x[1]), &offs, f64::MAX, &mut ws)
        },
        [win_center.x, win_center.y, strata[win_idx].rot],
        [init_scale / 4.0, init_scale / 4.0, dtheta / 2.0],
    );
    evaluations += polish.evals;
    let (value, center, rot, converged) = if polish.value < win_val {
        (
            polish.value,
            Point2::new(polish.point[0], polish.point[1]),
            polish.point[2],
            polish.converged,
        )
    } else {
        (win_val, win_center, strata[win_idx].rot, polish.converged)
    };

    // Lipschitz lower bound over the searched box
    let lower = grid_global - l_c * cell_radius - l_rot * dtheta / 2.0;
    let certificate_gap = (value - lower).max(0.0);

    AsymmetryResult {
        value,
        optimal: EquilateralPlacement::new(center, rot, obj.width()),
        evaluations,
        converged,
        certificate_gap,
    }
}
