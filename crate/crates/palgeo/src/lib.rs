//! Planar convex geometry built around the minimal width: shape
//! functionals (width, inradius, Hausdorff distance, equilateral
//! asymmetries), sharp lower bounds for the area deficit
//! `|K|/w^2 - 1/sqrt3`, and inequality suites that verify the bounds on
//! generated and user-supplied convex bodies.
//!
//! The `examples/` directory demonstrates each capability; the `palgeo`
//! binary exposes `analyze`, `verify`, `sharpness`, and `scan`
//! subcommands over the same library calls.

pub mod asymmetry;
pub mod clip;
pub mod deficit;
pub mod distance;
pub mod error;
pub mod indisk;
pub mod point;
pub mod polygon;
pub mod report;
pub mod shapes;
pub mod triangle;
pub mod verify;

pub use asymmetry::{alpha, beta, fraenkel, AsymmetryResult, OptimizerConfig};
pub use clip::{intersection, symmetric_difference_area};
pub use deficit::{profile, DeficitProfile};
pub use distance::{hausdorff, neighborhood_contains, point_to_body_distance};
pub use error::{Error, Result};
pub use indisk::{chebyshev_indisk, erode, ContactCase, Indisk};
pub use point::Point2;
pub use polygon::{ConvexPolygon, Tolerances};
pub use triangle::{equilateral, triangle_metrics, EquilateralPlacement, TriangleMetrics};
