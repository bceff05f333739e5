//! Explicit constants of the quantitative inequalities and their
//! assembly from the proof parameters.

use crate::deficit::phi;

/// Deficit vs inradius gap: `deficit >= C1 * eta`.
pub fn c1() -> f64 {
    1.0 / 5f64.sqrt()
}

/// Deficit vs Hausdorff asymmetry: `deficit >= C2 * alpha`.
pub fn c2() -> f64 {
    1.0 / (25.0 * 5f64.sqrt())
}

/// Deficit vs Fraenkel asymmetry: `deficit >= C3 * A`.
pub fn c3() -> f64 {
    1.0 / (25.0 * (3.0 * 3f64.sqrt() + 2.0) * 5f64.sqrt())
}

/// Inradius gap vs truncated asymmetry: `eta >= C4 * beta`.
pub fn c4() -> f64 {
    1.0 / 25.0
}

/// Factor relating the asymmetries: `A <= (3 sqrt3 + 2) alpha`.
pub fn equivalence_upper() -> f64 {
    3.0 * 3f64.sqrt() + 2.0
}

/// Hausdorff asymmetry of every disk.
pub const DISK_ALPHA: f64 = 1.0 / 6.0;

/// First assembly coefficient in the truncated-asymmetry proof.
pub fn b1(delta: f64) -> f64 {
    (1.0 + delta).powi(2) * (6.0 * 3f64.sqrt() + 32.0 * (1.0 + delta) / 3.0) / (1.0 - 2.0 * delta)
}

/// Second assembly coefficient.
pub fn b2(delta: f64) -> f64 {
    2.0 * 3f64.sqrt() * (1.0 + delta).powi(2) / (1.0 - delta / 2.0) + 3.0
}

/// `c4(delta) = min(2 delta, 1/b1, 1/b2)`; `delta = 1/50` yields `1/25`.
pub fn c4_of_delta(delta: f64) -> f64 {
    (2.0 * delta).min(1.0 / b1(delta)).min(1.0 / b2(delta))
}

/// `c2(delta) = min(c1 c4(delta), phi((1 + delta)/3))`.
pub fn c2_of_delta(delta: f64) -> f64 {
    (c1() * c4_of_delta(delta)).min(phi((1.0 + delta) / 3.0).expect("phi domain"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assembly_at_one_fiftieth() {
        let d = 1.0 / 50.0;
        assert!((c4_of_delta(d) - 1.0 / 25.0).abs() < 1e-12);
        // both reciprocal coefficients exceed 2 delta at this delta
        assert!(1.0 / b1(d) > 2.0 * d);
        assert!(1.0 / b2(d) > 2.0 * d);
    }

    #[test]
    fn c2_assembly() {
        let d = 1.0 / 50.0;
        assert!((c2_of_delta(d) - c2()).abs() < 1e-12);
        // phi(51/150) is the larger branch
        assert!(phi(51.0 / 150.0).unwrap() > c2());
    }
}
