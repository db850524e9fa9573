//! Polarization axis angles.
//!
//! A polarization axis has no direction, so angles are identified modulo pi.
//! The canonical representative lives in (-pi/2, pi/2].

use std::f64::consts::{FRAC_PI_2, PI};

/// A polarization axis angle, canonicalized to (-pi/2, pi/2].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationAngle(f64);

impl PolarizationAngle {
    pub fn new(radians: f64) -> Self {
        Self(canonicalize(radians))
    }

    pub fn from_degrees(degrees: f64) -> Self {
        Self::new(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }
}

impl From<f64> for PolarizationAngle {
    fn from(radians: f64) -> Self {
        Self::new(radians)
    }
}

/// Map an angle to its canonical axis representative in (-pi/2, pi/2].
pub(crate) fn canonicalize(x: f64) -> f64 {
    let mut r = x % PI;
    if r > FRAC_PI_2 {
        r -= PI;
    } else if r <= -FRAC_PI_2 {
        r += PI;
    }
    r
}

/// Axis separation min(|x-y| mod pi, pi - |x-y| mod pi), in [0, pi/2].
pub fn angular_distance(x: PolarizationAngle, y: PolarizationAngle) -> f64 {
    axis_distance(x.radians(), y.radians())
}

/// Raw-f64 fast path used by the integrands; total in both arguments.
pub(crate) fn axis_distance(x: f64, y: f64) -> f64 {
    let d = (x - y).abs() % PI;
    if d > FRAC_PI_2 {
        PI - d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ang(x: f64) -> PolarizationAngle {
        PolarizationAngle::new(x)
    }

    #[test]
    fn axes_identified_mod_pi() {
        assert_eq!(angular_distance(ang(0.0), ang(PI)), 0.0);
        assert_eq!(angular_distance(ang(0.0), ang(FRAC_PI_2)), FRAC_PI_2);
        assert_eq!(angular_distance(ang(PI / 4.0), ang(-PI / 4.0)), FRAC_PI_2);
    }

    #[test]
    fn canonical_interval_is_half_open() {
        assert_eq!(canonicalize(FRAC_PI_2), FRAC_PI_2);
        assert_eq!(canonicalize(-FRAC_PI_2), FRAC_PI_2);
        assert_eq!(canonicalize(PI), 0.0);
    }

    proptest! {
        #[test]
        fn canonicalization_idempotent(x in -20.0f64..20.0) {
            let once = canonicalize(x);
            prop_assert!(once > -FRAC_PI_2 && once <= FRAC_PI_2 + 1e-15);
            prop_assert!((canonicalize(once) - once).abs() < 1e-15);
        }

        #[test]
        fn distance_symmetric_and_bounded(x in -10.0f64..10.0, y in -10.0f64..10.0) {
            let d = angular_distance(ang(x), ang(y));
            prop_assert!((0.0..=FRAC_PI_2 + 1e-15).contains(&d));
            prop_assert!((d - angular_distance(ang(y), ang(x))).abs() < 1e-12);
            prop_assert!(angular_distance(ang(x), ang(x)) < 1e-15);
        }

        #[test]
        fn distance_invariant_mod_pi(x in -4.0f64..4.0, y in -4.0f64..4.0) {
            let d = angular_distance(ang(x), ang(y));
            let shifted = angular_distance(ang(x + PI), ang(y));
            prop_assert!((d - shifted).abs() < 1e-12);
        }
    }

    #[test]
    fn triangle_inequality_on_quotient_circle() {
        let grid: Vec<f64> = (0..36).map(|i| -1.5 + i as f64 * 0.085).collect();
        for &a in &grid {
            for &b in &grid {
                for &c in &grid {
                    let ab = axis_distance(a, b);
                    let bc = axis_distance(b, c);
                    let ac = axis_distance(a, c);
                    assert!(ac <= ab + bc + 1e-12, "triangle violated at {a} {b} {c}");
                }
            }
        }
    }
}
