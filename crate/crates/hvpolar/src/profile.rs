//! Single-polarizer transmission profiles and the reference laws they are
//! compared against.
//!
//! The transmission profile is p1(delta) = 1 - phi(delta) with
//! phi(g) = (1 - exp(-a g^e)) / (1 + c exp(-a g^e)), a smoothed step that
//! keeps p1 near one for axes close to the polarizer and near zero beyond
//! the shoulder.

use std::f64::consts::FRAC_PI_2;

use crate::angle::{axis_distance, PolarizationAngle};
use crate::error::{Error, Result};

/// The (a, e, c) triple parameterizing the transmission profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransmissionProfileParams {
    a: f64,
    e: f64,
    c: f64,
}

impl TransmissionProfileParams {
    pub fn new(a: f64, e: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("e", e), ("c", c)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParam {
                    name,
                    constraint: "a positive finite real",
                    value: v,
                });
            }
        }
        Ok(Self { a, e, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn e(&self) -> f64 {
        self.e
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// Leakage of a non-ideal polarizer pair; zero for ideal polarizers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MalusTarget {
    eps_leak: f64,
}

impl MalusTarget {
    pub fn new(eps_leak: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&eps_leak) {
            return Err(Error::InvalidParam {
                name: "eps_leak",
                constraint: "in [0, 1)",
                value: eps_leak,
            });
        }
        Ok(Self { eps_leak })
    }

    pub fn ideal() -> Self {
        Self { eps_leak: 0.0 }
    }

    pub fn eps_leak(&self) -> f64 {
        self.eps_leak
    }
}

/// phi(gamma) = (1 - x) / (1 + c x) with x = exp(-a gamma^e).
pub fn phi(gamma: f64, p: &TransmissionProfileParams) -> Result<f64> {
    if !(gamma >= 0.0) {
        return Err(Error::Domain {
            what: "phi argument gamma",
            value: gamma,
        });
    }
    Ok(phi_unchecked(gamma, p))
}

pub(crate) fn phi_unchecked(gamma: f64, p: &TransmissionProfileParams) -> f64 {
    let x = (-p.a * gamma.powf(p.e)).exp();
    (1.0 - x) / (1.0 + p.c * x)
}

/// Transmission probability 1 - phi(delta) for an axis separation
/// delta in [0, pi/2].
pub fn p1(delta: f64, p: &TransmissionProfileParams) -> Result<f64> {
    if !(0.0..=FRAC_PI_2 + 1e-12).contains(&delta) {
        return Err(Error::Domain {
            what: "p1 argument delta",
            value: delta,
        });
    }
    Ok(1.0 - phi_unchecked(delta, p))
}

/// Total fast path: transmission of a photon with axis `lambda` through a
/// polarizer with axis `axis`, folding the separation mod pi.
pub(crate) fn p1_axis(lambda: f64, axis: f64, p: &TransmissionProfileParams) -> f64 {
    1.0 - phi_unchecked(axis_distance(lambda, axis), p)
}

/// The cos^2 profile used as a counter-example; only for comparisons.
pub fn belifante_profile(delta: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2 + 1e-12).contains(&delta) {
        return Err(Error::Domain {
            what: "belifante_profile argument delta",
            value: delta,
        });
    }
    Ok(delta.cos().powi(2))
}

/// Generalized Malus law m(alpha) = (1 - eps) cos^2(alpha) + eps.
pub fn malus(alpha: PolarizationAngle, t: &MalusTarget) -> f64 {
    let c2 = alpha.radians().cos().powi(2);
    (1.0 - t.eps_leak) * c2 + t.eps_leak
}

/// Ideal-polarizer pair transmission, cos^2(alpha).
pub fn qm_pair(alpha: PolarizationAngle) -> f64 {
    alpha.radians().cos().powi(2)
}

/// Ideal-polarizer triple transmission, cos^2(alpha) cos^2(alpha - beta).
pub fn qm_triple(alpha: PolarizationAngle, beta: PolarizationAngle) -> f64 {
    let a = alpha.radians();
    let b = beta.radians();
    a.cos().powi(2) * (a - b).cos().powi(2)
}
