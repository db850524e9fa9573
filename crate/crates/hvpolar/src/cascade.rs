//! Transmission of light through polarizer pairs and triples in the simple
//! model (photon polarization unchanged by passage), plus sampled curves.
//!
//! All integrals run over the incident axis distribution lambda in
//! (-pi/2, pi/2]; separations fold through the mod-pi axis metric. The
//! integrands are smooth except where a separation reaches pi/2, so every
//! integral is split at those fold points before quadrature.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::angle::{canonicalize, PolarizationAngle};
use crate::error::{Error, Result};
use crate::profile::{p1_axis, TransmissionProfileParams};
use crate::quad::{integrate_split, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Keep the raw integral values.
    Raw,
    /// Divide by the value at alpha = 0 so the curve starts at 1.
    UnitAtZero,
    /// Divide by pi, the measure of the incident axis interval.
    IncidentDensity,
}

/// A sampled angle-to-intensity table.
#[derive(Debug, Clone)]
pub struct TransmissionCurve {
    angles: Vec<f64>,
    values: Vec<f64>,
    normalization: Normalization,
}

impl TransmissionCurve {
    pub fn new(angles: Vec<f64>, values: Vec<f64>, normalization: Normalization) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::Grid("grid must not be empty".into()));
        }
        if angles.len() != values.len() {
            return Err(Error::Grid(format!(
                "angles ({}) and values ({}) differ in length",
                angles.len(),
                values.len()
            )));
        }
        if !angles.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Grid("grid angles must be strictly increasing".into()));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Grid("curve values must be finite and nonnegative".into()));
        }
        if normalization == Normalization::UnitAtZero {
            let at_zero = angles
                .iter()
                .position(|a| a.abs() < 1e-12)
                .map(|i| values[i]);
            match at_zero {
                Some(v) if (v - 1.0).abs() < 1e-9 => {}
                Some(v) => {
                    return Err(Error::Grid(format!(
                        "unit-at-zero curve has value {v} at alpha = 0"
                    )))
                }
                None => {
                    return Err(Error::Grid(
                        "unit-at-zero normalization requires alpha = 0 in the grid".into(),
                    ))
                }
            }
        }
        Ok(Self {
            angles,
            values,
            normalization,
        })
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }
}

/// Interior points where a stage's separation folds at pi/2 (or 0); the
/// integrand has derivative kinks there.
fn fold_breaks(axes: &[f64]) -> Vec<f64> {
    let mut breaks = Vec::with_capacity(2 * axes.len());
    for &axis in axes {
        breaks.push(canonicalize(axis));
        breaks.push(canonicalize(axis + FRAC_PI_2));
    }
    breaks
}

/// Transmission through a cascade of polarizers with per-stage profiles and
/// axis orientations, integrated over a uniform incident axis ensemble.
pub fn cascade_transmission(
    stages: &[(TransmissionProfileParams, PolarizationAngle)],
    spec: &QuadratureSpec,
) -> Result<f64> {
    if stages.is_empty() {
        return Err(Error::Grid("cascade needs at least one polarizer".into()));
    }
    let axes: Vec<f64> = stages.iter().map(|(_, a)| a.radians()).collect();
    let breaks = fold_breaks(&axes);
    let r = integrate_split(
        |lam| {
            Ok(stages
                .iter()
                .map(|(p, axis)| p1_axis(lam, axis.radians(), p))
                .product())
        },
        -FRAC_PI_2,
        FRAC_PI_2,
        &breaks,
        spec,
    )?;
    Ok(r.value)
}

/// Pair transmission integral of the profile against itself at separation
/// `alpha`; even in alpha and maximal at alpha = 0.
pub fn pair_transmission_raw(
    p: &TransmissionProfileParams,
    alpha: PolarizationAngle,
    spec: &QuadratureSpec,
) -> Result<f64> {
    cascade_transmission(
        &[(*p, PolarizationAngle::new(0.0)), (*p, alpha)],
        spec,
    )
}

/// Pair transmission divided by its value at alpha = 0.
pub fn pair_transmission_normalized(
    p: &TransmissionProfileParams,
    alpha: PolarizationAngle,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let at_zero = pair_transmission_raw(p, PolarizationAngle::new(0.0), spec)?;
    if at_zero <= 0.0 {
        return Err(Error::Domain {
            what: "pair transmission at alpha = 0",
            value: at_zero,
        });
    }
    Ok(pair_transmission_raw(p, alpha, spec)? / at_zero)
}

/// Axis density of light leaving the first polarizer in the simple model,
/// p1(|lambda|) / (pi/2).
pub fn simple_output_distribution(
    p: &TransmissionProfileParams,
    lambda: PolarizationAngle,
) -> f64 {
    p1_axis(lambda.radians(), 0.0, p) / FRAC_PI_2
}

/// Transmission through three polarizers at axes 0, alpha, beta.
pub fn triple_transmission(
    p: &TransmissionProfileParams,
    alpha: PolarizationAngle,
    beta: PolarizationAngle,
    spec: &QuadratureSpec,
) -> Result<f64> {
    cascade_transmission(
        &[(*p, PolarizationAngle::new(0.0)), (*p, alpha), (*p, beta)],
        spec,
    )
}

/// Evaluate `eval` on a strictly increasing grid of angles (radians) and
/// package the result under the requested normalization.
pub fn curve<F>(mut eval: F, grid: &[f64], normalization: Normalization) -> Result<TransmissionCurve>
where
    F: FnMut(f64) -> Result<f64>,
{
    if grid.is_empty() {
        return Err(Error::Grid("grid must not be empty".into()));
    }
    if !grid.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Grid("grid angles must be strictly increasing".into()));
    }
    let mut values = Vec::with_capacity(grid.len());
    for &a in grid {
        values.push(eval(a)?);
    }
    match normalization {
        Normalization::Raw => {}
        Normalization::UnitAtZero => {
            let i0 = grid.iter().position(|a| a.abs() < 1e-12).ok_or_else(|| {
                Error::Grid("unit-at-zero normalization requires alpha = 0 in the grid".into())
            })?;
            let v0 = values[i0];
            if v0 <= 0.0 {
                return Err(Error::Domain {
                    what: "curve value at alpha = 0",
                    value: v0,
                });
            }
            for v in &mut values {
                *v /= v0;
            }
        }
        Normalization::IncidentDensity => {
            for v in &mut values {
                *v /= PI;
            }
        }
    }
    TransmissionCurve::new(grid.to_vec(), values, normalization)
}

/// The default figure grid: 0 to 90 degrees in 1-degree steps, in radians.
pub fn default_grid() -> Vec<f64> {
    (0..=90).map(|d| (d as f64).to_radians()).collect()
}
