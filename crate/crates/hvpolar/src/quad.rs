//! One-dimensional definite integration with a convergence guarantee.
//!
//! A fixed Gauss-Legendre rule is evaluated at `base_nodes` points, then the
//! node count is doubled until two successive values agree within tolerance
//! or `max_doublings` is exhausted. The last successive difference is
//! reported as the error estimate. Node sums use pairwise summation so a
//! result is bit-identical regardless of how callers schedule evaluations.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub base_nodes: usize,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_doublings: u32,
}

impl QuadratureSpec {
    pub fn new(base_nodes: usize, rel_tol: f64, abs_tol: f64, max_doublings: u32) -> Result<Self> {
        if base_nodes < 16 {
            return Err(Error::InvalidParam {
                name: "base_nodes",
                constraint: "at least 16",
                value: base_nodes as f64,
            });
        }
        for (name, v) in [("rel_tol", rel_tol), ("abs_tol", abs_tol)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParam {
                    name,
                    constraint: "a positive finite real",
                    value: v,
                });
            }
        }
        Ok(Self {
            base_nodes,
            rel_tol,
            abs_tol,
            max_doublings,
        })
    }

    /// Tightened variant used for internal table construction.
    pub(crate) fn tightened(&self) -> Self {
        Self {
            base_nodes: self.base_nodes,
            rel_tol: (self.rel_tol * 1e-2).max(1e-14),
            abs_tol: (self.abs_tol * 1e-2).max(1e-15),
            max_doublings: self.max_doublings.max(6),
        }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            base_nodes: 64,
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_doublings: 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub est_error: f64,
    pub nodes_used: usize,
    pub converged: bool,
}

impl IntegralResult {
    pub fn within_tolerance(&self, spec: &QuadratureSpec) -> bool {
        self.est_error <= spec.abs_tol.max(spec.rel_tol * self.value.abs())
    }
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
#[derive(Debug)]
struct GlRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

static RULES: RwLock<Option<HashMap<usize, Arc<GlRule>>>> = RwLock::new(None);

fn gl_rule(n: usize) -> Arc<GlRule> {
    if let Some(map) = RULES.read().unwrap().as_ref() {
        if let Some(rule) = map.get(&n) {
            return Arc::clone(rule);
        }
    }
    let rule = Arc::new(compute_gl_rule(n));
    let mut guard = RULES.write().unwrap();
    guard
        .get_or_insert_with(HashMap::new)
        .entry(n)
        .or_insert_with(|| Arc::clone(&rule));
    rule
}

/// Newton iteration on the Legendre recurrence; symmetric, so only half the
/// roots are solved for.
fn compute_gl_rule(n: usize) -> GlRule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess for the i-th root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                let (_, d2) = legendre_and_derivative(n, x);
                dp = d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    GlRule { nodes, weights }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn pairwise_sum(v: &mut [f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        2 => v[0] + v[1],
        len => {
            let (a, b) = v.split_at_mut(len / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

fn fixed_rule<F: FnMut(f64) -> Result<f64>>(f: &mut F, lo: f64, hi: f64, n: usize) -> Result<f64> {
    let rule = gl_rule(n);
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let mut terms = Vec::with_capacity(n);
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let abscissa = mid + half * x;
        let y = f(abscissa)?;
        if !y.is_finite() {
            return Err(Error::NonFiniteIntegrand { x: abscissa });
        }
        terms.push(w * y);
    }
    Ok(half * pairwise_sum(&mut terms))
}

/// Integrate `f` over [lo, hi].
///
/// Non-convergence is reported through `converged = false`, never as an
/// error; a non-finite integrand value is a hard error naming the abscissa.
pub fn integrate<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Interval { lo, hi });
    }
    let mut n = spec.base_nodes;
    let mut value = fixed_rule(&mut f, lo, hi, n)?;
    let mut est_error = f64::INFINITY;
    let mut converged = false;
    for _ in 0..spec.max_doublings {
        n *= 2;
        let next = fixed_rule(&mut f, lo, hi, n)?;
        est_error = (next - value).abs();
        value = next;
        if est_error <= spec.abs_tol.max(spec.rel_tol * value.abs()) {
            converged = true;
            break;
        }
    }
    Ok(IntegralResult {
        value,
        est_error,
        nodes_used: n,
        converged,
    })
}

/// Integrate with known interior breakpoints (derivative kinks of the
/// integrand); each smooth piece converges spectrally on its own.
pub fn integrate_split<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    lo: f64,
    hi: f64,
    breaks: &[f64],
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Interval { lo, hi });
    }
    let mut pts: Vec<f64> = breaks
        .iter()
        .copied()
        .filter(|b| *b > lo + 1e-14 && *b < hi - 1e-14)
        .collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (*a - *b).abs() < 1e-13);
    pts.insert(0, lo);
    pts.push(hi);

    let mut value = 0.0;
    let mut est_error = 0.0;
    let mut nodes_used = 0;
    let mut converged = true;
    for pair in pts.windows(2) {
        let r = integrate(&mut f, pair[0], pair[1], spec)?;
        value += r.value;
        est_error += r.est_error;
        nodes_used += r.nodes_used;
        converged &= r.converged;
    }
    Ok(IntegralResult {
        value,
        est_error,
        nodes_used,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn dflt() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn cos_squared_over_symmetric_interval() {
        let r = integrate(|x| Ok(x.cos().powi(2)), -FRAC_PI_2, FRAC_PI_2, &dflt()).unwrap();
        assert!(r.converged);
        assert_abs_diff_eq!(r.value, FRAC_PI_2, epsilon = 1e-13);
    }

    #[test]
    fn constant_one_gives_interval_length() {
        let r = integrate(|_| Ok(1.0), -FRAC_PI_2, FRAC_PI_2, &dflt()).unwrap();
        assert!(r.converged);
        assert_abs_diff_eq!(r.value, PI, epsilon = 1e-14);
    }

    #[test]
    fn linearity_within_1e10() {
        let spec = dflt();
        let f = |x: f64| x.sin().powi(2);
        let g = |x: f64| (3.0 * x).cos();
        let (a, b) = (2.5, -1.25);
        let combined = integrate(|x| Ok(a * f(x) + b * g(x)), 0.0, 2.0, &spec)
            .unwrap()
            .value;
        let fi = integrate(|x| Ok(f(x)), 0.0, 2.0, &spec).unwrap().value;
        let gi = integrate(|x| Ok(g(x)), 0.0, 2.0, &spec).unwrap().value;
        assert_abs_diff_eq!(combined, a * fi + b * gi, epsilon = 1e-10);
    }

    #[test]
    fn doubling_base_nodes_stays_within_reported_error() {
        let spec = dflt();
        let doubled = QuadratureSpec {
            base_nodes: 128,
            ..spec
        };
        let f = |x: f64| (-3.0 * x * x).exp() * (5.0 * x).cos();
        let r1 = integrate(|x| Ok(f(x)), -1.5, 1.5, &spec).unwrap();
        let r2 = integrate(|x| Ok(f(x)), -1.5, 1.5, &doubled).unwrap();
        assert!(r1.converged && r2.converged);
        assert!((r1.value - r2.value).abs() <= r1.est_error.max(1e-14));
    }

    #[test]
    fn nan_integrand_is_a_hard_error() {
        let err = integrate(
            |x| Ok(if x > 0.4 { f64::NAN } else { 1.0 }),
            0.0,
            1.0,
            &dflt(),
        )
        .unwrap_err();
        match err {
            Error::NonFiniteIntegrand { x } => assert!(x > 0.4),
            other => panic!("expected NonFiniteIntegrand, got {other}"),
        }
    }

    #[test]
    fn non_convergence_is_flagged_not_thrown() {
        // |x| has a kink; with a single doubling the tolerance is unreachable.
        let spec = QuadratureSpec::new(16, 1e-15, 1e-16, 1).unwrap();
        let r = integrate(|x: f64| Ok(x.abs().sqrt()), -1.0, 1.0, &spec).unwrap();
        assert!(!r.converged);
        assert!(r.est_error > 0.0);
    }

    #[test]
    fn invariant_converged_implies_within_tolerance() {
        let spec = dflt();
        let r = integrate(|x: f64| Ok(x.cos()), 0.0, 1.0, &spec).unwrap();
        assert!(r.converged);
        assert!(r.within_tolerance(&spec));
    }

    #[test]
    fn split_handles_interior_kink() {
        // integral of |sin(x)| over [-1, 2] = (1-cos(1)) + (1-cos(2))
        let exact = (1.0 - 1.0f64.cos()) + (1.0 - 2.0f64.cos());
        let r = integrate_split(|x: f64| Ok(x.sin().abs()), -1.0, 2.0, &[0.0], &dflt()).unwrap();
        assert!(r.converged);
        assert_abs_diff_eq!(r.value, exact, epsilon = 1e-12);
    }

    #[test]
    fn interval_validation() {
        assert!(integrate(|_| Ok(1.0), 1.0, 1.0, &dflt()).is_err());
        assert!(integrate(|_| Ok(1.0), 2.0, 1.0, &dflt()).is_err());
        assert!(QuadratureSpec::new(8, 1e-10, 1e-12, 6).is_err());
        assert!(QuadratureSpec::new(64, -1e-10, 1e-12, 6).is_err());
    }

    #[test]
    fn rule_nodes_match_known_values() {
        // 2-point rule: +-1/sqrt(3), weights 1.
        let rule = gl_rule(2);
        assert_abs_diff_eq!(rule.nodes[1], 1.0 / 3.0f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(rule.weights[0], 1.0, epsilon = 1e-15);
        // weights of any rule sum to 2
        for n in [16, 64, 128, 1024] {
            let r = gl_rule(n);
            let s: f64 = r.weights.iter().sum();
            assert_abs_diff_eq!(s, 2.0, epsilon = 1e-12);
        }
    }
}
