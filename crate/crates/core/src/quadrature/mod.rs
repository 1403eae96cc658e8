//! Deterministic quadrature over `(0, ∞)`, finite differences and power-law
//! fitting.
//!
//! Semi-infinite integrals use the substitution `x = x_c·t/(1 − t)` onto
//! `(0, 1)` followed by a tanh-sinh rule.  Composed, the two maps collapse to
//! `x = x_c·exp(π sinh s)`, which is what the node generator evaluates; the
//! step `h` is halved level by level and every level reuses the nodes of the
//! previous one.  The scale `x_c` should be the inverse of the dominant length
//! of the integrand so that its bulk sits near `s = 0`.

mod diff;
mod fit;

pub use diff::{default_step, gradient_fd};
pub use fit::{fit_power_law, least_squares_2, PowerLawFit};

use core::f64::consts::PI;

#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

use crate::error::{Error, Result};

/// Tolerances for the adaptive rules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_refinement_levels: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_refinement_levels: 12,
        }
    }
}

impl QuadratureConfig {
    pub fn new(rel_tol: f64, abs_tol: f64, max_refinement_levels: u32) -> Result<Self> {
        let c = QuadratureConfig {
            rel_tol,
            abs_tol,
            max_refinement_levels,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0
            && self.abs_tol > 0.0
            && self.rel_tol.is_finite()
            && self.abs_tol.is_finite())
        {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if self.max_refinement_levels < 4 {
            return Err(Error::domain("at least 4 refinement levels are required"));
        }
        Ok(())
    }

    /// Configuration for an integral nested inside another one.  The inner
    /// result must be resolved well below the outer tolerance or its noise
    /// stalls the outer refinement.
    pub fn inner(&self) -> QuadratureConfig {
        QuadratureConfig {
            rel_tol: (self.rel_tol * 1e-2).max(1e-14),
            abs_tol: self.abs_tol * 1e-2,
            max_refinement_levels: self.max_refinement_levels + 1,
        }
    }
}

/// A converged integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Half-width of the truncated `s` range; `exp(π sinh 3.5) ≈ 4e22`.
const S_MAX: f64 = 3.5;
/// Levels below this never declare convergence.
const MIN_LEVEL: u32 = 3;

#[inline]
fn node(s: f64, scale: f64) -> (f64, f64) {
    let x = scale * (PI * s.sinh()).exp();
    (x, PI * s.cosh() * x)
}

/// Integrates a vector-valued `f` over `(0, ∞)`; every component must meet the
/// tolerance.  `scale` is the substitution scale `x_c`.
pub fn integrate_semi_infinite_n<const N: usize, F>(
    f: F,
    scale: f64,
    config: &QuadratureConfig,
) -> Result<[Integral; N]>
where
    F: Fn(f64) -> Result<[f64; N]>,
{
    config.validate()?;
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::domain("quadrature scale must be positive"));
    }

    let mut evaluations = 0usize;
    let mut eval = |s: f64, acc: &mut [f64; N]| -> Result<()> {
        let (x, w) = node(s, scale);
        if !(x > 0.0 && x.is_finite()) {
            return Ok(());
        }
        let v = f(x)?;
        evaluations += 1;
        for (a, vi) in acc.iter_mut().zip(v) {
            if !vi.is_finite() {
                return Err(Error::NonConvergence {
                    estimate: vi,
                    error_bound: f64::INFINITY,
                });
            }
            *a += w * vi;
        }
        Ok(())
    };

    // Level 0: h = 1.
    let mut h = 1.0;
    let mut raw = [0.0; N];
    let n0 = S_MAX.floor() as i64;
    for j in -n0..=n0 {
        eval(j as f64, &mut raw)?;
    }
    let mut sums = raw.map(|r| r * h);
    let mut prev = sums;
    let mut err = [f64::INFINITY; N];

    for level in 1..=config.max_refinement_levels {
        h *= 0.5;
        let mut fresh = [0.0; N];
        let jmax = (S_MAX / h).floor() as i64;
        let mut j = -jmax;
        if j % 2 == 0 {
            j += 1;
        }
        while j <= jmax {
            eval(j as f64 * h, &mut fresh)?;
            j += 2;
        }
        for i in 0..N {
            sums[i] = 0.5 * prev[i] + h * fresh[i];
            err[i] = (sums[i] - prev[i]).abs();
        }
        let converged = level >= MIN_LEVEL
            && (0..N).all(|i| err[i] <= config.abs_tol.max(config.rel_tol * sums[i].abs()));
        if converged {
            let mut out = [Integral {
                value: 0.0,
                error_estimate: 0.0,
                evaluations,
            }; N];
            for i in 0..N {
                out[i].value = sums[i];
                out[i].error_estimate = err[i];
            }
            return Ok(out);
        }
        prev = sums;
    }

    let worst = (0..N)
        .max_by(|&a, &b| {
            let ra = err[a] / config.abs_tol.max(config.rel_tol * sums[a].abs());
            let rb = err[b] / config.abs_tol.max(config.rel_tol * sums[b].abs());
            ra.total_cmp(&rb)
        })
        .unwrap_or(0);
    Err(Error::NonConvergence {
        estimate: sums[worst],
        error_bound: err[worst],
    })
}

/// `∫₀^∞ f(x) dx` with substitution scale `scale`.
pub fn integrate_scaled<F>(f: F, scale: f64, config: &QuadratureConfig) -> Result<Integral>
where
    F: Fn(f64) -> Result<f64>,
{
    let [r] = integrate_semi_infinite_n(|x| f(x).map(|v| [v]), scale, config)?;
    Ok(r)
}

/// `∫₀^∞ f(x) dx` with unit substitution scale.
pub fn integrate_semi_infinite<F>(f: F, config: &QuadratureConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate_scaled(|x| Ok(f(x)), 1.0, config).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn exponential() {
        let v = integrate_semi_infinite(|x| (-x).exp(), &cfg()).unwrap();
        assert!((v - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn gamma_three_over_eight() {
        let v = integrate_semi_infinite(|x| x * x * (-2.0 * x).exp(), &cfg()).unwrap();
        assert!((v - 0.25).abs() <= 0.25 * 1e-10);
    }

    #[test]
    fn lorentzian_tail() {
        let v = integrate_semi_infinite(|x| 1.0 / (1.0 + x * x), &cfg()).unwrap();
        assert!((v - PI / 2.0).abs() <= PI / 2.0 * 1e-10);
    }

    #[test]
    fn scale_does_not_change_the_answer() {
        for s in [1e-3, 0.1, 10.0, 1e4] {
            let r = integrate_scaled(|x| Ok((-x / 50.0).exp() / 50.0), s, &cfg()).unwrap();
            assert!((r.value - 1.0).abs() < 1e-10, "scale {s}: {}", r.value);
        }
    }

    #[test]
    fn vector_components_share_nodes() {
        let [a, b] =
            integrate_semi_infinite_n(|x| Ok([(-x).exp(), 2.0 * (-x).exp()]), 1.0, &cfg()).unwrap();
        assert_eq!(2.0 * a.value, b.value);
    }

    #[test]
    fn reports_nonconvergence_with_estimate() {
        let tight = QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-300,
            max_refinement_levels: 4,
        };
        let e =
            integrate_scaled(|x| Ok((20.0 * x).sin().abs() * (-x).exp()), 1.0, &tight).unwrap_err();
        match e {
            Error::NonConvergence {
                estimate,
                error_bound,
            } => {
                assert!(estimate.is_finite() && error_bound > 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_config() {
        assert!(QuadratureConfig::new(0.0, 1e-14, 12).is_err());
        assert!(QuadratureConfig::new(1e-10, 1e-14, 3).is_err());
        assert!(integrate_scaled(Ok, -1.0, &cfg()).is_err());
    }
}
