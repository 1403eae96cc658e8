use core::f64::consts::PI;

#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::greens::PlanarReflector;
use crate::quadrature::{integrate_scaled, QuadratureConfig};
use crate::regime::Regime;
use crate::response::{MaterialResponse, ResponseRole};
use crate::scene::Body;

use super::{frequency_scale, Estimate};

/// Electric and magnetic response of one half-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarMedium {
    pub epsilon: MaterialResponse,
    pub mu: MaterialResponse,
}

impl PlanarMedium {
    pub fn new(epsilon: MaterialResponse, mu: MaterialResponse) -> Result<Self> {
        if epsilon.role() != ResponseRole::Electric || mu.role() != ResponseRole::Magnetic {
            return Err(Error::domain("epsilon must be electric and mu magnetic"));
        }
        Ok(PlanarMedium { epsilon, mu })
    }

    pub fn perfect_conductor() -> Self {
        PlanarMedium {
            epsilon: MaterialResponse::perfect_conductor(),
            mu: MaterialResponse::vacuum(ResponseRole::Magnetic),
        }
    }

    /// Material of a planar body; slabs contribute their bulk material.
    pub fn from_body(body: &Body) -> Result<Self> {
        let (epsilon, mu) = body
            .planar_media()
            .ok_or_else(|| Error::unsupported("the Lifshitz pressure needs planar bodies"))?;
        Ok(PlanarMedium { epsilon, mu })
    }

    fn is_static(&self) -> bool {
        self.epsilon.is_static() && self.mu.is_static()
    }

    fn resonances(&self) -> impl Iterator<Item = f64> {
        self.epsilon
            .resonance()
            .into_iter()
            .chain(self.mu.resonance())
    }

    fn reflector(&self, xi: f64) -> Result<PlanarReflector> {
        PlanarReflector::from_media(&self.epsilon, &self.mu, None, xi)
    }
}

/// Force per unit area between two half-spaces across a vacuum gap;
/// negative values attract.
///
/// ```text
/// P = −1/(2π²) ∫dξ ∫_ξ^∞ dκ κ² Σ_σ r₁r₂e^{−2κz}/(1 − r₁r₂e^{−2κz})
/// ```
pub fn lifshitz_pressure(
    gap: f64,
    m1: &PlanarMedium,
    m2: &PlanarMedium,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<f64> {
    lifshitz_pressure_estimate(gap, m1, m2, regime, config).map(|e| e.value)
}

pub fn lifshitz_pressure_estimate(
    gap: f64,
    m1: &PlanarMedium,
    m2: &PlanarMedium,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<Estimate> {
    config.validate()?;
    if !(gap > 0.0 && gap.is_finite()) {
        return Err(Error::domain("gap must be positive"));
    }
    if regime == Regime::Retarded && !(m1.is_static() && m2.is_static()) {
        return Err(Error::domain(
            "retarded regime needs static or perfectly conducting media",
        ));
    }
    let scale = frequency_scale(gap, regime, m1.resonances().chain(m2.resonances()))?;
    let z = gap;
    let inner = config.inner();
    let i = match regime {
        Regime::Nonretarded => integrate_scaled(
            |xi| {
                let (b1, b2) = (
                    m1.reflector(xi)?.asymptotic(),
                    m2.reflector(xi)?.asymptotic(),
                );
                Ok(polylog3(b1.r_s * b2.r_s)? + polylog3(b1.r_p * b2.r_p)?)
            },
            scale,
            config,
        )
        .map(|i| Estimate::scaled(i, -1.0 / (8.0 * PI * PI * z * z * z)))?,
        _ => integrate_scaled(
            |xi| {
                let (r1, r2) = (m1.reflector(xi)?, m2.reflector(xi)?);
                // τ = 2(κ − ξ)z
                let i = integrate_scaled(
                    |tau| {
                        let kappa = xi + tau / (2.0 * z);
                        let (c1, c2) = (r1.coefficients(kappa), r2.coefficients(kappa));
                        let x = 2.0 * xi * z + tau;
                        let (e, em1) = ((-x).exp(), (-x).exp_m1());
                        // 1 − rr·e without cancellation as x → 0
                        let term = |rr: f64| rr * e / ((1.0 - rr) - rr * em1);
                        Ok(kappa * kappa * (term(c1.r_s * c2.r_s) + term(c1.r_p * c2.r_p)))
                    },
                    1.0,
                    &inner,
                )?;
                Ok(i.value / (2.0 * z))
            },
            scale,
            config,
        )
        .map(|i| Estimate::scaled(i, -1.0 / (2.0 * PI * PI)))?,
    };
    Ok(i)
}

/// `Li₃(x) = Σ xⁿ/n³` for `|x| < 1`.
fn polylog3(x: f64) -> Result<f64> {
    if x.abs() >= 1.0 {
        return Err(Error::domain(
            "nonretarded pressure between perfect reflectors diverges",
        ));
    }
    let mut sum = 0.0f64;
    let mut p = x;
    let mut n = 1.0f64;
    while p.abs() > 1e-17 * sum.abs().max(f64::MIN_POSITIVE) {
        sum += p / (n * n * n);
        p *= x;
        n += 1.0;
    }
    Ok(sum)
}
