use core::f64::consts::PI;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite_n, least_squares_2, QuadratureConfig};
use crate::response::{MaterialResponse, Polarizability};

/// Coefficients of the short-distance form `U(z) ≈ −C₃/z³ + C₁/z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonretardedCoefficients {
    pub c3: f64,
    pub c1: f64,
}

/// Short-distance coefficients for an atom near a magnetoelectric half-space.
///
/// ```text
/// C₃ = 1/(4π) ∫dξ α′ β_p
/// C₁ = 1/(4π) ∫dξ ξ² α′ [β_s + β_p + 2ε(εμ − 1)/(ε + 1)²]
/// ```
///
/// with `β_p = (ε−1)/(ε+1)` and `β_s = (μ−1)/(μ+1)`.  `C₃` is the electrostatic
/// image term.  `C₁` collects every contribution of order `1/z`: the magnetic
/// `β_s`, and the first retardation correction of the p-polarized reflection,
/// which is present even for nonmagnetic media.
///
/// The atom must be dispersive and each medium either vacuum or dispersive,
/// otherwise the frequency integrals diverge.
pub fn nonretarded_halfspace_coefficients(
    alpha: &Polarizability,
    epsilon: &MaterialResponse,
    mu: &MaterialResponse,
    config: &QuadratureConfig,
) -> Result<NonretardedCoefficients> {
    config.validate()?;
    alpha.validate()?;
    let omega = alpha
        .resonance()
        .ok_or_else(|| Error::domain("short-distance coefficients need a dispersive atom"))?;
    for m in [epsilon, mu] {
        if m.is_perfect() || (m.is_static() && !m.is_vacuum()) {
            return Err(Error::domain(
                "short-distance coefficients need dispersive (or vacuum) media",
            ));
        }
    }
    let excess = |m: &MaterialResponse, xi: f64| {
        m.excess_unchecked(xi)
            .ok_or_else(|| Error::domain("perfect response"))
    };
    let [c3, c1] = integrate_semi_infinite_n(
        |xi| {
            let (xe, xm) = (excess(epsilon, xi)?, excess(mu, xi)?);
            let a = alpha.value_unchecked(xi);
            let bp = xe / (xe + 2.0);
            let bs = xm / (xm + 2.0);
            let corr = 2.0 * (1.0 + xe) * (xe + xm + xe * xm) / ((xe + 2.0) * (xe + 2.0));
            Ok([a * bp, xi * xi * a * (bs + bp + corr)])
        },
        omega,
        config,
    )?;
    Ok(NonretardedCoefficients {
        c3: c3.value / (4.0 * PI),
        c1: c1.value / (4.0 * PI),
    })
}

/// Least-squares fit of `U(z) = −C₃/z³ + C₁/z` to `(z, U)` samples, weighted
/// by `1/|U|`.
pub fn fit_nonretarded_coefficients(samples: &[(f64, f64)]) -> Result<NonretardedCoefficients> {
    if samples
        .iter()
        .any(|&(z, u)| !(z > 0.0 && z.is_finite() && u.is_finite() && u != 0.0))
    {
        return Err(Error::domain(
            "fit samples need positive distances and finite nonzero values",
        ));
    }
    let rows: Vec<[f64; 2]> = samples
        .iter()
        .map(|&(z, u)| [-1.0 / (z * z * z * u.abs()), 1.0 / (z * u.abs())])
        .collect();
    let rhs: Vec<f64> = samples.iter().map(|&(_, u)| u / u.abs()).collect();
    let [c3, c1] = least_squares_2(&rows, &rhs)?;
    Ok(NonretardedCoefficients { c3, c1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::response::ResponseRole;

    fn atom() -> Polarizability {
        Polarizability::SingleResonance {
            static_volume: 1.0,
            resonance: 1.0,
        }
    }

    #[test]
    fn vacuum_permittivity_has_no_c3() {
        let eps = MaterialResponse::vacuum(ResponseRole::Electric);
        let mu = MaterialResponse::magnetic_resonance(3.0, 1.0).unwrap();
        let c =
            nonretarded_halfspace_coefficients(&atom(), &eps, &mu, &QuadratureConfig::default())
                .unwrap();
        assert_eq!(c.c3, 0.0);
        assert!(c.c1 > 0.0);
    }

    #[test]
    fn c3_closed_form() {
        // ε = 1 + 3/(1 + ξ²) ⇒ β_p = 3/(5 + 2ξ²); ∫ 3/((1+ξ²)(5+2ξ²)) = π(1 − √(2/5))/2
        let eps = MaterialResponse::electric_resonance(4.0, 1.0).unwrap();
        let mu = MaterialResponse::vacuum(ResponseRole::Magnetic);
        let c =
            nonretarded_halfspace_coefficients(&atom(), &eps, &mu, &QuadratureConfig::default())
                .unwrap();
        let want = PI * (1.0 - (0.4f64).sqrt()) / 2.0 / (4.0 * PI);
        assert!((c.c3 / want - 1.0).abs() < 1e-10, "{} vs {want}", c.c3);
    }

    #[test]
    fn static_inputs_are_rejected() {
        let eps = MaterialResponse::electric_static(4.0).unwrap();
        let mu = MaterialResponse::vacuum(ResponseRole::Magnetic);
        let c = QuadratureConfig::default();
        assert!(nonretarded_halfspace_coefficients(&atom(), &eps, &mu, &c).is_err());
        let eps = MaterialResponse::electric_resonance(4.0, 1.0).unwrap();
        assert!(
            nonretarded_halfspace_coefficients(&Polarizability::Static(1.0), &eps, &mu, &c)
                .is_err()
        );
    }

    #[test]
    fn fit_recovers_exact_form() {
        let s: Vec<(f64, f64)> = [1e-3, 2e-3, 4e-3, 8e-3]
            .iter()
            .map(|&z| (z, -0.2 / (z * z * z) + 0.05 / z))
            .collect();
        let c = fit_nonretarded_coefficients(&s).unwrap();
        assert!((c.c3 - 0.2).abs() < 1e-10 && (c.c1 - 0.05).abs() < 1e-10);
    }
}
