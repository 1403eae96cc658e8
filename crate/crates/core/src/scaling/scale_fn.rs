use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::potentials::cp_potential;
use crate::quadrature::QuadratureConfig;
use crate::regime::Regime;
use crate::response::{MaterialResponse, Polarizability, ResponseRole};
use crate::scene::{Atom, Body, Scene};
use crate::tensor::Vec3;

/// Static permittivity of silicon.
pub const SI_PERMITTIVITY: f64 = 11.7;

/// Geometry whose size parameter `x` is varied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScaleFamily {
    /// Dielectric plate of thickness `d = x·z_A`, long-distance limit.
    Plate { epsilon: f64 },
    /// Perfectly conducting sphere of radius `R = x·z_A`, short-distance limit.
    Sphere { neutral: bool },
}

impl ScaleFamily {
    pub fn silicon_plate() -> Self {
        ScaleFamily::Plate {
            epsilon: SI_PERMITTIVITY,
        }
    }

    pub fn neutral_sphere() -> Self {
        ScaleFamily::Sphere { neutral: true }
    }
}

/// Samples of `f(x)`, normalized so that `f(∞) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleFunctionCurve {
    pub family: ScaleFamily,
    /// Atom–surface distance `z_A` used for the evaluation.
    pub reference_distance: f64,
    pub samples: Vec<(f64, f64)>,
}

/// `f(x)` at unit atom–surface distance.
pub fn scale_function(
    family: ScaleFamily,
    x_grid: &[f64],
    config: &QuadratureConfig,
) -> Result<ScaleFunctionCurve> {
    scale_function_at(family, x_grid, 1.0, config)
}

/// `f(x) = U(z_A; x)/U_∞(z_A)`, with `U_∞` the potential of the half-space the
/// body turns into as `x → ∞`.
pub fn scale_function_at(
    family: ScaleFamily,
    x_grid: &[f64],
    z_a: f64,
    config: &QuadratureConfig,
) -> Result<ScaleFunctionCurve> {
    if x_grid.is_empty() || x_grid.iter().any(|x| !(*x > 0.0 && x.is_finite())) {
        return Err(Error::domain(
            "scale-function grid must hold positive values",
        ));
    }
    if x_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("scale-function grid must be ascending"));
    }
    if !(z_a > 0.0 && z_a.is_finite()) {
        return Err(Error::domain("reference distance must be positive"));
    }
    let position = Vec3::new(0.0, 0.0, z_a);
    let (alpha, regime) = match family {
        ScaleFamily::Plate { .. } => (Polarizability::Static(1.0), Regime::Retarded),
        ScaleFamily::Sphere { .. } => (
            Polarizability::SingleResonance {
                static_volume: 1.0,
                resonance: 1.0,
            },
            Regime::Nonretarded,
        ),
    };
    let atom = Atom::new(position, alpha)?;
    let potential =
        |body: Body| cp_potential(&atom, &Scene::new(vec![body], Vec::new())?, regime, config);

    let samples = match family {
        ScaleFamily::Plate { epsilon } => {
            let eps = MaterialResponse::electric_static(epsilon)?;
            let mu = MaterialResponse::vacuum(ResponseRole::Magnetic);
            let reference = potential(Body::half_space(eps, mu)?)?;
            x_grid
                .iter()
                .map(|&x| Ok((x, potential(Body::slab(x * z_a, eps, mu)?)? / reference)))
                .collect::<Result<Vec<_>>>()?
        }
        ScaleFamily::Sphere { neutral } => {
            let reference = potential(Body::PerfectPlate)?;
            x_grid
                .iter()
                .map(|&x| {
                    let r = x * z_a;
                    Ok((
                        x,
                        potential(Body::sphere(r, Vec3::new(0.0, 0.0, -r), neutral)?)? / reference,
                    ))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(ScaleFunctionCurve {
        family,
        reference_distance: z_a,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_matches_multipole_series() {
        let c = QuadratureConfig::default();
        let curve = scale_function(ScaleFamily::neutral_sphere(), &[0.1, 1.0, 10.0], &c).unwrap();
        for &(x, f) in &curve.samples {
            let mut s = 0.0;
            for l in 1..4000 {
                let l = l as f64;
                s += 2.0 * (l + 1.0) * (2.0 * l + 1.0) * (x / (1.0 + x)).powf(2.0 * l + 1.0)
                    / (1.0 + x).powi(3);
            }
            assert!((f / s - 1.0).abs() < 1e-9, "x = {x}: {f} vs {s}");
        }
    }

    #[test]
    fn plate_saturates_and_is_reference_independent() {
        let c = QuadratureConfig::default();
        let grid = [0.01, 0.3, 3.0, 30.0];
        let a = scale_function_at(ScaleFamily::silicon_plate(), &grid, 1.0, &c).unwrap();
        let b = scale_function_at(ScaleFamily::silicon_plate(), &grid, 7.0, &c).unwrap();
        for (p, q) in a.samples.iter().zip(&b.samples) {
            assert!((p.1 / q.1 - 1.0).abs() < 1e-8);
        }
        assert!(a.samples.windows(2).all(|w| w[1].1 > w[0].1));
        assert!((a.samples[3].1 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn rejects_bad_grids() {
        let c = QuadratureConfig::default();
        assert!(scale_function(ScaleFamily::neutral_sphere(), &[1.0, 0.5], &c).is_err());
        assert!(scale_function(ScaleFamily::neutral_sphere(), &[0.0, 0.5], &c).is_err());
        assert!(scale_function(ScaleFamily::neutral_sphere(), &[], &c).is_err());
    }
}
