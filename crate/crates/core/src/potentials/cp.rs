use core::f64::consts::PI;

#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::greens::{
    coincident_trace_scaled, g1_sphere_nonretarded_potential_kernel, PlanarReflector,
    MAX_MULTIPOLE_ORDER,
};
use crate::quadrature::{default_step, gradient_fd, integrate_scaled, QuadratureConfig};
use crate::regime::Regime;
use crate::response::Polarizability;
use crate::scene::{Atom, Body, Scene};
use crate::tensor::Vec3;

use super::{check_atom, frequency_scale, Estimate};

/// Casimir–Polder potential of `atom` near the scene's body.  Zero without a
/// body.
pub fn cp_potential(
    atom: &Atom,
    scene: &Scene,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<f64> {
    cp_potential_estimate(atom, scene, regime, config).map(|e| e.value)
}

pub fn cp_potential_estimate(
    atom: &Atom,
    scene: &Scene,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<Estimate> {
    config.validate()?;
    regime.validate(scene)?;
    check_atom(regime, &atom.polarizability)?;
    let Some(body) = scene.body() else {
        return Ok(Estimate::ZERO);
    };
    let distance = body.distance_to_surface(atom.position);
    if !(distance > 0.0 && distance.is_finite()) {
        return Err(Error::scene("atom must lie outside the body"));
    }
    let alpha = &atom.polarizability;
    match (*body, regime) {
        (
            Body::ConductingSphere {
                radius,
                centre,
                neutral,
            },
            Regime::Nonretarded,
        ) => {
            let k = g1_sphere_nonretarded_potential_kernel(
                (atom.position - centre).norm(),
                radius,
                neutral,
                MAX_MULTIPOLE_ORDER,
            )?;
            let omega = alpha.resonance().ok_or_else(|| {
                Error::domain("the quasi-static sphere potential needs a dispersive atom")
            })?;
            let i = integrate_scaled(|xi| Ok(alpha.value_unchecked(xi)), omega, config)?;
            Ok(Estimate::scaled(i, -k.value / (4.0 * PI * PI)))
        }
        (Body::ConductingSphere { .. }, _) => Err(Error::unsupported(
            "spheres are only available in the nonretarded regime",
        )),
        (_, Regime::Nonretarded) => planar_nonretarded(body, alpha, atom.position.z, config),
        _ => planar_retarded(body, alpha, atom.position.z, regime, config),
    }
}

fn planar_retarded(
    body: &Body,
    alpha: &Polarizability,
    z: f64,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<Estimate> {
    let scale = frequency_scale(z, regime, body.resonances().chain(alpha.resonance()))?;
    let inner = config.inner();
    let i = integrate_scaled(
        |xi| {
            let refl = PlanarReflector::for_body(body, xi)?;
            Ok(alpha.value_unchecked(xi) * coincident_trace_scaled(z, &refl, &inner)?)
        },
        scale,
        config,
    )?;
    Ok(Estimate::scaled(i, 2.0))
}

/// Electric quasi-static limit: `U = −(1/4πz³)∫dξ α′ β_p`, with the slab's
/// quasi-static reflection integrated over `k∥` when needed.
fn planar_nonretarded(
    body: &Body,
    alpha: &Polarizability,
    z: f64,
    config: &QuadratureConfig,
) -> Result<Estimate> {
    if body.is_magnetic() {
        return Err(Error::unsupported(
            "the nonretarded engine covers electric bodies only; use the full regime for magnetic media",
        ));
    }
    let scale = frequency_scale(
        z,
        Regime::Nonretarded,
        body.resonances().chain(alpha.resonance()),
    )?;
    let inner = config.inner();
    let beta_eff = |xi: f64| -> Result<f64> {
        let refl = PlanarReflector::for_body(body, xi)?;
        let beta = refl.asymptotic().r_p;
        match body {
            Body::Slab { thickness, .. } if !refl.is_perfect() => {
                // β_eff = 4z³ ∫dk k² e^{−2kz} β(1 − e^{−2kd})/(1 − β²e^{−2kd}); τ = 2kz
                let ratio = thickness / z;
                let i = integrate_scaled(
                    |tau| {
                        let e = (-tau * ratio).exp();
                        Ok(0.5 * tau * tau * (-tau).exp() * beta * (1.0 - e)
                            / (1.0 - beta * beta * e))
                    },
                    1.0,
                    &inner,
                )?;
                Ok(i.value)
            }
            _ => Ok(beta),
        }
    };
    let i = integrate_scaled(
        |xi| Ok(alpha.value_unchecked(xi) * beta_eff(xi)?),
        scale,
        config,
    )?;
    Ok(Estimate::scaled(i, -1.0 / (4.0 * PI * z * z * z)))
}

/// `F = −∇U` by central differences with step `1e-5` of the distance to the
/// surface.
pub fn cp_force(
    atom: &Atom,
    scene: &Scene,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<Vec3> {
    let d = scene.distance_to_body(atom.position);
    if scene.body().is_none() {
        return Ok(Vec3::ZERO);
    }
    let h = default_step(d);
    let scene = scene.clone();
    let g = gradient_fd(
        |p| cp_potential(&atom.at(p), &scene, regime, config),
        atom.position,
        h,
    )?;
    Ok(-g)
}
