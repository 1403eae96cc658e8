//! Scale transformations and power-law verification.
//!
//! Scaling every length of a configuration by `a` while keeping the response
//! functions fixed turns dispersion interactions into pure powers of `a` in
//! the long-distance limit (static responses) and in the short-distance limit
//! (quasi-static kernels).  [`measure_exponent`] samples an observable on
//! scaled scenes and fits the exponent; [`scaling_cases`] lists the twelve
//! canonical checks.

mod exponents;
mod map;
mod scale_fn;

pub use exponents::{
    expected_exponent, measure_exponent, scaling_cases, total_force_exponent, Column, Quantity,
    ScalingCase, ScalingReport, DEFAULT_A_SAMPLES,
};
pub use map::{
    enhancement_map, enhancement_ratio, transverse_profile, EnhancementMap, GridSpec, LobeSummary,
};
pub use scale_fn::{
    scale_function, scale_function_at, ScaleFamily, ScaleFunctionCurve, SI_PERMITTIVITY,
};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scene::{Atom, Body, Scene};

fn scale_body(body: &Body, a: f64) -> Body {
    match *body {
        Body::Slab {
            thickness,
            epsilon,
            mu,
        } => Body::Slab {
            thickness: a * thickness,
            epsilon,
            mu,
        },
        Body::ConductingSphere {
            radius,
            centre,
            neutral,
        } => Body::ConductingSphere {
            radius: a * radius,
            centre: centre.scale(a),
            neutral,
        },
        other => other,
    }
}

/// Multiplies every length of the scene by `a`; responses are unchanged.
pub fn scale_scene(scene: &Scene, a: f64) -> Result<Scene> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain("scale factor must be positive and finite"));
    }
    let bodies: Vec<Body> = scene.body().map(|b| scale_body(b, a)).into_iter().collect();
    let atoms: Vec<Atom> = scene
        .atoms()
        .iter()
        .map(|at| at.at(at.position.scale(a)))
        .collect();
    Ok(Scene::new(bodies, atoms)?.with_units(scene.units()))
}
