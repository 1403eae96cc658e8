use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::greens::{g0_kernel, g0_matrix, g1_planar, g1_quasistatic_p, PlanarReflector};
use crate::quadrature::{integrate_semi_infinite_n, QuadratureConfig};
use crate::regime::Regime;
use crate::scene::{Atom, Body, Scene};
use crate::tensor::Mat3;

use super::{check_atom, frequency_scale};

/// Two-atom potential split into its free-space and body-induced parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VdwResult {
    pub total: f64,
    pub free_space: f64,
    pub body_induced: f64,
    /// Quadrature error estimates of the two parts.
    pub error_estimate: [f64; 2],
}

/// Van der Waals potential of two atoms in the presence of the scene's body.
///
/// Both parts are integrated on the same frequency nodes.  Since
/// `G(r_B, r_A) = G(r_A, r_B)ᵀ` the trace is a Frobenius norm:
/// `U⁰ ∝ ‖G⁰‖²` and `U¹ ∝ 2⟨G⁰, G¹⟩ + ‖G¹‖²`.
pub fn vdw_potential(
    a: &Atom,
    b: &Atom,
    scene: &Scene,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<VdwResult> {
    config.validate()?;
    regime.validate(scene)?;
    check_atom(regime, &a.polarizability)?;
    check_atom(regime, &b.polarizability)?;
    let (ra, rb) = (a.position, b.position);
    let sep = (ra - rb).norm();
    if sep == 0.0 {
        return Err(Error::domain("the two atoms must be at distinct positions"));
    }
    let body = scene.body();
    let mut length = sep;
    if let Some(body) = body {
        let (da, db) = (body.distance_to_surface(ra), body.distance_to_surface(rb));
        if !(da > 0.0 && db > 0.0) {
            return Err(Error::scene("atoms must lie outside the body"));
        }
        if matches!(body, Body::ConductingSphere { .. }) {
            return Err(Error::unsupported(
                "van der Waals potentials near spheres are not implemented",
            ));
        }
        length = length.min(da).min(db);
        if regime == Regime::Nonretarded
            && (body.is_magnetic() || matches!(body, Body::Slab { .. }))
        {
            return Err(Error::unsupported(
                "the nonretarded two-atom engine covers electric half-spaces and perfect plates",
            ));
        }
    }
    let resonances = a
        .polarizability
        .resonance()
        .into_iter()
        .chain(b.polarizability.resonance());
    let scale = match body {
        Some(body) => frequency_scale(length, regime, resonances.chain(body.resonances()))?,
        None => frequency_scale(length, regime, resonances)?,
    };
    let inner = config.inner();
    let (pa, pb) = (&a.polarizability, &b.polarizability);

    // ξ²G⁰ and ξ²G¹ at one frequency.
    let tensors = |xi: f64| -> Result<(Mat3, Mat3)> {
        let xi2 = xi * xi;
        match (regime, body) {
            (Regime::Nonretarded, None) => Ok((g0_kernel(ra - rb).scale(-1.0), Mat3::ZERO)),
            (Regime::Nonretarded, Some(body)) => {
                let beta = PlanarReflector::for_body(body, xi)?.asymptotic().r_p;
                Ok((
                    g0_kernel(ra - rb).scale(-1.0),
                    g1_quasistatic_p(ra, rb)?.scale(beta),
                ))
            }
            (_, None) => Ok((g0_matrix(ra - rb, xi).scale(xi2), Mat3::ZERO)),
            // beyond ξZ = 80 the body term is below e^{−80}(ξZ)⁴ of its peak
            (_, Some(_)) if xi * (ra.z + rb.z) > 80.0 => {
                Ok((g0_matrix(ra - rb, xi).scale(xi2), Mat3::ZERO))
            }
            (_, Some(body)) => {
                let g1 = g1_planar(ra, rb, xi, body, &inner)?.matrix;
                Ok((g0_matrix(ra - rb, xi).scale(xi2), g1.scale(xi2)))
            }
        }
    };
    let [u0, u1] = integrate_semi_infinite_n(
        |xi| {
            let w = pa.value_unchecked(xi) * pb.value_unchecked(xi);
            let (g0, g1) = tensors(xi)?;
            Ok([
                w * g0.frobenius_dot(&g0),
                w * (2.0 * g0.frobenius_dot(&g1) + g1.frobenius_dot(&g1)),
            ])
        },
        scale,
        config,
    )?;
    let f = -8.0 * PI;
    let (free_space, body_induced) = (f * u0.value, f * u1.value);
    Ok(VdwResult {
        total: free_space + body_induced,
        free_space,
        body_induced,
        error_estimate: [(f * u0.error_estimate).abs(), (f * u1.error_estimate).abs()],
    })
}
