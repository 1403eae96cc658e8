//! Scattering Green tensors of bodies bounded by the plane `z = 0`.
//!
//! Both points lie above the plane.  With `Z = z + z′`, transverse separation
//! `R = (r − r′)∥`, `κ = √(k∥² + ξ²)` and `Q = 2R̂R̂ − I∥`, the Sommerfeld form
//! in the variable `κ ∈ (ξ, ∞)` reads
//!
//! ```text
//! G¹ = 1/(8π) ∫ dκ e^{−κZ} { r_s [J₀ I∥ + J₂ Q]
//!        − (r_p/ξ²) [κ² (J₀ I∥ − J₂ Q) + 2k∥² J₀ e_z e_z]
//!        + (r_p/ξ²) 2κk∥ J₁ (e_z R̂ − R̂ e_z) },     J_n = J_n(k∥R).
//! ```

#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

use super::free::{check_xi, g0_kernel, g0_matrix};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite_n, QuadratureConfig};
use crate::response::MaterialResponse;
use crate::scene::Body;
use crate::tensor::{GreenTensorValue, Mat3, TensorKind, Vec3};
use crate::FOUR_PI;

const EIGHT_PI: f64 = 2.0 * FOUR_PI;

/// Reflection coefficients for one transverse wave vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelCoefficients {
    pub r_s: f64,
    pub r_p: f64,
}

impl FresnelCoefficients {
    pub const PERFECT_CONDUCTOR: FresnelCoefficients = FresnelCoefficients {
        r_s: -1.0,
        r_p: 1.0,
    };

    /// Vacuum/medium interface.  Also returns `κ₁`, the decay constant inside
    /// the medium.
    pub fn interface(eps: f64, mu: f64, kappa: f64, xi: f64) -> (Self, f64) {
        Self::interface_excess(eps - 1.0, mu - 1.0, kappa, xi)
    }

    /// As [`interface`](Self::interface), from `ε − 1` and `μ − 1`.
    pub fn interface_excess(chi_e: f64, chi_m: f64, kappa: f64, xi: f64) -> (Self, f64) {
        let n2m1 = chi_e + chi_m + chi_e * chi_m;
        let k1 = (kappa * kappa + n2m1 * xi * xi).sqrt();
        // κ₁ − κ without cancellation
        let dk = n2m1 * xi * xi / (k1 + kappa);
        let r_s = (chi_m * kappa - dk) / ((1.0 + chi_m) * kappa + k1);
        let r_p = (chi_e * kappa - dk) / ((1.0 + chi_e) * kappa + k1);
        (FresnelCoefficients { r_s, r_p }, k1)
    }

    /// Multiple-reflection coefficients of a slab with `κ₁d = kappa1_d`.
    pub fn through_slab(self, kappa1_d: f64) -> Self {
        let e = (-2.0 * kappa1_d).exp();
        let f = |r: f64| r * (1.0 - e) / (1.0 - r * r * e);
        FresnelCoefficients {
            r_s: f(self.r_s),
            r_p: f(self.r_p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Reflection {
    Perfect,
    /// Susceptibilities `ε − 1`, `μ − 1`.
    Medium {
        chi_e: f64,
        chi_m: f64,
        thickness: Option<f64>,
    },
}

/// A planar body frozen at one imaginary frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarReflector {
    reflection: Reflection,
    xi: f64,
}

impl PlanarReflector {
    pub fn from_media(
        epsilon: &MaterialResponse,
        mu: &MaterialResponse,
        thickness: Option<f64>,
        xi: f64,
    ) -> Result<Self> {
        check_xi(xi)?;
        let reflection = match (epsilon.chi(xi)?, mu.chi(xi)?) {
            (None, _) => Reflection::Perfect,
            (Some(chi_e), Some(chi_m)) => Reflection::Medium {
                chi_e,
                chi_m,
                thickness,
            },
            (_, None) => return Err(Error::domain("permeability cannot be perfect")),
        };
        Ok(PlanarReflector { reflection, xi })
    }

    pub fn for_body(body: &Body, xi: f64) -> Result<Self> {
        let thickness = match body {
            Body::Slab { thickness, .. } => Some(*thickness),
            _ => None,
        };
        let (eps, mu) = body.planar_media().ok_or_else(|| {
            Error::unsupported("planar Green tensor requested for a non-planar body")
        })?;
        Self::from_media(&eps, &mu, thickness, xi)
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn is_perfect(&self) -> bool {
        self.reflection == Reflection::Perfect
    }

    /// `true` if nothing is reflected at any `κ`.
    pub fn is_transparent(&self) -> bool {
        matches!(self.reflection, Reflection::Medium { chi_e, chi_m, .. } if chi_e == 0.0 && chi_m == 0.0)
    }

    pub fn coefficients(&self, kappa: f64) -> FresnelCoefficients {
        match self.reflection {
            Reflection::Perfect => FresnelCoefficients::PERFECT_CONDUCTOR,
            Reflection::Medium {
                chi_e,
                chi_m,
                thickness,
            } => {
                let (r, k1) = FresnelCoefficients::interface_excess(chi_e, chi_m, kappa, self.xi);
                match thickness {
                    Some(d) => r.through_slab(k1 * d),
                    None => r,
                }
            }
        }
    }

    /// `r(κ) − r(∞)` evaluated without cancellation.
    pub fn excess(&self, kappa: f64) -> FresnelCoefficients {
        match self.reflection {
            Reflection::Perfect => FresnelCoefficients { r_s: 0.0, r_p: 0.0 },
            Reflection::Medium {
                chi_e,
                chi_m,
                thickness,
            } => {
                let xi = self.xi;
                let (eps, mu) = (1.0 + chi_e, 1.0 + chi_m);
                let n2m1 = chi_e + chi_m + chi_e * chi_m;
                let k1 = (kappa * kappa + n2m1 * xi * xi).sqrt();
                let dk = n2m1 * xi * xi / (k1 + kappa);
                let mut ex = FresnelCoefficients {
                    r_s: -2.0 * mu * dk / ((mu * kappa + k1) * (mu + 1.0)),
                    r_p: -2.0 * eps * dk / ((eps * kappa + k1) * (eps + 1.0)),
                };
                if let Some(d) = thickness {
                    // r_slab − r = r e (r² − 1)/(1 − r² e)
                    let (r, _) = FresnelCoefficients::interface_excess(chi_e, chi_m, kappa, xi);
                    let e = (-2.0 * k1 * d).exp();
                    ex.r_s += r.r_s * e * (r.r_s * r.r_s - 1.0) / (1.0 - r.r_s * r.r_s * e);
                    ex.r_p += r.r_p * e * (r.r_p * r.r_p - 1.0) / (1.0 - r.r_p * r.r_p * e);
                }
                ex
            }
        }
    }

    /// Limits `κ → ∞`: `β_s = (μ−1)/(μ+1)`, `β_p = (ε−1)/(ε+1)`.
    pub fn asymptotic(&self) -> FresnelCoefficients {
        match self.reflection {
            Reflection::Perfect => FresnelCoefficients::PERFECT_CONDUCTOR,
            Reflection::Medium { chi_e, chi_m, .. } => FresnelCoefficients {
                r_s: chi_m / (chi_m + 2.0),
                r_p: chi_e / (chi_e + 2.0),
            },
        }
    }
}

fn check_above(r: Vec3, r_prime: Vec3) -> Result<()> {
    if !(r.is_finite() && r_prime.is_finite()) {
        return Err(Error::domain("positions must be finite"));
    }
    if r.z <= 0.0 || r_prime.z <= 0.0 {
        return Err(Error::domain(
            "points must lie strictly above the surface z = 0",
        ));
    }
    Ok(())
}

const REFLECT: Mat3 = Mat3::diag(-1.0, -1.0, 1.0);

/// Image-source scattering tensor of a perfectly conducting plate.
pub fn g1_perfect_plate(r: Vec3, r_prime: Vec3, xi: f64) -> Result<GreenTensorValue> {
    check_xi(xi)?;
    check_above(r, r_prime)?;
    let m = g0_matrix(r - r_prime.mirrored(), xi) * REFLECT;
    Ok(GreenTensorValue::new(m, TensorKind::Scattering))
}

/// Sommerfeld integral for a planar reflector.
pub(crate) fn g1_sommerfeld(
    r: Vec3,
    r_prime: Vec3,
    refl: &PlanarReflector,
    config: &QuadratureConfig,
) -> Result<Mat3> {
    check_above(r, r_prime)?;
    if refl.is_transparent() {
        return Ok(Mat3::ZERO);
    }
    let xi = refl.xi();
    let z_sum = r.z + r_prime.z;
    let sep = Vec3::new(r.x - r_prime.x, r.y - r_prime.y, 0.0);
    let big_r = sep.norm();
    let on_axis = big_r == 0.0;
    let xz = xi * z_sum;

    // Dimensionless variable τ = (κ − ξ)Z.
    let parts = integrate_semi_infinite_n(
        |tau: f64| {
            let kz = xz + tau;
            let qz = (tau * (tau + 2.0 * xz)).sqrt();
            let c = refl.coefficients(kz / z_sum);
            let w = (-tau).exp();
            let (j0, j1, j2) = if on_axis {
                (1.0, 0.0, 0.0)
            } else {
                let x = qz * big_r / z_sum;
                (libm::j0(x), libm::j1(x), libm::jn(2, x))
            };
            let (s, p) = (w * c.r_s, w * c.r_p);
            Ok([
                s * j0,
                s * j2,
                p * kz * kz * j0,
                p * kz * kz * j2,
                2.0 * p * qz * qz * j0,
                2.0 * p * kz * qz * j1,
            ])
        },
        1.0,
        config,
    )?;
    let [s0, s2, p0, p2, pz, p1] = parts.map(|i| i.value);
    let pre = (-xz).exp() / EIGHT_PI;
    let sf = 1.0 / z_sum;
    let pf = 1.0 / (xi * xi * z_sum * z_sum * z_sum);

    let i2 = Mat3::diag(1.0, 1.0, 0.0);
    let ez = Vec3::new(0.0, 0.0, 1.0);
    let mut g = i2.scale(s0 * sf - p0 * pf) + Mat3::outer(ez, ez).scale(-pz * pf);
    if !on_axis {
        let rh = sep.scale(1.0 / big_r);
        let q = Mat3::outer(rh, rh).scale(2.0) - i2;
        g += q.scale(s2 * sf + p2 * pf);
        g += (Mat3::outer(ez, rh) - Mat3::outer(rh, ez)).scale(p1 * pf);
    }
    Ok(g.scale(pre))
}

/// Scattering tensor of a magnetoelectric half-space filling `z < 0`.
pub fn g1_halfspace(
    r: Vec3,
    r_prime: Vec3,
    xi: f64,
    epsilon: &MaterialResponse,
    mu: &MaterialResponse,
    config: &QuadratureConfig,
) -> Result<GreenTensorValue> {
    let refl = PlanarReflector::from_media(epsilon, mu, None, xi)?;
    Ok(GreenTensorValue::new(
        g1_sommerfeld(r, r_prime, &refl, config)?,
        TensorKind::Scattering,
    ))
}

/// Scattering tensor of a slab filling `−d < z < 0`.
pub fn g1_slab(
    r: Vec3,
    r_prime: Vec3,
    xi: f64,
    thickness: f64,
    epsilon: &MaterialResponse,
    mu: &MaterialResponse,
    config: &QuadratureConfig,
) -> Result<GreenTensorValue> {
    if !(thickness.is_finite() && thickness > 0.0) {
        return Err(Error::domain("slab thickness must be positive"));
    }
    let refl = PlanarReflector::from_media(epsilon, mu, Some(thickness), xi)?;
    Ok(GreenTensorValue::new(
        g1_sommerfeld(r, r_prime, &refl, config)?,
        TensorKind::Scattering,
    ))
}

/// Scattering tensor of any planar body.  Perfect plates use the image
/// construction.
pub fn g1_planar(
    r: Vec3,
    r_prime: Vec3,
    xi: f64,
    body: &Body,
    config: &QuadratureConfig,
) -> Result<GreenTensorValue> {
    if let Body::PerfectPlate = body {
        return g1_perfect_plate(r, r_prime, xi);
    }
    let refl = PlanarReflector::for_body(body, xi)?;
    Ok(GreenTensorValue::new(
        g1_sommerfeld(r, r_prime, &refl, config)?,
        TensorKind::Scattering,
    ))
}

/// `ξ² Tr G¹(r, r)` for a point at height `z`.
///
/// The `κ → ∞` limits of the reflection coefficients are integrated in closed
/// form, so the remaining integrand vanishes where `e^{−2κz}` is slowest.
pub(crate) fn coincident_trace_scaled(
    z: f64,
    refl: &PlanarReflector,
    config: &QuadratureConfig,
) -> Result<f64> {
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::domain(
            "point must lie strictly above the surface z = 0",
        ));
    }
    if refl.is_transparent() {
        return Ok(0.0);
    }
    let xi = refl.xi();
    let beta = refl.asymptotic();
    let e = (-2.0 * xi * z).exp();
    let closed = beta.r_s * xi * xi * e / (2.0 * z)
        - beta.r_p * e * (xi * xi / (2.0 * z) + xi / (z * z) + 1.0 / (2.0 * z * z * z));
    if refl.is_perfect() {
        return Ok(closed / FOUR_PI);
    }
    // τ = 2(κ − ξ)z
    let xz2 = 2.0 * xi * z;
    let [rest] = integrate_semi_infinite_n(
        |tau: f64| {
            let kappa = (xz2 + tau) / (2.0 * z);
            let c = refl.excess(kappa);
            let v = xi * xi * c.r_s - (2.0 * kappa * kappa - xi * xi) * c.r_p;
            Ok([(-tau).exp() * v])
        },
        1.0,
        config,
    )?;
    Ok((closed + e * rest.value / (2.0 * z)) / FOUR_PI)
}

/// Quasi-static p-polarized image kernel `(I − 3ρ̂̄ρ̂̄)·diag(−1,−1,1)/(4πρ̄³)`
/// with `ρ̄ = r − r̄′`.  The electric scattering tensor is
/// `ξ²G¹ ≈ β_p(iξ) × kernel`.
pub fn g1_quasistatic_p(r: Vec3, r_prime: Vec3) -> Result<Mat3> {
    check_above(r, r_prime)?;
    Ok(g0_kernel(r - r_prime.mirrored()).scale(-1.0) * REFLECT)
}

/// Quasi-static s-polarized kernel `(1/8π)[I∥/ρ̄ + Q R²/((ρ̄ + Z)²ρ̄)]`.
/// The magnetic scattering tensor is `G¹ ≈ β_s(iξ) × kernel`.
pub fn g1_quasistatic_s(r: Vec3, r_prime: Vec3) -> Result<Mat3> {
    check_above(r, r_prime)?;
    let sep = Vec3::new(r.x - r_prime.x, r.y - r_prime.y, 0.0);
    let z_sum = r.z + r_prime.z;
    let rb = (sep.dot(sep) + z_sum * z_sum).sqrt();
    let i2 = Mat3::diag(1.0, 1.0, 0.0);
    // Q R² without normalizing R
    let qr2 = Mat3::outer(sep, sep).scale(2.0) - i2.scale(sep.dot(sep));
    let m = i2.scale(1.0 / rb) + qr2.scale(1.0 / ((rb + z_sum) * (rb + z_sum) * rb));
    Ok(m.scale(1.0 / EIGHT_PI))
}
