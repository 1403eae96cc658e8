#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::tensor::{GreenTensorValue, Mat3, TensorKind, Vec3};
use crate::FOUR_PI;

/// Separation `ρ = r − r′`, its length and direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationGeometry {
    pub rho: Vec3,
    pub distance: f64,
    pub direction: Vec3,
}

impl SeparationGeometry {
    pub fn new(r: Vec3, r_prime: Vec3) -> Result<Self> {
        let rho = r - r_prime;
        let distance = rho.norm();
        if !distance.is_finite() {
            return Err(Error::domain("positions must be finite"));
        }
        if distance == 0.0 {
            return Err(Error::Coincident(
                "the bulk Green tensor is singular at r = r′",
            ));
        }
        Ok(SeparationGeometry {
            rho,
            distance,
            direction: rho.scale(1.0 / distance),
        })
    }
}

pub(crate) fn check_xi(xi: f64) -> Result<()> {
    if xi.is_finite() && xi > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            "imaginary frequency must be positive and finite",
        ))
    }
}

/// `G⁰` along a separation `ρ` at imaginary frequency `ξ`.
pub(crate) fn g0_matrix(rho: Vec3, xi: f64) -> Mat3 {
    let d = rho.norm();
    let e = rho.scale(1.0 / d);
    let u = xi * d;
    let pre = (-u).exp() / (FOUR_PI * xi * xi * d * d * d);
    Mat3::IDENTITY.scale(pre * (1.0 + u + u * u))
        - Mat3::outer(e, e).scale(pre * (3.0 + 3.0 * u + u * u))
}

/// Quasi-static kernel `−(I − 3e_ρe_ρ)/(4πρ³)`; the physical tensor is
/// `(c²/ω²)` times it, i.e. `−1/ξ²` times it at `ω = iξ`.
pub(crate) fn g0_kernel(rho: Vec3) -> Mat3 {
    let d = rho.norm();
    let e = rho.scale(1.0 / d);
    (Mat3::IDENTITY - Mat3::outer(e, e).scale(3.0)).scale(-1.0 / (FOUR_PI * d * d * d))
}

/// Free-space Green tensor at `ω = iξ` for `r ≠ r′`.
pub fn g0_retarded(r: Vec3, r_prime: Vec3, xi: f64) -> Result<GreenTensorValue> {
    check_xi(xi)?;
    let s = SeparationGeometry::new(r, r_prime)?;
    Ok(GreenTensorValue::new(
        g0_matrix(s.rho, xi),
        TensorKind::Bulk,
    ))
}

/// Frequency-rescaled quasi-static free-space kernel `−(I − 3e_ρe_ρ)/(4πρ³)`.
pub fn g0_nonretarded(r: Vec3, r_prime: Vec3) -> Result<GreenTensorValue> {
    let s = SeparationGeometry::new(r, r_prime)?;
    Ok(GreenTensorValue::new(g0_kernel(s.rho), TensorKind::Bulk))
}

/// Quasi-static `∇ × G⁰ = −(e_ρ × I)/(4πρ²)`.
pub fn curl_g0_nonretarded(r: Vec3, r_prime: Vec3) -> Result<GreenTensorValue> {
    let s = SeparationGeometry::new(r, r_prime)?;
    let m = Mat3::cross(s.direction).scale(-1.0 / (FOUR_PI * s.distance * s.distance));
    Ok(GreenTensorValue::new(m, TensorKind::CurlLeft))
}

#[cfg(test)]
mod tests {
    use super::*;

    const O: Vec3 = Vec3::ZERO;
    const EZ: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    #[test]
    fn retarded_on_axis() {
        let g = g0_retarded(EZ, O, 1.0).unwrap().matrix;
        let c = (-1.0f64).exp() / FOUR_PI;
        let want = Mat3::diag(3.0 * c, 3.0 * c, -4.0 * c);
        assert!(g.max_abs_diff(&want) < 1e-15);
        assert!(
            (g.get(0, 0) - 0.087_824_747).abs() < 1e-9
                && (g.get(2, 2) + 0.117_099_663).abs() < 1e-7
        );
    }

    #[test]
    fn retarded_reduces_to_quasi_static() {
        let r = Vec3::new(0.3, -0.4, 1.1);
        let xi = 1e-6;
        let g = g0_retarded(r, O, xi).unwrap().matrix.scale(xi * xi);
        let k = g0_nonretarded(r, O).unwrap().matrix.scale(-1.0);
        assert!(g.max_abs_diff(&k) <= 1e-10 * k.max_abs());
    }

    #[test]
    fn kernel_values() {
        let k = g0_nonretarded(EZ, O).unwrap().matrix;
        assert!(k.max_abs_diff(&Mat3::diag(-1.0, -1.0, 2.0).scale(1.0 / FOUR_PI)) < 1e-16);
        let r = Vec3::new(0.2, 0.7, -0.5);
        assert!(g0_nonretarded(r, O).unwrap().trace().abs() < 1e-14);
        let k2 = g0_nonretarded(r.scale(2.0), O).unwrap().matrix.scale(8.0);
        assert!(k2.max_abs_diff(&g0_nonretarded(r, O).unwrap().matrix) < 1e-14);
    }

    #[test]
    fn curl_values() {
        let c = curl_g0_nonretarded(EZ, O).unwrap().matrix;
        let want = Mat3([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]).scale(-1.0 / FOUR_PI);
        assert!(c.max_abs_diff(&want) < 1e-16);
        let r = Vec3::new(0.2, 0.7, -0.5);
        let c = curl_g0_nonretarded(r, O).unwrap().matrix;
        assert!((c + c.transpose()).max_abs() < 1e-16);
        let c2 = curl_g0_nonretarded(r.scale(3.0), O)
            .unwrap()
            .matrix
            .scale(9.0);
        assert!(c2.max_abs_diff(&c) < 1e-14);
    }

    #[test]
    fn coincident_points_are_rejected() {
        assert!(matches!(
            g0_retarded(EZ, EZ, 1.0),
            Err(Error::Coincident(_))
        ));
        assert!(matches!(g0_nonretarded(EZ, EZ), Err(Error::Coincident(_))));
        assert!(matches!(
            curl_g0_nonretarded(EZ, EZ),
            Err(Error::Coincident(_))
        ));
        assert!(g0_retarded(EZ, O, 0.0).is_err());
    }
}
