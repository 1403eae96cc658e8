use crate::error::{Error, Result};

/// Hard cap on the multipole order.
pub const MAX_MULTIPOLE_ORDER: usize = 5000;

const FIRST_BLOCK: usize = 16;
const REL_INCREMENT: f64 = 1e-10;

/// Quasi-static multipole sum for a perfectly conducting sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereKernel {
    /// `K(z, R)` with `U = −(1/4π²)·K·∫dξ α′(iξ)`.
    pub value: f64,
    /// Highest multipole order included.
    pub l_max: usize,
}

/// `K(z, R) = 2π Σ_l (l+1)(2l+1) R^{2l+1}/z^{2l+4}` for an atom at distance `z`
/// from the centre of a sphere of radius `R`.
///
/// A neutral sphere starts at the dipole `l = 1`; a grounded one includes
/// `l = 0`.  Orders are added in blocks of doubling size until a block changes
/// the sum by less than `1e-10` relative, up to `max_order`.
pub fn g1_sphere_nonretarded_potential_kernel(
    z: f64,
    radius: f64,
    neutral: bool,
    max_order: usize,
) -> Result<SphereKernel> {
    if !(radius > 0.0 && radius.is_finite() && z.is_finite()) {
        return Err(Error::domain("sphere radius must be positive"));
    }
    if z <= radius {
        return Err(Error::domain("atom must lie outside the sphere"));
    }
    let q2 = (radius / z) * (radius / z);
    let mut power = radius / z;
    let mut l = 0usize;
    if neutral {
        power *= q2;
        l = 1;
    }
    let mut sum = 0.0;
    let mut block_end = FIRST_BLOCK;
    loop {
        let mut block = 0.0;
        let end = block_end.min(max_order);
        while l <= end {
            let lf = l as f64;
            block += (lf + 1.0) * (2.0 * lf + 1.0) * power;
            power *= q2;
            l += 1;
        }
        sum += block;
        if block <= REL_INCREMENT * sum || power == 0.0 {
            break;
        }
        if end >= max_order {
            let scale = 2.0 * core::f64::consts::PI / (z * z * z);
            return Err(Error::NonConvergence {
                estimate: scale * sum,
                error_bound: scale * block,
            });
        }
        block_end *= 2;
    }
    Ok(SphereKernel {
        value: 2.0 * core::f64::consts::PI * sum / (z * z * z),
        l_max: l - 1,
    })
}
