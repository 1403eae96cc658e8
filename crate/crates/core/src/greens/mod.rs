//! Green tensors at imaginary frequency `ω = iξ`.
//!
//! Free-space tensors are closed forms.  Planar bodies use the image
//! construction (perfect plate) or a Sommerfeld integral over the
//! perpendicular decay constant; the sphere is treated quasi-statically
//! through its multipole expansion.  All values are real.

mod free;
mod planar;
mod sphere;

pub use free::{curl_g0_nonretarded, g0_nonretarded, g0_retarded, SeparationGeometry};
pub use planar::{
    g1_halfspace, g1_perfect_plate, g1_planar, g1_quasistatic_p, g1_quasistatic_s, g1_slab,
    FresnelCoefficients, PlanarReflector,
};
pub use sphere::{g1_sphere_nonretarded_potential_kernel, SphereKernel, MAX_MULTIPOLE_ORDER};

pub(crate) use free::{g0_kernel, g0_matrix};
pub(crate) use planar::coincident_trace_scaled;
