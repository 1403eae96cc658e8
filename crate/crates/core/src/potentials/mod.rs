//! Dispersion observables built from the Green tensors.
//!
//! In natural units with polarizability volumes the frequency integrals read
//!
//! ```text
//! U(r_A)      =  2  ∫dξ ξ² α′(iξ) Tr G¹(r_A, r_A, iξ)
//! U(r_A, r_B) = −8π ∫dξ ξ⁴ α′_A α′_B Tr[G(r_A, r_B) G(r_B, r_A)]
//! ```
//!
//! The frequency substitution scale is `1/(2L)` in the retarded regime (`L`
//! the shortest length of the configuration), the lowest resonance in the
//! nonretarded regime, and their geometric mean otherwise.

mod coefficients;
mod cp;
mod pressure;
mod vdw;

pub use coefficients::{
    fit_nonretarded_coefficients, nonretarded_halfspace_coefficients, NonretardedCoefficients,
};
pub use cp::{cp_force, cp_potential, cp_potential_estimate};
pub use pressure::{lifshitz_pressure, lifshitz_pressure_estimate, PlanarMedium};
pub use vdw::{vdw_potential, VdwResult};

use alloc::format;

#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::quadrature::Integral;
use crate::regime::Regime;
use crate::response::Polarizability;

/// A computed value with the quadrature's error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error_estimate: f64,
}

impl Estimate {
    pub const ZERO: Estimate = Estimate {
        value: 0.0,
        error_estimate: 0.0,
    };

    fn scaled(i: Integral, factor: f64) -> Self {
        Estimate {
            value: factor * i.value,
            error_estimate: (factor * i.error_estimate).abs(),
        }
    }
}

/// Substitution scale for the outer frequency integral.
fn frequency_scale(
    length: f64,
    regime: Regime,
    resonances: impl Iterator<Item = f64>,
) -> Result<f64> {
    let lowest = resonances.fold(f64::INFINITY, f64::min);
    let geometric = 0.5 / length;
    match regime {
        Regime::Retarded => Ok(geometric),
        Regime::FullDispersive if lowest.is_finite() => Ok((geometric * lowest).sqrt()),
        Regime::FullDispersive => Ok(geometric),
        Regime::Nonretarded if lowest.is_finite() => Ok(lowest),
        Regime::Nonretarded => Err(Error::domain(
            "nonretarded frequency integrals diverge without a dispersive atom or medium",
        )),
    }
}

fn check_atom(regime: Regime, alpha: &Polarizability) -> Result<()> {
    alpha.validate()?;
    if regime == Regime::Retarded && !alpha.is_static() {
        return Err(Error::domain(format!(
            "retarded regime needs a static polarizability, got {alpha:?}"
        )));
    }
    Ok(())
}
