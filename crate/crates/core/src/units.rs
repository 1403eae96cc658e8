//! Natural-unit bookkeeping.
//!
//! Internally `ħ = c = ε₀ = μ₀ = 1` and lengths are measured in an arbitrary
//! program unit.  Conversion to SI happens only at the edges (the CLI), using
//! the number of metres per program length unit.

use crate::error::{Error, Result};

/// `ħc` in J·m.
pub const HBAR_C_SI: f64 = 3.161_526_773_986_602e-26;

/// Length convention of a scene.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Units {
    length_unit_si: Option<f64>,
}

impl Units {
    /// Natural units without an SI anchor.
    pub const NATURAL: Units = Units {
        length_unit_si: None,
    };

    pub fn with_length_unit(metres: f64) -> Result<Self> {
        if !(metres.is_finite() && metres > 0.0) {
            return Err(Error::domain(
                "length unit must be a positive finite number of metres",
            ));
        }
        Ok(Units {
            length_unit_si: Some(metres),
        })
    }

    pub fn length_unit_si(&self) -> Option<f64> {
        self.length_unit_si
    }

    /// Energy in joules for a value given in `ħc/length`.
    pub fn energy_si(&self, value: f64) -> Option<f64> {
        self.length_unit_si.map(|l| value * HBAR_C_SI / l)
    }

    /// Force in newtons for a value given in `ħc/length²`.
    pub fn force_si(&self, value: f64) -> Option<f64> {
        self.length_unit_si.map(|l| value * HBAR_C_SI / (l * l))
    }

    /// Pressure in pascals for a value given in `ħc/length⁴`.
    pub fn pressure_si(&self, value: f64) -> Option<f64> {
        self.length_unit_si
            .map(|l| value * HBAR_C_SI / (l * l * l * l))
    }

    /// Description of the convention, echoed into output files.
    pub fn describe(&self) -> &'static str {
        "natural units hbar=c=eps0=mu0=1; energy in hbar*c/L, pressure in hbar*c/L^4, polarizability volume in L^3"
    }
}
