//! Material and atomic response functions at imaginary frequency.
//!
//! All models are evaluated at `ω = iξ` with `ξ ≥ 0`, where causal response
//! functions are real and monotonically nonincreasing.

use crate::error::{Error, Result};

/// Whether a response describes the permittivity or the permeability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResponseRole {
    Electric,
    Magnetic,
}

/// Functional form of a material response.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResponseModel {
    /// Frequency independent value.
    Static(f64),
    /// `1 + (static_value − 1)/(1 + ξ²/ω_r²)`.
    SingleResonance { static_value: f64, resonance: f64 },
    /// Ideal conductor.  Has no finite permittivity; Green tensors map it to
    /// reflection coefficients `r_p = +1`, `r_s = −1`.
    PerfectConductor,
}

/// Value of a response at one imaginary frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResponseValue {
    Finite(f64),
    Perfect,
}

impl ResponseValue {
    pub fn finite(self) -> Option<f64> {
        match self {
            ResponseValue::Finite(v) => Some(v),
            ResponseValue::Perfect => None,
        }
    }
}

/// ε(iξ) or μ(iξ) of a homogeneous body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialResponse {
    model: ResponseModel,
    role: ResponseRole,
}

fn check_frequency(xi: f64) -> Result<()> {
    if xi.is_finite() && xi >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            "imaginary frequency must be finite and nonnegative",
        ))
    }
}

impl MaterialResponse {
    pub fn new(model: ResponseModel, role: ResponseRole) -> Result<Self> {
        let valid_static = |v: f64| match role {
            ResponseRole::Electric => v.is_finite() && v >= 1.0,
            ResponseRole::Magnetic => v.is_finite() && v > 0.0,
        };
        match model {
            ResponseModel::Static(v) if !valid_static(v) => {
                return Err(Error::domain("static response out of range (ε ≥ 1, μ > 0)"));
            }
            ResponseModel::SingleResonance {
                static_value,
                resonance,
            } => {
                if !valid_static(static_value) {
                    return Err(Error::domain("static response out of range (ε ≥ 1, μ > 0)"));
                }
                if !(resonance.is_finite() && resonance > 0.0) {
                    return Err(Error::domain("resonance frequency must be positive"));
                }
            }
            ResponseModel::PerfectConductor if role == ResponseRole::Magnetic => {
                return Err(Error::domain("perfect conductor model is electric only"));
            }
            _ => {}
        }
        Ok(MaterialResponse { model, role })
    }

    /// Vacuum permittivity or permeability.
    pub fn vacuum(role: ResponseRole) -> Self {
        MaterialResponse {
            model: ResponseModel::Static(1.0),
            role,
        }
    }

    pub fn electric_static(eps: f64) -> Result<Self> {
        Self::new(ResponseModel::Static(eps), ResponseRole::Electric)
    }

    pub fn magnetic_static(mu: f64) -> Result<Self> {
        Self::new(ResponseModel::Static(mu), ResponseRole::Magnetic)
    }

    pub fn electric_resonance(static_value: f64, resonance: f64) -> Result<Self> {
        Self::new(
            ResponseModel::SingleResonance {
                static_value,
                resonance,
            },
            ResponseRole::Electric,
        )
    }

    pub fn magnetic_resonance(static_value: f64, resonance: f64) -> Result<Self> {
        Self::new(
            ResponseModel::SingleResonance {
                static_value,
                resonance,
            },
            ResponseRole::Magnetic,
        )
    }

    pub fn perfect_conductor() -> Self {
        MaterialResponse {
            model: ResponseModel::PerfectConductor,
            role: ResponseRole::Electric,
        }
    }

    pub fn model(&self) -> ResponseModel {
        self.model
    }

    pub fn role(&self) -> ResponseRole {
        self.role
    }

    pub fn evaluate(&self, xi: f64) -> Result<ResponseValue> {
        check_frequency(xi)?;
        Ok(self.value_unchecked(xi))
    }

    pub(crate) fn value_unchecked(&self, xi: f64) -> ResponseValue {
        match self.model {
            ResponseModel::Static(v) => ResponseValue::Finite(v),
            ResponseModel::SingleResonance {
                static_value,
                resonance,
            } => {
                let q = xi / resonance;
                ResponseValue::Finite(1.0 + (static_value - 1.0) / (1.0 + q * q))
            }
            ResponseModel::PerfectConductor => ResponseValue::Perfect,
        }
    }

    /// `value − 1`, computed without forming the value first so that it keeps
    /// full relative precision when tiny.  `None` for a perfect conductor.
    pub(crate) fn excess_unchecked(&self, xi: f64) -> Option<f64> {
        match self.model {
            ResponseModel::Static(v) => Some(v - 1.0),
            ResponseModel::SingleResonance {
                static_value,
                resonance,
            } => {
                let q = xi / resonance;
                Some((static_value - 1.0) / (1.0 + q * q))
            }
            ResponseModel::PerfectConductor => None,
        }
    }

    /// Susceptibility `χ = ε − 1` (electric role).
    pub fn chi(&self, xi: f64) -> Result<Option<f64>> {
        check_frequency(xi)?;
        Ok(self.excess_unchecked(xi))
    }

    /// `ζ = 1/μ − 1` (magnetic role).
    pub fn zeta(&self, xi: f64) -> Result<Option<f64>> {
        check_frequency(xi)?;
        Ok(self.excess_unchecked(xi).map(|x| -x / (1.0 + x)))
    }

    pub fn is_static(&self) -> bool {
        !matches!(self.model, ResponseModel::SingleResonance { .. })
    }

    pub fn is_perfect(&self) -> bool {
        matches!(self.model, ResponseModel::PerfectConductor)
    }

    /// `true` if the response equals the vacuum value at every frequency.
    pub fn is_vacuum(&self) -> bool {
        match self.model {
            ResponseModel::Static(v) => v == 1.0,
            ResponseModel::SingleResonance { static_value, .. } => static_value == 1.0,
            ResponseModel::PerfectConductor => false,
        }
    }

    pub fn resonance(&self) -> Option<f64> {
        match self.model {
            ResponseModel::SingleResonance { resonance, .. } => Some(resonance),
            _ => None,
        }
    }
}

/// Atomic polarizability volume `α′(iξ) = α(iξ)/(4πε₀)` in length³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Polarizability {
    Static(f64),
    /// `α′₀/(1 + ξ²/ω₀²)`.
    SingleResonance {
        static_volume: f64,
        resonance: f64,
    },
}

impl Polarizability {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Polarizability::Static(a) => a.is_finite() && a > 0.0,
            Polarizability::SingleResonance {
                static_volume,
                resonance,
            } => {
                static_volume.is_finite()
                    && static_volume > 0.0
                    && resonance.is_finite()
                    && resonance > 0.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(
                "polarizability volume and resonance must be positive",
            ))
        }
    }

    pub fn evaluate(&self, xi: f64) -> Result<f64> {
        check_frequency(xi)?;
        Ok(self.value_unchecked(xi))
    }

    pub(crate) fn value_unchecked(&self, xi: f64) -> f64 {
        match *self {
            Polarizability::Static(a) => a,
            Polarizability::SingleResonance {
                static_volume,
                resonance,
            } => {
                let q = xi / resonance;
                static_volume / (1.0 + q * q)
            }
        }
    }

    pub fn static_volume(&self) -> f64 {
        match *self {
            Polarizability::Static(a) => a,
            Polarizability::SingleResonance { static_volume, .. } => static_volume,
        }
    }

    pub fn is_static(&self) -> bool {
        matches!(self, Polarizability::Static(_))
    }

    pub fn resonance(&self) -> Option<f64> {
        match *self {
            Polarizability::SingleResonance { resonance, .. } => Some(resonance),
            Polarizability::Static(_) => None,
        }
    }
}

/// Either kind of response model, for [`evaluate_response`].
#[derive(Debug, Clone, Copy)]
pub enum AnyResponse<'a> {
    Material(&'a MaterialResponse),
    Atom(&'a Polarizability),
}

impl<'a> From<&'a MaterialResponse> for AnyResponse<'a> {
    fn from(m: &'a MaterialResponse) -> Self {
        AnyResponse::Material(m)
    }
}

impl<'a> From<&'a Polarizability> for AnyResponse<'a> {
    fn from(p: &'a Polarizability) -> Self {
        AnyResponse::Atom(p)
    }
}

/// Evaluates a material response or an atomic polarizability at `iξ`.
pub fn evaluate_response<'a>(m: impl Into<AnyResponse<'a>>, xi: f64) -> Result<ResponseValue> {
    match m.into() {
        AnyResponse::Material(m) => m.evaluate(xi),
        AnyResponse::Atom(p) => p.evaluate(xi).map(ResponseValue::Finite),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn static_model_is_constant() {
        let eps = MaterialResponse::electric_static(11.7).unwrap();
        assert_eq!(
            evaluate_response(&eps, 3.2).unwrap(),
            ResponseValue::Finite(11.7)
        );
    }

    #[test]
    fn single_resonance_values() {
        let a = Polarizability::SingleResonance {
            static_volume: 1.0,
            resonance: 1.0,
        };
        assert_eq!(
            evaluate_response(&a, 1.0).unwrap(),
            ResponseValue::Finite(0.5)
        );
        let eps = MaterialResponse::electric_resonance(5.0, 2.0).unwrap();
        assert_eq!(
            evaluate_response(&eps, 0.0).unwrap(),
            ResponseValue::Finite(5.0)
        );
    }

    #[test]
    fn rejects_bad_frequencies() {
        let eps = MaterialResponse::electric_static(2.0).unwrap();
        assert!(matches!(eps.evaluate(-1.0), Err(Error::Domain(_))));
        assert!(matches!(eps.evaluate(f64::INFINITY), Err(Error::Domain(_))));
        assert!(Polarizability::Static(1.0).evaluate(f64::NAN).is_err());
    }

    #[test]
    fn rejects_unphysical_models() {
        assert!(MaterialResponse::electric_static(0.5).is_err());
        assert!(MaterialResponse::magnetic_static(0.0).is_err());
        assert!(MaterialResponse::magnetic_static(0.5).is_ok());
        assert!(MaterialResponse::electric_resonance(3.0, 0.0).is_err());
        assert!(
            MaterialResponse::new(ResponseModel::PerfectConductor, ResponseRole::Magnetic).is_err()
        );
        assert!(Polarizability::Static(-1.0).validate().is_err());
    }

    #[test]
    fn perfect_conductor_is_flagged_not_finite() {
        let pc = MaterialResponse::perfect_conductor();
        assert_eq!(pc.evaluate(1.0).unwrap(), ResponseValue::Perfect);
        assert_eq!(pc.chi(1.0).unwrap(), None);
    }

    #[test]
    fn zeta_has_sign_opposite_to_mu_minus_one() {
        let para = MaterialResponse::magnetic_resonance(3.0, 1.0).unwrap();
        let dia = MaterialResponse::magnetic_static(0.6).unwrap();
        assert!(para.zeta(0.5).unwrap().unwrap() < 0.0);
        assert!(dia.zeta(0.5).unwrap().unwrap() > 0.0);
    }
}
