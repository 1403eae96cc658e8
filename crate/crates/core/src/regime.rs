//! Approximation regimes for the frequency integrals.

use alloc::format;

use crate::error::{Error, Result};
use crate::scene::Scene;

/// How response functions and Green tensors are approximated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Long-distance limit: every response frozen at its `ξ = 0` value.  Only
    /// static or perfectly conducting models are admissible.
    Retarded,
    /// Short-distance limit: quasi-static Green tensors (electric bodies).
    Nonretarded,
    /// No approximation.
    FullDispersive,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::Retarded => "retarded",
            Regime::Nonretarded => "nonretarded",
            Regime::FullDispersive => "full",
        }
    }

    /// Checks that the scene's response models are admissible in this regime.
    pub fn validate(self, scene: &Scene) -> Result<()> {
        if self != Regime::Retarded {
            return Ok(());
        }
        for (i, atom) in scene.atoms().iter().enumerate() {
            if !atom.polarizability.is_static() {
                return Err(Error::domain(format!(
                    "retarded regime needs static polarizabilities (atom {i} is dispersive)"
                )));
            }
        }
        if let Some(b) = scene.body() {
            if !b.is_static() {
                return Err(Error::domain(
                    "retarded regime needs static or perfectly conducting media",
                ));
            }
        }
        Ok(())
    }
}

impl core::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "retarded" | "long" => Ok(Regime::Retarded),
            "nonretarded" | "short" => Ok(Regime::Nonretarded),
            "full" | "dispersive" => Ok(Regime::FullDispersive),
            other => Err(Error::domain(format!("unknown regime '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::response::{MaterialResponse, Polarizability};
    use crate::scene::{Atom, Body};
    use crate::tensor::Vec3;
    use alloc::vec;

    #[test]
    fn retarded_rejects_dispersive_models() {
        let eps = MaterialResponse::electric_resonance(4.0, 1.0).unwrap();
        let mu = MaterialResponse::magnetic_static(1.0).unwrap();
        let atom = Atom::new(Vec3::new(0.0, 0.0, 1.0), Polarizability::Static(1.0)).unwrap();
        let s = Scene::new(vec![Body::half_space(eps, mu).unwrap()], vec![atom]).unwrap();
        assert!(Regime::Retarded.validate(&s).is_err());
        assert!(Regime::FullDispersive.validate(&s).is_ok());
        let disp = Atom::new(
            atom.position,
            Polarizability::SingleResonance {
                static_volume: 1.0,
                resonance: 1.0,
            },
        )
        .unwrap();
        let s2 = Scene::new(vec![Body::PerfectPlate], vec![disp]).unwrap();
        assert!(Regime::Retarded.validate(&s2).is_err());
    }

    #[test]
    fn parses_labels() {
        assert_eq!("retarded".parse::<Regime>().unwrap(), Regime::Retarded);
        assert!("bogus".parse::<Regime>().is_err());
    }
}
