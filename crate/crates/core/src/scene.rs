//! Scene description: at most one canonical body plus up to two atoms.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::response::{MaterialResponse, Polarizability, ResponseRole};
use crate::tensor::Vec3;
use crate::units::Units;

/// A ground-state atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub position: Vec3,
    pub polarizability: Polarizability,
}

impl Atom {
    pub fn new(position: Vec3, polarizability: Polarizability) -> Result<Self> {
        if !position.is_finite() {
            return Err(Error::domain("atom position must be finite"));
        }
        polarizability.validate()?;
        Ok(Atom {
            position,
            polarizability,
        })
    }

    pub fn at(&self, position: Vec3) -> Atom {
        Atom { position, ..*self }
    }
}

/// Canonical bodies.  Planar bodies have their upper surface at `z = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Body {
    /// Perfectly conducting plate filling `z < 0`.
    PerfectPlate,
    /// Homogeneous magnetoelectric half-space filling `z < 0`.
    HalfSpace {
        epsilon: MaterialResponse,
        mu: MaterialResponse,
    },
    /// Slab filling `−d < z < 0`.
    Slab {
        thickness: f64,
        epsilon: MaterialResponse,
        mu: MaterialResponse,
    },
    /// Perfectly conducting sphere.  `neutral = false` means grounded.
    ConductingSphere {
        radius: f64,
        centre: Vec3,
        neutral: bool,
    },
}

impl Body {
    pub fn half_space(epsilon: MaterialResponse, mu: MaterialResponse) -> Result<Body> {
        let b = Body::HalfSpace { epsilon, mu };
        b.validate()?;
        Ok(b)
    }

    pub fn slab(thickness: f64, epsilon: MaterialResponse, mu: MaterialResponse) -> Result<Body> {
        let b = Body::Slab {
            thickness,
            epsilon,
            mu,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn sphere(radius: f64, centre: Vec3, neutral: bool) -> Result<Body> {
        let b = Body::ConductingSphere {
            radius,
            centre,
            neutral,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        let check_media = |eps: &MaterialResponse, mu: &MaterialResponse| {
            if eps.role() != ResponseRole::Electric || mu.role() != ResponseRole::Magnetic {
                return Err(Error::scene("epsilon must be electric and mu magnetic"));
            }
            Ok(())
        };
        match self {
            Body::PerfectPlate => Ok(()),
            Body::HalfSpace { epsilon, mu } => check_media(epsilon, mu),
            Body::Slab {
                thickness,
                epsilon,
                mu,
            } => {
                if !(thickness.is_finite() && *thickness > 0.0) {
                    return Err(Error::scene("slab thickness must be positive"));
                }
                check_media(epsilon, mu)
            }
            Body::ConductingSphere { radius, centre, .. } => {
                if !(radius.is_finite() && *radius > 0.0 && centre.is_finite()) {
                    return Err(Error::scene(
                        "sphere radius must be positive and centre finite",
                    ));
                }
                Ok(())
            }
        }
    }

    pub fn is_planar(&self) -> bool {
        !matches!(self, Body::ConductingSphere { .. })
    }

    /// Signed distance from `p` to the body surface (positive outside).
    pub fn distance_to_surface(&self, p: Vec3) -> f64 {
        match self {
            Body::ConductingSphere { radius, centre, .. } => (p - *centre).norm() - radius,
            _ => p.z,
        }
    }

    /// Electric and magnetic responses of a planar body.
    pub(crate) fn planar_media(&self) -> Option<(MaterialResponse, MaterialResponse)> {
        match *self {
            Body::PerfectPlate => Some((
                MaterialResponse::perfect_conductor(),
                MaterialResponse::vacuum(ResponseRole::Magnetic),
            )),
            Body::HalfSpace { epsilon, mu } | Body::Slab { epsilon, mu, .. } => Some((epsilon, mu)),
            Body::ConductingSphere { .. } => None,
        }
    }

    /// `true` if the body has a nontrivial permeability.
    pub fn is_magnetic(&self) -> bool {
        self.planar_media().is_some_and(|(_, mu)| !mu.is_vacuum())
    }

    /// `true` if the body has a nontrivial permittivity (conductors count).
    pub fn is_electric(&self) -> bool {
        match self.planar_media() {
            Some((eps, _)) => !eps.is_vacuum(),
            None => true,
        }
    }

    /// Resonance frequencies of the body's response models.
    pub(crate) fn resonances(&self) -> impl Iterator<Item = f64> {
        let media = self.planar_media();
        media
            .into_iter()
            .flat_map(|(e, m)| e.resonance().into_iter().chain(m.resonance()))
    }

    pub(crate) fn is_static(&self) -> bool {
        self.planar_media()
            .is_none_or(|(e, m)| e.is_static() && m.is_static())
    }
}

/// Immutable arrangement of one optional body and its atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    body: Option<Body>,
    atoms: Vec<Atom>,
    units: Units,
}

impl Scene {
    /// Builds a scene; at most one body, and every atom strictly outside it.
    pub fn new(bodies: Vec<Body>, atoms: Vec<Atom>) -> Result<Self> {
        if bodies.len() > 1 {
            return Err(Error::scene(format!(
                "at most one body per scene, got {}",
                bodies.len()
            )));
        }
        if atoms.len() > 2 {
            return Err(Error::scene(format!(
                "at most two atoms per scene, got {}",
                atoms.len()
            )));
        }
        let body = bodies.into_iter().next();
        if let Some(b) = &body {
            b.validate()?;
        }
        for (i, atom) in atoms.iter().enumerate() {
            atom.polarizability.validate()?;
            if let Some(b) = &body {
                let d = b.distance_to_surface(atom.position);
                if d.is_nan() || d <= 0.0 {
                    return Err(Error::scene(format!(
                        "atom {i} is not outside the body (distance {d})"
                    )));
                }
            }
        }
        Ok(Scene {
            body,
            atoms,
            units: Units::NATURAL,
        })
    }

    pub fn empty() -> Self {
        Scene {
            body: None,
            atoms: Vec::new(),
            units: Units::NATURAL,
        }
    }

    pub fn with_units(mut self, units: Units) -> Self {
        self.units = units;
        self
    }

    /// Same body, different atoms.
    pub fn with_atoms(&self, atoms: Vec<Atom>) -> Result<Self> {
        let bodies = self.body.into_iter().collect();
        Ok(Scene::new(bodies, atoms)?.with_units(self.units))
    }

    pub fn body(&self) -> Option<&Body> {
        self.body.as_ref()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> Result<&Atom> {
        self.atoms
            .get(i)
            .ok_or_else(|| Error::scene(format!("scene has no atom #{i}")))
    }

    pub fn units(&self) -> Units {
        self.units
    }

    /// Distance from `p` to the nearest body surface (infinite without a body).
    pub fn distance_to_body(&self, p: Vec3) -> f64 {
        self.body
            .as_ref()
            .map_or(f64::INFINITY, |b| b.distance_to_surface(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn atom(z: f64) -> Atom {
        Atom::new(Vec3::new(0.0, 0.0, z), Polarizability::Static(1.0)).unwrap()
    }

    #[test]
    fn rejects_atoms_inside_bodies() {
        assert!(matches!(
            Scene::new(vec![Body::PerfectPlate], vec![atom(0.0)]),
            Err(Error::InvalidScene(_))
        ));
        assert!(Scene::new(vec![Body::PerfectPlate], vec![atom(-1.0)]).is_err());
        let s = Body::sphere(1.0, Vec3::new(0.0, 0.0, -2.0), true).unwrap();
        assert!(Scene::new(vec![s], vec![atom(-1.5)]).is_err());
        assert!(Scene::new(vec![s], vec![atom(-0.5)]).is_ok());
    }

    #[test]
    fn rejects_multiple_bodies() {
        assert!(Scene::new(vec![Body::PerfectPlate, Body::PerfectPlate], vec![]).is_err());
    }

    #[test]
    fn rejects_bad_geometry() {
        let eps = MaterialResponse::electric_static(2.0).unwrap();
        let mu = MaterialResponse::vacuum(ResponseRole::Magnetic);
        assert!(Body::slab(0.0, eps, mu).is_err());
        assert!(Body::slab(1.0, mu, eps).is_err());
        assert!(Body::sphere(-1.0, Vec3::ZERO, true).is_err());
    }
}
