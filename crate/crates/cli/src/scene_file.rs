//! Scene description files.
//!
//! ```json
//! {
//!   "bodies": [{"type": "half_space",
//!               "epsilon": {"model": "resonance", "value": 4.0, "omega": 1.0},
//!               "mu": {"model": "static", "value": 1.0}}],
//!   "atoms": [{"position": [0, 0, 0.001],
//!              "alpha": {"model": "resonance", "value": 1.0, "omega": 1.0}}],
//!   "length_unit_si": 1e-6
//! }
//! ```

use std::path::Path;

use dispersia_core::{
    Atom, Body, MaterialResponse, Polarizability, ResponseModel, ResponseRole, Scene, Units, Vec3,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    #[serde(default)]
    pub bodies: Vec<BodySpec>,
    #[serde(default)]
    pub atoms: Vec<AtomSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length_unit_si: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodyKind {
    PerfectPlate,
    HalfSpace,
    Slab,
    Sphere,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodySpec {
    #[serde(rename = "type")]
    pub kind: BodyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<ResponseSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<ResponseSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<[f64; 3]>,
    /// Spheres only; `false` selects the grounded sphere.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neutral: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Static,
    Resonance,
    Perfect,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResponseSpec {
    pub model: ModelKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub position: [f64; 3],
    pub alpha: ResponseSpec,
}

impl SceneFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
            .map_err(|e| CliError::invalid(format!("{}: {}", path.display(), e.message())))
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::invalid(e.to_string()))
    }

    pub fn to_scene(&self) -> Result<Scene, CliError> {
        let bodies = self
            .bodies
            .iter()
            .map(BodySpec::to_body)
            .collect::<Result<_, _>>()?;
        let atoms = self
            .atoms
            .iter()
            .map(|a| a.to_atom())
            .collect::<Result<_, _>>()?;
        let mut scene = Scene::new(bodies, atoms)?;
        if let Some(l) = self.length_unit_si {
            scene = scene.with_units(Units::with_length_unit(l)?);
        }
        Ok(scene)
    }
}

fn required(value: Option<f64>, what: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::invalid(format!("missing \"{what}\"")))
}

impl ResponseSpec {
    fn to_material(self, role: ResponseRole) -> Result<MaterialResponse, CliError> {
        let model = match self.model {
            ModelKind::Static => ResponseModel::Static(required(self.value, "value")?),
            ModelKind::Resonance => ResponseModel::SingleResonance {
                static_value: required(self.value, "value")?,
                resonance: required(self.omega, "omega")?,
            },
            ModelKind::Perfect => ResponseModel::PerfectConductor,
        };
        if self.model != ModelKind::Resonance && self.omega.is_some() {
            return Err(CliError::invalid(
                "\"omega\" is only meaningful for resonance models",
            ));
        }
        Ok(MaterialResponse::new(model, role)?)
    }

    fn to_polarizability(self) -> Result<Polarizability, CliError> {
        let alpha = match self.model {
            ModelKind::Static if self.omega.is_none() => {
                Polarizability::Static(required(self.value, "value")?)
            }
            ModelKind::Resonance => Polarizability::SingleResonance {
                static_volume: required(self.value, "value")?,
                resonance: required(self.omega, "omega")?,
            },
            ModelKind::Static => {
                return Err(CliError::invalid(
                    "\"omega\" is only meaningful for resonance models",
                ))
            }
            ModelKind::Perfect => {
                return Err(CliError::invalid(
                    "atoms cannot have a perfect polarizability",
                ))
            }
        };
        alpha.validate()?;
        Ok(alpha)
    }
}

impl BodySpec {
    fn media(&self) -> Result<(MaterialResponse, MaterialResponse), CliError> {
        let epsilon = self
            .epsilon
            .ok_or_else(|| CliError::invalid("missing \"epsilon\""))?
            .to_material(ResponseRole::Electric)?;
        let mu = match self.mu {
            Some(m) => m.to_material(ResponseRole::Magnetic)?,
            None => MaterialResponse::vacuum(ResponseRole::Magnetic),
        };
        Ok((epsilon, mu))
    }

    fn reject(&self, fields: &[(&str, bool)]) -> Result<(), CliError> {
        for (name, present) in fields {
            if *present {
                return Err(CliError::invalid(format!(
                    "\"{name}\" does not apply to a {} body",
                    self.kind_label()
                )));
            }
        }
        Ok(())
    }

    fn kind_label(&self) -> &'static str {
        match self.kind {
            BodyKind::PerfectPlate => "perfect_plate",
            BodyKind::HalfSpace => "half_space",
            BodyKind::Slab => "slab",
            BodyKind::Sphere => "sphere",
        }
    }

    fn to_body(&self) -> Result<Body, CliError> {
        Ok(match self.kind {
            BodyKind::PerfectPlate => {
                self.reject(&[
                    ("epsilon", self.epsilon.is_some()),
                    ("mu", self.mu.is_some()),
                    ("d", self.d.is_some()),
                    ("radius", self.radius.is_some()),
                    ("center", self.center.is_some()),
                    ("neutral", self.neutral.is_some()),
                ])?;
                Body::PerfectPlate
            }
            BodyKind::HalfSpace => {
                self.reject(&[
                    ("d", self.d.is_some()),
                    ("radius", self.radius.is_some()),
                    ("center", self.center.is_some()),
                    ("neutral", self.neutral.is_some()),
                ])?;
                let (epsilon, mu) = self.media()?;
                Body::half_space(epsilon, mu)?
            }
            BodyKind::Slab => {
                self.reject(&[
                    ("radius", self.radius.is_some()),
                    ("center", self.center.is_some()),
                    ("neutral", self.neutral.is_some()),
                ])?;
                let (epsilon, mu) = self.media()?;
                Body::slab(required(self.d, "d")?, epsilon, mu)?
            }
            BodyKind::Sphere => {
                self.reject(&[("d", self.d.is_some())])?;
                let perfect =
                    |r: Option<ResponseSpec>| r.is_none_or(|r| r.model == ModelKind::Perfect);
                if !perfect(self.epsilon) || self.mu.is_some() {
                    return Err(CliError::invalid("spheres are perfect conductors"));
                }
                let centre = self
                    .center
                    .ok_or_else(|| CliError::invalid("missing \"center\""))?;
                Body::sphere(
                    required(self.radius, "radius")?,
                    Vec3::from_array(centre),
                    self.neutral.unwrap_or(true),
                )?
            }
        })
    }
}

impl AtomSpec {
    fn to_atom(self) -> Result<Atom, CliError> {
        Ok(Atom::new(
            Vec3::from_array(self.position),
            self.alpha.to_polarizability()?,
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_resonant_half_space() {
        let f = SceneFile::parse(
            r#"{"bodies": [{"type": "half_space",
                 "epsilon": {"model": "resonance", "value": 4, "omega": 1},
                 "mu": {"model": "static", "value": 1}}],
                "atoms": [{"position": [0, 0, 0.5], "alpha": {"model": "static", "value": 2}}],
                "length_unit_si": 1e-6}"#,
        )
        .unwrap();
        let scene = f.to_scene().unwrap();
        assert!(matches!(scene.body(), Some(Body::HalfSpace { .. })));
        assert_eq!(scene.atoms()[0].polarizability, Polarizability::Static(2.0));
        assert_eq!(scene.units().length_unit_si(), Some(1e-6));
    }

    #[test]
    fn sphere_defaults_to_neutral() {
        let f = SceneFile::parse(
            r#"{"bodies": [{"type": "sphere", "radius": 1, "center": [0, 0, -2]}]}"#,
        )
        .unwrap();
        match f.to_scene().unwrap().body() {
            Some(Body::ConductingSphere { neutral, .. }) => assert!(*neutral),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_and_misplaced_fields() {
        for text in [
            r#"{"bodies": [], "atom": []}"#,
            r#"{"bodies": [{"type": "perfect_plate", "d": 1}]}"#,
            r#"{"bodies": [{"type": "slab", "epsilon": {"model": "static", "value": 2}}]}"#,
            r#"{"bodies": [{"type": "half_space", "epsilon": {"model": "static", "value": 2, "omega": 1}}]}"#,
            r#"{"bodies": [{"type": "cylinder"}]}"#,
            r#"{"atoms": [{"position": [0, 0, 1], "alpha": {"model": "perfect"}}]}"#,
            r#"{"bodies": [{"type": "perfect_plate"}], "atoms": [{"position": [0, 0, -1], "alpha": {"model": "static", "value": 1}}]}"#,
        ] {
            let r = SceneFile::parse(text).and_then(|f| f.to_scene());
            assert!(r.is_err(), "{text}");
        }
    }
}
