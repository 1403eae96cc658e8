use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::scale_scene;
use crate::error::{Error, Result};
use crate::potentials::{cp_force, cp_potential, lifshitz_pressure, vdw_potential, PlanarMedium};
use crate::quadrature::{fit_power_law, PowerLawFit, QuadratureConfig};
use crate::regime::Regime;
use crate::response::{MaterialResponse, Polarizability, ResponseRole};
use crate::scene::{Atom, Body, Scene};
use crate::tensor::Vec3;

/// Scale factors used when none are given.
pub const DEFAULT_A_SAMPLES: [f64; 6] = [1.0, 1.5, 2.0, 3.0, 4.5, 8.0];

/// Largest `ω_max·L` accepted as short-distance.
const SHORT_WINDOW: f64 = 1e-2;

/// Observable whose scaling is measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quantity {
    /// Potential of the scene's first atom.
    Cp,
    /// Normal component of the force on the first atom.
    CpForce,
    /// Free-space part of the two-atom potential.
    VdwFreeSpace,
    /// Body-induced part of the two-atom potential.
    VdwBodyInduced,
    /// Pressure between two half-spaces made of the scene body's material.
    Pressure { gap: f64 },
}

impl Quantity {
    pub fn label(&self) -> &'static str {
        match self {
            Quantity::Cp => "cp",
            Quantity::CpForce => "cp_force",
            Quantity::VdwFreeSpace => "vdw_U0",
            Quantity::VdwBodyInduced => "vdw_U1",
            Quantity::Pressure { .. } => "pressure",
        }
    }
}

/// Distance regime and body type of a scaling law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Column {
    Long,
    ShortElectric,
    ShortMagnetic,
}

impl Column {
    pub fn label(self) -> &'static str {
        match self {
            Column::Long => "long",
            Column::ShortElectric => "short_electric",
            Column::ShortMagnetic => "short_magnetic",
        }
    }

    fn infer(scene: &Scene, regime: Regime) -> Option<Column> {
        match regime {
            Regime::Retarded => Some(Column::Long),
            Regime::Nonretarded => Some(Column::ShortElectric),
            Regime::FullDispersive => {
                let body = scene.body()?;
                match (body.is_electric(), body.is_magnetic()) {
                    (true, false) => Some(Column::ShortElectric),
                    (false, true) => Some(Column::ShortMagnetic),
                    _ => None,
                }
            }
        }
    }
}

/// Power of `1/a` expected for a quantity in a column.
pub fn expected_exponent(quantity: &Quantity, column: Column) -> i32 {
    use Column::*;
    let potential = |q: &Quantity| match (q, column) {
        (Quantity::Cp | Quantity::CpForce, Long) => -4,
        (Quantity::Cp | Quantity::CpForce, ShortElectric) => -3,
        (Quantity::Cp | Quantity::CpForce, ShortMagnetic) => -1,
        (Quantity::VdwFreeSpace, Long) => -7,
        (Quantity::VdwFreeSpace, _) => -6,
        (Quantity::VdwBodyInduced, Long) => -7,
        (Quantity::VdwBodyInduced, ShortElectric) => -6,
        (Quantity::VdwBodyInduced, ShortMagnetic) => -4,
        (Quantity::Pressure { .. }, Long) => -4,
        (Quantity::Pressure { .. }, _) => -3,
    };
    match quantity {
        Quantity::CpForce => potential(quantity) - 1,
        q => potential(q),
    }
}

/// Fitted versus expected exponent for one observable.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub quantity: Quantity,
    pub regime: Regime,
    pub column: Option<Column>,
    pub fit: PowerLawFit,
    pub expected: Option<i32>,
    /// Acceptance bound on `|fitted − expected|`.
    pub tolerance: f64,
    pub warnings: Vec<String>,
}

impl ScalingReport {
    pub fn deviation(&self) -> Option<f64> {
        self.expected.map(|e| self.fit.exponent - e as f64)
    }

    pub fn passed(&self) -> bool {
        self.deviation().is_some_and(|d| d.abs() <= self.tolerance)
    }
}

/// Exponent of the total force between finite plates: pressure times area.
pub fn total_force_exponent(pressure: &ScalingReport) -> Option<f64> {
    matches!(pressure.quantity, Quantity::Pressure { .. }).then(|| pressure.fit.exponent + 2.0)
}

fn evaluate(
    quantity: &Quantity,
    scene: &Scene,
    a: f64,
    regime: Regime,
    config: &QuadratureConfig,
) -> Result<f64> {
    match *quantity {
        Quantity::Cp => cp_potential(scene.atom(0)?, scene, regime, config),
        Quantity::CpForce => {
            let atom = scene.atom(0)?;
            let f = cp_force(atom, scene, regime, config)?;
            let normal = match scene.body() {
                Some(Body::ConductingSphere { centre, .. }) => {
                    let d = atom.position - *centre;
                    d.scale(1.0 / d.norm())
                }
                _ => Vec3::new(0.0, 0.0, 1.0),
            };
            Ok(f.dot(normal))
        }
        Quantity::VdwFreeSpace | Quantity::VdwBodyInduced => {
            let v = vdw_potential(scene.atom(0)?, scene.atom(1)?, scene, regime, config)?;
            Ok(if *quantity == Quantity::VdwFreeSpace {
                v.free_space
            } else {
                v.body_induced
            })
        }
        Quantity::Pressure { gap } => {
            let body = scene
                .body()
                .ok_or_else(|| Error::scene("pressure needs a planar body"))?;
            let m = PlanarMedium::from_body(body)?;
            lifshitz_pressure(a * gap, &m, &m, regime, config)
        }
    }
}

/// Largest length of the configuration after scaling by `a`.
fn largest_length(quantity: &Quantity, scene: &Scene, a: f64) -> f64 {
    let mut l: f64 = 0.0;
    if let Quantity::Pressure { gap } = quantity {
        l = l.max(a * gap);
    }
    for atom in scene.atoms() {
        let d = scene.distance_to_body(atom.position);
        if d.is_finite() {
            l = l.max(a * d);
        }
    }
    if let [p, q] = scene.atoms() {
        l = l.max(a * (p.position - q.position).norm());
    }
    l
}

fn highest_resonance(scene: &Scene) -> Option<f64> {
    let atoms = scene
        .atoms()
        .iter()
        .filter_map(|a| a.polarizability.resonance());
    let body = scene.body().into_iter().flat_map(|b| b.resonances());
    atoms
        .chain(body)
        .fold(None, |m, w| Some(m.map_or(w, |m: f64| m.max(w))))
}

/// Evaluates `quantity` on `scale_scene(scene, a)` for each `a` and fits a
/// power law.
pub fn measure_exponent(
    quantity: Quantity,
    scene: &Scene,
    regime: Regime,
    a_samples: &[f64],
    config: &QuadratureConfig,
) -> Result<ScalingReport> {
    let mut samples = Vec::with_capacity(a_samples.len());
    for &a in a_samples {
        let s = scale_scene(scene, a)?;
        samples.push((a, evaluate(&quantity, &s, a, regime, config)?));
    }
    let fit = fit_power_law(&samples)?;
    let column = Column::infer(scene, regime);
    let mut warnings = Vec::new();
    if matches!(column, Some(Column::ShortElectric | Column::ShortMagnetic)) {
        let a_max = a_samples.iter().copied().fold(0.0, f64::max);
        let l = largest_length(&quantity, scene, a_max);
        match highest_resonance(scene) {
            Some(w) if w * l > SHORT_WINDOW => warnings.push(format!(
                "largest length {l:e} exceeds the short-distance window ({SHORT_WINDOW:e}/ω_max with ω_max = {w:e})"
            )),
            Some(_) => {}
            None => warnings.push("no resonance sets a short-distance window".into()),
        }
    }
    if column.is_none() {
        warnings.push("no scaling law applies to this body in the full regime".into());
    }
    let tolerance = if regime == Regime::FullDispersive {
        2e-2
    } else {
        1e-3
    };
    Ok(ScalingReport {
        quantity,
        regime,
        column,
        expected: column.map(|c| expected_exponent(&quantity, c)),
        fit,
        tolerance,
        warnings,
    })
}

/// One cell of the scaling table.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingCase {
    pub column: Column,
    pub quantity: Quantity,
    pub scene: Scene,
    pub regime: Regime,
    pub a_samples: Vec<f64>,
}

impl ScalingCase {
    pub fn run(&self, config: &QuadratureConfig) -> Result<ScalingReport> {
        measure_exponent(
            self.quantity,
            &self.scene,
            self.regime,
            &self.a_samples,
            config,
        )
    }
}

/// The twelve canonical checks: potential, free-space and body-induced
/// two-atom potentials and pressure, in the long-distance, short-distance
/// electric and short-distance magnetic limits.
///
/// Long distances use a static magnetoelectric half-space (`ε = 4`, `μ = 2`)
/// with the static engine.  Short electric distances use a resonant
/// dielectric with the quasi-static engine at `z = 10⁻³/ω`.  Short magnetic
/// distances use a resonant purely magnetic medium with the full engine at
/// `z = 10⁻⁴/ω`, where the leftover retardation corrections are small enough
/// for the `1/z` law to emerge.
pub fn scaling_cases() -> Vec<ScalingCase> {
    let mu0 = MaterialResponse::vacuum(ResponseRole::Magnetic);
    let eps0 = MaterialResponse::vacuum(ResponseRole::Electric);
    let columns = [
        (
            Column::Long,
            Body::HalfSpace {
                epsilon: MaterialResponse::electric_static(4.0).expect("valid"),
                mu: MaterialResponse::magnetic_static(2.0).expect("valid"),
            },
            Polarizability::Static(1.0),
            1.0,
            Regime::Retarded,
        ),
        (
            Column::ShortElectric,
            Body::HalfSpace {
                epsilon: MaterialResponse::electric_resonance(4.0, 1.0).expect("valid"),
                mu: mu0,
            },
            Polarizability::SingleResonance {
                static_volume: 1.0,
                resonance: 1.0,
            },
            1e-3,
            Regime::Nonretarded,
        ),
        (
            Column::ShortMagnetic,
            Body::HalfSpace {
                epsilon: eps0,
                mu: MaterialResponse::magnetic_resonance(3.0, 1.0).expect("valid"),
            },
            Polarizability::SingleResonance {
                static_volume: 1.0,
                resonance: 1.0,
            },
            1e-4,
            Regime::FullDispersive,
        ),
    ];
    let mut out = Vec::with_capacity(12);
    for (column, body, alpha, z, regime) in columns {
        let a = Atom {
            position: Vec3::new(0.0, 0.0, z),
            polarizability: alpha,
        };
        let b = Atom {
            position: Vec3::new(z, 0.0, z),
            polarizability: alpha,
        };
        let one = Scene::new(vec![body], vec![a]).expect("valid scene");
        let two = Scene::new(vec![body], vec![a, b]).expect("valid scene");
        for (quantity, scene) in [
            (Quantity::Cp, one.clone()),
            (Quantity::VdwFreeSpace, two.clone()),
            (Quantity::VdwBodyInduced, two),
            (Quantity::Pressure { gap: z }, one),
        ] {
            out.push(ScalingCase {
                column,
                quantity,
                scene,
                regime,
                a_samples: DEFAULT_A_SAMPLES.to_vec(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_has_twelve_cells_with_expected_values() {
        let cases = scaling_cases();
        assert_eq!(cases.len(), 12);
        let e: Vec<i32> = cases
            .iter()
            .map(|c| expected_exponent(&c.quantity, c.column))
            .collect();
        assert_eq!(e, [-4, -7, -7, -4, -3, -6, -6, -3, -1, -6, -4, -3]);
    }

    #[test]
    fn perfect_plate_cp_is_quartic() {
        let atom = Atom::new(Vec3::new(0.0, 0.0, 1.0), Polarizability::Static(1.0)).unwrap();
        let scene = Scene::new(vec![Body::PerfectPlate], vec![atom]).unwrap();
        let r = measure_exponent(
            Quantity::Cp,
            &scene,
            Regime::Retarded,
            &DEFAULT_A_SAMPLES,
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert!((r.fit.exponent + 4.0).abs() < 1e-6);
        assert!(r.passed() && r.warnings.is_empty());
        let f = measure_exponent(
            Quantity::CpForce,
            &scene,
            Regime::Retarded,
            &[1.0, 2.0, 4.0],
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert!((f.fit.exponent + 5.0).abs() < 1e-6);
    }

    #[test]
    fn window_violation_is_flagged() {
        let atom = Atom::new(
            Vec3::new(0.0, 0.0, 1.0),
            Polarizability::SingleResonance {
                static_volume: 1.0,
                resonance: 1.0,
            },
        )
        .unwrap();
        let scene = Scene::new(vec![Body::PerfectPlate], vec![atom]).unwrap();
        let r = measure_exponent(
            Quantity::Cp,
            &scene,
            Regime::Nonretarded,
            &[1.0, 2.0, 3.0],
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert!(!r.warnings.is_empty());
        assert!((r.fit.exponent + 3.0).abs() < 1e-9);
    }

    #[test]
    fn total_force_from_pressure() {
        let atom = Atom::new(Vec3::new(0.0, 0.0, 1.0), Polarizability::Static(1.0)).unwrap();
        let scene = Scene::new(vec![Body::PerfectPlate], vec![atom]).unwrap();
        let r = measure_exponent(
            Quantity::Pressure { gap: 1.0 },
            &scene,
            Regime::Retarded,
            &[1.0, 2.0, 4.0],
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert!((total_force_exponent(&r).unwrap() + 2.0).abs() < 1e-6);
    }
}
