use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use dispersia_core::potentials::{
    cp_force, cp_potential_estimate, fit_nonretarded_coefficients, lifshitz_pressure_estimate,
    nonretarded_halfspace_coefficients, vdw_potential, PlanarMedium,
};
use dispersia_core::quadrature::QuadratureConfig;
use dispersia_core::scaling::{
    enhancement_ratio, measure_exponent, scale_function_at, scaling_cases, total_force_exponent,
    EnhancementMap, GridSpec, Quantity, ScaleFamily, ScalingReport,
};
use dispersia_core::{Atom, Body, Polarizability, Regime, Scene, Units, Vec3};

use crate::args::{
    CoeffsArgs, Command, Common, FamilyArg, MapArgs, PointArgs, PressureArgs, QuantityArg,
    ScaleFnArgs, Sweep, VdwArgs, VerifyArgs,
};
use crate::error::CliError;
use crate::output::{Cell, Dimension, Format, Report};
use crate::scene_file::SceneFile;

type Result<T> = std::result::Result<T, CliError>;

pub fn dispatch(command: &Command, common: &Common) -> Result<Report> {
    let config = config(common)?;
    let mut report = match command {
        Command::Cp(a) => cp(a, &config),
        Command::CpForce(a) => force(a, &config),
        Command::Vdw(a) => vdw(a, &config),
        Command::Pressure(a) => pressure(a, &config),
        Command::Coeffs(a) => coeffs(a, &config),
        Command::Scalefn(a) => scalefn(a, &config),
        Command::Map2d(a) => map2d(a, &config),
        Command::VerifyScaling(a) => verify(a, &config),
    }?;
    report.inputs = json!({
        "command": command.name(),
        "arguments": report.inputs,
        "quadrature": {
            "rel_tol": config.rel_tol,
            "abs_tol": config.abs_tol,
            "max_refinement_levels": config.max_refinement_levels,
        },
    });
    Ok(report)
}

fn config(common: &Common) -> Result<QuadratureConfig> {
    let d = QuadratureConfig::default();
    Ok(QuadratureConfig::new(
        common.rel_tol.unwrap_or(d.rel_tol),
        common.abs_tol.unwrap_or(d.abs_tol),
        common.max_levels.unwrap_or(d.max_refinement_levels),
    )?)
}

fn load(path: &Path) -> Result<(SceneFile, Scene)> {
    let file = SceneFile::read(path)?;
    let scene = file.to_scene()?;
    Ok((file, scene))
}

fn echo<T: serde::Serialize>(args: &T, scenes: &[&SceneFile]) -> Value {
    let mut v = serde_json::to_value(args).expect("arguments serialize");
    let files: Vec<Value> = scenes
        .iter()
        .map(|s| serde_json::to_value(s).expect("scenes serialize"))
        .collect();
    v["scene_contents"] = match files.as_slice() {
        [one] => one.clone(),
        _ => Value::Array(files),
    };
    v
}

fn log_space(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    if !(min > 0.0 && max.is_finite() && max >= min) || n < 2 {
        return Err(CliError::invalid(
            "sweeps need 0 < min <= max and at least two points",
        ));
    }
    let (l0, l1) = (min.log10(), max.log10());
    Ok((0..n)
        .map(|i| match i {
            0 => min,
            _ if i == n - 1 => max,
            _ => 10f64.powf(l0 + (l1 - l0) * i as f64 / (n - 1) as f64),
        })
        .collect())
}

fn lin_space(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    if !(min > 0.0 && max.is_finite() && max > min) || n < 2 {
        return Err(CliError::invalid(
            "sweeps need 0 < min < max and at least two points",
        ));
    }
    let step = (max - min) / (n - 1) as f64;
    Ok((0..n).map(|i| min + step * i as f64).collect())
}

fn sweep(s: &Sweep) -> Result<Option<Vec<f64>>> {
    match (s.min, s.max, s.points) {
        (Some(a), Some(b), Some(n)) => log_space(a, b, n).map(Some),
        _ => Ok(None),
    }
}

/// Atom selected by `--atom`, moved by `--z`/`--position`.  Scenes without
/// atoms get a unit static polarizability.
fn chosen_atom(scene: &Scene, a: &PointArgs) -> Result<Atom> {
    let base = match scene.atoms() {
        [] if a.atom == 0 => None,
        atoms => Some(*atoms.get(a.atom).ok_or_else(|| {
            CliError::invalid(format!("scene has no atom with index {}", a.atom))
        })?),
    };
    let alpha = base.map_or(Polarizability::Static(1.0), |b| b.polarizability);
    let position = match (a.position, a.z, base) {
        (Some(p), _, _) => Vec3::from_array(p),
        (None, Some(z), Some(b)) => Vec3::new(b.position.x, b.position.y, z),
        (None, Some(z), None) => Vec3::new(0.0, 0.0, z),
        (None, None, Some(b)) => b.position,
        (None, None, None) if a.sweep.min.is_some() => Vec3::ZERO,
        (None, None, None) => {
            return Err(CliError::invalid(
                "the scene has no atom; give --z or --position",
            ))
        }
    };
    Ok(Atom::new(position, alpha)?)
}

fn heights(a: &PointArgs, atom: &Atom) -> Result<(Vec<f64>, bool)> {
    match sweep(&a.sweep)? {
        Some(zs) => Ok((zs, true)),
        None => Ok((vec![atom.position.z], false)),
    }
}

fn cp(a: &PointArgs, config: &QuadratureConfig) -> Result<Report> {
    let (file, scene) = load(&a.scene)?;
    let atom = chosen_atom(&scene, a)?;
    let regime: Regime = a.regime.into();
    let (zs, swept) = heights(a, &atom)?;
    let values = zs
        .par_iter()
        .map(|&z| {
            let p = Vec3::new(atom.position.x, atom.position.y, z);
            cp_potential_estimate(&atom.at(p), &scene, regime, config)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let rows = zs
        .iter()
        .zip(&values)
        .map(|(&z, e)| vec![z.into(), e.value.into(), e.error_estimate.into()])
        .collect();
    let (result, error_estimate) = if swept {
        (None, Value::Null)
    } else {
        (
            Some(json!(values[0].value)),
            json!(values[0].error_estimate),
        )
    };
    Ok(Report {
        inputs: echo(a, &[&file]),
        columns: vec!["z", "U", "error_estimate"],
        rows,
        result,
        error_estimate,
        dimension: Dimension::Energy,
        units: scene.units(),
        default_format: if swept { Format::Csv } else { Format::Json },
    })
}

fn force(a: &PointArgs, config: &QuadratureConfig) -> Result<Report> {
    let (file, scene) = load(&a.scene)?;
    let atom = chosen_atom(&scene, a)?;
    let regime: Regime = a.regime.into();
    let (zs, swept) = heights(a, &atom)?;
    let values = zs
        .par_iter()
        .map(|&z| {
            let p = Vec3::new(atom.position.x, atom.position.y, z);
            cp_force(&atom.at(p), &scene, regime, config)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let rows = zs
        .iter()
        .zip(&values)
        .map(|(&z, f)| vec![z.into(), f.x.into(), f.y.into(), f.z.into()])
        .collect();
    Ok(Report {
        inputs: echo(a, &[&file]),
        columns: vec!["z", "fx", "fy", "fz"],
        rows,
        result: (!swept).then(|| json!(values[0].to_array())),
        error_estimate: Value::Null,
        dimension: Dimension::Force,
        units: scene.units(),
        default_format: if swept { Format::Csv } else { Format::Json },
    })
}

fn vdw(a: &VdwArgs, config: &QuadratureConfig) -> Result<Report> {
    let (file, scene) = load(&a.scene)?;
    let pick = |override_: Option<[f64; 3]>, i: usize| -> Result<Atom> {
        let base = scene.atoms().get(i).copied();
        match (override_, base) {
            (Some(p), Some(b)) => Ok(b.at(Vec3::from_array(p))),
            (Some(p), None) => Ok(Atom::new(Vec3::from_array(p), Polarizability::Static(1.0))?),
            (None, Some(b)) => Ok(b),
            (None, None) => Err(CliError::invalid(format!(
                "the scene has no atom {}; give --r{}",
                i + 1,
                ["a", "b"][i]
            ))),
        }
    };
    let (atom_a, atom_b) = (pick(a.ra, 0)?, pick(a.rb, 1)?);
    let body: Vec<Body> = scene.body().copied().into_iter().collect();
    let scene = Scene::new(body, vec![atom_a, atom_b])?.with_units(scene.units());
    let v = vdw_potential(&atom_a, &atom_b, &scene, a.regime.into(), config)?;
    Ok(Report {
        inputs: echo(a, &[&file]),
        columns: vec![
            "total",
            "free_space",
            "body_induced",
            "error_free_space",
            "error_body_induced",
        ],
        rows: vec![vec![
            v.total.into(),
            v.free_space.into(),
            v.body_induced.into(),
            v.error_estimate[0].into(),
            v.error_estimate[1].into(),
        ]],
        result: Some(json!({
            "total": v.total,
            "free_space": v.free_space,
            "body_induced": v.body_induced,
        })),
        error_estimate: json!({
            "free_space": v.error_estimate[0],
            "body_induced": v.error_estimate[1],
        }),
        dimension: Dimension::Energy,
        units: scene.units(),
        default_format: Format::Json,
    })
}

fn medium(scene: &Scene, path: &Path) -> Result<PlanarMedium> {
    let body = scene
        .body()
        .ok_or_else(|| CliError::invalid(format!("{} has no body", path.display())))?;
    Ok(PlanarMedium::from_body(body)?)
}

fn pressure(a: &PressureArgs, config: &QuadratureConfig) -> Result<Report> {
    let (file, scene) = load(&a.scene)?;
    let m1 = medium(&scene, &a.scene)?;
    let (other_file, m2) = match &a.other {
        Some(p) => {
            let (f, s) = load(p)?;
            let m = medium(&s, p)?;
            (Some(f), m)
        }
        None => (None, m1),
    };
    let swept = sweep(&a.sweep)?;
    let gaps = match (&swept, a.gap) {
        (Some(g), _) => g.clone(),
        (None, Some(g)) => vec![g],
        (None, None) => return Err(CliError::invalid("give --gap or a sweep")),
    };
    let regime: Regime = a.regime.into();
    let values = gaps
        .par_iter()
        .map(|&g| lifshitz_pressure_estimate(g, &m1, &m2, regime, config))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let rows = gaps
        .iter()
        .zip(&values)
        .map(|(&g, e)| vec![g.into(), e.value.into(), e.error_estimate.into()])
        .collect();
    let files: Vec<&SceneFile> = std::iter::once(&file).chain(other_file.as_ref()).collect();
    let single = swept.is_none();
    Ok(Report {
        inputs: echo(a, &files),
        columns: vec!["gap", "P", "error_estimate"],
        rows,
        result: single.then(|| json!(values[0].value)),
        error_estimate: if single {
            json!(values[0].error_estimate)
        } else {
            Value::Null
        },
        dimension: Dimension::Pressure,
        units: scene.units(),
        default_format: if single { Format::Json } else { Format::Csv },
    })
}

fn coeffs(a: &CoeffsArgs, config: &QuadratureConfig) -> Result<Report> {
    let (file, scene) = load(&a.scene)?;
    let Some(Body::HalfSpace { epsilon, mu }) = scene.body().copied() else {
        return Err(CliError::invalid(
            "coeffs needs a scene with a half_space body",
        ));
    };
    let atom = *scene
        .atoms()
        .first()
        .ok_or_else(|| CliError::invalid("coeffs needs an atom in the scene"))?;
    let alpha = atom.polarizability;
    let c = nonretarded_halfspace_coefficients(&alpha, &epsilon, &mu, config)?;
    let mut result = json!({"c3": c.c3, "c1": c.c1});
    let mut row = vec![c.c3.into(), c.c1.into(), Cell::Empty, Cell::Empty];
    if let Some(zs) = sweep(&a.fit)? {
        let samples = zs
            .par_iter()
            .map(|&z| {
                let p = Vec3::new(atom.position.x, atom.position.y, z);
                Ok((
                    z,
                    cp_potential_estimate(&atom.at(p), &scene, Regime::FullDispersive, config)?
                        .value,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let fit = fit_nonretarded_coefficients(&samples)?;
        result["fit"] = json!({
            "c3": fit.c3,
            "c1": fit.c1,
            "relative_deviation": {"c3": fit.c3 / c.c3 - 1.0, "c1": fit.c1 / c.c1 - 1.0},
        });
        row[2] = fit.c3.into();
        row[3] = fit.c1.into();
    }
    Ok(Report {
        inputs: echo(a, &[&file]),
        columns: vec!["c3", "c1", "fit_c3", "fit_c1"],
        rows: vec![row],
        result: Some(result),
        error_estimate: Value::Null,
        dimension: Dimension::Energy,
        units: scene.units(),
        default_format: Format::Json,
    })
}

fn scalefn(a: &ScaleFnArgs, config: &QuadratureConfig) -> Result<Report> {
    let family = match a.family {
        FamilyArg::Plate => ScaleFamily::Plate { epsilon: a.epsilon },
        FamilyArg::Sphere => ScaleFamily::Sphere {
            neutral: !a.grounded,
        },
    };
    let xs = if a.linear {
        lin_space(a.xmin, a.xmax, a.points)?
    } else {
        log_space(a.xmin, a.xmax, a.points)?
    };
    let curve = scale_function_at(family, &xs, a.z_ref, config)?;
    Ok(Report {
        inputs: serde_json::to_value(a).expect("arguments serialize"),
        columns: vec!["x", "f"],
        rows: curve
            .samples
            .iter()
            .map(|&(x, f)| vec![x.into(), f.into()])
            .collect(),
        result: None,
        error_estimate: Value::Null,
        dimension: Dimension::Dimensionless,
        units: Units::NATURAL,
        default_format: Format::Csv,
    })
}

/// The enhancement map, evaluated in parallel.
pub fn parallel_map(
    z_b: f64,
    spec: &GridSpec,
    config: &QuadratureConfig,
) -> Result<EnhancementMap> {
    spec.validate()?;
    if !(z_b > 0.0 && z_b.is_finite()) {
        return Err(CliError::invalid("--zB must be positive"));
    }
    let ratio = spec
        .points(z_b)
        .into_par_iter()
        .map(|p| p.map(|p| enhancement_ratio(p, z_b, config)).transpose())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(EnhancementMap::assemble(z_b, *spec, ratio)?)
}

fn map2d(a: &MapArgs, config: &QuadratureConfig) -> Result<Report> {
    let spec = GridSpec {
        x_min: a.xmin,
        x_max: a.xmax,
        nx: a.nx,
        z_max: a.zmax,
        nz: a.nz,
        exclusion_radius: a.exclusion,
    };
    let map = parallel_map(a.z_b, &spec, config)?;
    let mut rows = Vec::with_capacity(map.ratio.len());
    for (j, &z) in map.zs.iter().enumerate() {
        for (i, &x) in map.xs.iter().enumerate() {
            rows.push(vec![x.into(), z.into(), map.get(i, j).into()]);
        }
    }
    let lobes = map.lobes();
    let result = json!({
        "x": map.xs,
        "z": map.zs,
        "ratio": map.zs.iter().enumerate().map(|(j, _)| {
            (0..map.xs.len()).map(|i| map.get(i, j)).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
        "has_unit_contour": map.has_unit_contour(),
        "lobes": {
            "row_height": lobes.row_height,
            "centre_left": lobes.centre_left,
            "centre_right": lobes.centre_right,
            "ratio_left": lobes.ratio_left,
            "ratio_right": lobes.ratio_right,
            "enhanced_left": lobes.enhanced_left,
            "enhanced_right": lobes.enhanced_right,
            "max_ratio": lobes.max_ratio,
            "min_ratio": lobes.min_ratio,
        },
    });
    Ok(Report {
        inputs: serde_json::to_value(a).expect("arguments serialize"),
        columns: vec!["x", "z", "ratio"],
        rows,
        result: Some(result),
        error_estimate: Value::Null,
        dimension: Dimension::Dimensionless,
        units: Units::NATURAL,
        default_format: Format::Csv,
    })
}

fn report_row(r: &ScalingReport) -> Vec<Cell> {
    vec![
        Cell::Text(r.column.map_or("none", |c| c.label()).into()),
        Cell::Text(r.quantity.label().into()),
        Cell::Text(r.regime.label().into()),
        r.fit.exponent.into(),
        r.expected.map_or(Cell::Empty, |e| Cell::Int(e.into())),
        r.deviation().into(),
        r.tolerance.into(),
        Cell::Bool(r.passed()),
        r.fit.max_log_residual.into(),
        Cell::Text(r.warnings.join("; ")),
    ]
}

fn verify(a: &VerifyArgs, config: &QuadratureConfig) -> Result<Report> {
    let (reports, files) = if a.all {
        let reports = scaling_cases()
            .par_iter()
            .map(|c| c.run(config))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        (reports, Vec::new())
    } else {
        let path = a
            .scene
            .as_ref()
            .ok_or_else(|| CliError::invalid("--scene is required"))?;
        let (file, scene) = load(path)?;
        let quantity = match a
            .quantity
            .ok_or_else(|| CliError::invalid("--quantity is required"))?
        {
            QuantityArg::Cp => Quantity::Cp,
            QuantityArg::CpForce => Quantity::CpForce,
            QuantityArg::VdwU0 => Quantity::VdwFreeSpace,
            QuantityArg::VdwU1 => Quantity::VdwBodyInduced,
            QuantityArg::Pressure => Quantity::Pressure { gap: a.gap },
        };
        let r = measure_exponent(quantity, &scene, a.regime.into(), &a.a, config)?;
        (vec![r], vec![file])
    };
    let total_force = reports.iter().find_map(total_force_exponent);
    let columns = vec![
        "column",
        "quantity",
        "regime",
        "fitted_exponent",
        "expected_exponent",
        "deviation",
        "tolerance",
        "passed",
        "max_log_residual",
        "warnings",
    ];
    let rows: Vec<Vec<Cell>> = reports.iter().map(report_row).collect();
    let mut report = Report {
        inputs: echo(a, &files.iter().collect::<Vec<_>>()),
        columns,
        rows,
        result: None,
        error_estimate: Value::Null,
        dimension: Dimension::Dimensionless,
        units: Units::NATURAL,
        default_format: Format::Csv,
    };
    let rows_json = report.rows_as_json();
    report.result = Some(json!({
        "checks": rows_json,
        "all_passed": reports.iter().all(ScalingReport::passed),
        "total_force_exponent": total_force,
    }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_space_hits_the_end_points() {
        let v = log_space(1e-3, 1e-2, 5).unwrap();
        assert_eq!((v[0], v[4]), (1e-3, 1e-2));
        assert!(v.windows(2).all(|w| w[1] > w[0]));
        assert!(log_space(0.0, 1.0, 3).is_err());
        assert!(log_space(1.0, 2.0, 1).is_err());
    }

    #[test]
    fn lin_space_is_even() {
        assert_eq!(lin_space(1.0, 2.0, 3).unwrap(), vec![1.0, 1.5, 2.0]);
    }
}
