use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dispersia_core::Regime;

use crate::output::Format;

/// Dispersion interactions of atoms and bodies from imaginary-frequency Green
/// tensors.  Lengths are in the scene's unit `L`; everything else follows
/// from `hbar = c = eps0 = mu0 = 1`.
#[derive(Debug, Parser)]
#[command(name = "dispersia", version)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// Relative quadrature tolerance.
    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true)]
    pub abs_tol: Option<f64>,
    /// Maximum number of quadrature refinement levels.
    #[arg(long, global = true)]
    pub max_levels: Option<u32>,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    #[serde(skip)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Casimir-Polder potential of one atom near the scene's body.
    Cp(PointArgs),
    /// Casimir-Polder force, minus the gradient of the potential.
    CpForce(PointArgs),
    /// Van der Waals potential of two atoms, split into free-space and body-induced parts.
    Vdw(VdwArgs),
    /// Casimir pressure between two half-spaces.
    Pressure(PressureArgs),
    /// Short-distance coefficients C3 and C1 of an atom near a half-space.
    Coeffs(CoeffsArgs),
    /// Scale function f(x) of a plate (x = d/z) or a sphere (x = R/z).
    Scalefn(ScaleFnArgs),
    /// Ratio U/U0 of the two-atom potential next to a perfect plate over a grid.
    Map2d(MapArgs),
    /// Fit scaling exponents and compare them with the expected power laws.
    VerifyScaling(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Cp(_) => "cp",
            Command::CpForce(_) => "cp-force",
            Command::Vdw(_) => "vdw",
            Command::Pressure(_) => "pressure",
            Command::Coeffs(_) => "coeffs",
            Command::Scalefn(_) => "scalefn",
            Command::Map2d(_) => "map2d",
            Command::VerifyScaling(_) => "verify-scaling",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeArg {
    /// Long distances, static responses.
    Retarded,
    /// Short distances, quasi-static Green tensors.
    Nonretarded,
    /// No approximation.
    Full,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Regime {
        match r {
            RegimeArg::Retarded => Regime::Retarded,
            RegimeArg::Nonretarded => Regime::Nonretarded,
            RegimeArg::Full => Regime::FullDispersive,
        }
    }
}

fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [x, y, z] = parts.as_slice() else {
        return Err("expected three comma-separated numbers".into());
    };
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok([p(x)?, p(y)?, p(z)?])
}

/// Log-spaced sweep of one length.
#[derive(Debug, Clone, Args, Serialize)]
pub struct Sweep {
    /// Smallest value of the sweep.
    #[arg(long, requires_all = ["max", "points"])]
    pub min: Option<f64>,
    /// Largest value of the sweep.
    #[arg(long, requires_all = ["min", "points"])]
    pub max: Option<f64>,
    /// Number of log-spaced points.
    #[arg(long, requires_all = ["min", "max"])]
    pub points: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PointArgs {
    /// Scene file (JSON).
    #[arg(long)]
    pub scene: PathBuf,
    #[arg(long, value_enum, default_value = "full")]
    pub regime: RegimeArg,
    /// Index of the atom in the scene.
    #[arg(long, default_value_t = 0)]
    pub atom: usize,
    /// Height of the atom; keeps its transverse position.
    #[arg(long, conflicts_with_all = ["position", "min"])]
    pub z: Option<f64>,
    /// Position of the atom as x,y,z.
    #[arg(long, value_parser = parse_vec3, conflicts_with = "min")]
    pub position: Option<[f64; 3]>,
    /// Sweep the height instead of evaluating one point.
    #[command(flatten)]
    pub sweep: Sweep,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VdwArgs {
    #[arg(long)]
    pub scene: PathBuf,
    #[arg(long, value_enum, default_value = "full")]
    pub regime: RegimeArg,
    /// Position of atom A (defaults to the scene's first atom).
    #[arg(long, value_parser = parse_vec3)]
    pub ra: Option<[f64; 3]>,
    /// Position of atom B (defaults to the scene's second atom).
    #[arg(long, value_parser = parse_vec3)]
    pub rb: Option<[f64; 3]>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PressureArgs {
    /// Scene whose body gives the first half-space.
    #[arg(long)]
    pub scene: PathBuf,
    /// Scene whose body gives the second half-space (defaults to the first).
    #[arg(long)]
    pub other: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "full")]
    pub regime: RegimeArg,
    /// Width of the vacuum gap.
    #[arg(long, conflicts_with = "min", required_unless_present = "min")]
    pub gap: Option<f64>,
    /// Sweep the gap instead.
    #[command(flatten)]
    pub sweep: Sweep,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CoeffsArgs {
    /// Scene with a half-space and an atom.
    #[arg(long)]
    pub scene: PathBuf,
    /// Also fit -C3/z^3 + C1/z to the full potential over this sweep of heights.
    #[command(flatten)]
    pub fit: Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyArg {
    /// Dielectric plate of thickness d = x z at long distances.
    Plate,
    /// Perfectly conducting sphere of radius R = x z at short distances.
    Sphere,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ScaleFnArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1e-3)]
    pub xmin: f64,
    #[arg(long, default_value_t = 1e2)]
    pub xmax: f64,
    #[arg(long, default_value_t = 51)]
    pub points: usize,
    /// Space x linearly instead of logarithmically.
    #[arg(long)]
    pub linear: bool,
    /// Static permittivity of the plate.
    #[arg(long, default_value_t = dispersia_core::scaling::SI_PERMITTIVITY)]
    pub epsilon: f64,
    /// Use a grounded instead of a neutral sphere.
    #[arg(long)]
    pub grounded: bool,
    /// Atom-surface distance used for the evaluation.
    #[arg(long, default_value_t = 1.0)]
    pub z_ref: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MapArgs {
    /// Height of atom B above the plate.
    #[arg(long = "zB", alias = "zb")]
    pub z_b: f64,
    /// Grid extents, in units of zB.
    #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 161)]
    pub nx: usize,
    #[arg(long, default_value_t = 4.0)]
    pub zmax: f64,
    #[arg(long, default_value_t = 80)]
    pub nz: usize,
    /// Radius of the disc around atom B that is skipped, in units of zB.
    #[arg(long, default_value_t = 0.15)]
    pub exclusion: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantityArg {
    Cp,
    CpForce,
    VdwU0,
    VdwU1,
    Pressure,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Run the twelve built-in checks.
    #[arg(long, conflicts_with_all = ["quantity", "scene"])]
    pub all: bool,
    #[arg(long, value_enum, required_unless_present = "all", requires = "scene")]
    pub quantity: Option<QuantityArg>,
    #[arg(long)]
    pub scene: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "full")]
    pub regime: RegimeArg,
    /// Scale factors, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = dispersia_core::scaling::DEFAULT_A_SAMPLES)]
    pub a: Vec<f64>,
    /// Gap of the pressure geometry.
    #[arg(long, default_value_t = 1.0)]
    pub gap: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn vectors_parse() {
        assert_eq!(parse_vec3("1, -2,3e-1").unwrap(), [1.0, -2.0, 0.3]);
        assert!(parse_vec3("1,2").is_err());
        assert!(parse_vec3("1,x,2").is_err());
    }
}
