use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::potentials::vdw_potential;
use crate::quadrature::QuadratureConfig;
use crate::regime::Regime;
use crate::response::Polarizability;
use crate::scene::{Atom, Body, Scene};
use crate::tensor::Vec3;

/// Grid of atom-A positions, in units of atom B's height `z_B`.
///
/// `x` runs over `nx` equidistant points in `[x_min, x_max]`; heights are
/// `z_max·(j + 1)/nz` for `j < nz`.  Points closer than `exclusion_radius` to
/// atom B are skipped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub z_max: f64,
    pub nz: usize,
    pub exclusion_radius: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            x_min: -4.0,
            x_max: 4.0,
            nx: 161,
            z_max: 4.0,
            nz: 80,
            exclusion_radius: 0.15,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.x_min, self.x_max, self.z_max, self.exclusion_radius]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.x_max <= self.x_min || self.z_max <= 0.0 || self.exclusion_radius < 0.0 {
            return Err(Error::domain(
                "grid needs x_min < x_max, z_max > 0 and a nonnegative exclusion radius",
            ));
        }
        if self.nx < 2 || self.nz < 1 {
            return Err(Error::domain("grid needs at least two columns and one row"));
        }
        Ok(())
    }

    pub fn xs(&self, z_b: f64) -> Vec<f64> {
        let step = (self.x_max - self.x_min) / (self.nx - 1) as f64;
        (0..self.nx)
            .map(|i| z_b * (self.x_min + step * i as f64))
            .collect()
    }

    pub fn zs(&self, z_b: f64) -> Vec<f64> {
        (0..self.nz)
            .map(|j| z_b * self.z_max * (j + 1) as f64 / self.nz as f64)
            .collect()
    }

    /// Row-major atom-A positions; `None` inside the exclusion disc.
    pub fn points(&self, z_b: f64) -> Vec<Option<Vec3>> {
        let (xs, zs) = (self.xs(z_b), self.zs(z_b));
        let b = Vec3::new(0.0, 0.0, z_b);
        let mut out = Vec::with_capacity(xs.len() * zs.len());
        for &z in &zs {
            for &x in &xs {
                let p = Vec3::new(x, 0.0, z);
                // points on the circle are kept whatever the rounding
                let keep = (p - b).norm() >= self.exclusion_radius * z_b * (1.0 - 1e-12);
                out.push(keep.then_some(p));
            }
        }
        out
    }
}

/// `U/U⁰` over a grid of atom-A positions; atom B sits at `(0, 0, z_B)`
/// above a perfectly conducting plate.
#[derive(Debug, Clone, PartialEq)]
pub struct EnhancementMap {
    pub z_b: f64,
    pub spec: GridSpec,
    pub xs: Vec<f64>,
    pub zs: Vec<f64>,
    /// Row-major (`z` outer), `None` inside the exclusion disc.
    pub ratio: Vec<Option<f64>>,
}

/// Where the plate modifies the two-atom potential most, along the line
/// through atom B parallel to the plate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LobeSummary {
    /// Row used (closest to `z = z_B`).
    pub row_height: f64,
    /// `|x|/z_B` of the largest `|U/U⁰ − 1|` on the negative and positive side.
    pub centre_left: f64,
    pub centre_right: f64,
    /// `U/U⁰` at those points.
    pub ratio_left: f64,
    pub ratio_right: f64,
    /// Whether some grid point with `x < 0` (resp. `x > 0`) has `U/U⁰ > 1`.
    pub enhanced_left: bool,
    pub enhanced_right: bool,
    pub max_ratio: f64,
    pub min_ratio: f64,
}

impl EnhancementMap {
    /// Builds a map from precomputed ratios in the order of
    /// [`GridSpec::points`].
    pub fn assemble(z_b: f64, spec: GridSpec, ratio: Vec<Option<f64>>) -> Result<Self> {
        spec.validate()?;
        if ratio.len() != spec.nx * spec.nz {
            return Err(Error::domain("ratio count does not match the grid"));
        }
        Ok(EnhancementMap {
            z_b,
            spec,
            xs: spec.xs(z_b),
            zs: spec.zs(z_b),
            ratio,
        })
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.ratio[j * self.xs.len() + i]
    }

    /// `true` if `U/U⁰ − 1` changes sign between some pair of neighbouring
    /// grid points, i.e. the `U = U⁰` contour crosses the grid.
    pub fn has_unit_contour(&self) -> bool {
        let (nx, nz) = (self.xs.len(), self.zs.len());
        let crosses = |a: Option<f64>, b: Option<f64>| matches!((a, b), (Some(a), Some(b)) if (a - 1.0) * (b - 1.0) < 0.0);
        (0..nz).any(|j| (0..nx - 1).any(|i| crosses(self.get(i, j), self.get(i + 1, j))))
            || (0..nz - 1).any(|j| (0..nx).any(|i| crosses(self.get(i, j), self.get(i, j + 1))))
    }

    pub fn lobes(&self) -> LobeSummary {
        let row = (0..self.zs.len())
            .min_by(|&a, &b| {
                (self.zs[a] - self.z_b)
                    .abs()
                    .total_cmp(&(self.zs[b] - self.z_b).abs())
            })
            .unwrap_or(0);
        let side = |left: bool| {
            let mut best = (f64::NAN, f64::NAN, -1.0);
            for (i, &x) in self.xs.iter().enumerate() {
                if (left && x >= 0.0) || (!left && x <= 0.0) {
                    continue;
                }
                if let Some(r) = self.get(i, row) {
                    if (r - 1.0).abs() > best.2 {
                        best = (x.abs() / self.z_b, r, (r - 1.0).abs());
                    }
                }
            }
            best
        };
        let enhanced = |left: bool| {
            self.ratio.iter().enumerate().any(|(k, r)| {
                let x = self.xs[k % self.xs.len()];
                (if left { x < 0.0 } else { x > 0.0 }) && r.is_some_and(|r| r > 1.0)
            })
        };
        let values = self.ratio.iter().flatten();
        let (l, r) = (side(true), side(false));
        LobeSummary {
            row_height: self.zs[row],
            centre_left: l.0,
            centre_right: r.0,
            ratio_left: l.1,
            ratio_right: r.1,
            enhanced_left: enhanced(true),
            enhanced_right: enhanced(false),
            max_ratio: values.clone().copied().fold(f64::NEG_INFINITY, f64::max),
            min_ratio: values.copied().fold(f64::INFINITY, f64::min),
        }
    }
}

/// `U/U⁰` for two static atoms above a perfectly conducting plate in the
/// long-distance limit, atom B at `(0, 0, z_B)`.  Polarizabilities cancel.
pub fn enhancement_ratio(r_a: Vec3, z_b: f64, config: &QuadratureConfig) -> Result<f64> {
    if !(z_b > 0.0 && z_b.is_finite()) {
        return Err(Error::domain("atom B must sit above the plate"));
    }
    let alpha = Polarizability::Static(1.0);
    let a = Atom::new(r_a, alpha)?;
    let b = Atom::new(Vec3::new(0.0, 0.0, z_b), alpha)?;
    let scene = Scene::new(vec![Body::PerfectPlate], vec![a, b])?;
    let v = vdw_potential(&a, &b, &scene, Regime::Retarded, config)?;
    Ok(v.total / v.free_space)
}

/// Ratio along the line `z = z_B` for the given `x` values.
pub fn transverse_profile(
    z_b: f64,
    xs: &[f64],
    config: &QuadratureConfig,
) -> Result<Vec<(f64, f64)>> {
    xs.iter()
        .map(|&x| Ok((x, enhancement_ratio(Vec3::new(x, 0.0, z_b), z_b, config)?)))
        .collect()
}

/// Evaluates the full map sequentially.
pub fn enhancement_map(
    z_b: f64,
    spec: &GridSpec,
    config: &QuadratureConfig,
) -> Result<EnhancementMap> {
    spec.validate()?;
    let ratio = spec
        .points(z_b)
        .into_iter()
        .map(|p| p.map(|p| enhancement_ratio(p, z_b, config)).transpose())
        .collect::<Result<Vec<_>>>()?;
    EnhancementMap::assemble(z_b, *spec, ratio)
}
