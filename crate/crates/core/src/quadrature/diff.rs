use crate::error::Result;
use crate::tensor::Vec3;

/// Step used for force evaluations: `1e-5` of the distance to the nearest
/// surface.
pub fn default_step(distance_to_surface: f64) -> f64 {
    1e-5 * distance_to_surface
}

/// Central-difference gradient of `f` at `r`, error `O(h²)`.
pub fn gradient_fd<F>(f: F, r: Vec3, h: f64) -> Result<Vec3>
where
    F: Fn(Vec3) -> Result<f64>,
{
    let mut g = [0.0; 3];
    for (i, gi) in g.iter_mut().enumerate() {
        let c = r.component(i);
        let plus = f(r.with_component(i, c + h))?;
        let minus = f(r.with_component(i, c - h))?;
        *gi = (plus - minus) / (2.0 * h);
    }
    Ok(Vec3::from_array(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic() {
        let g = gradient_fd(|r| Ok(r.z * r.z), Vec3::new(0.0, 0.0, 1.0), 1e-4).unwrap();
        assert!((g - Vec3::new(0.0, 0.0, 2.0)).norm() < 1e-7);
    }

    #[test]
    fn inverse_distance() {
        let g = gradient_fd(|r| Ok(1.0 / r.z), Vec3::new(0.0, 0.0, 2.0), 1e-4).unwrap();
        assert!((g - Vec3::new(0.0, 0.0, -0.25)).norm() < 1e-6);
    }

    #[test]
    fn constant() {
        let g = gradient_fd(|_| Ok(3.5), Vec3::new(1.0, 2.0, 3.0), 1e-3).unwrap();
        assert_eq!(g, Vec3::ZERO);
    }
}
