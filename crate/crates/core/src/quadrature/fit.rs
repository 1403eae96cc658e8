use alloc::vec::Vec;

#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

use crate::error::{Error, Result};

/// Least-squares power law `v ≈ amplitude · a^exponent`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub amplitude: f64,
    /// Largest absolute residual of `ln|v|` about the fitted line.
    pub max_log_residual: f64,
    pub sample_points: Vec<(f64, f64)>,
}

/// Fits a straight line through `(ln a, ln|v|)`.
///
/// Needs at least three samples with distinct positive `a` and nonzero `v` of
/// one sign.
pub fn fit_power_law(samples: &[(f64, f64)]) -> Result<PowerLawFit> {
    if samples.len() < 3 {
        return Err(Error::domain("power-law fit needs at least three samples"));
    }
    let sign = samples[0].1.signum();
    for &(a, v) in samples {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::domain("power-law abscissae must be positive"));
        }
        if v == 0.0 || !v.is_finite() || v.signum() != sign {
            return Err(Error::domain(
                "power-law values must be nonzero and of uniform sign",
            ));
        }
    }
    let n = samples.len() as f64;
    let xs: Vec<f64> = samples.iter().map(|s| s.0.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.1.abs().ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::domain("power-law abscissae must be distinct"));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let max_log_residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (intercept + slope * x)).abs())
        .fold(0.0, f64::max);
    Ok(PowerLawFit {
        exponent: slope,
        amplitude: sign * intercept.exp(),
        max_log_residual,
        sample_points: samples.to_vec(),
    })
}

/// Solves the two-column least-squares problem `rows · c ≈ rhs` by
/// column-scaled modified Gram–Schmidt.
pub fn least_squares_2(rows: &[[f64; 2]], rhs: &[f64]) -> Result<[f64; 2]> {
    if rows.len() < 2 || rows.len() != rhs.len() {
        return Err(Error::domain(
            "least squares needs at least two matching rows",
        ));
    }
    let norm = |c: usize| rows.iter().map(|r| r[c] * r[c]).sum::<f64>().sqrt();
    let (n0, n1) = (norm(0), norm(1));
    if n0 == 0.0 || n1 == 0.0 {
        return Err(Error::domain("degenerate least-squares column"));
    }
    let q0: Vec<f64> = rows.iter().map(|r| r[0] / n0).collect();
    let mut q1: Vec<f64> = rows.iter().map(|r| r[1] / n1).collect();
    let r01: f64 = q0.iter().zip(&q1).map(|(a, b)| a * b).sum();
    for (b, a) in q1.iter_mut().zip(&q0) {
        *b -= r01 * a;
    }
    let r11 = q1.iter().map(|v| v * v).sum::<f64>().sqrt();
    if r11 <= 1e-14 {
        return Err(Error::domain("least-squares columns are collinear"));
    }
    for v in q1.iter_mut() {
        *v /= r11;
    }
    let b0: f64 = q0.iter().zip(rhs).map(|(q, y)| q * y).sum();
    let b1: f64 = q1.iter().zip(rhs).map(|(q, y)| q * y).sum();
    let c1 = b1 / r11;
    let c0 = b0 - r01 * c1;
    Ok([c0 / n0, c1 / n1])
}
