//! Oracles shared by the identity and acceptance suites.
#![allow(dead_code)]

use dispersia_core::greens::{g0_retarded, g1_halfspace, g1_perfect_plate, g1_slab};
use dispersia_core::quadrature::QuadratureConfig;
use dispersia_core::{Mat3, MaterialResponse, Vec3};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRng, TestRunner};

pub fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

pub fn rel(a: &Mat3, b: &Mat3) -> f64 {
    a.max_abs_diff(b) / a.max_abs().max(b.max_abs())
}

pub fn eps(v: f64) -> MaterialResponse {
    MaterialResponse::electric_static(v).unwrap()
}

pub fn mu(v: f64) -> MaterialResponse {
    MaterialResponse::magnetic_static(v).unwrap()
}

/// Deterministic pseudo-random point pairs above the plane.
pub fn point_pairs(n: usize) -> Vec<(Vec3, Vec3, f64)> {
    let mut runner = TestRunner::new_with_rng(
        Config::default(),
        TestRng::deterministic_rng(Default::default()),
    );
    let coord = -2.0..2.0f64;
    let height = 0.05..2.0f64;
    let strategy = (
        (coord.clone(), coord.clone(), height.clone()),
        (coord.clone(), coord, height),
        0.05..3.0f64,
    );
    (0..n)
        .map(|_| {
            let ((x, y, z), (xp, yp, zp), xi) = strategy.new_tree(&mut runner).unwrap().current();
            (Vec3::new(x, y, z), Vec3::new(xp, yp, zp), xi)
        })
        .collect()
}

/// Arguments `(r, r′, ξ, a)`; `a` scales the body's own lengths.
pub type Evaluator = Box<dyn Fn(Vec3, Vec3, f64, f64) -> Mat3>;

pub fn planar_tensors() -> Vec<(&'static str, Evaluator)> {
    vec![
        (
            "free",
            Box::new(|r, rp, xi, _| g0_retarded(r, rp, xi).unwrap().matrix),
        ),
        (
            "plate",
            Box::new(|r, rp, xi, _| g1_perfect_plate(r, rp, xi).unwrap().matrix),
        ),
        (
            "half-space",
            Box::new(|r, rp, xi, _| {
                g1_halfspace(r, rp, xi, &eps(4.0), &mu(2.0), &cfg())
                    .unwrap()
                    .matrix
            }),
        ),
        (
            "slab",
            Box::new(|r, rp, xi, a| {
                g1_slab(r, rp, xi, 0.7 * a, &eps(11.7), &mu(1.5), &cfg())
                    .unwrap()
                    .matrix
            }),
        ),
    ]
}

/// `−ξ² ∫_{z<0} d³s G⁰(r, s) G⁰(s, r)` at `r = (0, 0, z)`, returned as the
/// `(xx, zz)` components.  The polar angle about `r` is integrated in closed
/// form; the radial integral uses composite Simpson in `ln R`.
pub fn born_coincident(z: f64, xi: f64) -> (f64, f64) {
    let four_pi = 4.0 * std::f64::consts::PI;
    let integrand = |big_r: f64| {
        let u = xi * big_r;
        let pre = (-u).exp() / (four_pi * xi * xi * big_r.powi(3));
        let a = pre * (1.0 + u + u * u);
        let b = pre * (3.0 + 3.0 * u + u * u);
        // G⁰² = A² I − (2AB − B²) e e; average e e over the cap below the plane
        let c = z / big_r;
        let m0 = 1.0 - c;
        let m2 = (1.0 - c * c * c) / 3.0;
        let w = 2.0 * a * b - b * b;
        let zz = a * a * m0 - w * m2;
        let xx = a * a * m0 - w * (m0 - m2) / 2.0;
        let vol = 2.0 * std::f64::consts::PI * big_r * big_r * big_r;
        (xx * vol, zz * vol)
    };
    let w_max = ((80.0 / xi).max(80.0 * z) / z).ln();
    let n = 200_000;
    let h = w_max / n as f64;
    let (mut sx, mut sz) = (0.0, 0.0);
    for k in 0..=n {
        let weight = if k == 0 || k == n {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let (fx, fz) = integrand(z * (k as f64 * h).exp());
        sx += weight * fx;
        sz += weight * fz;
    }
    (-xi * xi * sx * h / 3.0, -xi * xi * sz * h / 3.0)
}
