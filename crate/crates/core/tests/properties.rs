use dispersia_core::greens::{FresnelCoefficients, PlanarReflector};
use dispersia_core::quadrature::{fit_power_law, integrate_semi_infinite, QuadratureConfig};
use dispersia_core::scaling::scale_scene;
use dispersia_core::{Atom, Body, MaterialResponse, Polarizability, ResponseValue, Scene, Vec3};
use proptest::prelude::*;

fn value(m: &MaterialResponse, xi: f64) -> f64 {
    match m.evaluate(xi).unwrap() {
        ResponseValue::Finite(v) => v,
        ResponseValue::Perfect => f64::INFINITY,
    }
}

proptest! {
    #[test]
    fn electric_response_is_nonincreasing(s in 1.0..50.0f64, w in 0.01..10.0f64, x1 in 0.0..20.0f64, dx in 0.0..20.0f64) {
        let m = MaterialResponse::electric_resonance(s, w).unwrap();
        prop_assert!(value(&m, x1) >= value(&m, x1 + dx));
        prop_assert!(m.chi(x1).unwrap().unwrap() >= 0.0);
    }

    #[test]
    fn zeta_has_the_opposite_sign_of_mu_minus_one(s in 0.05..20.0f64, w in 0.01..10.0f64, xi in 0.0..20.0f64) {
        let m = MaterialResponse::magnetic_resonance(s, w).unwrap();
        let zeta = m.zeta(xi).unwrap().unwrap();
        let excess = value(&m, xi) - 1.0;
        prop_assert!(zeta * excess <= 0.0);
    }

    #[test]
    fn polarizability_decreases(a0 in 0.01..10.0f64, w in 0.01..10.0f64, x1 in 0.0..20.0f64, dx in 1e-3..20.0f64) {
        let p = Polarizability::SingleResonance { static_volume: a0, resonance: w };
        let (v1, v2) = (p.evaluate(x1).unwrap(), p.evaluate(x1 + dx).unwrap());
        prop_assert!(v1 > v2 && v2 > 0.0);
    }

    #[test]
    fn reflection_is_bounded(eps in 1.0..100.0f64, mu in 0.01..100.0f64, xi in 0.01..10.0f64, t in 0.0..50.0f64, d in 0.01..5.0f64) {
        let e = MaterialResponse::electric_static(eps).unwrap();
        let m = MaterialResponse::magnetic_static(mu).unwrap();
        let kappa = xi + t;
        for thickness in [None, Some(d)] {
            let r = PlanarReflector::from_media(&e, &m, thickness, xi).unwrap().coefficients(kappa);
            prop_assert!(r.r_s.abs() <= 1.0 && r.r_p.abs() <= 1.0);
        }
        // non-magnetic dielectric: r_p ≥ 0 ≥ r_s
        let (r, _) = FresnelCoefficients::interface(eps, 1.0, kappa, xi);
        prop_assert!(r.r_p >= 0.0 && r.r_s <= 0.0);
    }

    #[test]
    fn quadrature_is_deterministic(c in 0.1..10.0f64) {
        let cfg = QuadratureConfig::default();
        let f = |x: f64| (-c * x).exp() / (1.0 + x * x);
        let a = integrate_semi_infinite(f, &cfg).unwrap();
        let b = integrate_semi_infinite(f, &cfg).unwrap();
        prop_assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn tighter_tolerance_stays_within_the_previous_estimate(c in 0.1..10.0f64) {
        let f = |x: f64| x * x * (-c * x).exp();
        let exact = 2.0 / (c * c * c);
        let loose = QuadratureConfig::new(1e-6, 1e-300, 12).unwrap();
        let tight = QuadratureConfig::new(5e-7, 1e-300, 12).unwrap();
        let a = integrate_semi_infinite(f, &loose).unwrap();
        let b = integrate_semi_infinite(f, &tight).unwrap();
        prop_assert!((a - b).abs() <= 1e-6 * exact.abs());
    }

    #[test]
    fn power_law_fit_recovers_exponents(k in -8.0..8.0f64, amp in 0.1..10.0f64, sign in prop::bool::ANY) {
        let s = if sign { 1.0 } else { -1.0 };
        let samples: Vec<(f64, f64)> = [1.0f64, 1.5, 2.0, 3.0, 4.5, 8.0].iter().map(|&a| (a, s * amp * a.powf(k))).collect();
        let fit = fit_power_law(&samples).unwrap();
        prop_assert!((fit.exponent - k).abs() < 1e-12);
        prop_assert!(fit.max_log_residual < 1e-12);
    }

    #[test]
    fn scaling_composes(a in 0.1..10.0f64, b in 0.1..10.0f64, d in 0.1..3.0f64, z in 0.1..3.0f64) {
        let body = Body::slab(
            d,
            MaterialResponse::electric_static(3.0).unwrap(),
            MaterialResponse::magnetic_static(1.0).unwrap(),
        ).unwrap();
        let atom = Atom::new(Vec3::new(0.5, -0.25, z), Polarizability::Static(1.0)).unwrap();
        let scene = Scene::new(vec![body], vec![atom]).unwrap();
        let twice = scale_scene(&scale_scene(&scene, a).unwrap(), b).unwrap();
        let once = scale_scene(&scene, a * b).unwrap();
        let (Some(Body::Slab { thickness: t1, .. }), Some(Body::Slab { thickness: t2, .. })) = (twice.body(), once.body()) else {
            panic!("slab lost");
        };
        prop_assert!((t1 / t2 - 1.0).abs() < 1e-15);
        let (p1, p2) = (twice.atoms()[0].position, once.atoms()[0].position);
        prop_assert!((p1 - p2).norm() <= 1e-15 * p2.norm());
    }
}

#[test]
fn scaling_by_one_is_the_identity() {
    let body = Body::sphere(1.0, Vec3::new(0.0, 0.0, -2.0), true).unwrap();
    let scene = Scene::new(vec![body], vec![]).unwrap();
    assert_eq!(scale_scene(&scene, 1.0).unwrap(), scene);
}

#[test]
fn atoms_inside_bodies_are_rejected() {
    let atom = Atom::new(Vec3::new(0.0, 0.0, -0.5), Polarizability::Static(1.0)).unwrap();
    assert!(Scene::new(vec![Body::PerfectPlate], vec![atom]).is_err());
    let inside = Atom::new(Vec3::new(0.0, 0.0, -1.5), Polarizability::Static(1.0)).unwrap();
    let sphere = Body::sphere(1.0, Vec3::new(0.0, 0.0, -2.0), true).unwrap();
    assert!(Scene::new(vec![sphere], vec![inside]).is_err());
}
