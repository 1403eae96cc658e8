//! Dispersion interactions between ground-state atoms and macroscopic bodies.
//!
//! The crate evaluates Casimir–Polder (atom–body) and van der Waals
//! (atom–atom) potentials and the planar Casimir pressure from analytic
//! electromagnetic Green tensors at imaginary frequency, for a small set of
//! canonical geometries: perfectly conducting plates, magnetoelectric
//! half-spaces and slabs, and perfectly conducting spheres (quasi-static).
//!
//! Everything is computed in natural units `ħ = c = ε₀ = μ₀ = 1`.  Atoms carry
//! a polarizability volume `α′ = α/(4πε₀)` (length³), potentials come out in
//! units of `ħc/length` and pressures in `ħc/length⁴`.
//!
//! The [`scaling`] module rescales whole scenes and measures the power laws
//! that dispersion interactions obey in the long- and short-distance limits.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod greens;
pub mod potentials;
pub mod quadrature;
pub mod regime;
pub mod response;
pub mod scaling;
pub mod scene;
pub mod tensor;
pub mod units;

pub use error::{Error, Result};
pub use regime::Regime;
pub use response::{
    evaluate_response, MaterialResponse, Polarizability, ResponseModel, ResponseRole, ResponseValue,
};
pub use scene::{Atom, Body, Scene};
pub use tensor::{GreenTensorValue, Mat3, TensorKind, Vec3};
pub use units::Units;

/// `4π`, which shows up in every Green tensor prefactor.
pub(crate) const FOUR_PI: f64 = 4.0 * core::f64::consts::PI;
