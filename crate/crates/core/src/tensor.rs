//! Small fixed-size vector and matrix types used by the Green tensors.

use core::ops::{Add, AddAssign, Mul, Neg, Sub};

#[allow(unused_imports)] // inherent when std is linked
use num_traits::Float;

/// Cartesian 3-vector (positions, separations, forces).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Mirror image in the plane `z = 0`.
    pub fn mirrored(self) -> Vec3 {
        Vec3::new(self.x, self.y, -self.z)
    }

    pub(crate) fn component(self, i: usize) -> f64 {
        match i {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }

    pub(crate) fn with_component(self, i: usize, v: f64) -> Vec3 {
        match i {
            0 => Vec3::new(v, self.y, self.z),
            1 => Vec3::new(self.x, v, self.z),
            _ => Vec3::new(self.x, self.y, v),
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Real 3×3 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const ZERO: Mat3 = Mat3([[0.0; 3]; 3]);
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub const fn diag(a: f64, b: f64, c: f64) -> Mat3 {
        Mat3([[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]])
    }

    /// Dyadic product `u ⊗ v`.
    pub fn outer(u: Vec3, v: Vec3) -> Mat3 {
        let (u, v) = (u.to_array(), v.to_array());
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = u[i] * v[j];
            }
        }
        Mat3(m)
    }

    /// Matrix of `w ↦ u × w`, i.e. the dyadic `u × I`.
    pub fn cross(u: Vec3) -> Mat3 {
        Mat3([[0.0, -u.z, u.y], [u.z, 0.0, -u.x], [-u.y, u.x, 0.0]])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Mat3 {
        let a = &self.0;
        Mat3([
            [a[0][0], a[1][0], a[2][0]],
            [a[0][1], a[1][1], a[2][1]],
            [a[0][2], a[1][2], a[2][2]],
        ])
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Frobenius inner product `Tr[A·Bᵀ]`.
    pub fn frobenius_dot(&self, o: &Mat3) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                s += self.0[i][j] * o.0[i][j];
            }
        }
        s
    }

    pub fn scale(&self, s: f64) -> Mat3 {
        let mut m = self.0;
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        Mat3(m)
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    /// Largest componentwise difference.
    pub fn max_abs_diff(&self, o: &Mat3) -> f64 {
        (*self - *o).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|v| v.is_finite())
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(self, o: Mat3) -> Mat3 {
        let mut m = self.0;
        for (row, other) in m.iter_mut().zip(o.0) {
            for (v, w) in row.iter_mut().zip(other) {
                *v += w;
            }
        }
        Mat3(m)
    }
}

impl AddAssign for Mat3 {
    fn add_assign(&mut self, o: Mat3) {
        *self = *self + o;
    }
}

impl Sub for Mat3 {
    type Output = Mat3;
    fn sub(self, o: Mat3) -> Mat3 {
        self + o.scale(-1.0)
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, o: Mat3) -> Mat3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..3).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        Mat3(m)
    }
}

impl Mul<Vec3> for Mat3 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        let r = |i: usize| self.0[i][0] * v.x + self.0[i][1] * v.y + self.0[i][2] * v.z;
        Vec3::new(r(0), r(1), r(2))
    }
}

/// Which piece of the Green tensor a value represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorKind {
    Full,
    /// Free-space part `G⁽⁰⁾`.
    Bulk,
    /// Body-induced part `G⁽¹⁾`.
    Scattering,
    /// `∇ × G`.
    CurlLeft,
    /// `G × ∇′`.
    CurlRight,
    /// `∇ × G × ∇′`.
    CurlCurl,
}

/// A Green tensor evaluated at imaginary frequency.  Always real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenTensorValue {
    pub matrix: Mat3,
    pub kind: TensorKind,
}

impl GreenTensorValue {
    pub fn new(matrix: Mat3, kind: TensorKind) -> Self {
        GreenTensorValue { matrix, kind }
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    pub fn transpose(&self) -> Self {
        GreenTensorValue::new(self.matrix.transpose(), self.kind)
    }
}
