//! Matrix pictures of quaternions and rotations.
//!
//! Two distinct 2x2 bases live here and are never mixed:
//!
//! * the immersion `psi: H -> M(2, C)`, sending `i, j, k` to
//!   `I = ((0,-1),(1,0))`, `J = ((0,i),(i,0))`, `K = ((-i,0),(0,i))`;
//! * Cartan's Hermitian basis `H1, H2, H3` (the Pauli matrices) with the
//!   vector map `x -> X = x1 H1 + x2 H2 + x3 H3`, in which a reflection in
//!   the plane orthogonal to a unit vector `a` reads `X -> -A X A`.

mod complex;
pub mod generators;
mod mat2;
mod mat3;

pub use complex::Complex;
pub use generators::{verify_generator_relations, GeneratorKind, RelationCheck, RelationReport};
pub use mat2::Mat2C;
pub use mat3::{Mat3R, SO3_TOLERANCE};

use crate::error::{Error, Result};
use crate::quaternion::{cross, dot, Quaternion, UnitQuaternion, Vector3};
use crate::rotation::AxisAngle;

/// Tolerance on `|a| = 1` for reflection normals and rotation axes.
pub const UNIT_VECTOR_TOLERANCE: f64 = 1e-10;

/// Entry tolerance for accepting a matrix as Hermitian and traceless.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Below this `|a x b|` two reflection normals are treated as (anti)parallel.
const PARALLEL_NORMALS_EPS: f64 = 1e-12;

/// Image of `i` under the immersion.
pub const PSI_I: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (-1.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
/// Image of `j` under the immersion.
pub const PSI_J: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (0.0, 1.0), (0.0, 1.0), (0.0, 0.0)]);
/// Image of `k` under the immersion.
pub const PSI_K: Mat2C = Mat2C::from_pairs([(0.0, -1.0), (0.0, 0.0), (0.0, 0.0), (0.0, 1.0)]);

/// Cartan's `H1`.
pub const CARTAN_H1: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
/// Cartan's `H2`.
pub const CARTAN_H2: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)]);
/// Cartan's `H3`.
pub const CARTAN_H3: Mat2C = Mat2C::from_pairs([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)]);

/// The immersion of the quaternion field into 2x2 complex matrices.
pub fn psi(q: Quaternion) -> Mat2C {
    Mat2C::new(
        Complex::new(q.a, -q.d),
        Complex::new(-q.b, q.c),
        Complex::new(q.b, q.c),
        Complex::new(q.a, q.d),
    )
}

/// `X = x1 H1 + x2 H2 + x3 H3 = ((x3, x1 - i x2), (x1 + i x2, -x3))`.
pub fn cartan_x(x: Vector3) -> Mat2C {
    Mat2C::new(
        Complex::real(x.z),
        Complex::new(x.x, -x.y),
        Complex::new(x.x, x.y),
        Complex::real(-x.z),
    )
}

/// Inverse of [`cartan_x`]; the input must be Hermitian and traceless.
pub fn cartan_vector(m: &Mat2C) -> Result<Vector3> {
    if !m.is_finite() {
        return Err(Error::NonFinite { what: "matrix" });
    }
    let deviation = m.hermitian_traceless_deviation();
    if deviation > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitianTraceless { deviation });
    }
    let [[m11, m12], [m21, m22]] = m.m;
    Ok(Vector3::new(
        0.5 * (m21.re + m12.re),
        0.5 * (m21.im - m12.im),
        0.5 * (m11.re - m22.re),
    ))
}

fn unit(a: Vector3) -> Result<Vector3> {
    a.unit_checked(UNIT_VECTOR_TOLERANCE)
}

/// Reflection in the plane orthogonal to the unit vector `a`:
/// `x' = x - 2 a <x, a>`.
pub fn reflect(a: Vector3, x: Vector3) -> Result<Vector3> {
    let a = unit(a)?;
    Ok(x - a * (2.0 * dot(x, a)))
}

/// The same reflection computed in the Hermitian-matrix picture, `X' = -A X A`.
pub fn reflect_cartan(a: Vector3, x: Vector3) -> Result<Vector3> {
    let a = cartan_x(unit(a)?);
    cartan_vector(&-(a * cartan_x(x) * a))
}

/// `Ref(b) Ref(a) x` in the matrix picture: `X -> (BA) X (AB)`.
pub fn two_reflections_cartan(a: Vector3, b: Vector3, x: Vector3) -> Result<Vector3> {
    let a = cartan_x(unit(a)?);
    let b = cartan_x(unit(b)?);
    cartan_vector(&(b * a * cartan_x(x) * a * b))
}

/// Rotation by `theta` about the unit axis `l` in the matrix picture:
/// `X' = (cos(t/2) - i L sin(t/2)) X (cos(t/2) + i L sin(t/2))`.
pub fn cartan_rotate(theta: f64, l: Vector3, x: Vector3) -> Result<Vector3> {
    let l = cartan_x(unit(l)?);
    let (s, c) = (0.5 * theta).sin_cos();
    let il = l.scale(Complex::new(0.0, s));
    let left = Mat2C::scalar(Complex::real(c)) - il;
    let right = Mat2C::scalar(Complex::real(c)) + il;
    cartan_vector(&(left * cartan_x(x) * right))
}

/// The rotation `Ref(b) o Ref(a)`: reflect in `a` first, then in `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoReflectionRotation {
    /// `-b a` as a quaternion product; equals `cos(t/2) + sin(t/2) l`.
    pub quaternion: UnitQuaternion,
    /// Angle `t` with `cos(t/2) = <a, b>` about `l = a x b / |a x b|`.
    pub axis_angle: AxisAngle,
    /// Set when `a = b`: the rotation is the identity and the axis is a placeholder.
    pub axis_arbitrary: bool,
}

/// Composes two reflections into a rotation.
///
/// Fails with [`Error::AntipodalNormals`] when `a = -b`: the result is a
/// half-turn whose axis could be any direction orthogonal to `a`.
pub fn rotation_from_two_reflections(a: Vector3, b: Vector3) -> Result<TwoReflectionRotation> {
    let a = unit(a)?;
    let b = unit(b)?;
    let axb = cross(a, b);
    let sin_half = axb.norm();
    let cos_half = dot(a, b);
    if sin_half <= PARALLEL_NORMALS_EPS {
        if cos_half < 0.0 {
            return Err(Error::AntipodalNormals);
        }
        return Ok(TwoReflectionRotation {
            quaternion: UnitQuaternion::IDENTITY,
            axis_angle: AxisAngle::identity(),
            axis_arbitrary: true,
        });
    }
    let quaternion = UnitQuaternion::normalize(-(b.to_quaternion() * a.to_quaternion()))?;
    let theta = 2.0 * sin_half.atan2(cos_half);
    let axis_angle = AxisAngle::new(theta, axb / sin_half)?;
    Ok(TwoReflectionRotation {
        quaternion,
        axis_angle,
        axis_arbitrary: false,
    })
}

/// Euler-Olinde-Rodrigues parameters `(rho, lambda, mu, nu)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerRodriguesParameters {
    pub rho: f64,
    pub lambda: f64,
    pub mu: f64,
    pub nu: f64,
}

impl EulerRodriguesParameters {
    pub fn sum_of_squares(&self) -> f64 {
        self.rho * self.rho + self.lambda * self.lambda + self.mu * self.mu + self.nu * self.nu
    }

    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::new(self.rho, self.lambda, self.mu, self.nu)
    }
}

/// `rho = cos(t/2)` and `(lambda, mu, nu) = l sin(t/2)` for a unit axis `l`.
pub fn euler_olinde_rodrigues_parameters(
    theta: f64,
    l: Vector3,
) -> Result<EulerRodriguesParameters> {
    let l = unit(l)?;
    let (s, c) = (0.5 * theta).sin_cos();
    Ok(EulerRodriguesParameters {
        rho: c,
        lambda: l.x * s,
        mu: l.y * s,
        nu: l.z * s,
    })
}
