use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix_rep::{Mat3R, SO3_TOLERANCE, UNIT_VECTOR_TOLERANCE};
use crate::quaternion::{exp_pure, UnitQuaternion, Vector3};

/// Axis tolerance absorbed by [`AxisAngle::new`]; larger errors are rejected.
const AXIS_RENORMALIZE_TOLERANCE: f64 = 1e-6;

/// Below this `|sin(theta) w|` an extracted rotation is the identity.
const IDENTITY_EPS: f64 = 1e-14;

/// Rodrigues parameter `theta w`: a right-handed rotation by `theta` about
/// the unit axis `w`.
///
/// The angle is not reduced, so `(theta + 2 pi, w)` is a distinct parameter
/// describing the same rotation. This keeps multi-turn motion continuous.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    theta: f64,
    axis: Vector3,
}

impl AxisAngle {
    /// Builds a parameter, renormalizing an axis whose norm is close to 1.
    pub fn new(theta: f64, axis: Vector3) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::NonFinite { what: "angle" });
        }
        let axis = axis.unit_checked(AXIS_RENORMALIZE_TOLERANCE)?;
        Ok(AxisAngle { theta, axis })
    }

    pub fn identity() -> Self {
        AxisAngle {
            theta: 0.0,
            axis: Vector3::E3,
        }
    }

    /// Splits a rotation vector `v = theta w` with `theta = |v|`; the zero
    /// vector maps to the identity with axis `e3`.
    pub fn from_rotation_vector(v: Vector3) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite {
                what: "rotation vector",
            });
        }
        match v.normalized() {
            Some(w) => Ok(AxisAngle {
                theta: v.norm(),
                axis: w,
            }),
            None => Ok(AxisAngle::identity()),
        }
    }

    /// The parameter with `exp((theta / 2) w) = q` and `theta` in
    /// `[0, 2 pi]`. `q` and `-q` give angles `theta` and `2 pi - theta`
    /// about the same axis. For `q = +-1` the axis is `e3`.
    pub fn from_quaternion(q: UnitQuaternion) -> AxisAngle {
        let v = q.vector();
        let s = v.norm();
        let theta = 2.0 * s.atan2(q.scalar());
        match v.normalized() {
            Some(axis) if s > 0.0 => AxisAngle { theta, axis },
            _ => AxisAngle {
                theta,
                axis: Vector3::E3,
            },
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn axis(&self) -> Vector3 {
        self.axis
    }

    pub fn rotation_vector(&self) -> Vector3 {
        self.axis * self.theta
    }

    /// `exp((theta / 2) w)`, one of the two unit quaternions over this rotation.
    pub fn to_quaternion(&self) -> UnitQuaternion {
        exp_pure(self.axis * (0.5 * self.theta))
    }

    /// `(-theta, -w)`: the same rotation, written with the opposite axis.
    pub fn flipped(&self) -> AxisAngle {
        AxisAngle {
            theta: -self.theta,
            axis: -self.axis,
        }
    }

    pub fn inverse(&self) -> AxisAngle {
        AxisAngle {
            theta: -self.theta,
            axis: self.axis,
        }
    }

    /// Reduces the angle to `[0, pi]`, flipping the axis where needed.
    pub fn canonical(&self) -> AxisAngle {
        let mut t = self.theta.rem_euclid(2.0 * PI);
        let mut w = self.axis;
        if t > PI {
            t = 2.0 * PI - t;
            w = -w;
        }
        AxisAngle { theta: t, axis: w }
    }

    pub fn rotate(&self, x: Vector3) -> Vector3 {
        rotate(self, x)
    }

    pub fn to_matrix(&self) -> Mat3R {
        to_matrix(self)
    }
}

impl fmt::Display for AxisAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rad about {}", self.theta, self.axis)
    }
}

/// `x' = q x conj(q)` with `q = exp((theta / 2) w)`.
pub fn rotate(p: &AxisAngle, x: Vector3) -> Vector3 {
    p.to_quaternion().act(x)
}

/// The rotation matrix `E3 + sin(theta) W + (1 - cos(theta)) W^2`, with
/// `W` the cross-product matrix of the axis.
///
/// Built from the axis directly rather than from the quaternion so that it
/// can serve as an independent check of the quaternion route.
pub fn to_matrix(p: &AxisAngle) -> Mat3R {
    let (s, c) = p.theta.sin_cos();
    let v = 1.0 - c;
    let Vector3 { x, y, z } = p.axis;
    Mat3R::from_rows([
        [c + v * x * x, v * x * y - s * z, v * x * z + s * y],
        [v * y * x + s * z, c + v * y * y, v * y * z - s * x],
        [v * z * x - s * y, v * z * y + s * x, c + v * z * z],
    ])
}

/// An extracted rotation plus whether its axis carries information.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixAxisAngle {
    pub rotation: AxisAngle,
    /// `true` for the identity, where the reported `e3` axis is a placeholder.
    pub axis_arbitrary: bool,
}

/// Axis and angle of a rotation matrix, with `theta` in `[0, pi]`.
pub fn from_matrix(u: &Mat3R) -> Result<AxisAngle> {
    from_matrix_detailed(u).map(|r| r.rotation)
}

/// [`from_matrix`] with the identity flag.
///
/// For `cos(theta) >= 0` the axis comes from the skew part `(U - U^T) / 2 =
/// sin(theta) W`. For obtuse angles it comes from the symmetric part
/// `(U + U^T) / 2 - cos(theta) E3 = (1 - cos(theta)) w w^T` using the column
/// with the largest diagonal entry, with the sign taken from the skew part.
/// At exactly `pi` the sign follows the fibre rule: the first nonzero
/// component is positive.
pub fn from_matrix_detailed(u: &Mat3R) -> Result<MatrixAxisAngle> {
    u.check_rotation(SO3_TOLERANCE)?;
    let m = &u.m;
    let skew = Vector3::new(
        0.5 * (m[2][1] - m[1][2]),
        0.5 * (m[0][2] - m[2][0]),
        0.5 * (m[1][0] - m[0][1]),
    );
    let sin_t = skew.norm();
    let cos_t = 0.5 * (u.trace() - 1.0);
    let theta = sin_t.atan2(cos_t);

    if sin_t <= IDENTITY_EPS && cos_t > 0.0 {
        return Ok(MatrixAxisAngle {
            rotation: AxisAngle::identity(),
            axis_arbitrary: true,
        });
    }

    let axis = if cos_t >= 0.0 {
        skew / sin_t
    } else {
        let one_minus_cos = 1.0 - cos_t;
        let sym = |i: usize, j: usize| {
            (0.5 * (m[i][j] + m[j][i]) - if i == j { cos_t } else { 0.0 }) / one_minus_cos
        };
        let k = (0..3)
            .max_by(|&i, &j| sym(i, i).total_cmp(&sym(j, j)))
            .unwrap_or(0);
        let col = Vector3::new(sym(0, k), sym(1, k), sym(2, k));
        let w = col / col.norm();
        if sin_t > IDENTITY_EPS {
            if w.dot(skew) < 0.0 {
                -w
            } else {
                w
            }
        } else {
            first_nonzero_positive(w)
        }
    };
    debug_assert!((axis.norm() - 1.0).abs() < UNIT_VECTOR_TOLERANCE);
    Ok(MatrixAxisAngle {
        rotation: AxisAngle { theta, axis },
        axis_arbitrary: false,
    })
}

fn first_nonzero_positive(w: Vector3) -> Vector3 {
    match w.to_array().into_iter().find(|c| c.abs() > IDENTITY_EPS) {
        Some(c) if c < 0.0 => -w,
        _ => w,
    }
}
