//! Composition of rotations given by their Rodrigues parameters.
//!
//! Throughout, `compose(p, p2)` means "apply `p` first, then `p2`": the
//! matrix is `to_matrix(p2) * to_matrix(p)` and the quaternion is `q2 q1`.

use std::f64::consts::PI;

use crate::error::Result;
use crate::quaternion::{cross, dot, Vector3};

use super::axis_angle::{from_matrix, to_matrix, AxisAngle};

/// Below this `sin(theta'' / 2)` the composed rotation is the identity
/// (mod `2 pi`) and its axis defaults to `e3`.
pub const COMPOSED_AXIS_EPS: f64 = 1e-12;

/// Rodrigues' half-angle product formula.
///
/// With `p = (t1, w1)` applied first and `p2 = (t2, w2)` second:
///
/// ```text
/// cos(t/2)   = cos(t2/2) cos(t1/2) - sin(t2/2) sin(t1/2) w2.w1
/// sin(t/2) w = cos(t2/2) sin(t1/2) w1 + sin(t2/2) cos(t1/2) w2
///              + sin(t2/2) sin(t1/2) w2 x w1
/// ```
///
/// The result has `t` in `[0, 2 pi)` and `sin(t/2) >= 0`. Any multi-turn
/// information carried by the inputs is lost: a product of rotations only
/// determines its parameter up to the covering ambiguity.
pub fn compose_rodrigues(p: &AxisAngle, p2: &AxisAngle) -> AxisAngle {
    let (s1, c1) = (0.5 * p.theta()).sin_cos();
    let (s2, c2) = (0.5 * p2.theta()).sin_cos();
    let (w1, w2) = (p.axis(), p2.axis());

    let cos_half = c2 * c1 - s2 * s1 * dot(w2, w1);
    let sin_w = w1 * (c2 * s1) + w2 * (s2 * c1) + cross(w2, w1) * (s2 * s1);
    let sin_half = sin_w.norm();

    if sin_half <= COMPOSED_AXIS_EPS {
        // theta'' is 0 or 2 pi; both are the identity rotation
        let theta = if cos_half >= 0.0 { 0.0 } else { 2.0 * PI };
        return AxisAngle::new(theta, Vector3::E3).expect("e3 is a unit vector");
    }
    let theta = 2.0 * sin_half.atan2(cos_half);
    AxisAngle::new(theta, sin_w / sin_half).expect("normalized axis")
}

/// The composed rotation computed through 3x3 matrices:
/// `from_matrix(to_matrix(p2) * to_matrix(p))`. The angle lands in `[0, pi]`.
pub fn compose_matrix(p: &AxisAngle, p2: &AxisAngle) -> Result<AxisAngle> {
    from_matrix(&(to_matrix(p2) * to_matrix(p)))
}

/// First-order composition for small angles: `t w = t1 w1 + t2 w2`.
///
/// The neglected term is `(t1 t2 / 2) w2 x w1`, so the error is `O(t1 t2)`;
/// the formula is exact for coaxial rotations.
pub fn compose_small_angle(p: &AxisAngle, p2: &AxisAngle) -> AxisAngle {
    AxisAngle::from_rotation_vector(p.rotation_vector() + p2.rotation_vector())
        .expect("finite rotation vector")
}

/// First-order composition for small angles about nearby axes:
/// `t = t1 + t2` and `w = (w1 + w2) / 2`, renormalized to unit length.
pub fn compose_small_angle_nearby_axes(p: &AxisAngle, p2: &AxisAngle) -> AxisAngle {
    let mid = (p.axis() + p2.axis()) * 0.5;
    match mid.normalized() {
        Some(w) => AxisAngle::new(p.theta() + p2.theta(), w).expect("normalized axis"),
        None => compose_small_angle(p, p2),
    }
}
