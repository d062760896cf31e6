//! Rodrigues parametrization of rotations, composition, the double cover and
//! z-y-z Euler angles.
//!
//! Vectors are columns and matrices act on the left. A parameter `(theta, w)`
//! acts through `R(theta w) = T(exp(theta w / 2))`, i.e. by conjugation with
//! the half-angle unit quaternion.

mod axis_angle;
mod compose;
mod cover;
mod euler;

pub use axis_angle::{
    from_matrix, from_matrix_detailed, rotate, to_matrix, AxisAngle, MatrixAxisAngle,
};
pub use compose::{
    compose_matrix, compose_rodrigues, compose_small_angle, compose_small_angle_nearby_axes,
    COMPOSED_AXIS_EPS,
};
pub use cover::{conjugation_matrix, double_cover_fibre};
pub use euler::{euler_to_matrix, g1, g2, g3, matrix_to_euler, wrap_angle, EulerZYZ, GIMBAL_EPS};
