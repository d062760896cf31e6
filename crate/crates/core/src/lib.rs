//! Rotations of three-dimensional space in the axis-angle calculus.
//!
//! A rotation by `theta` about the unit axis `w` is written `R(theta w)`
//! and realised as conjugation `x -> q x conj(q)` by the unit quaternion
//! `q = exp(theta w / 2)`. The crate provides:
//!
//! - [`quaternion`]: Hamilton's algebra, unit quaternions and `exp_pure`.
//! - [`matrix_rep`]: 2x2 complex matrices, Cartan's reflections, 3x3 rotations
//!   and the classical generator relations.
//! - [`rotation`]: axis-angle parameters, the double cover, composition and
//!   z-y-z Euler angles.
//! - [`spherical`]: spherical trigonometry and the triangle construction of a
//!   product of rotations.
//! - [`kinematics`]: angular velocity of a time-varying rotation and RK4
//!   attitude propagation.
//! - [`extras`]: Legendre polynomials and permutation inversions.
//! - [`verify`]: the numerical check batteries used by the command line tool.

pub mod error;
pub mod extras;
pub mod kinematics;
pub mod matrix_rep;
pub mod quaternion;
pub mod rotation;
pub mod sampling;
pub mod spherical;
pub mod verify;

pub use error::{Error, Result};
pub use quaternion::{exp_pure, Quaternion, UnitQuaternion, Vector3};
pub use rotation::AxisAngle;
