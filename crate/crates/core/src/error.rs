use thiserror::Error;

/// Errors raised by the rotation calculus.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero quaternion has no inverse")]
    ZeroQuaternion,

    #[error("quaternion norm {norm} is too far from 1 to be a unit quaternion")]
    NotUnitQuaternion { norm: f64 },

    #[error("vector norm {norm} is not 1 (unit vector required)")]
    NotUnitVector { norm: f64 },

    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    #[error("matrix is not a rotation: {reason}")]
    NotRotation { reason: String },

    #[error("matrix is not Hermitian and traceless (deviation {deviation:e})")]
    NotHermitianTraceless { deviation: f64 },

    #[error("reflection normals are antipodal; the rotation axis is undetermined")]
    AntipodalNormals,

    #[error("degenerate triangle: {reason}")]
    DegenerateTriangle { reason: String },

    #[error("rotation axes are parallel; use compose_rodrigues for coaxial rotations")]
    ParallelAxes,

    #[error("non-finite angular velocity {omega:?} at t = {t}")]
    NonFiniteAngularVelocity { t: f64, omega: [f64; 3] },

    #[error("invalid integration interval: {reason}")]
    InvalidInterval { reason: String },

    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },

    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
