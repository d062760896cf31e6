//! Time derivative of a rotation `Q(t) = R(theta(t) w(t))` and numerical
//! attitude propagation.
//!
//! Angular velocities are body-frame: `Q^-1 dQ/dt x = Omega x x`. With a unit
//! quaternion `q(t)` over `Q(t)` this reads `dq/dt = q Omega / 2`, where
//! `Omega` is taken as a pure quaternion.

use crate::error::{Error, Result};
use crate::matrix_rep::UNIT_VECTOR_TOLERANCE;
use crate::quaternion::{cross, dot, Quaternion, UnitQuaternion, Vector3};
use crate::rotation::{rotate, AxisAngle};

/// Components of `w_dot` along `w` larger than this are reported when removed.
pub const PROJECTION_WARN_THRESHOLD: f64 = 1e-6;

/// Default propagation step.
pub const DEFAULT_STEP: f64 = 1e-3;

/// `theta(t), w(t)` and their first derivatives at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationState {
    theta: f64,
    w: Vector3,
    theta_dot: f64,
    w_dot: Vector3,
}

impl RotationState {
    /// Builds a state. `w` must be a unit vector to `1e-10`; any component of
    /// `w_dot` along `w` is removed, with a warning when it is not negligible.
    pub fn new(theta: f64, w: Vector3, theta_dot: f64, w_dot: Vector3) -> Result<Self> {
        if !(theta.is_finite() && theta_dot.is_finite() && w.is_finite() && w_dot.is_finite()) {
            return Err(Error::NonFinite {
                what: "rotation state",
            });
        }
        let w = w.unit_checked(UNIT_VECTOR_TOLERANCE)?;
        let along = dot(w, w_dot);
        if along.abs() > PROJECTION_WARN_THRESHOLD {
            log::warn!("removing component {along:e} of w_dot along w");
        }
        Ok(RotationState {
            theta,
            w,
            theta_dot,
            w_dot: w_dot - w * along,
        })
    }

    /// A rotation held still.
    pub fn at_rest(p: &AxisAngle) -> Self {
        RotationState {
            theta: p.theta(),
            w: p.axis(),
            theta_dot: 0.0,
            w_dot: Vector3::ZERO,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn w(&self) -> Vector3 {
        self.w
    }

    pub fn theta_dot(&self) -> f64 {
        self.theta_dot
    }

    pub fn w_dot(&self) -> Vector3 {
        self.w_dot
    }

    pub fn rotation(&self) -> AxisAngle {
        AxisAngle::new(self.theta, self.w).expect("state axis is a unit vector")
    }
}

/// Body-frame angular velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularVelocity {
    pub omega: Vector3,
}

/// `Omega = theta_dot w + sin(theta) w_dot + (1 - cos(theta)) w_dot x w`.
pub fn body_angular_velocity(s: &RotationState) -> AngularVelocity {
    let (sin_t, cos_t) = s.theta.sin_cos();
    AngularVelocity {
        omega: s.w * s.theta_dot + s.w_dot * sin_t + cross(s.w_dot, s.w) * (1.0 - cos_t),
    }
}

/// The same angular velocity in the fixed frame, `Q Omega`.
pub fn space_angular_velocity(s: &RotationState) -> Vector3 {
    rotate(&s.rotation(), body_angular_velocity(s).omega)
}

/// `dQ/dt x = Q (Omega x x)`.
pub fn derivative_action(s: &RotationState, x: Vector3) -> Vector3 {
    let omega = body_angular_velocity(s).omega;
    rotate(&s.rotation(), cross(omega, x))
}

/// Central-difference check of [`derivative_action`] on a trajectory:
/// the largest error over `e1, e2, e3` of `(Q(t+h) e - Q(t-h) e) / 2h`.
pub fn finite_difference_residual<F>(trajectory: F, t: f64, h: f64) -> f64
where
    F: Fn(f64) -> RotationState,
{
    let s = trajectory(t);
    let ahead = trajectory(t + h).rotation();
    let behind = trajectory(t - h).rotation();
    Vector3::basis()
        .iter()
        .map(|&e| {
            let fd = (rotate(&ahead, e) - rotate(&behind, e)) / (2.0 * h);
            (fd - derivative_action(&s, e)).norm()
        })
        .fold(0.0, f64::max)
}

/// Output of [`propagate_trajectory`].
#[derive(Debug, Clone, PartialEq)]
pub struct Propagation {
    /// `(t, q)` at `t0` and after every step; the last sample is at `t1`.
    pub samples: Vec<(f64, UnitQuaternion)>,
    /// Largest `| |q| - 1 |` seen before a renormalization.
    pub max_norm_drift: f64,
}

impl Propagation {
    pub fn final_state(&self) -> UnitQuaternion {
        self.samples
            .last()
            .map(|s| s.1)
            .unwrap_or(UnitQuaternion::IDENTITY)
    }
}

fn check_interval(t0: f64, t1: f64, h: f64) -> Result<usize> {
    if !(t0.is_finite() && t1.is_finite() && h.is_finite()) {
        return Err(Error::InvalidInterval {
            reason: "non-finite bounds or step".into(),
        });
    }
    if h <= 0.0 {
        return Err(Error::InvalidInterval {
            reason: format!("step {h} is not positive"),
        });
    }
    if t1 <= t0 {
        return Err(Error::InvalidInterval {
            reason: format!("t1 = {t1} is not after t0 = {t0}"),
        });
    }
    let n = ((t1 - t0) / h).ceil();
    if n > 1e9 {
        return Err(Error::InvalidInterval {
            reason: format!("{n} steps requested"),
        });
    }
    Ok((n as usize).max(1))
}

fn sample_omega<F: Fn(f64) -> Vector3>(omega: &F, t: f64) -> Result<Quaternion> {
    let w = omega(t);
    if !w.is_finite() {
        return Err(Error::NonFiniteAngularVelocity {
            t,
            omega: w.to_array(),
        });
    }
    Ok(w.to_quaternion())
}

/// Integrates `dq/dt = q omega(t) / 2` from `t0` to `t1` with classical RK4.
///
/// The step is `h` shrunk just enough that a whole number of steps lands on
/// `t1`. `q` is renormalized after every step.
pub fn propagate_trajectory<F>(
    q0: UnitQuaternion,
    omega: F,
    t0: f64,
    t1: f64,
    h: f64,
) -> Result<Propagation>
where
    F: Fn(f64) -> Vector3,
{
    let n = check_interval(t0, t1, h)?;
    let step = (t1 - t0) / n as f64;
    let mut q = q0.quaternion();
    let mut samples = Vec::with_capacity(n + 1);
    samples.push((t0, q0));
    let mut max_norm_drift: f64 = 0.0;

    for i in 0..n {
        let t = t0 + i as f64 * step;
        let w1 = sample_omega(&omega, t)?;
        let w2 = sample_omega(&omega, t + 0.5 * step)?;
        let w4 = sample_omega(&omega, t + step)?;
        let k1 = q * w1 * 0.5;
        let k2 = (q + k1 * (0.5 * step)) * w2 * 0.5;
        let k3 = (q + k2 * (0.5 * step)) * w2 * 0.5;
        let k4 = (q + k3 * step) * w4 * 0.5;
        let next = q + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (step / 6.0);
        max_norm_drift = max_norm_drift.max((next.norm() - 1.0).abs());
        let unit = UnitQuaternion::normalize(next)?;
        q = unit.quaternion();
        let t_next = if i + 1 == n {
            t1
        } else {
            t0 + (i + 1) as f64 * step
        };
        samples.push((t_next, unit));
    }
    Ok(Propagation {
        samples,
        max_norm_drift,
    })
}

/// Final attitude of [`propagate_trajectory`].
pub fn propagate<F>(
    q0: UnitQuaternion,
    omega: F,
    t0: f64,
    t1: f64,
    h: f64,
) -> Result<UnitQuaternion>
where
    F: Fn(f64) -> Vector3,
{
    propagate_trajectory(q0, omega, t0, t1, h).map(|p| p.final_state())
}

/// A smooth test trajectory with closed-form derivatives:
///
/// ```text
/// theta(t) = theta0 + amp sin(freq t + phase)
/// v(t)     = v0 + v1 sin(axis_freq t) + v2 cos(axis_freq t),   w = v / |v|
/// ```
///
/// `|v0| > |v1| + |v2|` keeps `v` away from zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicTrajectory {
    pub theta0: f64,
    pub amp: f64,
    pub freq: f64,
    pub phase: f64,
    pub v0: Vector3,
    pub v1: Vector3,
    pub v2: Vector3,
    pub axis_freq: f64,
}

impl HarmonicTrajectory {
    pub fn state(&self, t: f64) -> RotationState {
        let arg = self.freq * t + self.phase;
        let theta = self.theta0 + self.amp * arg.sin();
        let theta_dot = self.amp * self.freq * arg.cos();
        let (s, c) = (self.axis_freq * t).sin_cos();
        let v = self.v0 + self.v1 * s + self.v2 * c;
        let v_dot = (self.v1 * c - self.v2 * s) * self.axis_freq;
        let len = v.norm();
        let w = v / len;
        let w_dot = (v_dot - w * dot(w, v_dot)) / len;
        RotationState::new(theta, w, theta_dot, w_dot).expect("trajectory keeps v away from zero")
    }
}
