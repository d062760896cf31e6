//! Seeded random sampling for verification batteries and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::kinematics::HarmonicTrajectory;
use crate::quaternion::{Quaternion, UnitQuaternion, Vector3};
use crate::rotation::AxisAngle;

pub const DEFAULT_SEED: u64 = 42;

/// Deterministic sampler; the same seed yields the same sequence on every
/// platform.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// Components drawn independently from `N(0, 1)`.
    pub fn quaternion(&mut self) -> Quaternion {
        Quaternion::new(self.normal(), self.normal(), self.normal(), self.normal())
    }

    pub fn vector(&mut self) -> Vector3 {
        Vector3::new(self.normal(), self.normal(), self.normal())
    }

    /// Uniform (Haar) unit quaternion: a normalized 4D Gaussian.
    pub fn unit_quaternion(&mut self) -> UnitQuaternion {
        loop {
            if let Ok(q) = UnitQuaternion::normalize(self.quaternion()) {
                return q;
            }
        }
    }

    /// Uniform point on the unit sphere.
    pub fn unit_vector(&mut self) -> Vector3 {
        loop {
            if let Some(v) = self.vector().normalized() {
                return v;
            }
        }
    }

    /// Uniform axis with angle uniform on `[0, 2 pi)`.
    pub fn axis_angle(&mut self) -> AxisAngle {
        let theta = self.uniform(0.0, 2.0 * std::f64::consts::PI);
        AxisAngle::new(theta, self.unit_vector()).expect("unit axis")
    }

    /// A random smooth trajectory with angular rates of order one.
    pub fn harmonic_trajectory(&mut self) -> HarmonicTrajectory {
        HarmonicTrajectory {
            theta0: self.uniform(-3.0, 3.0),
            amp: self.uniform(0.2, 1.5),
            freq: self.uniform(0.5, 2.0),
            phase: self.uniform(0.0, 6.0),
            v0: self.unit_vector(),
            v1: self.unit_vector() * self.uniform(0.0, 0.3),
            v2: self.unit_vector() * self.uniform(0.0, 0.3),
            axis_freq: self.uniform(0.5, 2.0),
        }
    }
}
