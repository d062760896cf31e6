//! Composition cost of unit quaternions against z-y-z Euler angles, and
//! stability of both parametrizations near the gimbal set.

use std::f64::consts::PI;
use std::hint::black_box;
use std::time::Instant;

use rodrigues_core::quaternion::{HAMILTON_ADDITIONS, HAMILTON_MULTIPLICATIONS};
use rodrigues_core::rotation::{g2, g3, matrix_to_euler, EulerZYZ};
use rodrigues_core::sampling::Sampler;
use rodrigues_core::verify::{euler_parameter_stability, ParameterStability, GIMBAL_THETA};
use rodrigues_core::UnitQuaternion;

/// Compositions timed together; the per-composition time is the batch
/// time divided by this.
const BATCH: usize = 64;

/// Matrices multiplied when composing two Euler triples: three elementary
/// rotations each, so six factors and five products.
pub const EULER_MATRIX_PRODUCTS: usize = 5;

/// Tilt of the comparison family far from the gimbal set.
pub const FAR_THETA: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyReport {
    pub theta: f64,
    pub stability: ParameterStability,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchReport {
    pub samples: usize,
    pub quaternion_median_ns: f64,
    pub euler_median_ns: f64,
    pub quaternion_multiplications: usize,
    pub quaternion_additions: usize,
    pub euler_matrix_products: usize,
    pub euler_multiplications: usize,
    pub euler_additions: usize,
    pub near: FamilyReport,
    pub far: FamilyReport,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn euler_compose(e1: &EulerZYZ, e2: &EulerZYZ) -> EulerZYZ {
    // apply e1 first: U(e2) U(e1)
    let m = g3(e2.phi) * g2(e2.theta) * g3(e2.psi) * g3(e1.phi) * g2(e1.theta) * g3(e1.psi);
    matrix_to_euler(&m).unwrap_or(EulerZYZ::new(f64::NAN, f64::NAN, f64::NAN))
}

fn time_batches<T, F: FnMut(&T)>(inputs: &[T], mut f: F) -> f64 {
    let times: Vec<f64> = inputs
        .chunks(BATCH)
        .filter(|c| c.len() == BATCH)
        .map(|chunk| {
            let start = Instant::now();
            for x in chunk {
                f(x);
            }
            start.elapsed().as_nanos() as f64 / BATCH as f64
        })
        .collect();
    median(times)
}

/// Runs the benchmark with `n` timing batches and `n` members per family.
pub fn bench(n: usize, seed: u64) -> BenchReport {
    let mut rng = Sampler::new(seed);
    let pairs: Vec<(UnitQuaternion, UnitQuaternion)> = (0..n * BATCH)
        .map(|_| (rng.unit_quaternion(), rng.unit_quaternion()))
        .collect();
    let mut euler = || {
        EulerZYZ::new(
            rng.uniform(-PI, PI),
            rng.uniform(0.0, PI),
            rng.uniform(-PI, PI),
        )
    };
    let triples: Vec<(EulerZYZ, EulerZYZ)> = (0..n * BATCH).map(|_| (euler(), euler())).collect();

    let quaternion_median_ns = time_batches(&pairs, |(p, q)| {
        black_box(black_box(*q).quaternion() * black_box(*p).quaternion());
    });
    let euler_median_ns = time_batches(&triples, |(a, b)| {
        black_box(euler_compose(black_box(a), black_box(b)));
    });

    let near = euler_parameter_stability(&mut rng, n, GIMBAL_THETA);
    let far = euler_parameter_stability(&mut rng, n, FAR_THETA);
    BenchReport {
        samples: n,
        quaternion_median_ns,
        euler_median_ns,
        quaternion_multiplications: HAMILTON_MULTIPLICATIONS,
        quaternion_additions: HAMILTON_ADDITIONS,
        euler_matrix_products: EULER_MATRIX_PRODUCTS,
        euler_multiplications: EULER_MATRIX_PRODUCTS * 27,
        euler_additions: EULER_MATRIX_PRODUCTS * 18,
        near: FamilyReport {
            theta: GIMBAL_THETA,
            stability: near,
        },
        far: FamilyReport {
            theta: FAR_THETA,
            stability: far,
        },
    }
}
