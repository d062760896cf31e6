//! Acceptance criteria 1-10.
//!
//! Each criterion runs the library's own check suite and, next to it, an
//! oracle written here from first principles. One PASS/FAIL line is printed
//! per criterion; run with `--nocapture` to see them.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::Command;
use std::time::{Duration, Instant};

use rodrigues_core::extras::{inversion_generating_polynomial, legendre, q_integer, IntPolynomial};
use rodrigues_core::kinematics::propagate;
use rodrigues_core::matrix_rep::generators::{PAULI_X, PAULI_Y, PAULI_Z};
use rodrigues_core::matrix_rep::{
    psi, reflect, rotation_from_two_reflections, verify_generator_relations, Complex,
    GeneratorKind, Mat2C, Mat3R,
};
use rodrigues_core::rotation::{
    compose_matrix, compose_rodrigues, conjugation_matrix, from_matrix, g2, g3, matrix_to_euler,
    to_matrix, AxisAngle,
};
use rodrigues_core::sampling::{Sampler, DEFAULT_SEED};
use rodrigues_core::spherical::{compose_geometric, verify_formula_families, SphericalTriangle};
use rodrigues_core::verify::{run_suite, Suite};
use rodrigues_core::{Quaternion, UnitQuaternion, Vector3};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

/// Runs a library suite; returns whether every check passed and a short summary.
fn suite(s: Suite) -> (bool, String) {
    let checks = run_suite(s, DEFAULT_SEED);
    let failed: Vec<_> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.clone())
        .collect();
    let summary = if failed.is_empty() {
        format!("{} checks", checks.len())
    } else {
        format!("{} checks, failed: {}", checks.len(), failed.join(","))
    };
    (failed.is_empty(), summary)
}

fn mat_from(rows: [[f64; 3]; 3]) -> Mat3R {
    Mat3R::from_rows(rows)
}

fn mat_mul(a: &Mat3R, b: &Mat3R) -> Mat3R {
    let mut m = [[0.0; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = (0..3).map(|k| a.m[i][k] * b.m[k][j]).sum();
        }
    }
    mat_from(m)
}

/// Rotation matrix of angle `t` about unit `n`, from the textbook formula
/// `cos t I + sin t [n]x + (1 - cos t) n n^T`.
fn axis_angle_matrix(t: f64, n: Vector3) -> Mat3R {
    let (s, c) = t.sin_cos();
    let n = [n.x, n.y, n.z];
    let cross = [[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]];
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let id = if i == j { 1.0 } else { 0.0 };
            m[i][j] = c * id + s * cross[i][j] + (1.0 - c) * n[i] * n[j];
        }
    }
    mat_from(m)
}

/// `T(q)` written out in the quaternion components.
fn quaternion_matrix(q: Quaternion) -> Mat3R {
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    mat_from([
        [
            a * a + b * b - c * c - d * d,
            2.0 * (b * c - a * d),
            2.0 * (b * d + a * c),
        ],
        [
            2.0 * (b * c + a * d),
            a * a - b * b + c * c - d * d,
            2.0 * (c * d - a * b),
        ],
        [
            2.0 * (b * d - a * c),
            2.0 * (c * d + a * b),
            a * a - b * b - c * c + d * d,
        ],
    ])
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (ok, summary) = suite(Suite::Algebra);
    let elapsed = start.elapsed();
    // Hamilton product through the left-multiplication matrix L(p).
    let mut rng = Sampler::new(101);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let (p, q) = (rng.quaternion(), rng.quaternion());
        let l = [
            [p.a, -p.b, -p.c, -p.d],
            [p.b, p.a, -p.d, p.c],
            [p.c, p.d, p.a, -p.b],
            [p.d, -p.c, p.b, p.a],
        ];
        let v = [q.a, q.b, q.c, q.d];
        let r: Vec<f64> = l
            .iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect();
        worst = worst.max((p * q).max_abs_diff(Quaternion::new(r[0], r[1], r[2], r[3])));
        let m = psi(q).m;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let n2 = q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
        worst = worst.max((det.re - n2).abs()).max(det.im.abs());
    }
    let pass = ok && worst <= 1e-12 && elapsed < Duration::from_secs(5);
    Outcome::new(
        pass,
        format!(
            "algebra {summary}; oracle residual {worst:.2e}; {:.2}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let (ok, summary) = suite(Suite::Cover);
    let mut rng = Sampler::new(102);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let q = rng.unit_quaternion();
        worst = worst.max(conjugation_matrix(q).max_abs_diff(&quaternion_matrix(q.quaternion())));
    }
    for k in 0..1000 {
        let theta = 2.0 * PI * k as f64 / 999.0;
        let w = rng.unit_vector();
        let q = UnitQuaternion::new(
            Quaternion::new(theta.cos(), 0.0, 0.0, 0.0) + (w * theta.sin()).to_quaternion(),
        )
        .unwrap();
        worst =
            worst.max((conjugation_matrix(q).trace() - (1.0 + 2.0 * (2.0 * theta).cos())).abs());
    }
    let pass = ok && worst <= 1e-10;
    Outcome::new(
        pass,
        format!("cover {summary}; oracle residual {worst:.2e}"),
    )
}

fn criterion_3() -> Outcome {
    let (ok, summary) = suite(Suite::Composition);
    let p = AxisAngle::new(FRAC_PI_2, Vector3::E3).unwrap();
    let p2 = AxisAngle::new(FRAC_PI_2, Vector3::E1).unwrap();
    let rz = mat_from([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
    let rx = mat_from([[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]]);
    let oracle = mat_mul(&rx, &rz);
    let s = 3f64.sqrt().recip();
    let expected = axis_angle_matrix(2.0 * PI / 3.0, Vector3::new(s, -s, s));
    let mut worst = oracle.max_abs_diff(&expected);
    let results = [
        compose_rodrigues(&p, &p2),
        compose_matrix(&p, &p2).unwrap(),
        compose_geometric(&p, &p2).unwrap(),
    ];
    for r in &results {
        worst = worst.max(to_matrix(r).max_abs_diff(&oracle));
        worst = worst.max((r.theta() - 2.0 * PI / 3.0).abs());
        worst = worst.max(r.axis().max_abs_diff(Vector3::new(s, -s, s)));
    }
    let pass = ok && worst <= 1e-12;
    Outcome::new(
        pass,
        format!("composition {summary}; worked case residual {worst:.2e}"),
    )
}

fn criterion_4() -> Outcome {
    let (ok, summary) = suite(Suite::Reflection);
    let mut rng = Sampler::new(104);
    let (mut householder, mut two): (f64, f64) = (0.0, 0.0);
    for _ in 0..500 {
        let (a, b, x) = (rng.unit_vector(), rng.unit_vector(), rng.vector());
        let hx = x - a * (2.0 * a.dot(x));
        householder = householder.max(reflect(a, x).unwrap().max_abs_diff(hx));
        let hb = |v: Vector3| v - b * (2.0 * b.dot(v));
        let r = rotation_from_two_reflections(a, b).unwrap();
        two = two.max(to_matrix(&r.axis_angle).mul_vec(x).max_abs_diff(hb(hx)));
    }
    let pass = ok && householder <= 1e-12 && two <= 1e-10;
    Outcome::new(
        pass,
        format!("reflection {summary}; householder {householder:.2e}, two reflections {two:.2e}"),
    )
}

/// Sides and angles of the triangle with vertices `a, b, c` on the unit sphere.
fn triangle_from_vertices(a: Vector3, b: Vector3, c: Vector3) -> Option<SphericalTriangle> {
    let side = |u: Vector3, v: Vector3| u.cross(v).norm().atan2(u.dot(v));
    let angle = |at: Vector3, u: Vector3, v: Vector3| {
        let (tu, tv) = (at.cross(u), at.cross(v));
        tu.cross(tv).norm().atan2(tu.dot(tv))
    };
    SphericalTriangle::new(
        side(b, c),
        side(c, a),
        side(a, b),
        angle(a, b, c),
        angle(b, c, a),
        angle(c, a, b),
    )
    .ok()
}

fn criterion_5() -> Outcome {
    let (ok, summary) = suite(Suite::Spherical);
    let octant = SphericalTriangle::new(
        FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2,
    )
    .unwrap();
    let octant_residual = verify_formula_families(&octant).max();
    let octant_excess = (octant.excess() - FRAC_PI_2).abs();
    let mut rng = Sampler::new(105);
    let (mut solved, mut worst, mut min_excess) = (0, 0.0f64, f64::INFINITY);
    while solved < 500 {
        let (a, b, c) = (rng.unit_vector(), rng.unit_vector(), rng.unit_vector());
        let Some(t) = triangle_from_vertices(a, b, c) else {
            continue;
        };
        if a.cross(b).dot(c).abs() < 1e-3 {
            continue;
        }
        worst = worst.max(verify_formula_families(&t).max());
        min_excess = min_excess.min(t.excess());
        solved += 1;
    }
    let pass = ok
        && octant_residual <= 1e-15
        && octant_excess <= 1e-15
        && worst <= 1e-10
        && min_excess > 0.0;
    Outcome::new(
        pass,
        format!(
            "spherical {summary}; octant {octant_residual:.2e}; vertex triangles residual {worst:.2e}, min excess {min_excess:.2e}"
        ),
    )
}

/// Integration error of a rotation about a fixed axis with rate
/// `2 + sin 3t`, whose exact angle is `2t + (1 - cos 3t) / 3`.
fn fixed_axis_error(h: f64) -> f64 {
    let (t0, t1) = (0.0, 4.0);
    let axis = Vector3::new(0.36, 0.48, 0.8);
    let q = propagate(
        UnitQuaternion::IDENTITY,
        |t| axis * (2.0 + (3.0 * t).sin()),
        t0,
        t1,
        h,
    )
    .unwrap();
    let angle = 2.0 * t1 + (1.0 - (3.0 * t1).cos()) / 3.0;
    let exact = AxisAngle::new(angle, axis)
        .unwrap()
        .to_quaternion()
        .quaternion();
    q.quaternion()
        .max_abs_diff(exact)
        .min(q.quaternion().max_abs_diff(-exact))
}

fn criterion_6() -> Outcome {
    let (ok, summary) = suite(Suite::Derivative);
    let mut rng = Sampler::new(106);
    let mut constant: f64 = 0.0;
    for _ in 0..100 {
        let q0 = rng.unit_quaternion();
        let omega = rng.vector();
        let t1 = rng.uniform(0.5, 3.0);
        let q = propagate(q0, |_| omega, 0.0, t1, 1e-3).unwrap();
        let half = 0.5 * omega.norm() * t1;
        let n = omega / omega.norm();
        let step = Quaternion::new(
            half.cos(),
            n.x * half.sin(),
            n.y * half.sin(),
            n.z * half.sin(),
        );
        constant = constant.max(q.quaternion().max_abs_diff(q0.quaternion() * step));
    }
    let (e1, e2) = (fixed_axis_error(0.2), fixed_axis_error(0.1));
    let order = (e1 / e2).log2();
    let pass = ok && constant <= 1e-10 && (3.5..=4.5).contains(&order);
    Outcome::new(
        pass,
        format!("derivative {summary}; constant omega {constant:.2e}; fixed-axis order {order:.3}"),
    )
}

fn criterion_7() -> Outcome {
    let (ok, summary) = suite(Suite::Generators);
    let reports_ok = GeneratorKind::ALL
        .iter()
        .all(|&k| verify_generator_relations(k).all_pass());
    let i = Mat2C::scalar(Complex::I);
    let pauli_ok = PAULI_X * PAULI_Y == i * PAULI_Z
        && PAULI_Y * PAULI_Z == i * PAULI_X
        && PAULI_Z * PAULI_X == i * PAULI_Y
        && [PAULI_X, PAULI_Y, PAULI_Z]
            .iter()
            .all(|&s| s * s == Mat2C::IDENTITY);
    let m1 = -Quaternion::ONE;
    let (qi, qj, qk) = (Quaternion::I, Quaternion::J, Quaternion::K);
    let hamilton_ok = qi * qi == m1 && qj * qj == m1 && qk * qk == m1 && qi * qj * qk == m1;
    let pass = ok && reports_ok && pauli_ok && hamilton_ok;
    Outcome::new(
        pass,
        format!("generators {summary}; relation reports {reports_ok}, pauli products {pauli_ok}, hamilton {hamilton_ok}"),
    )
}

fn criterion_8() -> Outcome {
    let (ok, summary) = suite(Suite::Euler);
    // Two rotations 4e-10 apart whose common tilt is 1e-9.
    let u = mat_mul(&mat_mul(&g3(0.7), &g2(1e-9)), &g3(-0.2));
    let nudge = axis_angle_matrix(4e-10, Vector3::E1);
    let v = mat_mul(&nudge, &u);
    let (eu, ev) = (matrix_to_euler(&u).unwrap(), matrix_to_euler(&v).unwrap());
    let euler_dev = eu.max_deviation(&ev);
    let action_dev = u.max_abs_diff(&v);
    let (pu, pv) = (from_matrix(&u).unwrap(), from_matrix(&v).unwrap());
    let rodrigues_dev = pu.rotation_vector().max_abs_diff(pv.rotation_vector());
    let pass = ok && euler_dev >= 0.1 && action_dev <= 1e-9 && rodrigues_dev <= 1e-9;
    Outcome::new(
        pass,
        format!(
            "euler {summary}; hand family: euler deviation {euler_dev:.3}, action {action_dev:.2e}, rodrigues {rodrigues_dev:.2e}"
        ),
    )
}

/// Inversion counts of `S_n` by inserting `n` into each permutation of `S_{n-1}`:
/// placing it with `j` entries to its right adds `j` inversions.
fn inversion_counts(n: usize) -> Vec<u64> {
    let mut counts = vec![1u64];
    for m in 2..=n {
        let mut next = vec![0u64; counts.len() + m - 1];
        for (k, c) in counts.iter().enumerate() {
            for j in 0..m {
                next[k + j] += c;
            }
        }
        counts = next;
    }
    counts
}

fn criterion_9() -> Outcome {
    let (ok, summary) = suite(Suite::Extras);
    let histogram_ok = (1..=8u32).all(|n| {
        inversion_generating_polynomial(n).unwrap()
            == IntPolynomial::from_u64(&inversion_counts(n as usize))
    });
    let induction_ok = (2..=12u32).all(|n| {
        inversion_generating_polynomial(n).unwrap()
            == &inversion_generating_polynomial(n - 1).unwrap() * &q_integer(n)
    });
    let legendre_ok =
        (0..=10).all(|n| legendre(n, 1.0).unwrap() == 1.0) && legendre(2, 0.5).unwrap() == -0.125;
    let pass = ok && histogram_ok && induction_ok && legendre_ok;
    Outcome::new(
        pass,
        format!("extras {summary}; insertion histogram {histogram_ok}, induction {induction_ok}, legendre {legendre_ok}"),
    )
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_rodrigues"))
        .args(["verify", "--suite", "all"])
        .output()
        .expect("run rodrigues");
    let elapsed = start.elapsed();
    let code = out.status.code();
    let pass = code == Some(0) && elapsed < Duration::from_secs(60);
    let tail = String::from_utf8_lossy(&out.stdout)
        .lines()
        .last()
        .unwrap_or("")
        .to_string();
    Outcome::new(
        pass,
        format!("exit {code:?} in {:.2}s ({tail})", elapsed.as_secs_f64()),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = Vec::new();
    for (n, run) in criteria {
        let o = run();
        println!(
            "{} criterion {n}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
