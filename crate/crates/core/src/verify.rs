//! Numerical check batteries. Each suite draws its samples from its own
//! seeded stream, so a suite reports the same numbers whether it runs alone
//! or as part of [`Suite::All`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::extras::{
    inversion_generating_polynomial, inversion_histogram, legendre, IntPolynomial,
    GENERATING_POLYNOMIAL_MAX_N,
};
use crate::kinematics::{
    body_angular_velocity, finite_difference_residual, propagate, propagate_trajectory,
    RotationState,
};
use crate::matrix_rep::{
    euler_olinde_rodrigues_parameters, psi, reflect, reflect_cartan, rotation_from_two_reflections,
    two_reflections_cartan, verify_generator_relations, GeneratorKind, Mat3R,
};
use crate::quaternion::{cross, dot, exp_pure, Quaternion, UnitQuaternion, Vector3};
use crate::rotation::{
    compose_matrix, compose_rodrigues, conjugation_matrix, double_cover_fibre, euler_to_matrix,
    from_matrix, g1, matrix_to_euler, to_matrix, AxisAngle, EulerZYZ,
};
use crate::sampling::Sampler;
use crate::spherical::{
    compose_geometric, solve_from_two_angles_and_included_side, verify_formula_families,
};

/// How a check's observed value is compared with its threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// Observed worst residual must not exceed the threshold.
    Le,
    /// Observed worst value must be at least the threshold.
    Ge,
    /// Observed worst value must exceed the threshold.
    Gt,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparison::Le => "le",
            Comparison::Ge => "ge",
            Comparison::Gt => "gt",
        }
    }

    fn holds(self, value: f64, threshold: f64) -> bool {
        match self {
            Comparison::Le => value <= threshold,
            Comparison::Ge => value >= threshold,
            Comparison::Gt => value > threshold,
        }
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub samples: usize,
    /// The worst observed value: a maximum for `Le`, a minimum otherwise.
    /// NaN never passes.
    pub max_residual: f64,
    pub threshold: f64,
    pub comparison: Comparison,
    pub pass: bool,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}.{} samples={} value={:.3e} {} {:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.samples,
            self.max_residual,
            self.comparison.as_str(),
            self.threshold
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Cover,
    Composition,
    Reflection,
    Spherical,
    Derivative,
    Generators,
    Euler,
    Extras,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const EACH: [Suite; 9] = [
        Suite::Algebra,
        Suite::Cover,
        Suite::Composition,
        Suite::Reflection,
        Suite::Spherical,
        Suite::Derivative,
        Suite::Generators,
        Suite::Euler,
        Suite::Extras,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Cover => "cover",
            Suite::Composition => "composition",
            Suite::Reflection => "reflection",
            Suite::Spherical => "spherical",
            Suite::Derivative => "derivative",
            Suite::Generators => "generators",
            Suite::Euler => "euler",
            Suite::Extras => "extras",
            Suite::All => "all",
        }
    }

    fn stream(self) -> u64 {
        Suite::EACH.iter().position(|&s| s == self).unwrap_or(0) as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|v| v.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Runs one suite, or all of them.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckResult> {
    match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| run_suite(s, seed))
            .collect(),
        s => {
            let mut rng = Sampler::new(seed ^ s.stream().wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut out = Report {
                suite: s,
                checks: Vec::new(),
            };
            match s {
                Suite::Algebra => algebra(&mut rng, &mut out),
                Suite::Cover => cover(&mut rng, &mut out),
                Suite::Composition => composition(&mut rng, &mut out),
                Suite::Reflection => reflection(&mut rng, &mut out),
                Suite::Spherical => spherical(&mut rng, &mut out),
                Suite::Derivative => derivative(&mut rng, &mut out),
                Suite::Generators => generators(&mut out),
                Suite::Euler => euler(&mut rng, &mut out),
                Suite::Extras => extras(&mut out),
                Suite::All => unreachable!(),
            }
            out.checks
        }
    }
}

struct Report {
    suite: Suite,
    checks: Vec<CheckResult>,
}

impl Report {
    fn push(
        &mut self,
        name: &str,
        samples: usize,
        value: f64,
        threshold: f64,
        comparison: Comparison,
    ) {
        self.checks.push(CheckResult {
            suite: self.suite,
            name: name.to_string(),
            samples,
            max_residual: value,
            threshold,
            comparison,
            pass: comparison.holds(value, threshold),
        });
    }

    fn le(&mut self, name: &str, samples: usize, value: f64, threshold: f64) {
        self.push(name, samples, value, threshold, Comparison::Le);
    }

    /// A check with no tolerance: reports 0 on success and 1 on failure.
    fn exact(&mut self, name: &str, samples: usize, ok: bool) {
        self.le(name, samples, if ok { 0.0 } else { 1.0 }, 0.0);
    }
}

/// Largest value of `f` over `n` draws; NaN propagates so it cannot pass.
fn worst<F: FnMut() -> f64>(n: usize, mut f: F) -> f64 {
    (0..n).fold(0.0, |m: f64, _| {
        let v = f();
        if v.is_nan() || m.is_nan() {
            f64::NAN
        } else {
            m.max(v)
        }
    })
}

/// Distance between two rotations as the largest matrix entry difference.
pub fn rotation_distance(p: &AxisAngle, r: &AxisAngle) -> f64 {
    to_matrix(p).max_abs_diff(&to_matrix(r))
}

// ----------------------------------------------------------------------------
// algebra

/// A signed basis unit `sign * e_idx` with `e_0 = 1, e_1 = i, e_2 = j, e_3 = k`.
type Signed = (i8, usize);

/// Counts multiplication tables on `{+-1, +-i, +-j, +-k}` with
/// `i^2 = j^2 = k^2 = ijk = -1` that are associative on basis triples, and
/// reports whether the only one is Hamilton's.
pub fn fundamental_relation_solutions() -> (usize, bool) {
    const PAIRS: [(usize, usize); 6] = [(1, 2), (2, 1), (2, 3), (3, 2), (3, 1), (1, 3)];
    let decode = |code: usize| -> Signed { (if code & 1 == 0 { 1 } else { -1 }, code >> 1) };
    let mut solutions = 0;
    let mut hamilton_found = false;
    for choice in 0..8usize.pow(6) {
        let mut table: [[Signed; 4]; 4] = std::array::from_fn(|x| {
            std::array::from_fn(|y| match (x, y) {
                (0, y) => (1, y),
                (x, 0) => (1, x),
                _ => (-1, 0),
            })
        });
        let mut c = choice;
        for &(x, y) in &PAIRS {
            table[x][y] = decode(c % 8);
            c /= 8;
        }
        let mul = |p: Signed, q: Signed| -> Signed {
            let (s, e) = table[p.1][q.1];
            (p.0 * q.0 * s, e)
        };
        let ijk = mul(mul((1, 1), (1, 2)), (1, 3));
        if ijk != (-1, 0) {
            continue;
        }
        let associative = (0..4).all(|a| {
            (0..4).all(|b| {
                (0..4).all(|c| mul(mul((1, a), (1, b)), (1, c)) == mul((1, a), mul((1, b), (1, c))))
            })
        });
        if associative {
            solutions += 1;
            let hamilton = [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
                .iter()
                .all(|&(x, y, z)| table[x][y] == (1, z) && table[y][x] == (-1, z));
            hamilton_found |= hamilton;
        }
    }
    (solutions, hamilton_found)
}

fn algebra(rng: &mut Sampler, out: &mut Report) {
    const N: usize = 1000;
    let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
    let minus_one = -Quaternion::ONE;
    out.exact(
        "fundamental_relations",
        1,
        i * i == minus_one && j * j == minus_one && k * k == minus_one && i * j * k == minus_one,
    );
    let (solutions, hamilton) = fundamental_relation_solutions();
    out.exact(
        "fundamental_relations_determine_table",
        8usize.pow(6),
        solutions == 1 && hamilton,
    );

    let r = worst(N, || {
        let (p, q, s) = (rng.quaternion(), rng.quaternion(), rng.quaternion());
        ((p * q) * s).max_abs_diff(p * (q * s))
    });
    out.le("associativity", N, r, 1e-12);

    let r = worst(N, || {
        let (p, q) = (rng.quaternion(), rng.quaternion());
        (p * q)
            .conjugate()
            .max_abs_diff(q.conjugate() * p.conjugate())
    });
    out.le("conjugate_antihomomorphism", N, r, 1e-12);

    let r = worst(N, || {
        let (p, q) = (rng.quaternion(), rng.quaternion());
        ((p * q).norm() - p.norm() * q.norm()).abs()
    });
    out.le("norm_multiplicativity", N, r, 1e-12);

    let r = worst(N, || {
        let (p, q) = (rng.quaternion(), rng.quaternion());
        psi(p * q)
            .max_abs_diff(&(psi(p) * psi(q)))
            .max(psi(p + q).max_abs_diff(&(psi(p) + psi(q))))
    });
    out.le("psi_homomorphism", N, r, 1e-12);

    let r = worst(N, || {
        let q = rng.quaternion();
        let d = psi(q).det();
        (d.re - q.norm_squared()).abs().max(d.im.abs())
    });
    out.le("psi_determinant_is_norm_squared", N, r, 1e-12);
}

// ----------------------------------------------------------------------------
// cover

fn cover(rng: &mut Sampler, out: &mut Report) {
    const N: usize = 1000;
    let r = worst(N, || {
        let (a, b) = (rng.unit_quaternion(), rng.unit_quaternion());
        conjugation_matrix(a * b).max_abs_diff(&(conjugation_matrix(a) * conjugation_matrix(b)))
    });
    out.le("homomorphism", N, r, 1e-10);

    let r = worst(N, || {
        let a = rng.unit_quaternion();
        conjugation_matrix(-a).max_abs_diff(&conjugation_matrix(a))
    });
    out.le("antipodal_invariance", N, r, 1e-10);

    // half the draws are uniform, half lie within 1e-11 of +-1
    let mut premise_hits = 0;
    let r = worst(N, || {
        let q = if rng.uniform(0.0, 1.0) < 0.5 {
            rng.unit_quaternion()
        } else {
            let near = exp_pure(rng.unit_vector() * rng.uniform(0.0, 1e-11));
            if rng.uniform(0.0, 1.0) < 0.5 {
                -near
            } else {
                near
            }
        };
        if conjugation_matrix(q).max_abs_diff(&Mat3R::IDENTITY) <= 1e-10 {
            premise_hits += 1;
            (q.scalar().abs() - 1.0).abs()
        } else {
            0.0
        }
    });
    let (plus, minus) = double_cover_fibre(&Mat3R::IDENTITY).expect("identity is a rotation");
    let fibre_ok = plus.quaternion() == Quaternion::ONE && minus.quaternion() == -Quaternion::ONE;
    out.le(
        "kernel_is_plus_minus_one",
        premise_hits,
        if fibre_ok { r } else { 1.0 },
        1e-10,
    );

    let r = worst(N, || {
        let q = rng.unit_quaternion();
        let (f, _) = double_cover_fibre(&conjugation_matrix(q)).expect("rotation");
        let d = f.quaternion();
        d.max_abs_diff(q.quaternion())
            .min(d.max_abs_diff(-q.quaternion()))
    });
    out.le("fibre_is_plus_minus_q", N, r, 1e-10);

    let w = rng.unit_vector();
    let r = (0..N)
        .map(|n| {
            let theta = 2.0 * PI * n as f64 / (N - 1) as f64;
            (conjugation_matrix(exp_pure(w * theta)).trace() - (1.0 + 2.0 * (2.0 * theta).cos()))
                .abs()
        })
        .fold(0.0, f64::max);
    out.le("trace_law", N, r, 1e-10);
}

// ----------------------------------------------------------------------------
// composition

/// A random pair with axes at least `acos(0.99)` apart and half-angles at
/// least 0.01 from 0 and pi, where the spherical construction is well
/// conditioned.
pub fn non_degenerate_pair(rng: &mut Sampler) -> (AxisAngle, AxisAngle) {
    loop {
        let (p, r) = (rng.axis_angle(), rng.axis_angle());
        let far_from_identity = |a: &AxisAngle| a.theta() > 0.02 && a.theta() < 2.0 * PI - 0.02;
        if dot(p.axis(), r.axis()).abs() <= 0.99 && far_from_identity(&p) && far_from_identity(&r) {
            return (p, r);
        }
    }
}

fn composition(rng: &mut Sampler, out: &mut Report) {
    const N: usize = 500;
    let (mut rm, mut rg, mut gm) = (0.0_f64, 0.0_f64, 0.0_f64);
    for _ in 0..N {
        let (p, r) = non_degenerate_pair(rng);
        let a = compose_rodrigues(&p, &r);
        let m = compose_matrix(&p, &r).expect("product of rotations");
        let g = match compose_geometric(&p, &r) {
            Ok(g) => g,
            Err(_) => {
                rg = f64::NAN;
                continue;
            }
        };
        rm = rm.max(rotation_distance(&a, &m));
        rg = rg.max(rotation_distance(&a, &g));
        gm = gm.max(rotation_distance(&g, &m));
    }
    out.le("rodrigues_vs_matrix", N, rm, 1e-9);
    out.le("rodrigues_vs_geometric", N, rg, 1e-9);
    out.le("geometric_vs_matrix", N, gm, 1e-9);

    let p = AxisAngle::new(PI / 2.0, Vector3::E3).expect("unit axis");
    let r = AxisAngle::new(PI / 2.0, Vector3::E1).expect("unit axis");
    let expect_axis = Vector3::new(1.0, -1.0, 1.0) / 3f64.sqrt();
    let dev = |x: &AxisAngle| {
        (x.theta() - 2.0 * PI / 3.0)
            .abs()
            .max(x.axis().max_abs_diff(expect_axis))
    };
    let geometric = compose_geometric(&p, &r)
        .map(|g| dev(&g))
        .unwrap_or(f64::NAN);
    let matrix = compose_matrix(&p, &r).map(|g| dev(&g)).unwrap_or(f64::NAN);
    out.le(
        "worked_example",
        3,
        dev(&compose_rodrigues(&p, &r)).max(geometric).max(matrix),
        1e-12,
    );
}

// ----------------------------------------------------------------------------
// reflection

fn reflection(rng: &mut Sampler, out: &mut Report) {
    const N: usize = 500;
    let r = worst(N, || {
        let (a, x) = (rng.unit_vector(), rng.vector());
        let v = reflect(a, x).expect("unit normal");
        let m = reflect_cartan(a, x).expect("unit normal");
        v.max_abs_diff(m)
    });
    out.le("matrix_vs_vector_route", N, r, 1e-12);

    let r = worst(N, || {
        let (a, b, x) = (rng.unit_vector(), rng.unit_vector(), rng.vector());
        let direct = reflect(b, reflect(a, x).expect("unit")).expect("unit");
        let rot = match rotation_from_two_reflections(a, b) {
            Ok(r) => r,
            Err(_) => return f64::NAN,
        };
        let via_quaternion = rot.quaternion.act(x);
        let via_axis_angle = rot.axis_angle.rotate(x);
        let via_cartan = two_reflections_cartan(a, b, x).expect("unit");
        direct
            .max_abs_diff(via_quaternion)
            .max(direct.max_abs_diff(via_axis_angle))
            .max(direct.max_abs_diff(via_cartan))
    });
    out.le("two_reflections_equal_rotation", N, r, 1e-10);

    let r = worst(N, || {
        let theta = rng.uniform(-2.0 * PI, 2.0 * PI);
        let p = euler_olinde_rodrigues_parameters(theta, rng.unit_vector()).expect("unit axis");
        (p.sum_of_squares() - 1.0).abs()
    });
    out.le("euler_rodrigues_sum_of_squares", N, r, 1e-12);
}

// ----------------------------------------------------------------------------
// spherical

fn spherical(rng: &mut Sampler, out: &mut Report) {
    const N: usize = 500;
    let (mut residual, mut min_excess, mut solved) = (0.0_f64, f64::INFINITY, 0);
    while solved < N {
        let alpha = rng.uniform(0.05, PI - 0.05);
        let beta = rng.uniform(0.05, PI - 0.05);
        let c = rng.uniform(0.05, PI - 0.05);
        let Ok(t) = solve_from_two_angles_and_included_side(alpha, beta, c) else {
            continue;
        };
        let r = verify_formula_families(&t);
        residual = residual.max(r.max());
        min_excess = min_excess.min(r.excess);
        solved += 1;
    }
    out.le("formula_families", N, residual, 1e-10);
    out.push("excess_positive", N, min_excess, 0.0, Comparison::Gt);

    let h = PI / 2.0;
    let octant = solve_from_two_angles_and_included_side(h, h, h)
        .map(|t| {
            [t.a, t.b, t.c, t.gamma]
                .iter()
                .map(|v| (v - h).abs())
                .fold((t.excess() - h).abs(), f64::max)
        })
        .unwrap_or(f64::NAN);
    out.le("octant_triangle", 1, octant, 1e-15);
}

// ----------------------------------------------------------------------------
// derivative

/// Reference `omega(t)` for the propagation order study.
fn study_omega(t: f64) -> Vector3 {
    Vector3::new(
        (1.3 * t).sin(),
        (0.7 * t).cos(),
        0.5 + 0.3 * (2.0 * t).sin(),
    )
}

/// Observed order `log2(e(h) / e(h/2))` of [`propagate`] on a smooth
/// `omega(t)` against a run with step `h / 64`.
pub fn propagation_order(h: f64) -> f64 {
    let q0 = UnitQuaternion::IDENTITY;
    let run = |step: f64| propagate(q0, study_omega, 0.0, 2.0, step).expect("valid interval");
    let reference = run(h / 64.0).quaternion();
    let e1 = run(h).quaternion().max_abs_diff(reference);
    let e2 = run(h / 2.0).quaternion().max_abs_diff(reference);
    (e1 / e2).log2()
}

fn derivative(rng: &mut Sampler, out: &mut Report) {
    const N: usize = 100;
    const H: f64 = 1e-4;
    let (mut residual, mut ratio_lo, mut ratio_hi) = (0.0_f64, f64::INFINITY, 0.0_f64);
    let mut cascade = 0.0_f64;
    let mut anticommute = 0.0_f64;
    for _ in 0..N {
        let traj = rng.harmonic_trajectory();
        let t = rng.uniform(-5.0, 5.0);
        let r1 = finite_difference_residual(|s| traj.state(s), t, H);
        let r2 = finite_difference_residual(|s| traj.state(s), t, H / 2.0);
        residual = residual.max(r1);
        ratio_lo = ratio_lo.min(r1 / r2);
        ratio_hi = ratio_hi.max(r1 / r2);

        let s = traj.state(t);
        let (w, wd) = (s.w(), s.w_dot());
        let wdw = cross(wd, w);
        cascade = cascade
            .max(dot(w, wd).abs())
            .max(dot(wdw, wd).abs())
            .max(dot(wdw, w).abs());
        let (wq, wdq) = (w.to_quaternion(), wd.to_quaternion());
        anticommute = anticommute.max((wdq * wq).max_abs_diff(-(wq * wdq)));
    }
    out.le("finite_difference_residual", N, residual, 1e-7);
    out.push(
        "finite_difference_ratio_min",
        N,
        ratio_lo,
        3.5,
        Comparison::Ge,
    );
    out.le("finite_difference_ratio_max", N, ratio_hi, 4.5);
    out.le("orthogonality_cascade", N, cascade, 1e-10);
    out.le("anticommutation", N, anticommute, 1e-12);

    let static_state = RotationState::at_rest(&rng.axis_angle());
    out.le(
        "static_trajectory",
        1,
        finite_difference_residual(|_| static_state, 0.0, H),
        1e-14,
    );

    let r = worst(N, || {
        let q0 = rng.unit_quaternion();
        let omega = rng.unit_vector() * rng.uniform(0.0, 3.0);
        let t1 = rng.uniform(0.1, 2.0);
        let q = propagate(q0, |_| omega, 0.0, t1, 1e-3).expect("valid interval");
        let exact = q0 * exp_pure(omega * (0.5 * t1));
        q.quaternion().max_abs_diff(exact.quaternion())
    });
    out.le("propagate_constant_omega", N, r, 1e-10);

    let r = worst(10, || {
        let omega = rng.unit_vector() * rng.uniform(5.0, 10.0);
        propagate_trajectory(rng.unit_quaternion(), |_| omega, 0.0, 0.5, 1e-3)
            .map(|p| p.max_norm_drift)
            .unwrap_or(f64::NAN)
    });
    out.le("propagate_norm_drift_per_step", 10, r, 1e-10);

    let order = propagation_order(0.1);
    out.push("propagate_order_min", 1, order, 3.5, Comparison::Ge);
    out.le("propagate_order_max", 1, order, 4.5);

    // the factor of two: dq/dt = q Omega / 2 reproduces Omega from the state
    let r = worst(N, || {
        let traj = rng.harmonic_trajectory();
        let t = rng.uniform(-5.0, 5.0);
        let s = traj.state(t);
        let omega = body_angular_velocity(&s).omega;
        let h = 1e-5;
        let q = |t: f64| traj.state(t).rotation().to_quaternion().quaternion();
        let q_dot = (q(t + h) - q(t - h)) * (0.5 / h);
        let from_quaternion = (q(t).conjugate() * q_dot * 2.0).vector();
        from_quaternion.max_abs_diff(omega)
    });
    out.le("quaternion_rate_matches_omega", N, r, 1e-7);
}

// ----------------------------------------------------------------------------
// generators

fn generators(out: &mut Report) {
    for kind in GeneratorKind::ALL {
        let report = verify_generator_relations(kind);
        out.exact(kind.name(), report.checks.len(), report.all_pass());
    }
}

// ----------------------------------------------------------------------------
// euler

/// Tilt used by the near-gimbal family.
pub const GIMBAL_THETA: f64 = 1e-9;
/// Size of the perturbation applied to each near-gimbal rotation.
pub const GIMBAL_PERTURBATION: f64 = 4e-10;

/// Measurements on a family of rotations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterStability {
    pub samples: usize,
    /// Largest change of the extracted z-y-z angles between `U` and a
    /// rotation `U'` within `GIMBAL_PERTURBATION` of it.
    pub euler_parameter_deviation: f64,
    /// Largest entry of `U - U'`.
    pub action_deviation: f64,
    /// Largest change of the extracted rotation vector `theta w`.
    pub rodrigues_parameter_deviation: f64,
    /// Largest entry of `U - euler_to_matrix(matrix_to_euler(U))`.
    pub euler_round_trip_action: f64,
    /// Largest entry of `U - to_matrix(from_matrix(U))`.
    pub rodrigues_round_trip_action: f64,
}

/// Compares each rotation `U = g3(phi) g2(theta) g3(psi)` of a family with
/// `U' = U g1(GIMBAL_PERTURBATION)`. With `theta = GIMBAL_THETA` the family
/// sits next to the gimbal set; `phi + psi` is kept in `[-1, 1]` so the
/// total angle stays far from pi.
pub fn euler_parameter_stability(rng: &mut Sampler, n: usize, theta: f64) -> ParameterStability {
    let mut s = ParameterStability {
        samples: n,
        euler_parameter_deviation: 0.0,
        action_deviation: 0.0,
        rodrigues_parameter_deviation: 0.0,
        euler_round_trip_action: 0.0,
        rodrigues_round_trip_action: 0.0,
    };
    for _ in 0..n {
        let phi = rng.uniform(-PI, PI);
        let psi = rng.uniform(-1.0, 1.0) - phi;
        let u = euler_to_matrix(&EulerZYZ::new(phi, theta, psi));
        let u2 = u * g1(GIMBAL_PERTURBATION);
        let (e, e2) = match (matrix_to_euler(&u), matrix_to_euler(&u2)) {
            (Ok(e), Ok(e2)) => (e, e2),
            _ => {
                s.euler_parameter_deviation = f64::NAN;
                continue;
            }
        };
        let (r, r2) = match (from_matrix(&u), from_matrix(&u2)) {
            (Ok(r), Ok(r2)) => (r, r2),
            _ => {
                s.rodrigues_parameter_deviation = f64::NAN;
                continue;
            }
        };
        s.euler_parameter_deviation = s.euler_parameter_deviation.max(e.max_deviation(&e2));
        s.action_deviation = s.action_deviation.max(u.max_abs_diff(&u2));
        s.rodrigues_parameter_deviation = s
            .rodrigues_parameter_deviation
            .max(r.rotation_vector().max_abs_diff(r2.rotation_vector()));
        s.euler_round_trip_action = s
            .euler_round_trip_action
            .max(euler_to_matrix(&e).max_abs_diff(&u));
        s.rodrigues_round_trip_action = s
            .rodrigues_round_trip_action
            .max(to_matrix(&r).max_abs_diff(&u));
    }
    s
}

fn euler(rng: &mut Sampler, out: &mut Report) {
    const N: usize = 200;
    let s = euler_parameter_stability(rng, N, GIMBAL_THETA);
    out.push(
        "near_gimbal_euler_parameter_deviation",
        N,
        s.euler_parameter_deviation,
        0.1,
        Comparison::Ge,
    );
    out.le("near_gimbal_action_deviation", N, s.action_deviation, 1e-9);
    out.le(
        "near_gimbal_rodrigues_parameter_deviation",
        N,
        s.rodrigues_parameter_deviation,
        1e-9,
    );
    out.le(
        "near_gimbal_euler_round_trip_action",
        N,
        s.euler_round_trip_action,
        1e-9,
    );
    out.le(
        "near_gimbal_rodrigues_round_trip_action",
        N,
        s.rodrigues_round_trip_action,
        1e-9,
    );

    let r = worst(N, || {
        let e = EulerZYZ::new(
            rng.uniform(-PI, PI),
            rng.uniform(0.1, PI - 0.1),
            rng.uniform(-PI, PI),
        );
        matrix_to_euler(&euler_to_matrix(&e))
            .map(|back| back.max_deviation(&e))
            .unwrap_or(f64::NAN)
    });
    out.le("round_trip_away_from_gimbal", N, r, 1e-9);
}

// ----------------------------------------------------------------------------
// extras

fn extras(out: &mut Report) {
    let brute_ok =
        (1..=8).all(
            |n| match (inversion_generating_polynomial(n), inversion_histogram(n)) {
                (Ok(r), Ok(h)) => r == h,
                _ => false,
            },
        );
    out.exact("generating_polynomial_matches_brute_force", 8, brute_ok);

    // N_n(k) = sum_{j < n} N_(n-1)(k - j), coefficient by coefficient
    let induction_ok = (2..=GENERATING_POLYNOMIAL_MAX_N).all(|n| {
        let (Ok(prev), Ok(cur)) = (
            inversion_generating_polynomial(n - 1),
            inversion_generating_polynomial(n),
        ) else {
            return false;
        };
        let p = prev.coefficients();
        let degree = (n * (n - 1) / 2) as usize;
        let expect: Vec<BigInt> = (0..=degree)
            .map(|k| {
                (0..n as usize)
                    .filter(|&j| j <= k && k - j < p.len())
                    .map(|j| &p[k - j])
                    .sum()
            })
            .collect();
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        cur == IntPolynomial::new(expect)
            && cur.coefficient_sum() == factorial
            && cur.is_palindromic()
    });
    out.exact(
        "q_integer_induction",
        (GENERATING_POLYNOMIAL_MAX_N - 1) as usize,
        induction_ok,
    );

    let at_one = (0..=10).all(|n| legendre(n, 1.0) == Ok(1.0));
    out.exact("legendre_at_one", 11, at_one);
    out.exact("legendre_p2_half", 1, legendre(2, 0.5) == Ok(-0.125));
}
