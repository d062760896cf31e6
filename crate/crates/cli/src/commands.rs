use std::f64::consts::PI;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use rodrigues_core::extras::{inversion_count, inversion_generating_polynomial, legendre};
use rodrigues_core::kinematics::{propagate_trajectory, Propagation};
use rodrigues_core::matrix_rep::{reflect, rotation_from_two_reflections};
use rodrigues_core::rotation::{
    compose_rodrigues, compose_small_angle, from_matrix, to_matrix, AxisAngle,
};
use rodrigues_core::spherical::compose_geometric;
use rodrigues_core::verify::{rotation_distance, run_suite, Suite};
use rodrigues_core::{Quaternion, UnitQuaternion, Vector3};
use serde_json::json;

use crate::args::{Cli, Command, ExtrasCommand, Format, Method, RecordInput};
use crate::bench::{bench, BenchReport};
use crate::omega::{parse_series, OmegaSpline};
use crate::record::{canonical_number, Representation, RotationRecord};

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// `verify` ran and at least one check failed.
    VerificationFailed,
}

/// Shared settings for one invocation.
struct Ctx<'a> {
    seed: u64,
    degrees: bool,
    format: Format,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.format == Format::JsonLines
    }

    /// Factor from user angles to radians.
    fn angle_in(&self) -> f64 {
        if self.degrees {
            PI / 180.0
        } else {
            1.0
        }
    }

    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn record(&mut self, r: &RotationRecord) -> Result<()> {
        let r = r.scale_angles(1.0 / self.angle_in());
        let s = if self.json() {
            r.to_json()
        } else {
            r.to_text()
        };
        self.line(&s)
    }

    fn vector(&mut self, v: Vector3) -> Result<()> {
        let [x, y, z] = v.to_array();
        let s = if self.json() {
            format!(
                "{{\"vector\":[{},{},{}]}}",
                canonical_number(x),
                canonical_number(y),
                canonical_number(z)
            )
        } else {
            format!(
                "{} {} {}",
                canonical_number(x),
                canonical_number(y),
                canonical_number(z)
            )
        };
        self.line(&s)
    }
}

/// Executes one parsed command line. Errors are input errors.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    let mut ctx = Ctx {
        seed: cli.seed,
        degrees: cli.degrees,
        format: cli.format,
        out,
    };
    match cli.command {
        Command::Convert { input, to } => convert(&mut ctx, &input, to),
        Command::Compose { input, method, to } => compose(&mut ctx, &input, method, to),
        Command::Rotate { input, vector } => rotate(&mut ctx, &input, &vector),
        Command::Reflect { normal, vector } => reflect_cmd(&mut ctx, &normal, &vector),
        Command::Propagate {
            initial,
            omega,
            t0,
            t1,
            h,
            output,
            study,
        } => propagate_cmd(
            &mut ctx,
            &initial,
            &omega,
            t0,
            t1,
            h,
            output.as_deref(),
            study,
        ),
        Command::Verify { suite } => verify(&mut ctx, suite),
        Command::Bench { n } => bench_cmd(&mut ctx, n),
        Command::Extras { command } => extras(&mut ctx, command),
    }
}

fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_records(ctx: &Ctx, input: &RecordInput) -> Result<Vec<RotationRecord>> {
    let mut lines: Vec<String> = input.records.clone();
    if let Some(path) = &input.input {
        lines.extend(read_source(path)?.lines().map(str::to_string));
    } else if input.records.is_empty() {
        lines.extend(read_source(Path::new("-"))?.lines().map(str::to_string));
    }
    let records = lines
        .iter()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| RotationRecord::parse(l).map(|r| r.scale_angles(ctx.angle_in())))
        .collect::<Result<Vec<_>>>()?;
    ensure!(!records.is_empty(), "no rotation records given");
    Ok(records)
}

fn convert(ctx: &mut Ctx, input: &RecordInput, to: Representation) -> Result<Outcome> {
    for r in read_records(ctx, input)? {
        let (out, path) = r.convert(to)?;
        let names: Vec<&str> = path.iter().map(|p| p.name()).collect();
        if ctx.json() {
            ctx.line(&json!({ "meta": "convert", "path": names }).to_string())?;
            ctx.record(&out)?;
        } else {
            ctx.record(&out)?;
            ctx.line(&format!("path {}", names.join(" -> ")))?;
        }
    }
    Ok(Outcome::Success)
}

fn compose_with(method: Method, rotations: &[AxisAngle]) -> Result<AxisAngle> {
    let (first, rest) = rotations.split_first().context("no rotations to compose")?;
    Ok(match method {
        Method::Rodrigues => rest
            .iter()
            .fold(*first, |acc, p| compose_rodrigues(&acc, p)),
        Method::SmallAngle => rest
            .iter()
            .fold(*first, |acc, p| compose_small_angle(&acc, p)),
        Method::Matrix => {
            let m = rest
                .iter()
                .fold(to_matrix(first), |acc, p| to_matrix(p) * acc);
            from_matrix(&m)?
        }
        Method::Geometric => {
            let mut acc = *first;
            for p in rest {
                acc = compose_geometric(&acc, p).context("geometric composition")?;
            }
            acc
        }
        Method::All => bail!("internal: method=all is not a single method"),
    })
}

fn compose(
    ctx: &mut Ctx,
    input: &RecordInput,
    method: Method,
    to: Representation,
) -> Result<Outcome> {
    let records = read_records(ctx, input)?;
    ensure!(
        records.len() >= 2,
        "compose needs at least two records, got {}",
        records.len()
    );
    let rotations = records
        .iter()
        .map(|r| r.to_axis_angle())
        .collect::<Result<Vec<_>>>()?;
    if method != Method::All {
        let result = compose_with(method, &rotations)?;
        let (out, _) = RotationRecord::from_axis_angle(&result).convert(to)?;
        ctx.record(&out)?;
        return Ok(Outcome::Success);
    }

    let methods = [
        Method::Rodrigues,
        Method::Matrix,
        Method::Geometric,
        Method::SmallAngle,
    ];
    let results: Vec<(Method, Result<AxisAngle>)> = methods
        .iter()
        .map(|&m| (m, compose_with(m, &rotations)))
        .collect();
    for (m, r) in &results {
        match r {
            Ok(p) => {
                let (out, _) = RotationRecord::from_axis_angle(p).convert(to)?;
                let out = out.scale_angles(1.0 / ctx.angle_in());
                let line = if ctx.json() {
                    format!(
                        "{{\"method\":\"{}\",\"result\":{}}}",
                        m.name(),
                        out.to_json()
                    )
                } else {
                    format!("{:<12} {}", m.name(), out.to_text())
                };
                ctx.line(&line)?;
            }
            Err(e) => {
                let line = if ctx.json() {
                    json!({ "method": m.name(), "error": format!("{e:#}") }).to_string()
                } else {
                    format!("{:<12} error: {e:#}", m.name())
                };
                ctx.line(&line)?;
            }
        }
    }
    for i in 0..results.len() {
        for j in i + 1..results.len() {
            let (ma, ra) = &results[i];
            let (mb, rb) = &results[j];
            if let (Ok(a), Ok(b)) = (ra, rb) {
                let d = rotation_distance(a, b);
                let line = if ctx.json() {
                    json!({ "method_a": ma.name(), "method_b": mb.name(), "max_deviation": d })
                        .to_string()
                } else {
                    format!("deviation {} vs {}: {d:.3e}", ma.name(), mb.name())
                };
                ctx.line(&line)?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn rotate(ctx: &mut Ctx, input: &RecordInput, vectors: &[[f64; 3]]) -> Result<Outcome> {
    let records = read_records(ctx, input)?;
    ensure!(
        records.len() == 1,
        "rotate takes exactly one record, got {}",
        records.len()
    );
    let p = records[0].to_axis_angle()?;
    for v in vectors {
        ctx.vector(p.rotate(Vector3::from_array(*v)))?;
    }
    Ok(Outcome::Success)
}

fn reflect_cmd(ctx: &mut Ctx, normals: &[[f64; 3]], vectors: &[[f64; 3]]) -> Result<Outcome> {
    match normals {
        [a] => {
            ensure!(
                !vectors.is_empty(),
                "reflect with one normal needs at least one --vector"
            );
            let a = Vector3::from_array(*a);
            for v in vectors {
                ctx.vector(reflect(a, Vector3::from_array(*v)).context("reflection normal")?)?;
            }
        }
        [a, b] => {
            let r =
                rotation_from_two_reflections(Vector3::from_array(*a), Vector3::from_array(*b))?;
            ctx.record(&RotationRecord::from_axis_angle(&r.axis_angle))?;
            for v in vectors {
                ctx.vector(r.quaternion.act(Vector3::from_array(*v)))?;
            }
        }
        _ => bail!(
            "reflect takes one or two --normal values, got {}",
            normals.len()
        ),
    }
    Ok(Outcome::Success)
}

fn quaternion_distance(p: UnitQuaternion, q: UnitQuaternion) -> f64 {
    let (p, q) = (p.quaternion(), q.quaternion());
    p.max_abs_diff(q).min(p.max_abs_diff(-q))
}

/// Integrates knot to knot so that no RK4 step straddles a sample time,
/// where the spline's third derivative jumps. Steps are at most `h`.
fn propagate_piecewise(
    spline: &OmegaSpline,
    q0: UnitQuaternion,
    t0: f64,
    t1: f64,
    h: f64,
) -> Result<Propagation> {
    let mut breaks = vec![t0];
    breaks.extend(spline.knots().iter().copied().filter(|&k| k > t0 && k < t1));
    breaks.push(t1);
    let omega = |t: f64| spline.eval(t);
    let mut all = Propagation {
        samples: vec![(t0, q0)],
        max_norm_drift: 0.0,
    };
    for w in breaks.windows(2) {
        let start = all.final_state();
        let piece = propagate_trajectory(start, omega, w[0], w[1], h)?;
        all.samples.extend_from_slice(&piece.samples[1..]);
        all.max_norm_drift = all.max_norm_drift.max(piece.max_norm_drift);
    }
    Ok(all)
}

#[allow(clippy::too_many_arguments)]
fn propagate_cmd(
    ctx: &mut Ctx,
    initial: &str,
    omega_path: &Path,
    t0: f64,
    t1: f64,
    h: f64,
    output: Option<&Path>,
    study: bool,
) -> Result<Outcome> {
    let initial = RotationRecord::parse(initial)?.scale_angles(ctx.angle_in());
    let (q0, _) = initial.convert(Representation::Quaternion)?;
    let RotationRecord::Quaternion { a, b, c, d } = q0 else {
        bail!("internal: conversion to quaternion failed");
    };
    let q0 = UnitQuaternion::new(Quaternion::new(a, b, c, d))?;

    let mut samples = parse_series(&read_source(omega_path)?)
        .with_context(|| format!("in {}", omega_path.display()))?;
    for s in &mut samples {
        s.omega = s.omega.map(|w| w * ctx.angle_in());
    }
    let spline = OmegaSpline::new(&samples)?;
    ensure!(
        t0 >= spline.start() && t1 <= spline.end(),
        "interval [{t0}, {t1}] is outside the omega series range [{}, {}]",
        spline.start(),
        spline.end()
    );
    let run = propagate_piecewise(&spline, q0, t0, t1, h)?;

    if let Some(path) = output {
        let mut file = io::BufWriter::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        );
        for (t, q) in &run.samples {
            writeln!(
                file,
                "{}",
                RotationRecord::from_quaternion(*q).to_json_at(*t)
            )?;
        }
        file.flush()?;
    }

    let steps = run.samples.len() - 1;
    if ctx.json() {
        ctx.line(
            &json!({ "meta": "propagate", "steps": steps, "max_norm_drift": run.max_norm_drift })
                .to_string(),
        )?;
    } else {
        ctx.line(&format!(
            "steps {steps} max_norm_drift {:.3e}",
            run.max_norm_drift
        ))?;
    }
    if study {
        let q1 = run.final_state();
        let q2 = propagate_piecewise(&spline, q0, t0, t1, h / 2.0)?.final_state();
        let q4 = propagate_piecewise(&spline, q0, t0, t1, h / 4.0)?.final_state();
        let (e1, e2) = (quaternion_distance(q1, q2), quaternion_distance(q2, q4));
        // zero differences: every step is already cut short by the sample spacing
        let order = (e1 > 0.0 && e2 > 0.0).then(|| (e1 / e2).log2());
        if ctx.json() {
            ctx.line(&json!({ "meta": "study", "h": h, "difference_h": e1, "difference_h2": e2, "order": order }).to_string())?;
        } else {
            let order = order.map_or("undetermined".to_string(), |o| format!("{o:.3}"));
            ctx.line(&format!(
                "study |q(h)-q(h/2)| {e1:.3e} |q(h/2)-q(h/4)| {e2:.3e} order {order}"
            ))?;
        }
    }
    ctx.record(&RotationRecord::from_quaternion(run.final_state()))?;
    Ok(Outcome::Success)
}

fn verify(ctx: &mut Ctx, suite: Suite) -> Result<Outcome> {
    let results = run_suite(suite, ctx.seed);
    let failed = results.iter().filter(|c| !c.pass).count();
    for c in &results {
        let line = if ctx.json() {
            json!({
                "suite": c.suite.name(),
                "name": c.name,
                "samples": c.samples,
                "max_residual": c.max_residual,
                "threshold": c.threshold,
                "comparison": c.comparison.as_str(),
                "pass": c.pass,
            })
            .to_string()
        } else {
            c.to_string()
        };
        ctx.line(&line)?;
    }
    if !ctx.json() {
        ctx.line(&format!("{} checks, {} failed", results.len(), failed))?;
    }
    Ok(if failed == 0 {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    })
}

fn bench_cmd(ctx: &mut Ctx, n: usize) -> Result<Outcome> {
    ensure!(n >= 100, "bench needs n >= 100, got {n}");
    let report = bench(n, ctx.seed);
    write_bench(ctx, &report)?;
    Ok(Outcome::Success)
}

fn write_bench(ctx: &mut Ctx, r: &BenchReport) -> Result<()> {
    let rows: Vec<(&str, f64)> = vec![
        (
            "quaternion_median_ns_per_composition",
            r.quaternion_median_ns,
        ),
        ("euler_median_ns_per_composition", r.euler_median_ns),
        (
            "quaternion_multiplications_per_product",
            r.quaternion_multiplications as f64,
        ),
        (
            "quaternion_additions_per_product",
            r.quaternion_additions as f64,
        ),
        (
            "euler_matrix_products_per_composition",
            r.euler_matrix_products as f64,
        ),
        (
            "euler_multiplications_per_composition",
            r.euler_multiplications as f64,
        ),
        ("euler_additions_per_composition", r.euler_additions as f64),
        ("near_gimbal_theta", r.near.theta),
        (
            "near_gimbal_euler_parameter_deviation",
            r.near.stability.euler_parameter_deviation,
        ),
        (
            "near_gimbal_action_deviation",
            r.near.stability.action_deviation,
        ),
        (
            "near_gimbal_rodrigues_parameter_deviation",
            r.near.stability.rodrigues_parameter_deviation,
        ),
        (
            "near_gimbal_euler_round_trip_action",
            r.near.stability.euler_round_trip_action,
        ),
        (
            "near_gimbal_rodrigues_round_trip_action",
            r.near.stability.rodrigues_round_trip_action,
        ),
        ("far_theta", r.far.theta),
        (
            "far_euler_parameter_deviation",
            r.far.stability.euler_parameter_deviation,
        ),
        ("far_action_deviation", r.far.stability.action_deviation),
        (
            "far_rodrigues_parameter_deviation",
            r.far.stability.rodrigues_parameter_deviation,
        ),
    ];
    if ctx.json() {
        let mut obj = serde_json::Map::new();
        obj.insert("samples".into(), json!(r.samples));
        for (k, v) in &rows {
            obj.insert((*k).into(), json!(v));
        }
        ctx.line(&serde_json::Value::Object(obj).to_string())?;
    } else {
        ctx.line(&format!("samples {}", r.samples))?;
        for (k, v) in &rows {
            ctx.line(&format!("{k:<44} {v:.4e}"))?;
        }
    }
    Ok(())
}

fn extras(ctx: &mut Ctx, command: ExtrasCommand) -> Result<Outcome> {
    let line = match command {
        ExtrasCommand::Legendre { n, x } => {
            let v = legendre(n, x)?;
            if ctx.json() {
                format!(
                    "{{\"n\":{n},\"x\":{},\"value\":{}}}",
                    canonical_number(x),
                    canonical_number(v)
                )
            } else {
                canonical_number(v)
            }
        }
        ExtrasCommand::Inversions { sigma } => {
            let k = inversion_count(&sigma)?;
            if ctx.json() {
                json!({ "sigma": sigma, "inversions": k }).to_string()
            } else {
                k.to_string()
            }
        }
        ExtrasCommand::GeneratingPolynomial { n } => {
            let p = inversion_generating_polynomial(n)?;
            let coeffs: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
            if ctx.json() {
                format!("{{\"n\":{n},\"coefficients\":[{}]}}", coeffs.join(","))
            } else {
                coeffs.join(" ")
            }
        }
    };
    ctx.line(&line)?;
    Ok(Outcome::Success)
}
