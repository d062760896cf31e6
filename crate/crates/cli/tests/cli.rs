//! End-to-end runs of the `rodrigues` binary.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use rodrigues_core::sampling::Sampler;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rodrigues"))
        .args(args)
        .output()
        .expect("run rodrigues")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rodrigues"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn rodrigues");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert_eq!(
        o.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v.get("type").is_some())
        .collect()
}

fn numbers(v: &Value, keys: &[&str]) -> Vec<f64> {
    keys.iter()
        .flat_map(|k| match &v[*k] {
            Value::Array(a) => a.iter().map(|x| x.as_f64().unwrap()).collect(),
            x => vec![x.as_f64().unwrap()],
        })
        .collect()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

const QUARTER_Z: &str = r#"{"type":"axis_angle","theta":1.5707963267948966,"w":[0,0,1]}"#;

#[test]
fn convert_axis_angle_to_quaternion() {
    let out = stdout(&run(&[
        "--format",
        "json-lines",
        "convert",
        "--to",
        "quaternion",
        QUARTER_Z,
    ]));
    let lines: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["meta"], "convert");
    assert_eq!(
        lines[0]["path"],
        serde_json::json!(["axis_angle", "quaternion"])
    );
    let q = numbers(&lines[1], &["a", "b", "c", "d"]);
    let h = 0.5f64.sqrt();
    assert!(max_diff(&q, &[h, 0.0, 0.0, h]) < 1e-15);
}

#[test]
fn convert_text_reports_path() {
    let out = stdout(&run(&["convert", "--to", "euler_zyz", QUARTER_Z]));
    assert!(out.starts_with("euler_zyz "));
    assert!(
        out.contains("path axis_angle -> matrix -> euler_zyz"),
        "{out}"
    );
}

#[test]
fn invalid_record_exits_two() {
    let o = run(&[
        "convert",
        "--to",
        "matrix",
        r#"{"type":"axis_angle","theta":1,"w":[0,0,2]}"#,
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("invalid axis_angle record"), "{err}");

    let o = run(&[
        "convert",
        "--to",
        "matrix",
        r#"{"type":"axis_angle","theta":1,"w":[0,0,1],"x":0}"#,
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn records_from_stdin() {
    let input = format!("{QUARTER_Z}\n\n{QUARTER_Z}\n");
    let out = stdout(&run_stdin(&["--format", "json-lines", "compose"], &input));
    let r = &records(&out)[0];
    assert!((r["theta"].as_f64().unwrap() - PI).abs() < 1e-15);
}

#[test]
fn compose_worked_example_in_degrees() {
    let out = stdout(&run(&[
        "--degrees",
        "--format",
        "json-lines",
        "compose",
        r#"{"type":"axis_angle","theta":90,"w":[0,0,1]}"#,
        r#"{"type":"axis_angle","theta":90,"w":[1,0,0]}"#,
    ]));
    let r = &records(&out)[0];
    let s = 3f64.sqrt().recip();
    assert!((r["theta"].as_f64().unwrap() - 120.0).abs() < 1e-12);
    assert!(max_diff(&numbers(r, &["w"]), &[s, -s, s]) < 1e-12);
}

#[test]
fn compose_all_methods_agree() {
    let a = r#"{"type":"axis_angle","theta":0.4,"w":[0.6,0,0.8]}"#;
    let b = r#"{"type":"axis_angle","theta":1.1,"w":[0,1,0]}"#;
    let mut results = Vec::new();
    for method in ["rodrigues", "matrix", "geometric"] {
        let out = stdout(&run(&[
            "--format",
            "json-lines",
            "compose",
            "--method",
            method,
            "--to",
            "quaternion",
            a,
            b,
        ]));
        let mut q = numbers(&records(&out)[0], &["a", "b", "c", "d"]);
        if q[0] < 0.0 {
            q.iter_mut().for_each(|x| *x = -*x);
        }
        results.push(q);
    }
    assert!(max_diff(&results[0], &results[1]) < 1e-12);
    assert!(max_diff(&results[0], &results[2]) < 1e-12);

    let out = stdout(&run(&["compose", "--method", "all", a, b]));
    assert!(out.contains("deviation rodrigues vs matrix"));
    assert!(out.contains("small_angle"));
}

#[test]
fn compose_needs_two_records() {
    assert_eq!(run(&["compose", QUARTER_Z]).status.code(), Some(2));
}

#[test]
fn rotate_and_reflect() {
    let out = stdout(&run(&["rotate", "-v", "1,0,0", "-v", "0,0,2", QUARTER_Z]));
    let rows: Vec<Vec<f64>> = out
        .lines()
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    assert!(max_diff(&rows[0], &[0.0, 1.0, 0.0]) < 1e-15);
    assert!(max_diff(&rows[1], &[0.0, 0.0, 2.0]) < 1e-15);

    let out = stdout(&run(&["reflect", "-n", "1,0,0", "-v", "1,2,3"]));
    assert_eq!(
        out.trim(),
        "-1.0000000000000000e0 2.0000000000000000e0 3.0000000000000000e0"
    );

    // Reflecting in two perpendicular planes is a half turn about their common line.
    let out = stdout(&run(&[
        "--format",
        "json-lines",
        "reflect",
        "-n",
        "1,0,0",
        "-n",
        "0,1,0",
        "-v",
        "1,2,3",
    ]));
    let r = &records(&out)[0];
    assert!((r["theta"].as_f64().unwrap() - PI).abs() < 1e-15);
    assert!(max_diff(&numbers(r, &["w"]), &[0.0, 0.0, 1.0]) < 1e-15);
}

fn omega_file(dir: &tempfile::TempDir, samples: &[(f64, [f64; 3])]) -> String {
    let path = dir.path().join("omega.jsonl");
    let body: String = samples
        .iter()
        .map(|(t, w)| format!("{}\n", serde_json::json!({ "t": t, "omega": w })))
        .collect();
    fs::write(&path, format!("# angular velocity\n{body}")).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn propagate_constant_rate_half_turn() {
    let dir = tempfile::tempdir().unwrap();
    let omega = omega_file(
        &dir,
        &[
            (0.0, [0.0, 0.0, 1.0]),
            (2.0, [0.0, 0.0, 1.0]),
            (4.0, [0.0, 0.0, 1.0]),
        ],
    );
    let traj = dir.path().join("traj.jsonl");
    let out = stdout(&run(&[
        "--format",
        "json-lines",
        "propagate",
        "--initial",
        r#"{"type":"quaternion","a":1,"b":0,"c":0,"d":0}"#,
        "--omega",
        &omega,
        "--t0",
        "0",
        "--t1",
        &PI.to_string(),
        "-o",
        traj.to_str().unwrap(),
    ]));
    let q = numbers(&records(&out)[0], &["a", "b", "c", "d"]);
    assert!(max_diff(&q, &[0.0, 0.0, 0.0, 1.0]) < 1e-8, "{q:?}");

    let steps: Vec<Value> = fs::read_to_string(&traj)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(steps[0]["t"].as_f64(), Some(0.0));
    assert!((steps.last().unwrap()["t"].as_f64().unwrap() - PI).abs() < 1e-12);
    for s in &steps {
        let t = s["t"].as_f64().unwrap();
        let q = numbers(s, &["a", "b", "c", "d"]);
        assert!(max_diff(&q, &[(t / 2.0).cos(), 0.0, 0.0, (t / 2.0).sin()]) < 1e-8);
    }
}

#[test]
fn propagate_zero_rate_is_constant() {
    let dir = tempfile::tempdir().unwrap();
    let omega = omega_file(&dir, &[(0.0, [0.0; 3]), (1.0, [0.0; 3])]);
    let initial = r#"{"type":"axis_angle","theta":0.7,"w":[0,0.6,0.8]}"#;
    let out = stdout(&run(&[
        "--format",
        "json-lines",
        "propagate",
        "--initial",
        initial,
        "--omega",
        &omega,
        "--t0",
        "0",
        "--t1",
        "1",
        "--h",
        "0.1",
    ]));
    let q = numbers(&records(&out)[0], &["a", "b", "c", "d"]);
    let (s, c) = 0.35f64.sin_cos();
    assert!(max_diff(&q, &[c, 0.0, 0.6 * s, 0.8 * s]) < 1e-15);
}

#[test]
fn propagate_study_reports_fourth_order() {
    let dir = tempfile::tempdir().unwrap();
    let samples: Vec<(f64, [f64; 3])> = (0..=8)
        .map(|k| {
            let t = 0.5 * k as f64;
            (
                t,
                [
                    (1.3 * t).sin(),
                    (0.7 * t).cos(),
                    0.5 + 0.3 * (2.0 * t).sin(),
                ],
            )
        })
        .collect();
    let omega = omega_file(&dir, &samples);
    let out = stdout(&run(&[
        "--format",
        "json-lines",
        "propagate",
        "--initial",
        r#"{"type":"quaternion","a":1,"b":0,"c":0,"d":0}"#,
        "--omega",
        &omega,
        "--t0",
        "0.13",
        "--t1",
        "3.9",
        "--h",
        "0.1",
        "--study",
    ]));
    let study = out
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|v| v["meta"] == "study")
        .unwrap();
    let order = study["order"].as_f64().unwrap();
    assert!((3.5..=4.5).contains(&order), "{order}");
}

#[test]
fn propagate_outside_series_fails() {
    let dir = tempfile::tempdir().unwrap();
    let omega = omega_file(&dir, &[(0.0, [0.0; 3]), (1.0, [0.0; 3])]);
    let o = run(&[
        "propagate",
        "--initial",
        QUARTER_Z,
        "--omega",
        &omega,
        "--t0",
        "0",
        "--t1",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports_json() {
    let out = stdout(&run(&["verify", "--suite", "algebra"]));
    assert!(out.trim_end().ends_with("checks, 0 failed"), "{out}");

    let out = stdout(&run(&[
        "--format",
        "json-lines",
        "verify",
        "--suite",
        "generators",
    ]));
    for line in out.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "generators");
        assert_eq!(v["pass"], true);
    }
    assert_eq!(
        run(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn bench_reports_counts() {
    let out = stdout(&run(&["bench", "-n", "100"]));
    assert!(out.contains("quaternion_multiplications_per_product"));
    assert!(out.contains("near_gimbal_euler_parameter_deviation"));
    assert_eq!(run(&["bench", "-n", "10"]).status.code(), Some(2));
}

#[test]
fn extras_commands() {
    assert_eq!(
        stdout(&run(&["extras", "legendre", "-n", "2", "-x", "0.5"])).trim(),
        "-1.2500000000000000e-1"
    );
    assert_eq!(stdout(&run(&["extras", "inversions", "3,1,2"])).trim(), "2");
    assert_eq!(
        stdout(&run(&["extras", "generating-polynomial", "-n", "4"])).trim(),
        "1 3 5 6 5 3 1"
    );
    assert_eq!(
        run(&["extras", "inversions", "1,1,2"]).status.code(),
        Some(2)
    );
}

#[test]
fn same_seed_same_output() {
    let a = stdout(&run(&[
        "--seed",
        "7",
        "--format",
        "json-lines",
        "verify",
        "--suite",
        "composition",
    ]));
    let b = stdout(&run(&[
        "--seed",
        "7",
        "--format",
        "json-lines",
        "verify",
        "--suite",
        "composition",
    ]));
    assert_eq!(a, b);
}

#[test]
fn canonical_records_round_trip_byte_for_byte() {
    let out = stdout(&run(&[
        "--format",
        "json-lines",
        "convert",
        "--to",
        "matrix",
        QUARTER_Z,
    ]));
    let record = out.lines().find(|l| l.contains("\"type\"")).unwrap();
    let again = stdout(&run(&[
        "--format",
        "json-lines",
        "convert",
        "--to",
        "matrix",
        record,
    ]));
    assert_eq!(
        again.lines().find(|l| l.contains("\"type\"")).unwrap(),
        record
    );
}

#[test]
fn random_round_trips_through_every_representation() {
    let mut rng = Sampler::new(11);
    let mut input = String::new();
    let mut originals = Vec::new();
    for _ in 0..50 {
        let p = rng.axis_angle();
        let q = p.to_quaternion().quaternion();
        let q = if q.a < 0.0 { -q } else { q };
        originals.push([q.a, q.b, q.c, q.d]);
        let w = p.axis();
        input.push_str(&format!(
            "{}\n",
            serde_json::json!({ "type": "axis_angle", "theta": p.theta(), "w": [w.x, w.y, w.z] })
        ));
    }
    let mut current = input;
    for target in [
        "matrix",
        "euler_zyz",
        "quaternion",
        "axis_angle",
        "quaternion",
    ] {
        let out = stdout(&run_stdin(
            &["--format", "json-lines", "convert", "--to", target],
            &current,
        ));
        current = records(&out).iter().map(|r| format!("{r}\n")).collect();
    }
    let finals = records(&current);
    assert_eq!(finals.len(), originals.len());
    for (r, q0) in finals.iter().zip(&originals) {
        let q = numbers(r, &["a", "b", "c", "d"]);
        let d = max_diff(&q, q0).min(max_diff(&q.iter().map(|x| -x).collect::<Vec<_>>(), q0));
        assert!(d < 1e-9, "{d}");
    }
}
