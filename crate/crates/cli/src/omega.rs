//! Angular-velocity time series: one `{"t":..,"omega":[x,y,z]}` object per
//! line with strictly increasing `t`. Between samples `omega` is a natural
//! cubic spline per component, smooth enough for the fourth-order integrator.

use anyhow::{bail, Context, Result};
use rodrigues_core::Vector3;
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaSample {
    pub t: f64,
    pub omega: [f64; 3],
}

/// Parses a series. Blank lines and lines starting with `#` are skipped.
pub fn parse_series(text: &str) -> Result<Vec<OmegaSample>> {
    let mut samples: Vec<OmegaSample> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let s: OmegaSample = serde_json::from_str(line)
            .with_context(|| format!("line {}: malformed omega sample", i + 1))?;
        if !s.t.is_finite() || s.omega.iter().any(|w| !w.is_finite()) {
            bail!("line {}: non-finite value", i + 1);
        }
        if let Some(prev) = samples.last() {
            if s.t <= prev.t {
                bail!(
                    "line {}: timestamp {} does not increase (previous {})",
                    i + 1,
                    s.t,
                    prev.t
                );
            }
        }
        samples.push(s);
    }
    if samples.len() < 2 {
        bail!(
            "omega series needs at least two samples, found {}",
            samples.len()
        );
    }
    Ok(samples)
}

/// Natural cubic spline through `(t_i, omega_i)`.
#[derive(Debug, Clone)]
pub struct OmegaSpline {
    t: Vec<f64>,
    y: Vec<[f64; 3]>,
    /// Second derivatives at the knots.
    m: Vec<[f64; 3]>,
}

impl OmegaSpline {
    pub fn new(samples: &[OmegaSample]) -> Result<Self> {
        let n = samples.len();
        if n < 2 {
            bail!("spline needs at least two samples");
        }
        let t: Vec<f64> = samples.iter().map(|s| s.t).collect();
        let y: Vec<[f64; 3]> = samples.iter().map(|s| s.omega).collect();
        let mut m = vec![[0.0; 3]; n];
        if n > 2 {
            // tridiagonal system for interior second derivatives (Thomas algorithm)
            let k = n - 2;
            let mut diag = vec![0.0; k];
            let mut upper = vec![0.0; k];
            let mut rhs = vec![[0.0; 3]; k];
            for i in 1..n - 1 {
                let (h0, h1) = (t[i] - t[i - 1], t[i + 1] - t[i]);
                diag[i - 1] = 2.0 * (h0 + h1);
                upper[i - 1] = h1;
                for c in 0..3 {
                    rhs[i - 1][c] =
                        6.0 * ((y[i + 1][c] - y[i][c]) / h1 - (y[i][c] - y[i - 1][c]) / h0);
                }
            }
            for i in 1..k {
                let lower = t[i + 1] - t[i];
                let f = lower / diag[i - 1];
                diag[i] -= f * upper[i - 1];
                let prev = rhs[i - 1];
                for (r, p) in rhs[i].iter_mut().zip(prev) {
                    *r -= f * p;
                }
            }
            for i in (0..k).rev() {
                for c in 0..3 {
                    let next = if i + 1 < k { m[i + 2][c] } else { 0.0 };
                    m[i + 1][c] = (rhs[i][c] - upper[i] * next) / diag[i];
                }
            }
        }
        Ok(OmegaSpline { t, y, m })
    }

    pub fn start(&self) -> f64 {
        self.t[0]
    }

    pub fn end(&self) -> f64 {
        self.t[self.t.len() - 1]
    }

    /// Sample times, where the third derivative may jump.
    pub fn knots(&self) -> &[f64] {
        &self.t
    }

    /// The interpolated value; outside the knots the end cubics are extended.
    pub fn eval(&self, t: f64) -> Vector3 {
        let n = self.t.len();
        let i = match self.t.partition_point(|&k| k <= t) {
            0 => 0,
            p if p >= n => n - 2,
            p => p - 1,
        };
        let (t0, t1) = (self.t[i], self.t[i + 1]);
        let h = t1 - t0;
        let (a, b) = ((t1 - t) / h, (t - t0) / h);
        let mut out = [0.0; 3];
        for (c, o) in out.iter_mut().enumerate() {
            *o = a * self.y[i][c]
                + b * self.y[i + 1][c]
                + ((a * a * a - a) * self.m[i][c] + (b * b * b - b) * self.m[i + 1][c]) * h * h
                    / 6.0;
        }
        Vector3::from_array(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples(f: impl Fn(f64) -> [f64; 3], ts: &[f64]) -> Vec<OmegaSample> {
        ts.iter().map(|&t| OmegaSample { t, omega: f(t) }).collect()
    }

    #[test]
    fn reproduces_constants_and_lines() {
        let s = OmegaSpline::new(&samples(
            |t| [1.0, 2.0 * t - 1.0, -3.0],
            &[0.0, 0.5, 1.7, 2.0, 4.0],
        ))
        .unwrap();
        for t in [0.0, 0.3, 1.0, 1.7, 3.9, 4.0] {
            assert!(
                s.eval(t)
                    .max_abs_diff(Vector3::new(1.0, 2.0 * t - 1.0, -3.0))
                    < 1e-14
            );
        }
    }

    #[test]
    fn interpolates_smooth_data_accurately() {
        let ts: Vec<f64> = (0..=200).map(|i| i as f64 * 0.01).collect();
        let s = OmegaSpline::new(&samples(|t| [t.sin(), t.cos(), 0.0], &ts)).unwrap();
        assert!((s.eval(1.234).x - 1.234f64.sin()).abs() < 1e-7);
        assert_eq!(s.eval(0.5).y, 0.5f64.cos());
    }

    #[test]
    fn series_parsing() {
        let ok = "{\"t\":0,\"omega\":[0,0,1]}\n\n# comment\n{\"t\":1,\"omega\":[0,0,1]}\n";
        assert_eq!(parse_series(ok).unwrap().len(), 2);
        assert!(parse_series("{\"t\":1,\"omega\":[0,0,1]}\n{\"t\":1,\"omega\":[0,0,1]}").is_err());
        assert!(parse_series("{\"t\":0,\"omega\":[0,0]}\n{\"t\":1,\"omega\":[0,0,1]}").is_err());
        assert!(parse_series("{\"t\":0,\"omega\":[0,0,1]}").is_err());
    }
}
