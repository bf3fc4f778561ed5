//! Raw-recording preprocessing: uniform resampling, orientation removal and
//! magnitude computation.
//!
//! Device orientation shows up in each accelerometer axis as a slowly varying,
//! approximately piecewise-linear offset (gravity projected onto the axis).
//! We remove it by fitting an ℓ1 trend filter to every axis and keeping the
//! residual, then collapse the three residual axes into the scalar magnitude
//! `sqrt(ax² + ay² + az²)` that the segmentation model consumes.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A labelled time range within a recording (e.g. before/after medication).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionTag {
    pub start_s: f64,
    pub end_s: f64,
    pub label: String,
}

/// Raw tri-axial accelerometer recording, possibly non-uniformly sampled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawRecording {
    /// Seconds, strictly increasing.
    pub timestamps: Vec<f64>,
    /// Per-axis acceleration in m/s².
    pub ax: Vec<f64>,
    pub ay: Vec<f64>,
    pub az: Vec<f64>,
    pub subject_id: String,
    pub tags: Vec<SessionTag>,
}

impl RawRecording {
    pub fn validate(&self) -> Result<()> {
        let n = self.timestamps.len();
        if n < 2 {
            return Err(Error::TooShort {
                what: "a recording",
                needed: 2,
                got: n,
            });
        }
        if self.ax.len() != n || self.ay.len() != n || self.az.len() != n {
            return Err(Error::InvalidInput(format!(
                "axis lengths ({}, {}, {}) do not match timestamp count {}",
                self.ax.len(),
                self.ay.len(),
                self.az.len(),
                n
            )));
        }
        for i in 1..n {
            if self.timestamps[i] <= self.timestamps[i - 1] {
                return Err(Error::NonMonotoneTimestamps { index: i });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.timestamps.is_empty()
    }
}

/// Uniformly sampled scalar magnitude series after orientation removal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PreprocessedSignal {
    pub values: Vec<f64>,
    /// Hz.
    pub sample_rate: f64,
    /// Seconds offset of the first sample.
    pub origin_time: f64,
}

impl PreprocessedSignal {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.values.len() as f64 / self.sample_rate
    }
}

// ---------------------------------------------------------------------------
// Natural cubic spline interpolation
// ---------------------------------------------------------------------------

/// Natural cubic spline through `(xs, ys)`, evaluable anywhere inside the span.
struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// Second derivatives at the knots (zero at both ends).
    m: Vec<f64>,
}

impl CubicSpline {
    fn fit(xs: &[f64], ys: &[f64]) -> Self {
        let n = xs.len();
        assert!(n >= 3);
        // Tridiagonal system for the interior second derivatives.
        let mut sub = vec![0.0; n];
        let mut diag = vec![0.0; n];
        let mut sup = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        diag[0] = 1.0;
        diag[n - 1] = 1.0;
        for i in 1..n - 1 {
            let h0 = xs[i] - xs[i - 1];
            let h1 = xs[i + 1] - xs[i];
            sub[i] = h0 / 6.0;
            diag[i] = (h0 + h1) / 3.0;
            sup[i] = h1 / 6.0;
            rhs[i] = (ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0;
        }
        // Thomas algorithm.
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        c[0] = sup[0] / diag[0];
        d[0] = rhs[0] / diag[0];
        for i in 1..n {
            let denom = diag[i] - sub[i] * c[i - 1];
            c[i] = sup[i] / denom;
            d[i] = (rhs[i] - sub[i] * d[i - 1]) / denom;
        }
        let mut m = vec![0.0; n];
        m[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            m[i] = d[i] - c[i] * m[i + 1];
        }
        CubicSpline {
            xs: xs.to_vec(),
            ys: ys.to_vec(),
            m,
        }
    }

    fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        // Clamp to the span; callers only query inside it.
        let i = match self
            .xs
            .binary_search_by(|t| t.partial_cmp(&x).unwrap())
        {
            Ok(i) => i.min(n - 2),
            Err(0) => 0,
            Err(i) => (i - 1).min(n - 2),
        };
        let h = self.xs[i + 1] - self.xs[i];
        let a = (self.xs[i + 1] - x) / h;
        let b = (x - self.xs[i]) / h;
        a * self.ys[i]
            + b * self.ys[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0
    }
}

/// Gap length (seconds) above which the recording is split into independent
/// spline blocks; values inside a gap are linearly bridged instead of
/// extrapolated by a spline.
pub const GAP_SPLIT_S: f64 = 2.0;

/// Resample a recording onto a uniform grid at `target_rate` Hz spanning
/// `[first, last]` input timestamp, interpolating each axis with a natural
/// cubic spline. Input already uniform at `target_rate` is returned unchanged.
pub fn resample_uniform(rec: &RawRecording, target_rate: f64) -> Result<RawRecording> {
    rec.validate()?;
    if !(target_rate > 0.0) {
        return Err(Error::InvalidInput(format!(
            "target_rate must be positive, got {target_rate}"
        )));
    }
    let n = rec.len();
    if n < 4 {
        return Err(Error::TooShort {
            what: "cubic spline resampling",
            needed: 4,
            got: n,
        });
    }
    let dt = 1.0 / target_rate;
    let t0 = rec.timestamps[0];
    let t_end = rec.timestamps[n - 1];

    // Fast path: already on the target grid.
    let uniform = rec
        .timestamps
        .iter()
        .enumerate()
        .all(|(i, &t)| (t - (t0 + i as f64 * dt)).abs() <= 1e-12 * (1.0 + t.abs()));
    if uniform {
        return Ok(rec.clone());
    }

    let m = ((t_end - t0) * target_rate).floor() as usize + 1;
    let grid: Vec<f64> = (0..m).map(|k| t0 + k as f64 * dt).collect();

    // Split at long gaps so splines never bridge them.
    let mut blocks: Vec<(usize, usize)> = Vec::new(); // half-open sample ranges
    let mut start = 0;
    for i in 1..n {
        if rec.timestamps[i] - rec.timestamps[i - 1] > GAP_SPLIT_S {
            blocks.push((start, i));
            start = i;
        }
    }
    blocks.push((start, n));

    let interp_axis = |vals: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; m];
        let mut block_splines: Vec<Option<CubicSpline>> = Vec::with_capacity(blocks.len());
        for &(a, b) in &blocks {
            if b - a >= 3 {
                block_splines.push(Some(CubicSpline::fit(
                    &rec.timestamps[a..b],
                    &vals[a..b],
                )));
            } else {
                block_splines.push(None);
            }
        }
        for (k, &t) in grid.iter().enumerate() {
            // Find the block whose span contains t.
            let mut val = None;
            for (bi, &(a, b)) in blocks.iter().enumerate() {
                let lo = rec.timestamps[a];
                let hi = rec.timestamps[b - 1];
                if t >= lo - 1e-12 && t <= hi + 1e-12 {
                    val = Some(match &block_splines[bi] {
                        Some(sp) => sp.eval(t),
                        // Tiny block: linear between its endpoints.
                        None => {
                            if b - a == 1 {
                                vals[a]
                            } else {
                                let w = (t - lo) / (hi - lo);
                                vals[a] * (1.0 - w) + vals[b - 1] * w
                            }
                        }
                    });
                    break;
                }
            }
            out[k] = val.unwrap_or_else(|| {
                // Inside a gap: linear bridge between the flanking samples.
                let i = rec
                    .timestamps
                    .partition_point(|&ts| ts <= t)
                    .clamp(1, n - 1);
                let (tl, tr) = (rec.timestamps[i - 1], rec.timestamps[i]);
                let w = (t - tl) / (tr - tl);
                vals[i - 1] * (1.0 - w) + vals[i] * w
            });
        }
        out
    };

    Ok(RawRecording {
        ax: interp_axis(&rec.ax),
        ay: interp_axis(&rec.ay),
        az: interp_axis(&rec.az),
        timestamps: grid,
        subject_id: rec.subject_id.clone(),
        tags: rec.tags.clone(),
    })
}

// ---------------------------------------------------------------------------
// ℓ1 trend filter
// ---------------------------------------------------------------------------

/// Objective ½·Σ(xₜ−zₜ)² + λ·Σ|zₜ₋₁−2zₜ+zₜ₊₁| minimized by [`l1_trend_filter`].
pub fn l1tf_objective(x: &[f64], z: &[f64], lambda: f64) -> f64 {
    let fit: f64 = x
        .iter()
        .zip(z)
        .map(|(&a, &b)| (a - b) * (a - b))
        .sum::<f64>()
        / 2.0;
    let tv: f64 = second_diff(z).iter().map(|d| d.abs()).sum();
    fit + lambda * tv
}

fn second_diff(z: &[f64]) -> Vec<f64> {
    let n = z.len();
    (1..n - 1).map(|i| z[i - 1] - 2.0 * z[i] + z[i + 1]).collect()
}

/// Dᵀv for the (n−2)×n second-difference operator.
fn second_diff_transpose(v: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for (i, &vi) in v.iter().enumerate() {
        out[i] += vi;
        out[i + 1] -= 2.0 * vi;
        out[i + 2] += vi;
    }
    out
}

/// Symmetric positive-definite pentadiagonal system solver (LDLᵀ with
/// bandwidth 2). `d0`, `d1`, `d2` are the main, first and second diagonals.
fn solve_penta(d0: &[f64], d1: &[f64], d2: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = d0.len();
    // Banded LDLᵀ factorization: L has unit diagonal, bands l1, l2.
    let mut diag = vec![0.0; n];
    let mut l1 = vec![0.0; n]; // l1[i] multiplies row i-1
    let mut l2 = vec![0.0; n]; // l2[i] multiplies row i-2
    for i in 0..n {
        let mut di = d0[i];
        if i >= 1 {
            di -= l1[i] * l1[i] * diag[i - 1];
        }
        if i >= 2 {
            di -= l2[i] * l2[i] * diag[i - 2];
        }
        diag[i] = di;
        if i + 1 < n {
            let mut v = d1[i];
            if i >= 1 {
                v -= l2[i + 1] * diag[i - 1] * l1[i];
            }
            l1[i + 1] = v / diag[i];
        }
        if i + 2 < n {
            l2[i + 2] = d2[i] / diag[i];
        }
    }
    // Forward solve L y = rhs.
    let mut y = rhs.to_vec();
    for i in 0..n {
        if i >= 1 {
            y[i] -= l1[i] * y[i - 1];
        }
        if i >= 2 {
            y[i] -= l2[i] * y[i - 2];
        }
    }
    // Diagonal.
    for i in 0..n {
        y[i] /= diag[i];
    }
    // Backward solve Lᵀ z = y.
    for i in (0..n).rev() {
        if i + 1 < n {
            y[i] -= l1[i + 1] * y[i + 1];
        }
        if i + 2 < n {
            y[i] -= l2[i + 2] * y[i + 2];
        }
    }
    y
}

/// Bands of D·Dᵀ ((n−2)×(n−2), pentadiagonal).
fn ddt_bands(m: usize) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let d0 = vec![6.0; m];
    let d1 = vec![-4.0; m.saturating_sub(1)];
    let d2 = vec![1.0; m.saturating_sub(2)];
    (d0, d1, d2)
}

/// Smallest λ at which the ℓ1 trend of `x` is the least-squares affine fit:
/// `‖(DDᵀ)⁻¹ D x‖∞`.
pub fn l1tf_lambda_max(x: &[f64]) -> f64 {
    let n = x.len();
    if n < 3 {
        return 0.0;
    }
    let dx = second_diff(x);
    let m = dx.len();
    let (d0, d1, d2) = ddt_bands(m);
    let nu = solve_penta(&d0, &d1, &d2, &dx);
    nu.iter().fold(0.0f64, |a, &v| a.max(v.abs()))
}

/// Least-squares affine fit to a series.
fn affine_fit(x: &[f64]) -> Vec<f64> {
    let n = x.len() as f64;
    let mean_t = (n - 1.0) / 2.0;
    let mean_x = x.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, &xi) in x.iter().enumerate() {
        let dt = i as f64 - mean_t;
        num += dt * (xi - mean_x);
        den += dt * dt;
    }
    let slope = if den > 0.0 { num / den } else { 0.0 };
    x.iter()
        .enumerate()
        .map(|(i, _)| mean_x + slope * (i as f64 - mean_t))
        .collect()
}

/// Convergence settings for the trend filter.
pub const L1TF_REL_GAP: f64 = 1e-8;
pub const L1TF_MAX_ITER: usize = 10_000;

/// Minimize ½·Σ(xₜ−zₜ)² + λ·Σ|zₜ₋₁−2zₜ+zₜ₊₁| over z (piecewise-linear trend).
///
/// Solved via the dual box-constrained QP
/// `min ½νᵀDDᵀν − νᵀDx  s.t. ‖ν‖∞ ≤ λ` with a log-barrier Newton method;
/// every Newton system is pentadiagonal so each step is O(n). The primal
/// trend is recovered as `z = x − Dᵀν`. Terminates at relative duality gap
/// ≤ 1e-8. Inputs shorter than 3 samples are returned unchanged (no second
/// difference exists). λ at or above [`l1tf_lambda_max`] short-circuits to
/// the exact affine fit.
pub fn l1_trend_filter(x: &[f64], lambda: f64) -> Result<Vec<f64>> {
    if lambda < 0.0 {
        return Err(Error::InvalidInput(format!(
            "lambda must be nonnegative, got {lambda}"
        )));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(
            "trend filter input contains non-finite values".into(),
        ));
    }
    let n = x.len();
    if n < 3 {
        return Ok(x.to_vec());
    }
    if lambda == 0.0 {
        return Ok(x.to_vec());
    }
    if lambda >= l1tf_lambda_max(x) {
        return Ok(affine_fit(x));
    }

    let m = n - 2;
    let dx = second_diff(x);
    let (b0, b1, b2) = ddt_bands(m);

    let dual_value = |nu: &[f64]| -> f64 {
        let dtnu = second_diff_transpose(nu, n);
        let quad: f64 = dtnu.iter().map(|v| v * v).sum::<f64>() / 2.0;
        let lin: f64 = nu.iter().zip(&dx).map(|(&a, &b)| a * b).sum();
        lin - quad
    };
    let primal_of = |nu: &[f64]| -> Vec<f64> {
        let dtnu = second_diff_transpose(nu, n);
        x.iter().zip(&dtnu).map(|(&a, &b)| a - b).collect()
    };

    // Barrier objective t·(½νᵀDDᵀν − νᵀDx) − Σ log(λ²−ν²).
    let barrier = |nu: &[f64], t: f64| -> f64 {
        let mut phi = 0.0;
        for &v in nu {
            let s = lambda * lambda - v * v;
            if s <= 0.0 {
                return f64::INFINITY;
            }
            phi -= s.ln();
        }
        -t * dual_value(nu) + phi
    };

    let mut nu = vec![0.0; m];
    let mut t = (m as f64) / l1tf_objective(x, x, lambda).abs().max(1.0);
    let mut best_z = x.to_vec();
    let mut best_obj = l1tf_objective(x, &best_z, lambda);
    let mut achieved_gap = f64::INFINITY;
    let mu = 10.0;

    for _iter in 0..L1TF_MAX_ITER {
        // Newton step on the barrier problem. Hessian: t·DDᵀ + diag(hᵢ).
        let dtnu = second_diff_transpose(&nu, n);
        let ddtnu = second_diff(&dtnu);
        let mut grad = vec![0.0; m];
        let mut hdiag = vec![0.0; m];
        for i in 0..m {
            let lm = lambda - nu[i];
            let lp = lambda + nu[i];
            grad[i] = t * (ddtnu[i] - dx[i]) + 1.0 / lm - 1.0 / lp;
            hdiag[i] = 1.0 / (lm * lm) + 1.0 / (lp * lp);
        }
        let mut h0 = vec![0.0; m];
        let mut h1 = vec![0.0; m.saturating_sub(1)];
        let mut h2 = vec![0.0; m.saturating_sub(2)];
        for i in 0..m {
            h0[i] = t * b0[i] + hdiag[i];
        }
        for i in 0..m.saturating_sub(1) {
            h1[i] = t * b1[i];
        }
        for i in 0..m.saturating_sub(2) {
            h2[i] = t * b2[i];
        }
        let neg_grad: Vec<f64> = grad.iter().map(|&g| -g).collect();
        let step = solve_penta(&h0, &h1, &h2, &neg_grad);

        // Backtracking line search keeping strict feasibility.
        let f0 = barrier(&nu, t);
        let gdotd: f64 = grad.iter().zip(&step).map(|(&g, &d)| g * d).sum();
        let mut alpha = 1.0;
        let mut accepted = false;
        for _ in 0..60 {
            let cand: Vec<f64> = nu.iter().zip(&step).map(|(&v, &d)| v + alpha * d).collect();
            let f1 = barrier(&cand, t);
            if f1 <= f0 + 0.01 * alpha * gdotd {
                nu = cand;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            // Stalled on this barrier level; sharpen it.
            t *= mu;
        }

        let z = primal_of(&nu);
        let obj = l1tf_objective(x, &z, lambda);
        if obj < best_obj {
            best_obj = obj;
            best_z = z;
        }
        let gap = best_obj - dual_value(&nu);
        achieved_gap = gap / best_obj.abs().max(1.0);
        if achieved_gap <= L1TF_REL_GAP {
            return Ok(best_z);
        }

        // Newton decrement small: the barrier subproblem is solved; tighten.
        let decrement = -gdotd;
        if accepted && decrement < 0.1 {
            t *= mu;
        }
    }
    Err(Error::TrendFilterNonConvergence {
        gap: achieved_gap,
        iterations: L1TF_MAX_ITER,
    })
}

/// Per-recording default λ = λ₀·n·var(channel), λ₀ = 0.01.
pub fn default_lambda(channel: &[f64]) -> f64 {
    let n = channel.len();
    if n < 2 {
        return 0.0;
    }
    let mean = channel.iter().sum::<f64>() / n as f64;
    let var = channel.iter().map(|&v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
    0.01 * n as f64 * var
}

/// Resample, remove per-axis ℓ1 trend, compute the residual magnitude.
/// A non-positive `lambda` selects the per-channel [`default_lambda`].
pub fn preprocess_recording(
    rec: &RawRecording,
    target_rate: f64,
    lambda: f64,
) -> Result<PreprocessedSignal> {
    let uniform = resample_uniform(rec, target_rate)?;
    let detrend = |vals: &[f64]| -> Result<Vec<f64>> {
        let l = if lambda > 0.0 { lambda } else { default_lambda(vals) };
        let trend = l1_trend_filter(vals, l)?;
        Ok(vals.iter().zip(&trend).map(|(&v, &t)| v - t).collect())
    };
    let rx = detrend(&uniform.ax)?;
    let ry = detrend(&uniform.ay)?;
    let rz = detrend(&uniform.az)?;
    let values: Vec<f64> = rx
        .iter()
        .zip(ry.iter())
        .zip(rz.iter())
        .map(|((&x, &y), &z)| (x * x + y * y + z * z).sqrt())
        .collect();
    Ok(PreprocessedSignal {
        values,
        sample_rate: target_rate,
        origin_time: uniform.timestamps[0],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rec_from_axes(ts: Vec<f64>, ax: Vec<f64>, ay: Vec<f64>, az: Vec<f64>) -> RawRecording {
        RawRecording {
            timestamps: ts,
            ax,
            ay,
            az,
            subject_id: "s1".into(),
            tags: vec![],
        }
    }

    #[test]
    fn resample_identity_on_uniform_input() {
        let ts: Vec<f64> = (0..100).map(|i| i as f64 * 0.02).collect();
        let vals: Vec<f64> = (0..100).map(|i| (i as f64 * 0.3).sin()).collect();
        let rec = rec_from_axes(ts, vals.clone(), vals.clone(), vals);
        let out = resample_uniform(&rec, 50.0).unwrap();
        assert_eq!(out, rec);
    }

    #[test]
    fn resample_reproduces_affine_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut ts = vec![0.0];
        while *ts.last().unwrap() < 10.0 {
            let t = ts.last().unwrap() + rng.gen_range(0.005..0.02);
            ts.push(t);
        }
        let f = |t: f64| 2.0 * t + 1.0;
        let vals: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
        let rec = rec_from_axes(ts, vals.clone(), vals.clone(), vals);
        let out = resample_uniform(&rec, 50.0).unwrap();
        for (t, v) in out.timestamps.iter().zip(&out.ax) {
            assert_abs_diff_eq!(*v, f(*t), epsilon = 1e-9);
        }
    }

    #[test]
    fn resample_sine_accuracy() {
        // 1 Hz sine sampled irregularly at ~100 Hz, resampled to 50 Hz.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut ts = vec![0.0];
        while *ts.last().unwrap() < 5.0 {
            let t = ts.last().unwrap() + rng.gen_range(0.005..0.015);
            ts.push(t);
        }
        let f = |t: f64| (2.0 * std::f64::consts::PI * t).sin();
        let vals: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
        let rec = rec_from_axes(ts, vals.clone(), vals.clone(), vals);
        let out = resample_uniform(&rec, 50.0).unwrap();
        let max_err = out
            .timestamps
            .iter()
            .zip(&out.ax)
            .map(|(&t, &v)| (v - f(t)).abs())
            .fold(0.0f64, f64::max);
        assert!(max_err <= 1e-3, "max abs error {max_err}");
    }

    #[test]
    fn resample_rejects_short_and_nonmonotone() {
        let rec = rec_from_axes(
            vec![0.0, 0.1, 0.2],
            vec![0.0; 3],
            vec![0.0; 3],
            vec![0.0; 3],
        );
        assert!(matches!(
            resample_uniform(&rec, 50.0),
            Err(Error::TooShort { .. })
        ));
        let rec = rec_from_axes(
            vec![0.0, 0.2, 0.1, 0.3],
            vec![0.0; 4],
            vec![0.0; 4],
            vec![0.0; 4],
        );
        assert!(matches!(
            resample_uniform(&rec, 50.0),
            Err(Error::NonMonotoneTimestamps { index: 2 })
        ));
    }

    #[test]
    fn trend_constant_input_exact() {
        let x = vec![3.5; 200];
        for lambda in [1e-6, 1.0, 1e6] {
            let z = l1_trend_filter(&x, lambda).unwrap();
            for v in &z {
                assert_abs_diff_eq!(*v, 3.5, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn trend_large_lambda_gives_affine_fit() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x: Vec<f64> = (0..1000)
            .map(|i| 0.3 * i as f64 + rng.gen_range(-1.0..1.0))
            .collect();
        let z = l1_trend_filter(&x, 1e9).unwrap();
        let aff = affine_fit(&x);
        for (a, b) in z.iter().zip(&aff) {
            assert_abs_diff_eq!(*a, *b, epsilon = 1e-6);
        }
    }

    #[test]
    fn trend_recovers_noiseless_piecewise_linear() {
        // Two kinks; with tiny λ the trend should stay on the input.
        let n = 300;
        let x: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64;
                if t < 100.0 {
                    0.5 * t
                } else if t < 200.0 {
                    50.0 - 0.2 * (t - 100.0)
                } else {
                    30.0 + 0.1 * (t - 200.0)
                }
            })
            .collect();
        let z = l1_trend_filter(&x, 1e-4).unwrap();
        let max_dev = x
            .iter()
            .zip(&z)
            .map(|(&a, &b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        assert!(max_dev <= 1e-3, "max deviation {max_dev}");
    }

    #[test]
    fn trend_short_input_passthrough() {
        let x = vec![1.0, 2.0];
        assert_eq!(l1_trend_filter(&x, 1.0).unwrap(), x);
    }

    #[test]
    fn trend_translation_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x: Vec<f64> = (0..200).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let c = 42.0;
        let xc: Vec<f64> = x.iter().map(|&v| v + c).collect();
        let z = l1_trend_filter(&x, 0.5).unwrap();
        let zc = l1_trend_filter(&xc, 0.5).unwrap();
        for (a, b) in z.iter().zip(&zc) {
            assert_abs_diff_eq!(*a + c, *b, epsilon = 1e-9);
        }
    }

    #[test]
    fn trend_objective_not_above_input_objective() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x: Vec<f64> = (0..400).map(|_| rng.gen_range(-2.0..2.0)).collect();
        for lambda in [0.01, 0.5, 10.0] {
            let z = l1_trend_filter(&x, lambda).unwrap();
            assert!(l1tf_objective(&x, &z, lambda) <= l1tf_objective(&x, &x, lambda) + 1e-12);
        }
    }

    #[test]
    fn preprocess_static_device_magnitude_near_zero() {
        let ts: Vec<f64> = (0..500).map(|i| i as f64 * 0.02).collect();
        let rec = rec_from_axes(ts, vec![3.0; 500], vec![4.0; 500], vec![0.0; 500]);
        let out = preprocess_recording(&rec, 50.0, 1.0).unwrap();
        for v in &out.values {
            assert!(v.abs() <= 1e-6);
        }
    }

    #[test]
    fn preprocess_all_zero_axes() {
        let ts: Vec<f64> = (0..100).map(|i| i as f64 * 0.02).collect();
        let rec = rec_from_axes(ts, vec![0.0; 100], vec![0.0; 100], vec![0.0; 100]);
        let out = preprocess_recording(&rec, 50.0, 1.0).unwrap();
        assert!(out.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn preprocess_removes_piecewise_linear_drift() {
        // Gait-like tone plus slow piecewise-linear drift per axis; output
        // should correlate strongly with the drift-free magnitude.
        let fs = 50.0;
        let n = 3000;
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let ts: Vec<f64> = (0..n).map(|i| i as f64 / fs).collect();
        let drift = |t: f64| if t < 30.0 { 0.05 * t } else { 1.5 - 0.03 * (t - 30.0) };
        let mut tone =
            |t: f64| (2.0 * std::f64::consts::PI * 2.0 * t).sin() * 1.5 + 0.1 * rng.gen_range(-1.0..1.0f64);
        let sig: Vec<f64> = ts.iter().map(|&t| tone(t)).collect();
        let ax: Vec<f64> = ts.iter().zip(&sig).map(|(&t, &s)| s + drift(t)).collect();
        let ay: Vec<f64> = ts.iter().map(|&t| 0.3 * drift(t)).collect();
        let az = vec![0.0; n];
        let rec = rec_from_axes(ts, ax, ay, az);
        let lambda = default_lambda(&rec.ax);
        let out = preprocess_recording(&rec, fs, lambda).unwrap();
        let clean: Vec<f64> = sig.iter().map(|&s| s.abs()).collect();
        let r = pearson(&out.values, &clean);
        assert!(r >= 0.95, "correlation {r}");
    }

    fn pearson(a: &[f64], b: &[f64]) -> f64 {
        let n = a.len() as f64;
        let ma = a.iter().sum::<f64>() / n;
        let mb = b.iter().sum::<f64>() / n;
        let mut num = 0.0;
        let mut da = 0.0;
        let mut db = 0.0;
        for (&x, &y) in a.iter().zip(b) {
            num += (x - ma) * (y - mb);
            da += (x - ma) * (x - ma);
            db += (y - mb) * (y - mb);
        }
        num / (da * db).sqrt()
    }

    #[test]
    fn preprocess_rotation_invariant_without_drift() {
        let fs = 50.0;
        let n = 500;
        let ts: Vec<f64> = (0..n).map(|i| i as f64 / fs).collect();
        let sig: Vec<f64> = ts
            .iter()
            .map(|&t| (2.0 * std::f64::consts::PI * 2.0 * t).sin())
            .collect();
        let rec = rec_from_axes(ts.clone(), sig.clone(), vec![0.0; n], vec![0.0; n]);
        // Rotate the axis triple by a fixed rotation about z then x.
        let (c, s) = (0.6f64.cos(), 0.6f64.sin());
        let ax2: Vec<f64> = sig.iter().map(|&x| c * x).collect();
        let ay2: Vec<f64> = sig.iter().map(|&x| s * x * 0.8).collect();
        let az2: Vec<f64> = sig.iter().map(|&x| s * x * 0.6).collect();
        let rec2 = rec_from_axes(ts, ax2, ay2, az2);
        // Tiny λ: trend removal is a no-op on zero-drift data up to solver tol.
        let a = preprocess_recording(&rec, fs, 1e-8).unwrap();
        let b = preprocess_recording(&rec2, fs, 1e-8).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            assert_abs_diff_eq!(*x, *y, epsilon = 1e-6);
        }
    }

    #[test]
    fn gap_splitting_does_not_spline_across_gaps() {
        // Two blocks separated by a 5 s gap; values inside the gap must stay
        // within the convex hull of the flanking samples (linear bridge).
        let mut ts: Vec<f64> = (0..100).map(|i| i as f64 * 0.021).collect();
        let last = *ts.last().unwrap();
        ts.extend((0..100).map(|i| last + 5.0 + i as f64 * 0.021));
        let vals: Vec<f64> = ts.iter().map(|&t| (t * 3.0).sin()).collect();
        let rec = rec_from_axes(ts.clone(), vals.clone(), vals.clone(), vals.clone());
        let out = resample_uniform(&rec, 50.0).unwrap();
        let gap_lo = ts[99];
        let gap_hi = ts[100];
        let (vlo, vhi) = (vals[99], vals[100]);
        let (lo, hi) = (vlo.min(vhi) - 1e-9, vlo.max(vhi) + 1e-9);
        for (&t, &v) in out.timestamps.iter().zip(&out.ax) {
            if t > gap_lo + 1e-9 && t < gap_hi - 1e-9 {
                assert!(v >= lo && v <= hi, "gap value {v} at t={t} outside [{lo},{hi}]");
            }
        }
    }
}
