//! Autoregressive models: sparse (ARD) MAP fitting, conditional likelihood,
//! and the parametric power spectrum.
//!
//! An order-r AR process describes a sample as a linear combination of its r
//! predecessors plus Gaussian innovation noise. Its power spectral density is
//! a closed-form function of the coefficients and the noise variance, which is
//! what makes the fitted models usable directly as spectral features.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One regime's AR model: coefficients, innovation variance, mean, and the
/// per-coefficient ARD prior precisions.
///
/// Convention: `x_t = mean + Σ_{j=1..r} coeffs[j-1] · x_{t-j} + e_t`,
/// `e_t ~ N(0, noise_variance)`. `coeffs[0]` multiplies lag 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArParams {
    pub coeffs: Vec<f64>,
    pub noise_variance: f64,
    #[serde(default)]
    pub mean: f64,
    pub ard_precisions: Vec<f64>,
}

impl ArParams {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.noise_variance > 0.0) {
            return Err(Error::InvalidInput(format!(
                "noise_variance must be positive, got {}",
                self.noise_variance
            )));
        }
        if self.ard_precisions.len() != self.coeffs.len() {
            return Err(Error::InvalidInput(
                "ard_precisions length must equal coefficient count".into(),
            ));
        }
        if self.ard_precisions.iter().any(|&a| !(a > 0.0)) {
            return Err(Error::InvalidInput("ard_precisions must be positive".into()));
        }
        Ok(())
    }

    /// White-noise model of a given variance.
    pub fn white(noise_variance: f64, mean: f64) -> Self {
        ArParams {
            coeffs: vec![],
            noise_variance,
            mean,
            ard_precisions: vec![],
        }
    }

    /// Spectral radius of the companion matrix; < 1 means stationary.
    pub fn spectral_radius(&self) -> f64 {
        let r = self.order();
        if r == 0 {
            return 0.0;
        }
        let mut comp = DMatrix::<f64>::zeros(r, r);
        for (j, &a) in self.coeffs.iter().enumerate() {
            comp[(0, j)] = a;
        }
        for i in 1..r {
            comp[(i, i - 1)] = 1.0;
        }
        comp.complex_eigenvalues()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

/// Sampled power spectral density on a frequency grid over `[0, fs/2]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsdEstimate {
    /// Hz, strictly increasing.
    pub freqs: Vec<f64>,
    /// Power per Hz, nonnegative.
    pub density: Vec<f64>,
    pub sample_rate: f64,
}

/// Band summary of a PSD: integrated energy plus the dominant peak.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsdFeatures {
    pub band_energy: f64,
    pub peak_position_hz: f64,
    pub peak_height: f64,
}

/// Hyperparameters for [`fit_ar_ard`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArdConfig {
    /// Inverse-gamma prior shape on the noise variance.
    pub noise_shape: f64,
    /// Inverse-gamma prior scale on the noise variance.
    pub noise_scale: f64,
    /// Initial ARD precision for every coefficient.
    pub ard_init: f64,
    /// Floor on `A_j² + var_j` in the precision update.
    pub ard_floor: f64,
    /// Precisions above this report the coefficient as pruned (exact 0).
    pub prune_precision: f64,
    pub max_iter: usize,
    pub tol: f64,
}

impl Default for ArdConfig {
    fn default() -> Self {
        ArdConfig {
            noise_shape: 2.0,
            noise_scale: 1.0,
            ard_init: 1.0,
            ard_floor: 1e-6,
            prune_precision: 1e6,
            max_iter: 200,
            tol: 1e-6,
        }
    }
}

/// Prior-mode innovation variance under the inverse-gamma prior.
pub fn noise_prior_mode(cfg: &ArdConfig) -> f64 {
    cfg.noise_scale / (cfg.noise_shape + 1.0)
}

/// MAP fit of a sparse AR model by coordinate ascent:
/// (a) ridge regression with per-coefficient ARD penalties, (b) evidence-style
/// precision update `α_j ← 1/(A_j² + var_j)`, (c) posterior-mode update of the
/// noise variance under its conjugate inverse-gamma prior. Iterates to
/// relative parameter change ≤ `cfg.tol` or `cfg.max_iter` rounds.
pub fn fit_ar_ard(data: &[f64], r: usize, cfg: &ArdConfig) -> Result<ArParams> {
    let n = data.len();
    if n < r + 3 {
        return Err(Error::TooShort {
            what: "AR fitting",
            needed: r + 3,
            got: n,
        });
    }
    let rows: Vec<usize> = (r..n).collect();
    fit_ar_ard_on_rows(data, &rows, r, cfg)
}

/// [`fit_ar_ard`] restricted to an explicit set of target indices `row_idx`
/// (each ≥ r); every target conditions on its r actual predecessors in
/// `data`. This is how per-state refits in the switching model score exactly
/// the samples a state owns.
pub fn fit_ar_ard_on_rows(
    data: &[f64],
    row_idx: &[usize],
    r: usize,
    cfg: &ArdConfig,
) -> Result<ArParams> {
    let rows = row_idx.len();
    if rows < 3 {
        return Err(Error::TooShort {
            what: "AR fitting",
            needed: 3,
            got: rows,
        });
    }
    debug_assert!(row_idx.iter().all(|&t| t >= r && t < data.len()));
    let targets: Vec<f64> = row_idx.iter().map(|&t| data[t]).collect();
    let mean_all = targets.iter().sum::<f64>() / rows as f64;
    let var_all = targets
        .iter()
        .map(|&v| (v - mean_all) * (v - mean_all))
        .sum::<f64>()
        / rows as f64;

    if r == 0 {
        // Posterior-mode variance of the mean-removed window.
        let rss: f64 = var_all * rows as f64;
        let sigma2 = (cfg.noise_scale + 0.5 * rss) / (cfg.noise_shape + 0.5 * rows as f64 + 1.0);
        return Ok(ArParams::white(sigma2.max(1e-300), mean_all));
    }

    // Degenerate (constant) data: nothing to regress on.
    if var_all <= 1e-300 {
        return Ok(ArParams {
            coeffs: vec![0.0; r],
            noise_variance: noise_prior_mode(cfg),
            mean: mean_all,
            ard_precisions: vec![cfg.ard_init; r],
        });
    }

    let mut design = DMatrix::<f64>::zeros(rows, r);
    let mut target = DVector::<f64>::zeros(rows);
    for (i, &t) in row_idx.iter().enumerate() {
        for j in 0..r {
            design[(i, j)] = data[t - 1 - j];
        }
        target[i] = data[t];
    }
    let xtx = design.transpose() * &design;
    let xt_sum: DVector<f64> = design.transpose() * DVector::from_element(rows, 1.0);
    let xty_raw: DVector<f64> = design.transpose() * &target;
    let y_sum: f64 = target.iter().sum();

    let mut alpha = vec![cfg.ard_init; r];
    let mut coeffs = vec![0.0; r];
    let mut mu = mean_all * (1.0 - coeffs.iter().sum::<f64>());
    let mut sigma2 = var_all.max(1e-12);

    let mut post_cov_diag = vec![0.0; r];
    for iter in 0..cfg.max_iter {
        let prev_coeffs = coeffs.clone();
        let prev_sigma2 = sigma2;

        // (a) coefficients given σ², α, μ: solve (XᵀX + σ²·diag(α)) a = Xᵀ(y − μ).
        let mut lhs = xtx.clone();
        for j in 0..r {
            lhs[(j, j)] += sigma2 * alpha[j];
        }
        let rhs: DVector<f64> = &xty_raw - &xt_sum * mu;
        let chol = match lhs.clone().cholesky() {
            Some(c) => c,
            None => {
                let cond = condition_estimate(&lhs);
                return Err(Error::IllConditioned { condition: cond });
            }
        };
        let a = chol.solve(&rhs);
        for j in 0..r {
            coeffs[j] = a[j];
        }
        // Posterior variances for the ARD update.
        let inv = chol.inverse();
        for j in 0..r {
            post_cov_diag[j] = sigma2 * inv[(j, j)];
        }

        // Intercept given coefficients (unpenalized).
        let pred_wo_mu: DVector<f64> = &design * &a;
        mu = (y_sum - pred_wo_mu.iter().sum::<f64>()) / rows as f64;

        // (c) σ² posterior mode under inverse-gamma(shape, scale).
        let rss: f64 = target
            .iter()
            .zip(pred_wo_mu.iter())
            .map(|(&y, &p)| {
                let e = y - p - mu;
                e * e
            })
            .sum();
        sigma2 = (cfg.noise_scale + 0.5 * rss) / (cfg.noise_shape + 0.5 * rows as f64 + 1.0);
        sigma2 = sigma2.max(1e-300);

        // (b) evidence-style ARD precision update with floor.
        for j in 0..r {
            alpha[j] = 1.0 / (coeffs[j] * coeffs[j] + post_cov_diag[j]).max(cfg.ard_floor);
        }

        let change = coeffs
            .iter()
            .zip(&prev_coeffs)
            .map(|(&a, &b)| (a - b).abs())
            .fold((sigma2 - prev_sigma2).abs() / sigma2.max(1e-12), f64::max);
        if iter > 0 && change <= cfg.tol {
            break;
        }
    }

    // Report pruned coefficients as exact zeros.
    for j in 0..r {
        if alpha[j] >= cfg.prune_precision {
            coeffs[j] = 0.0;
        }
    }

    Ok(ArParams {
        coeffs,
        noise_variance: sigma2,
        mean: mu,
        ard_precisions: alpha,
    })
}

fn condition_estimate(m: &DMatrix<f64>) -> f64 {
    let svd = m.clone().svd(false, false);
    let max = svd.singular_values.iter().fold(0.0f64, |a, &b| a.max(b));
    let min = svd
        .singular_values
        .iter()
        .fold(f64::INFINITY, |a, &b| a.min(b));
    max / min.max(1e-300)
}

/// Conditional log likelihood: the first `r` samples condition and are never
/// scored.
pub fn ar_log_likelihood(data: &[f64], params: &ArParams) -> f64 {
    let r = params.order();
    let n = data.len();
    debug_assert!(n > r, "data must be longer than the AR order");
    let ln_norm = -0.5 * (2.0 * std::f64::consts::PI * params.noise_variance).ln();
    let inv2s = 0.5 / params.noise_variance;
    let mut ll = 0.0;
    for t in r..n {
        let mut pred = params.mean;
        for (j, &a) in params.coeffs.iter().enumerate() {
            pred += a * data[t - 1 - j];
        }
        let e = data[t] - pred;
        ll += ln_norm - inv2s * e * e;
    }
    ll
}

/// Per-sample conditional log density at index `t` (requires `t ≥ order`).
pub fn ar_log_density_at(data: &[f64], t: usize, params: &ArParams) -> f64 {
    let mut pred = params.mean;
    for (j, &a) in params.coeffs.iter().enumerate() {
        pred += a * data[t - 1 - j];
    }
    let e = data[t] - pred;
    -0.5 * (2.0 * std::f64::consts::PI * params.noise_variance).ln()
        - 0.5 * e * e / params.noise_variance
}

/// Parametric AR power spectrum
/// `S(f) = σ² / (fs·|1 − Σ_j A_j·exp(−i·2π·(f/fs)·j)|²)` on a uniform grid of
/// `n_grid` points over `[0, fs/2]`. The 1/fs factor makes the two-sided
/// integral over `[-fs/2, fs/2]` equal the process variance.
pub fn ar_psd(params: &ArParams, fs: f64, n_grid: usize) -> Result<PsdEstimate> {
    if n_grid < 2 {
        return Err(Error::InvalidInput(format!(
            "n_grid must be at least 2, got {n_grid}"
        )));
    }
    let mut freqs = Vec::with_capacity(n_grid);
    let mut density = Vec::with_capacity(n_grid);
    for k in 0..n_grid {
        let f = (fs / 2.0) * k as f64 / (n_grid - 1) as f64;
        let omega = 2.0 * std::f64::consts::PI * f / fs;
        let mut re = 1.0;
        let mut im = 0.0;
        for (j, &a) in params.coeffs.iter().enumerate() {
            let phase = omega * (j + 1) as f64;
            re -= a * phase.cos();
            im += a * phase.sin();
        }
        let denom = re * re + im * im;
        if denom < 1e-14 {
            return Err(Error::SpectrumPole { frequency_hz: f });
        }
        freqs.push(f);
        density.push(params.noise_variance / (fs * denom));
    }
    Ok(PsdEstimate {
        freqs,
        density,
        sample_rate: fs,
    })
}

/// Band energy (trapezoidal integral) and dominant peak of a PSD within
/// `[band_lo, band_hi]` Hz.
pub fn psd_features(psd: &PsdEstimate, band_lo: f64, band_hi: f64) -> Result<PsdFeatures> {
    let grid_lo = *psd.freqs.first().unwrap_or(&0.0);
    let grid_hi = *psd.freqs.last().unwrap_or(&0.0);
    if band_lo < grid_lo - 1e-12 || band_hi > grid_hi + 1e-12 || band_lo >= band_hi {
        return Err(Error::BandOutOfRange {
            lo: band_lo,
            hi: band_hi,
            grid_lo,
            grid_hi,
        });
    }
    let value_at = |f: f64| -> f64 {
        // Linear interpolation between grid points.
        let i = psd.freqs.partition_point(|&g| g <= f).clamp(1, psd.freqs.len() - 1);
        let (f0, f1) = (psd.freqs[i - 1], psd.freqs[i]);
        let w = if f1 > f0 { (f - f0) / (f1 - f0) } else { 0.0 };
        psd.density[i - 1] * (1.0 - w) + psd.density[i] * w
    };

    // Trapezoid over the grid points inside the band plus the clipped edges.
    let mut knots: Vec<f64> = vec![band_lo];
    for &f in &psd.freqs {
        if f > band_lo && f < band_hi {
            knots.push(f);
        }
    }
    knots.push(band_hi);
    let mut energy = 0.0;
    for pair in knots.windows(2) {
        energy += 0.5 * (value_at(pair[0]) + value_at(pair[1])) * (pair[1] - pair[0]);
    }

    let mut peak_position_hz = band_lo;
    let mut peak_height = value_at(band_lo);
    for (&f, &d) in psd.freqs.iter().zip(&psd.density) {
        if f >= band_lo && f <= band_hi && d > peak_height {
            peak_height = d;
            peak_position_hz = f;
        }
    }
    let edge = value_at(band_hi);
    if edge > peak_height {
        peak_height = edge;
        peak_position_hz = band_hi;
    }
    Ok(PsdFeatures {
        band_energy: energy,
        peak_position_hz,
        peak_height,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, Normal};

    fn gen_ar(coeffs: &[f64], sigma2: f64, n: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let noise = Normal::new(0.0, sigma2.sqrt()).unwrap();
        let r = coeffs.len();
        let mut x = vec![0.0; n + 200];
        for t in r..x.len() {
            let mut v = noise.sample(&mut rng);
            for (j, &a) in coeffs.iter().enumerate() {
                v += a * x[t - 1 - j];
            }
            x[t] = v;
        }
        x.split_off(200)
    }

    #[test]
    fn fit_r0_matches_window_variance() {
        let data = gen_ar(&[], 2.5, 5000, 1);
        let cfg = ArdConfig::default();
        let p = fit_ar_ard(&data, 0, &cfg).unwrap();
        let mean = data.iter().sum::<f64>() / data.len() as f64;
        let rss: f64 = data.iter().map(|&v| (v - mean) * (v - mean)).sum();
        let expect = (cfg.noise_scale + 0.5 * rss) / (cfg.noise_shape + 0.5 * data.len() as f64 + 1.0);
        assert_abs_diff_eq!(p.noise_variance, expect, epsilon = 1e-12);
        assert_eq!(p.order(), 0);
    }

    #[test]
    fn fit_white_noise_small_coeffs() {
        let data = gen_ar(&[], 1.0, 10_000, 2);
        let p = fit_ar_ard(&data, 5, &ArdConfig::default()).unwrap();
        for &a in &p.coeffs {
            assert!(a.abs() <= 0.1, "coefficient {a} too large for white noise");
        }
        let var = {
            let m = data.iter().sum::<f64>() / data.len() as f64;
            data.iter().map(|&v| (v - m) * (v - m)).sum::<f64>() / data.len() as f64
        };
        assert!((p.noise_variance - var).abs() / var <= 0.10);
    }

    #[test]
    fn fit_ar2_in_ar10_recovers_and_prunes() {
        let truth = [1.5, -0.9];
        let data = gen_ar(&truth, 1.0, 10_000, 3);
        let p = fit_ar_ard(&data, 10, &ArdConfig::default()).unwrap();
        assert!((p.coeffs[0] - 1.5).abs() <= 0.05, "A1 = {}", p.coeffs[0]);
        assert!((p.coeffs[1] + 0.9).abs() <= 0.05, "A2 = {}", p.coeffs[1]);
        for j in 2..10 {
            assert!(p.coeffs[j].abs() <= 0.05, "A{} = {}", j + 1, p.coeffs[j]);
        }
    }

    #[test]
    fn fit_degenerate_constant_data() {
        let data = vec![1.0; 100];
        let cfg = ArdConfig::default();
        let p = fit_ar_ard(&data, 4, &cfg).unwrap();
        assert!(p.coeffs.iter().all(|&a| a == 0.0));
        assert_abs_diff_eq!(p.noise_variance, noise_prior_mode(&cfg), epsilon = 1e-12);
    }

    #[test]
    fn loglik_zeros_standard_normal() {
        let p = ArParams::white(1.0, 0.0);
        let n = 37;
        let data = vec![0.0; n];
        let expect = -(n as f64 / 2.0) * (2.0 * std::f64::consts::PI).ln();
        assert_abs_diff_eq!(ar_log_likelihood(&data, &p), expect, epsilon = 1e-10);
    }

    #[test]
    fn loglik_matches_per_sample_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let noise = Normal::new(0.0, 1.0).unwrap();
        let data: Vec<f64> = (0..50).map(|_| noise.sample(&mut rng)).collect();
        let p = ArParams {
            coeffs: vec![0.4, -0.2, 0.1],
            noise_variance: 0.7,
            mean: 0.3,
            ard_precisions: vec![1.0; 3],
        };
        // Brute-force term-by-term oracle.
        let mut expect = 0.0;
        for t in 3..data.len() {
            let pred = p.mean + 0.4 * data[t - 1] - 0.2 * data[t - 2] + 0.1 * data[t - 3];
            let e = data[t] - pred;
            expect += -0.5 * (2.0 * std::f64::consts::PI * 0.7f64).ln() - e * e / (2.0 * 0.7);
        }
        assert_abs_diff_eq!(ar_log_likelihood(&data, &p), expect, epsilon = 1e-10);
    }

    #[test]
    fn loglik_maximized_at_mean_squared_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let noise = Normal::new(0.0, 2.0).unwrap();
        let data: Vec<f64> = (0..200).map(|_| noise.sample(&mut rng)).collect();
        let coeffs = vec![0.3];
        let residual_msq = {
            let mut s = 0.0;
            for t in 1..data.len() {
                let e = data[t] - 0.3 * data[t - 1];
                s += e * e;
            }
            s / (data.len() - 1) as f64
        };
        let ll_at = |s2: f64| {
            ar_log_likelihood(
                &data,
                &ArParams {
                    coeffs: coeffs.clone(),
                    noise_variance: s2,
                    mean: 0.0,
                    ard_precisions: vec![1.0],
                },
            )
        };
        let opt = ll_at(residual_msq);
        assert!(opt >= ll_at(residual_msq * 1.1));
        assert!(opt >= ll_at(residual_msq * 0.9));
    }

    #[test]
    fn psd_flat_for_r0() {
        let p = ArParams::white(2.0, 0.0);
        let psd = ar_psd(&p, 50.0, 64).unwrap();
        for &d in &psd.density {
            assert_abs_diff_eq!(d, 2.0 / 50.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn psd_ar1_closed_form_at_zero() {
        let p = ArParams {
            coeffs: vec![0.9],
            noise_variance: 1.0,
            mean: 0.0,
            ard_precisions: vec![1.0],
        };
        let psd = ar_psd(&p, 1.0, 128).unwrap();
        // S(0) = σ²/(fs·(1−0.9)²) = 100 at fs = 1.
        assert_abs_diff_eq!(psd.density[0], 100.0, epsilon = 1e-9);
    }

    #[test]
    fn psd_ar2_peak_at_pole_angle() {
        // Complex pole pair at angle 2π·2/50, radius 0.95.
        let fs = 50.0;
        let theta = 2.0 * std::f64::consts::PI * 2.0 / fs;
        let rho = 0.95;
        let p = ArParams {
            coeffs: vec![2.0 * rho * theta.cos(), -rho * rho],
            noise_variance: 1.0,
            mean: 0.0,
            ard_precisions: vec![1.0; 2],
        };
        let n_grid = 512;
        let psd = ar_psd(&p, fs, n_grid).unwrap();
        let (imax, _) = psd
            .density
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap();
        let bin = fs / 2.0 / (n_grid - 1) as f64;
        assert!((psd.freqs[imax] - 2.0).abs() <= bin + 1e-12);
    }

    #[test]
    fn psd_rejects_unit_circle_pole() {
        let p = ArParams {
            coeffs: vec![1.0],
            noise_variance: 1.0,
            mean: 0.0,
            ard_precisions: vec![1.0],
        };
        assert!(matches!(
            ar_psd(&p, 50.0, 16),
            Err(Error::SpectrumPole { .. })
        ));
    }

    #[test]
    fn psd_integral_approximates_variance() {
        // One-sided integral doubled ≈ process variance for stationary params.
        let truth = [1.5, -0.9];
        let data = gen_ar(&truth, 1.0, 200_000, 6);
        let var = {
            let m = data.iter().sum::<f64>() / data.len() as f64;
            data.iter().map(|&v| (v - m) * (v - m)).sum::<f64>() / data.len() as f64
        };
        let p = ArParams {
            coeffs: truth.to_vec(),
            noise_variance: 1.0,
            mean: 0.0,
            ard_precisions: vec![1.0; 2],
        };
        let psd = ar_psd(&p, 50.0, 2048).unwrap();
        let mut integral = 0.0;
        for i in 1..psd.freqs.len() {
            integral += 0.5 * (psd.density[i - 1] + psd.density[i]) * (psd.freqs[i] - psd.freqs[i - 1]);
        }
        let approx_var = 2.0 * integral;
        assert!(
            (approx_var - var).abs() / var <= 0.10,
            "integral {approx_var} vs variance {var}"
        );
    }

    #[test]
    fn features_flat_density() {
        let psd = PsdEstimate {
            freqs: (0..26).map(|i| i as f64).collect(),
            density: vec![3.0; 26],
            sample_rate: 50.0,
        };
        let f = psd_features(&psd, 0.5, 10.0).unwrap();
        assert_abs_diff_eq!(f.band_energy, 9.5 * 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(f.peak_height, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn features_zero_density() {
        let psd = PsdEstimate {
            freqs: (0..26).map(|i| i as f64).collect(),
            density: vec![0.0; 26],
            sample_rate: 50.0,
        };
        let f = psd_features(&psd, 0.5, 10.0).unwrap();
        assert_eq!(f.band_energy, 0.0);
        assert_eq!(f.peak_height, 0.0);
    }

    #[test]
    fn features_band_outside_grid_errors() {
        let psd = PsdEstimate {
            freqs: (0..26).map(|i| i as f64).collect(),
            density: vec![1.0; 26],
            sample_rate: 50.0,
        };
        assert!(matches!(
            psd_features(&psd, 0.5, 30.0),
            Err(Error::BandOutOfRange { .. })
        ));
    }

    #[test]
    fn features_peak_of_resonant_ar2() {
        let fs = 50.0;
        let theta = 2.0 * std::f64::consts::PI * 2.0 / fs;
        let rho = 0.95;
        let p = ArParams {
            coeffs: vec![2.0 * rho * theta.cos(), -rho * rho],
            noise_variance: 1.0,
            mean: 0.0,
            ard_precisions: vec![1.0; 2],
        };
        let psd = ar_psd(&p, fs, 512).unwrap();
        let f = psd_features(&psd, 0.5, 10.0).unwrap();
        assert!((f.peak_position_hz - 2.0).abs() <= 0.1);
    }
}
