//! Ground-truthed synthetic recordings for testing the pipeline.
//!
//! Two generators: piecewise-AR magnitude series with known per-sample regime
//! ids, and raw tri-axial recordings (gravity + orientation drift + harmonic
//! gait bursts + rest noise) with a known gait mask and phase tags.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::ar::ArParams;
use crate::signal_prep::{PreprocessedSignal, RawRecording, SessionTag};
use crate::{Error, Result};

/// Ground-truth class of a synthetic regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegimeLabel {
    Gait,
    NonGait,
}

/// Medication phase tag attached to synthetic segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhaseTag {
    Before,
    After,
    None,
}

/// How one regime's samples are generated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// Stationary AR draw.
    Ar { coeffs: Vec<f64>, noise_variance: f64, mean: f64 },
    /// Cadence fundamental plus harmonics plus white noise.
    Harmonic {
        cadence_hz: f64,
        amplitudes: Vec<f64>,
        noise_sigma: f64,
    },
}

/// One regime of a piecewise-stationary synthetic signal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeSpec {
    pub duration_s: f64,
    pub kind: GeneratorKind,
    pub label: RegimeLabel,
    pub phase: PhaseTag,
}

impl RegimeSpec {
    fn validate(&self) -> Result<()> {
        if !(self.duration_s > 0.0) {
            return Err(Error::InvalidInput(format!(
                "regime duration must be positive, got {}",
                self.duration_s
            )));
        }
        if let GeneratorKind::Ar { coeffs, noise_variance, .. } = &self.kind {
            if !(*noise_variance > 0.0) {
                return Err(Error::InvalidInput("AR noise variance must be positive".into()));
            }
            let p = ArParams {
                coeffs: coeffs.clone(),
                noise_variance: *noise_variance,
                mean: 0.0,
                ard_precisions: vec![1.0; coeffs.len()],
            };
            let radius = p.spectral_radius();
            if radius >= 1.0 {
                return Err(Error::InvalidInput(format!(
                    "non-stationary AR regime (spectral radius {radius:.4})"
                )));
            }
        }
        Ok(())
    }
}

/// Helper: AR(2) coefficients with a complex pole pair at `peak_hz` (radius
/// `rho`), i.e. a resonance at that frequency.
pub fn resonant_ar2(peak_hz: f64, rho: f64, fs: f64) -> Vec<f64> {
    let theta = 2.0 * std::f64::consts::PI * peak_hz / fs;
    vec![2.0 * rho * theta.cos(), -rho * rho]
}

fn draw_regime(
    kind: &GeneratorKind,
    n: usize,
    fs: f64,
    rng: &mut ChaCha8Rng,
    history: &mut Vec<f64>,
) -> Vec<f64> {
    match kind {
        GeneratorKind::Ar { coeffs, noise_variance, mean } => {
            let noise = Normal::new(0.0, noise_variance.sqrt()).unwrap();
            let r = coeffs.len();
            // Burn in from zeros so each regime is close to stationary.
            let burn = 10 * r.max(10);
            let mut x = vec![0.0; burn];
            for t in r.max(1)..burn {
                let mut v = noise.sample(rng);
                for (j, &a) in coeffs.iter().enumerate() {
                    v += a * x[t - 1 - j];
                }
                x[t] = v;
            }
            let mut out = Vec::with_capacity(n);
            for _ in 0..n {
                let mut v = noise.sample(rng) + mean * (1.0 - coeffs.iter().sum::<f64>());
                let len = x.len();
                for (j, &a) in coeffs.iter().enumerate() {
                    v += a * x[len - 1 - j];
                }
                x.push(v);
                out.push(v);
            }
            history.extend_from_slice(&out);
            out
        }
        GeneratorKind::Harmonic { cadence_hz, amplitudes, noise_sigma } => {
            let noise = Normal::new(0.0, *noise_sigma).unwrap();
            let phase0: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
            let mut out = Vec::with_capacity(n);
            for t in 0..n {
                let time = t as f64 / fs;
                let mut v = noise.sample(rng);
                for (h, &amp) in amplitudes.iter().enumerate() {
                    let f = cadence_hz * (h + 1) as f64;
                    v += amp * (2.0 * std::f64::consts::PI * f * time + phase0).sin();
                }
                out.push(v);
            }
            history.extend_from_slice(&out);
            out
        }
    }
}

/// Concatenated draws from `specs`, with per-sample ground-truth regime ids
/// (index into `specs`). Deterministic given `seed`.
pub fn gen_piecewise_ar(
    specs: &[RegimeSpec],
    fs: f64,
    seed: u64,
) -> Result<(PreprocessedSignal, Vec<usize>)> {
    if specs.is_empty() {
        return Err(Error::InvalidInput("at least one regime spec is required".into()));
    }
    for s in specs {
        s.validate()?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::new();
    let mut truth = Vec::new();
    let mut history = Vec::new();
    for (id, spec) in specs.iter().enumerate() {
        let n = (spec.duration_s * fs).round() as usize;
        let draw = draw_regime(&spec.kind, n, fs, &mut rng, &mut history);
        values.extend(draw);
        truth.extend(std::iter::repeat(id).take(n));
    }
    Ok((
        PreprocessedSignal {
            values,
            sample_rate: fs,
            origin_time: 0.0,
        },
        truth,
    ))
}

/// Orientation-drift model for [`gen_gait_recording`]: piecewise-linear per
/// axis with `kinks` slope changes of magnitude up to `max_slope` (m/s² per
/// second).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriftSpec {
    pub kinks: usize,
    pub max_slope: f64,
}

/// A raw tri-axial recording with gravity, piecewise-linear orientation
/// drift, harmonic gait bursts and rest noise; returns the recording, the
/// per-sample ground-truth gait mask, and the phase tags (first half of the
/// session `before`, second half `after` medication).
pub struct GaitRecording {
    pub recording: RawRecording,
    pub gait_mask: Vec<bool>,
    pub gait_amplitude_scale_after: f64,
}

pub fn gen_gait_recording(
    walk_fraction: f64,
    cadence_hz: f64,
    drift: DriftSpec,
    fs: f64,
    duration_s: f64,
    seed: u64,
) -> Result<GaitRecording> {
    gen_gait_recording_scaled(walk_fraction, cadence_hz, drift, fs, duration_s, seed, 1.0, 1.0)
}

/// Like [`gen_gait_recording`] but with separate gait-amplitude scale factors
/// for the before/after halves (medication contrast).
#[allow(clippy::too_many_arguments)]
pub fn gen_gait_recording_scaled(
    walk_fraction: f64,
    cadence_hz: f64,
    drift: DriftSpec,
    fs: f64,
    duration_s: f64,
    seed: u64,
    amp_before: f64,
    amp_after: f64,
) -> Result<GaitRecording> {
    if !(walk_fraction > 0.0 && walk_fraction < 1.0) {
        return Err(Error::InvalidInput(format!(
            "walk fraction must be in (0,1), got {walk_fraction}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = (duration_s * fs).round() as usize;
    let timestamps: Vec<f64> = (0..n).map(|i| i as f64 / fs).collect();

    // Alternating rest/walk bouts; walk bouts 8-15 s, rests sized to match
    // the requested fraction on average.
    let mut gait_mask = vec![false; n];
    let mean_walk = 11.5;
    let mean_rest = mean_walk * (1.0 - walk_fraction) / walk_fraction;
    let mut t = 0usize;
    let mut walking = false;
    // Lead with a rest so recordings never start mid-bout.
    loop {
        let dur_s = if walking {
            rng.gen_range(8.0..15.0)
        } else {
            rng.gen_range(0.6 * mean_rest..1.4 * mean_rest)
        };
        let len = (dur_s * fs).round() as usize;
        let end = (t + len).min(n);
        if walking {
            for m in gait_mask.iter_mut().take(end).skip(t) {
                *m = true;
            }
        }
        t = end;
        walking = !walking;
        if t >= n {
            break;
        }
    }

    // Per-axis piecewise-linear drift.
    let mut drift_axes: Vec<Vec<f64>> = Vec::with_capacity(3);
    for _ in 0..3 {
        let mut kink_times: Vec<f64> = (0..drift.kinks)
            .map(|_| rng.gen_range(0.0..duration_s))
            .collect();
        kink_times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let draw_slope = |rng: &mut ChaCha8Rng| {
            if drift.max_slope > 0.0 {
                rng.gen_range(-drift.max_slope..drift.max_slope)
            } else {
                0.0
            }
        };
        let mut slope = draw_slope(&mut rng);
        let mut level = 0.0;
        let mut next_kink = 0usize;
        let mut vals = Vec::with_capacity(n);
        let dt = 1.0 / fs;
        for &time in &timestamps {
            while next_kink < kink_times.len() && time >= kink_times[next_kink] {
                slope = draw_slope(&mut rng);
                next_kink += 1;
            }
            level += slope * dt;
            vals.push(level);
        }
        drift_axes.push(vals);
    }

    let gravity = [0.0, 0.0, 9.81];
    // Gait projects onto the axes with fixed per-axis weights.
    let weights = [
        [1.0, 0.4, 0.7],
        [0.3, 1.0, 0.5],
    ];
    let rest_sigma = 0.05;
    let noise = Normal::new(0.0, 1.0).unwrap();
    let phase0: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);

    let half = n / 2;
    let mut axes: Vec<Vec<f64>> = vec![Vec::with_capacity(n); 3];
    for i in 0..n {
        let time = timestamps[i];
        let amp_scale = if i < half { amp_before } else { amp_after };
        let fundamental = (2.0 * std::f64::consts::PI * cadence_hz * time + phase0).sin();
        let harmonic = (2.0 * std::f64::consts::PI * 2.0 * cadence_hz * time + phase0).sin();
        for (a, axis) in axes.iter_mut().enumerate() {
            let mut v = gravity[a] + drift_axes[a][i];
            if gait_mask[i] {
                v += amp_scale
                    * (weights[0][a] * 1.5 * fundamental + weights[1][a] * 0.6 * harmonic)
                    + 0.15 * noise.sample(&mut rng);
            } else {
                v += rest_sigma * noise.sample(&mut rng);
            }
            axis.push(v);
        }
    }

    let tags = vec![
        SessionTag {
            start_s: 0.0,
            end_s: half as f64 / fs,
            label: "before".into(),
        },
        SessionTag {
            start_s: half as f64 / fs,
            end_s: duration_s,
            label: "after".into(),
        },
    ];

    Ok(GaitRecording {
        recording: RawRecording {
            timestamps,
            ax: axes[0].clone(),
            ay: axes[1].clone(),
            az: axes[2].clone(),
            subject_id: format!("synth-{seed}"),
            tags,
        },
        gait_mask,
        gait_amplitude_scale_after: amp_after / amp_before,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ar2_spec(coeffs: Vec<f64>, s2: f64, dur: f64) -> RegimeSpec {
        RegimeSpec {
            duration_s: dur,
            kind: GeneratorKind::Ar {
                coeffs,
                noise_variance: s2,
                mean: 0.0,
            },
            label: RegimeLabel::Gait,
            phase: PhaseTag::None,
        }
    }

    #[test]
    fn one_regime_constant_truth() {
        let (sig, truth) = gen_piecewise_ar(&[ar2_spec(vec![0.5], 1.0, 2.0)], 50.0, 1).unwrap();
        assert_eq!(sig.len(), 100);
        assert!(truth.iter().all(|&id| id == 0));
    }

    #[test]
    fn deterministic_under_seed() {
        let specs = [ar2_spec(vec![0.5], 1.0, 2.0), ar2_spec(vec![-0.3], 2.0, 3.0)];
        let (a, ta) = gen_piecewise_ar(&specs, 50.0, 42).unwrap();
        let (b, tb) = gen_piecewise_ar(&specs, 50.0, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(ta, tb);
        let (c, tc) = gen_piecewise_ar(&specs, 50.0, 43).unwrap();
        assert_ne!(a.values, c.values);
        assert_eq!(ta, tc); // structure unchanged by the seed
    }

    #[test]
    fn rejects_nonstationary_coeffs() {
        let specs = [ar2_spec(vec![1.2], 1.0, 2.0)];
        assert!(gen_piecewise_ar(&specs, 50.0, 1).is_err());
    }

    #[test]
    fn ar2_autocovariance_matches_yule_walker() {
        let (a1, a2, s2) = (1.2, -0.5, 1.0);
        let (sig, _) = gen_piecewise_ar(&[ar2_spec(vec![a1, a2], s2, 2000.0)], 50.0, 7).unwrap();
        let x = &sig.values;
        let n = x.len();
        assert_eq!(n, 100_000);
        let mean = x.iter().sum::<f64>() / n as f64;
        let acov = |lag: usize| -> f64 {
            let mut s = 0.0;
            for t in lag..n {
                s += (x[t] - mean) * (x[t - lag] - mean);
            }
            s / (n - lag) as f64
        };
        // Closed-form Yule-Walker autocovariances of an AR(2).
        let g0 = s2 * (1.0 - a2) / ((1.0 + a2) * ((1.0 - a2) * (1.0 - a2) - a1 * a1));
        let g1 = a1 * g0 / (1.0 - a2);
        let g2 = a1 * g1 + a2 * g0;
        for (lag, expect) in [(0, g0), (1, g1), (2, g2)] {
            let got = acov(lag);
            assert!(
                (got - expect).abs() / expect.abs() <= 0.05,
                "lag {lag}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn gait_recording_mask_fraction() {
        let g = gen_gait_recording(
            0.3,
            1.8,
            DriftSpec { kinks: 3, max_slope: 0.02 },
            50.0,
            600.0,
            5,
        )
        .unwrap();
        let frac = g.gait_mask.iter().filter(|&&b| b).count() as f64 / g.gait_mask.len() as f64;
        // Within one bout (~15 s of 600 s = 0.025) of the request.
        assert!((frac - 0.3).abs() <= 0.05, "gait fraction {frac}");
    }

    #[test]
    fn gait_recording_zero_amplitude_is_noise_only() {
        let g = gen_gait_recording_scaled(
            0.3,
            1.8,
            DriftSpec { kinks: 0, max_slope: 0.0 },
            50.0,
            200.0,
            5,
            0.0,
            0.0,
        )
        .unwrap();
        // With zero gait amplitude the walk bouts contain only the 0.15 burst
        // noise; magnitude after removing gravity should have tiny variance.
        let pre = crate::signal_prep::preprocess_recording(&g.recording, 50.0, 1.0).unwrap();
        let mean = pre.values.iter().sum::<f64>() / pre.values.len() as f64;
        let std = (pre
            .values
            .iter()
            .map(|&v| (v - mean) * (v - mean))
            .sum::<f64>()
            / pre.values.len() as f64)
            .sqrt();
        assert!(std < 0.2, "std {std}");
    }

    #[test]
    fn gait_recording_dominant_cadence_peak() {
        let cadence = 1.8;
        let g = gen_gait_recording(
            0.5,
            cadence,
            DriftSpec { kinks: 0, max_slope: 0.0 },
            50.0,
            400.0,
            11,
        )
        .unwrap();
        let pre = crate::signal_prep::preprocess_recording(&g.recording, 50.0, 1.0).unwrap();
        // Periodogram of the walk samples only (mean-removed), 0.5-5 Hz.
        let vals: Vec<f64> = pre
            .values
            .iter()
            .zip(&g.gait_mask)
            .filter(|(_, &m)| m)
            .map(|(&v, _)| v)
            .collect();
        let m = vals.iter().sum::<f64>() / vals.len() as f64;
        let fs = 50.0;
        let mut best = (0.0, 0.0);
        let mut f = 0.5;
        while f <= 5.0 {
            let (mut re, mut im) = (0.0, 0.0);
            for (t, &v) in vals.iter().enumerate() {
                let ph = 2.0 * std::f64::consts::PI * f * t as f64 / fs;
                re += (v - m) * ph.cos();
                im += (v - m) * ph.sin();
            }
            let p = re * re + im * im;
            if p > best.1 {
                best = (f, p);
            }
            f += 0.02;
        }
        // The magnitude of a sinusoidal burst concentrates power at the
        // cadence and its double; accept either within 0.1 Hz.
        let near = (best.0 - cadence).abs().min((best.0 - 2.0 * cadence).abs());
        assert!(near <= 0.1, "dominant peak at {} Hz", best.0);
    }
}
