//! Classical windowed gait detectors used as baselines, plus threshold
//! optimization.
//!
//! All four detectors tile the signal with non-overlapping windows, assign
//! each window a real score, and threshold the score. A trailing partial
//! window is scored if it is at least half full and dropped otherwise;
//! samples of a dropped window are marked non-gait in the expanded mask.

use serde::{Deserialize, Serialize};

use crate::signal_prep::PreprocessedSignal;
use crate::{Error, Result};

/// Windowed detector output: per-window scores and decisions plus the
/// expanded per-sample mask.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinaryDetection {
    /// Start sample of each scored window.
    pub window_starts: Vec<usize>,
    /// Nominal window length in samples (the trailing window may be shorter).
    pub window_length: usize,
    pub scores: Vec<f64>,
    pub threshold: f64,
    /// `decisions[i] == (scores[i] >= threshold)`.
    pub decisions: Vec<bool>,
    /// Per-sample gait mask, same length as the signal; samples outside any
    /// scored window are false.
    pub mask: Vec<bool>,
}

impl BinaryDetection {
    fn from_scores(
        n: usize,
        windows: &[(usize, usize)],
        window_length: usize,
        scores: Vec<f64>,
        threshold: f64,
    ) -> Self {
        let decisions: Vec<bool> = scores.iter().map(|&s| s >= threshold).collect();
        let mut mask = vec![false; n];
        for (w, &(lo, hi)) in windows.iter().enumerate() {
            if decisions[w] {
                for m in &mut mask[lo..hi] {
                    *m = true;
                }
            }
        }
        BinaryDetection {
            window_starts: windows.iter().map(|&(lo, _)| lo).collect(),
            window_length,
            scores,
            threshold,
            decisions,
            mask,
        }
    }
}

/// Non-overlapping window tiling. The trailing partial window is kept when
/// at least half full, otherwise dropped.
pub fn tile_windows(n: usize, window: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut lo = 0;
    while lo + window <= n {
        out.push((lo, lo + window));
        lo += window;
    }
    let rem = n - lo;
    if rem > 0 && 2 * rem >= window {
        out.push((lo, n));
    }
    out
}

fn window_samples(signal: &PreprocessedSignal, window_s: f64, what: &'static str) -> Result<usize> {
    let w = (window_s * signal.sample_rate).round() as usize;
    if w < 2 {
        return Err(Error::InvalidInput(format!(
            "{what}: window of {window_s} s is under 2 samples at {} Hz",
            signal.sample_rate
        )));
    }
    if signal.values.len() < w {
        return Err(Error::TooShort {
            what,
            needed: w,
            got: signal.values.len(),
        });
    }
    Ok(w)
}

fn std_two_pass(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let ss: f64 = x.iter().map(|&v| (v - mean) * (v - mean)).sum();
    (ss / (n - 1.0)).sqrt()
}

/// Standard-deviation detector: the sample standard deviation of each
/// window, thresholded.
pub fn std_detector(
    signal: &PreprocessedSignal,
    window_s: f64,
    threshold: f64,
) -> Result<BinaryDetection> {
    let w = window_samples(signal, window_s, "std detector")?;
    let windows = tile_windows(signal.values.len(), w);
    let scores: Vec<f64> = windows
        .iter()
        .map(|&(lo, hi)| std_two_pass(&signal.values[lo..hi]))
        .collect();
    Ok(BinaryDetection::from_scores(
        signal.values.len(),
        &windows,
        w,
        scores,
        threshold,
    ))
}

/// Band energy of one window by direct DFT: Σ|X_k|² over one-sided bins whose
/// frequency lies in [lo, hi] Hz. The DC bin is excluded even when lo = 0.
pub fn dft_band_energy(x: &[f64], fs: f64, band: (f64, f64)) -> f64 {
    let n = x.len();
    let mut energy = 0.0;
    for k in 1..=n / 2 {
        let f = k as f64 * fs / n as f64;
        if f < band.0 || f > band.1 {
            continue;
        }
        let mut re = 0.0;
        let mut im = 0.0;
        for (t, &v) in x.iter().enumerate() {
            let ang = -2.0 * std::f64::consts::PI * k as f64 * t as f64 / n as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        energy += re * re + im * im;
    }
    energy
}

/// Short-time-Fourier detector: per-window spectral energy summed over
/// frequency bins inside `band`, thresholded.
pub fn stft_detector(
    signal: &PreprocessedSignal,
    window_s: f64,
    band: (f64, f64),
    threshold: f64,
) -> Result<BinaryDetection> {
    if band.0 >= band.1 || band.0 < 0.0 {
        return Err(Error::BandOutOfRange {
            lo: band.0,
            hi: band.1,
            grid_lo: 0.0,
            grid_hi: signal.sample_rate / 2.0,
        });
    }
    let w = window_samples(signal, window_s, "stft detector")?;
    let windows = tile_windows(signal.values.len(), w);
    let scores: Vec<f64> = windows
        .iter()
        .map(|&(lo, hi)| dft_band_energy(&signal.values[lo..hi], signal.sample_rate, band))
        .collect();
    Ok(BinaryDetection::from_scores(
        signal.values.len(),
        &windows,
        w,
        scores,
        threshold,
    ))
}

/// Normalized autocorrelation of a window at lag `l`: the Pearson
/// correlation of `x[..w-l]` with `x[l..]` (each half mean-removed and
/// variance-normalized over the overlap). Returns 0 when either half is
/// constant.
pub fn nasc_at_lag(x: &[f64], l: usize) -> f64 {
    let m = x.len() - l;
    let a = &x[..m];
    let b = &x[l..];
    let ma = a.iter().sum::<f64>() / m as f64;
    let mb = b.iter().sum::<f64>() / m as f64;
    let mut num = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for t in 0..m {
        let da = a[t] - ma;
        let db = b[t] - mb;
        num += da * db;
        va += da * da;
        vb += db * db;
    }
    if va <= 0.0 || vb <= 0.0 {
        0.0
    } else {
        num / (va * vb).sqrt()
    }
}

/// Gated-out windows carry this score so the threshold invariant holds for
/// any threshold in (-1, 1] (NASC values always lie in [-1, 1]).
pub const NASC_GATED_SCORE: f64 = -1.0;

/// Normalized-autocorrelation detector: windows passing a standard-deviation
/// pre-gate are scored by the maximum NASC over `lag_range` (inclusive);
/// gated-out windows score [`NASC_GATED_SCORE`].
pub fn nasc_detector(
    signal: &PreprocessedSignal,
    std_threshold: f64,
    window_s: f64,
    lag_range: (usize, usize),
    nasc_threshold: f64,
) -> Result<BinaryDetection> {
    let w = window_samples(signal, window_s, "nasc detector")?;
    if lag_range.0 == 0 || lag_range.0 > lag_range.1 {
        return Err(Error::InvalidInput(format!(
            "nasc detector: invalid lag range [{}, {}]",
            lag_range.0, lag_range.1
        )));
    }
    if lag_range.1 >= w {
        return Err(Error::InvalidInput(format!(
            "nasc detector: max lag {} must be below the window of {w} samples",
            lag_range.1
        )));
    }
    let windows = tile_windows(signal.values.len(), w);
    let scores: Vec<f64> = windows
        .iter()
        .map(|&(lo, hi)| {
            let win = &signal.values[lo..hi];
            if std_two_pass(win) < std_threshold {
                return NASC_GATED_SCORE;
            }
            let max_lag = lag_range.1.min(win.len() - 1);
            (lag_range.0..=max_lag)
                .map(|l| nasc_at_lag(win, l))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    Ok(BinaryDetection::from_scores(
        signal.values.len(),
        &windows,
        w,
        scores,
        nasc_threshold,
    ))
}

/// Default cadence lag range for [`nasc_detector`]: periods of 3 Hz down to
/// 0.5 Hz at the given sample rate, clamped to half the window so every
/// scored lag keeps at least half the window as overlap (a 0.5 Hz period
/// equals a whole 2 s window and cannot be scored).
pub fn default_nasc_lag_range(fs: f64, window_samples: usize) -> (usize, usize) {
    let lo = ((fs / 3.0).round() as usize).max(1);
    let hi = ((fs / 0.5).round() as usize).min(window_samples / 2).max(lo + 1);
    (lo, hi)
}

/// Morlet continuous wavelet transform magnitude-squared of `x` at centre
/// frequency `f` Hz, summed over `lo..hi`. Direct convolution with an
/// analytic Morlet (ω₀ = 6) truncated at ±4 standard deviations.
pub fn morlet_energy(x: &[f64], fs: f64, f: f64, lo: usize, hi: usize) -> f64 {
    let omega0 = 6.0;
    // Scale in samples such that the wavelet's centre frequency is f.
    let s = omega0 * fs / (2.0 * std::f64::consts::PI * f);
    let half = (4.0 * s).ceil() as isize;
    let norm = 1.0 / (std::f64::consts::PI.powf(0.25) * s.sqrt());
    // Precompute the wavelet taps.
    let mut taps = Vec::with_capacity((2 * half + 1) as usize);
    for k in -half..=half {
        let t = k as f64 / s;
        let env = norm * (-0.5 * t * t).exp();
        taps.push((env * (omega0 * t).cos(), env * (omega0 * t).sin()));
    }
    let n = x.len() as isize;
    let mut energy = 0.0;
    for c in lo..hi {
        let c = c as isize;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, &(tr, ti)) in taps.iter().enumerate() {
            let idx = c + (i as isize - half);
            if idx < 0 || idx >= n {
                continue;
            }
            let v = x[idx as usize];
            re += v * tr;
            im += v * ti;
        }
        energy += re * re + im * im;
    }
    energy
}

/// Default log-spaced centre-frequency grid for [`cwt_detector`]: 16
/// frequencies from 0.25 Hz to min(16, 0.45·fs) Hz.
pub fn default_cwt_freqs(fs: f64) -> Vec<f64> {
    let lo: f64 = 0.25;
    let hi: f64 = (0.45 * fs).min(16.0);
    let n = 16;
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

/// Wavelet-energy-ratio detector: per-window ratio of Morlet energy at
/// frequencies inside `walking_band` to energy over the whole grid,
/// thresholded. A 0/0 ratio is defined as 0.
pub fn cwt_detector(
    signal: &PreprocessedSignal,
    window_s: f64,
    freqs: &[f64],
    walking_band: (f64, f64),
    threshold: f64,
) -> Result<BinaryDetection> {
    if freqs.is_empty() {
        return Err(Error::InvalidInput("cwt detector: empty frequency grid".into()));
    }
    if !freqs.iter().any(|&f| f >= walking_band.0 && f <= walking_band.1) {
        return Err(Error::BandOutOfRange {
            lo: walking_band.0,
            hi: walking_band.1,
            grid_lo: freqs.iter().cloned().fold(f64::INFINITY, f64::min),
            grid_hi: freqs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        });
    }
    let w = window_samples(signal, window_s, "cwt detector")?;
    let windows = tile_windows(signal.values.len(), w);
    let mut walking = vec![0.0f64; windows.len()];
    let mut total = vec![0.0f64; windows.len()];
    for &f in freqs {
        for (wi, &(lo, hi)) in windows.iter().enumerate() {
            let e = morlet_energy(&signal.values, signal.sample_rate, f, lo, hi);
            total[wi] += e;
            if f >= walking_band.0 && f <= walking_band.1 {
                walking[wi] += e;
            }
        }
    }
    let scores: Vec<f64> = walking
        .iter()
        .zip(&total)
        .map(|(&wk, &tt)| if tt > 0.0 { wk / tt } else { 0.0 })
        .collect();
    Ok(BinaryDetection::from_scores(
        signal.values.len(),
        &windows,
        w,
        scores,
        threshold,
    ))
}

/// Result of [`optimize_threshold`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSearch {
    pub threshold: f64,
    /// Mean per-subject balanced accuracy at the returned threshold.
    pub balanced_accuracy: f64,
    /// Subjects skipped because one class was absent.
    pub excluded_subjects: Vec<usize>,
}

fn balanced_accuracy_at(scores: &[f64], labels: &[bool], thr: f64) -> Option<f64> {
    let (mut tp, mut fp, mut tn, mut fn_) = (0u64, 0u64, 0u64, 0u64);
    for (&s, &y) in scores.iter().zip(labels) {
        match (s >= thr, y) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, false) => tn += 1,
            (false, true) => fn_ += 1,
        }
    }
    let pos = tp + fn_;
    let neg = tn + fp;
    if pos == 0 || neg == 0 {
        return None;
    }
    Some(0.5 * (tp as f64 / pos as f64 + tn as f64 / neg as f64))
}

/// Pick the score threshold maximizing the mean per-subject balanced
/// accuracy. Candidates are the midpoints of consecutive sorted unique
/// pooled scores plus one candidate below the minimum (everything gait) and
/// one above the maximum (nothing gait); ties break toward the larger
/// threshold. Subjects with only one class are excluded from the average and
/// reported.
pub fn optimize_threshold(
    scores_per_subject: &[Vec<f64>],
    labels_per_subject: &[Vec<bool>],
) -> Result<ThresholdSearch> {
    if scores_per_subject.len() != labels_per_subject.len() {
        return Err(Error::InvalidInput(
            "optimize_threshold: subject count mismatch between scores and labels".into(),
        ));
    }
    for (i, (s, l)) in scores_per_subject.iter().zip(labels_per_subject).enumerate() {
        if s.len() != l.len() {
            return Err(Error::InvalidInput(format!(
                "optimize_threshold: subject {i} has {} scores but {} labels",
                s.len(),
                l.len()
            )));
        }
    }
    let excluded: Vec<usize> = labels_per_subject
        .iter()
        .enumerate()
        .filter(|(_, l)| l.iter().all(|&y| y) || l.iter().all(|&y| !y))
        .map(|(i, _)| i)
        .collect();
    let usable: Vec<usize> = (0..scores_per_subject.len())
        .filter(|i| !excluded.contains(i))
        .collect();
    if usable.is_empty() {
        return Err(Error::SingleClass);
    }

    let mut pooled: Vec<f64> = scores_per_subject.iter().flatten().copied().collect();
    pooled.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pooled.dedup();
    let mut candidates = Vec::with_capacity(pooled.len() + 1);
    candidates.push(pooled[0] - 1.0);
    for w in pooled.windows(2) {
        candidates.push(0.5 * (w[0] + w[1]));
    }
    candidates.push(pooled[pooled.len() - 1] + 1.0);

    let mut best_thr = candidates[0];
    let mut best_ba = f64::NEG_INFINITY;
    for &thr in &candidates {
        let mut sum = 0.0;
        for &i in &usable {
            sum += balanced_accuracy_at(&scores_per_subject[i], &labels_per_subject[i], thr)
                .expect("usable subjects have both classes");
        }
        let ba = sum / usable.len() as f64;
        if ba >= best_ba {
            best_ba = ba;
            best_thr = thr;
        }
    }
    Ok(ThresholdSearch {
        threshold: best_thr,
        balanced_accuracy: best_ba,
        excluded_subjects: excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal};

    fn sig(values: Vec<f64>, fs: f64) -> PreprocessedSignal {
        PreprocessedSignal {
            values,
            sample_rate: fs,
            origin_time: 0.0,
        }
    }

    #[test]
    fn tiling_rule() {
        assert_eq!(tile_windows(10, 5), vec![(0, 5), (5, 10)]);
        // Remainder 3 of a 5-window (>= 50%) is kept.
        assert_eq!(tile_windows(13, 5), vec![(0, 5), (5, 10), (10, 13)]);
        // Remainder 2 of a 5-window (< 50%) is dropped.
        assert_eq!(tile_windows(12, 5), vec![(0, 5), (5, 10)]);
        // A lone partial window at least half full is still scored.
        assert_eq!(tile_windows(4, 5), vec![(0, 4)]);
        assert_eq!(tile_windows(2, 5), Vec::<(usize, usize)>::new());
    }

    #[test]
    fn std_zero_signal_all_non_gait() {
        let s = sig(vec![0.0; 200], 50.0);
        let d = std_detector(&s, 1.0, 0.5).unwrap();
        assert!(d.decisions.iter().all(|&b| !b));
        assert!(d.mask.iter().all(|&b| !b));
    }

    #[test]
    fn std_matches_two_pass_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let values: Vec<f64> = (0..437).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let s = sig(values.clone(), 50.0);
        let d = std_detector(&s, 1.0, 0.5).unwrap();
        for (w, &lo_start) in d.window_starts.iter().enumerate() {
            let hi = (lo_start + d.window_length).min(values.len());
            let win = &values[lo_start..hi];
            let n = win.len() as f64;
            let mean = win.iter().sum::<f64>() / n;
            let var = win.iter().map(|&v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
            assert!((d.scores[w] - var.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn std_separates_gait_from_rest() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let fs = 50.0;
        // 4 s rest (std 0.05), 4 s gait (std ~2).
        let mut values = Vec::new();
        for _ in 0..200 {
            let e: f64 = StandardNormal.sample(&mut rng);
            values.push(0.05 * e);
        }
        for _ in 0..200 {
            let e: f64 = StandardNormal.sample(&mut rng);
            values.push(2.0 * e);
        }
        let s = sig(values, fs);
        let d = std_detector(&s, 1.0, 0.5).unwrap();
        assert_eq!(d.decisions, vec![false, false, false, false, true, true, true, true]);
    }

    #[test]
    fn stft_dc_signal_non_gait() {
        let s = sig(vec![3.7; 100], 50.0);
        let d = stft_detector(&s, 1.0, (0.5, 10.0), 1e-6).unwrap();
        assert!(d.scores.iter().all(|&e| e < 1e-12));
        assert!(d.decisions.iter().all(|&b| !b));
    }

    #[test]
    fn stft_matches_direct_dft_oracle() {
        let fs = 50.0;
        let values: Vec<f64> = (0..250)
            .map(|t| (2.0 * std::f64::consts::PI * 2.0 * t as f64 / fs).sin())
            .collect();
        let s = sig(values.clone(), fs);
        let d = stft_detector(&s, 1.0, (0.5, 10.0), 0.1).unwrap();
        // Independent oracle: accumulate the DFT sum per bin with explicit
        // complex arithmetic over the analytic bin list.
        for (w, &start) in d.window_starts.iter().enumerate() {
            let win = &values[start..start + d.window_length];
            let n = win.len();
            let mut expect = 0.0;
            for k in 1..=n / 2 {
                let f = k as f64 * fs / n as f64;
                if !(0.5..=10.0).contains(&f) {
                    continue;
                }
                let (mut re, mut im) = (0.0, 0.0);
                for (t, &v) in win.iter().enumerate() {
                    let ang = 2.0 * std::f64::consts::PI * (k * t) as f64 / n as f64;
                    re += v * ang.cos();
                    im -= v * ang.sin();
                }
                expect += re * re + im * im;
            }
            assert!((d.scores[w] - expect).abs() <= 1e-9 * expect.max(1.0));
            assert!(d.decisions[w]); // a 2 Hz unit tone is well inside the band
        }
    }

    #[test]
    fn stft_out_of_band_tone_non_gait() {
        let fs = 50.0;
        let values: Vec<f64> = (0..250)
            .map(|t| (2.0 * std::f64::consts::PI * 20.0 * t as f64 / fs).sin())
            .collect();
        let s = sig(values, fs);
        let d = stft_detector(&s, 1.0, (0.5, 10.0), 0.1).unwrap();
        assert!(d.scores.iter().all(|&e| e < 1e-6));
        assert!(d.decisions.iter().all(|&b| !b));
    }

    #[test]
    fn stft_window_longer_than_signal_errors() {
        let s = sig(vec![0.0; 30], 50.0);
        assert!(matches!(
            stft_detector(&s, 1.0, (0.5, 10.0), 0.1),
            Err(Error::TooShort { .. })
        ));
    }

    #[test]
    fn nasc_periodic_signal_detected() {
        let fs = 50.0;
        // Period 25 samples (2 Hz), non-sinusoidal to be strict about lags.
        let values: Vec<f64> = (0..500)
            .map(|t| {
                let ph = (t % 25) as f64 / 25.0;
                (2.0 * std::f64::consts::PI * ph).sin() + 0.5 * (4.0 * std::f64::consts::PI * ph).cos()
            })
            .collect();
        let s = sig(values, fs);
        let d = nasc_detector(&s, 0.1, 2.0, (15, 40), 0.7).unwrap();
        assert!(d.scores.iter().all(|&v| v >= 0.999), "scores {:?}", d.scores);
        assert!(d.decisions.iter().all(|&b| b));
    }

    #[test]
    fn nasc_white_noise_rarely_high() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fs = 100.0;
        let n_windows = 1000;
        let values: Vec<f64> = (0..n_windows * 200)
            .map(|_| {
                let e: f64 = StandardNormal.sample(&mut rng);
                e
            })
            .collect();
        let s = sig(values, fs);
        let d = nasc_detector(&s, 0.0, 2.0, (33, 67), 0.3).unwrap();
        let high = d.scores.iter().filter(|&&v| v > 0.3).count();
        assert!(
            (high as f64) <= 0.01 * n_windows as f64,
            "{high} of {n_windows} windows exceed 0.3"
        );
    }

    #[test]
    fn nasc_matches_double_loop_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let values: Vec<f64> = (0..300).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let s = sig(values.clone(), 50.0);
        let d = nasc_detector(&s, 0.0, 2.0, (15, 40), 0.5).unwrap();
        for (w, &start) in d.window_starts.iter().enumerate() {
            let win = &values[start..start + d.window_length];
            let mut best = f64::NEG_INFINITY;
            for l in 15..=40usize {
                let m = win.len() - l;
                let mut ma = 0.0;
                let mut mb = 0.0;
                for t in 0..m {
                    ma += win[t];
                    mb += win[t + l];
                }
                ma /= m as f64;
                mb /= m as f64;
                let (mut num, mut va, mut vb) = (0.0, 0.0, 0.0);
                for t in 0..m {
                    num += (win[t] - ma) * (win[t + l] - mb);
                    va += (win[t] - ma).powi(2);
                    vb += (win[t + l] - mb).powi(2);
                }
                best = best.max(num / (va * vb).sqrt());
            }
            assert!((d.scores[w] - best).abs() < 1e-12);
        }
    }

    #[test]
    fn nasc_gate_marks_quiet_windows() {
        let mut values = vec![0.0; 100];
        let tone: Vec<f64> = (0..100)
            .map(|t| (2.0 * std::f64::consts::PI * (t % 25) as f64 / 25.0).sin())
            .collect();
        values.extend(tone);
        let s = sig(values, 50.0);
        let d = nasc_detector(&s, 0.1, 2.0, (15, 40), 0.7).unwrap();
        assert_eq!(d.scores[0], NASC_GATED_SCORE);
        assert!(!d.decisions[0]);
        assert!(d.decisions[1]);
    }

    #[test]
    fn nasc_lag_exceeding_window_errors() {
        let s = sig(vec![0.0; 300], 50.0);
        assert!(nasc_detector(&s, 0.0, 2.0, (15, 100), 0.5).is_err());
    }

    #[test]
    fn cwt_walking_tone_high_ratio() {
        let fs = 50.0;
        let values: Vec<f64> = (0..500)
            .map(|t| (2.0 * std::f64::consts::PI * 2.0 * t as f64 / fs).sin())
            .collect();
        let s = sig(values, fs);
        let freqs = default_cwt_freqs(fs);
        let d = cwt_detector(&s, 2.0, &freqs, (0.5, 3.0), 0.5).unwrap();
        assert!(d.scores.iter().all(|&r| r >= 0.9), "ratios {:?}", d.scores);
        assert!(d.decisions.iter().all(|&b| b));
    }

    #[test]
    fn cwt_fast_tone_low_ratio() {
        let fs = 50.0;
        let values: Vec<f64> = (0..500)
            .map(|t| (2.0 * std::f64::consts::PI * 20.0 * t as f64 / fs).sin())
            .collect();
        let s = sig(values, fs);
        let freqs = default_cwt_freqs(fs);
        let d = cwt_detector(&s, 2.0, &freqs, (0.5, 3.0), 0.5).unwrap();
        assert!(d.scores.iter().all(|&r| r <= 0.1), "ratios {:?}", d.scores);
        assert!(d.decisions.iter().all(|&b| !b));
    }

    #[test]
    fn cwt_zero_signal_zero_ratio() {
        let s = sig(vec![0.0; 300], 50.0);
        let freqs = default_cwt_freqs(50.0);
        let d = cwt_detector(&s, 2.0, &freqs, (0.5, 3.0), 0.5).unwrap();
        assert!(d.scores.iter().all(|&r| r == 0.0));
        assert!(d.decisions.iter().all(|&b| !b));
    }

    #[test]
    fn cwt_empty_scales_errors() {
        let s = sig(vec![0.0; 300], 50.0);
        assert!(cwt_detector(&s, 2.0, &[], (0.5, 3.0), 0.5).is_err());
    }

    #[test]
    fn decisions_monotone_in_threshold() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let values: Vec<f64> = (0..400).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let s = sig(values, 50.0);
        let lo = std_detector(&s, 1.0, 0.3).unwrap();
        let hi = std_detector(&s, 1.0, 0.9).unwrap();
        for (a, b) in hi.decisions.iter().zip(&lo.decisions) {
            assert!(!a | b, "raising the threshold created a gait window");
        }
    }

    #[test]
    fn scores_invariant_to_sign_flip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let values: Vec<f64> = (0..400).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let flipped: Vec<f64> = values.iter().map(|&v| -v).collect();
        let s = sig(values, 50.0);
        let f = sig(flipped, 50.0);
        let freqs = default_cwt_freqs(50.0);
        let pairs = [
            (std_detector(&s, 1.0, 0.5).unwrap(), std_detector(&f, 1.0, 0.5).unwrap()),
            (
                stft_detector(&s, 1.0, (0.5, 10.0), 0.5).unwrap(),
                stft_detector(&f, 1.0, (0.5, 10.0), 0.5).unwrap(),
            ),
            (
                nasc_detector(&s, 0.0, 2.0, (15, 40), 0.5).unwrap(),
                nasc_detector(&f, 0.0, 2.0, (15, 40), 0.5).unwrap(),
            ),
            (
                cwt_detector(&s, 2.0, &freqs, (0.5, 3.0), 0.5).unwrap(),
                cwt_detector(&f, 2.0, &freqs, (0.5, 3.0), 0.5).unwrap(),
            ),
        ];
        for (a, b) in &pairs {
            for (x, y) in a.scores.iter().zip(&b.scores) {
                assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
            }
        }
    }

    #[test]
    fn mask_matches_window_decisions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let values: Vec<f64> = (0..437).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let s = sig(values, 50.0);
        let d = std_detector(&s, 1.0, 1.0).unwrap();
        assert_eq!(d.mask.len(), s.values.len());
        for (w, &start) in d.window_starts.iter().enumerate() {
            let end = (start + d.window_length).min(s.values.len());
            for t in start..end {
                assert_eq!(d.mask[t], d.decisions[w]);
            }
        }
    }

    #[test]
    fn optimize_threshold_separable() {
        let scores = vec![vec![0.1, 0.2, 0.8, 0.9], vec![0.15, 0.25, 0.7, 0.95]];
        let labels = vec![
            vec![false, false, true, true],
            vec![false, false, true, true],
        ];
        let r = optimize_threshold(&scores, &labels).unwrap();
        assert_eq!(r.balanced_accuracy, 1.0);
        assert!(r.threshold > 0.25 && r.threshold < 0.7);
        assert!(r.excluded_subjects.is_empty());
    }

    #[test]
    fn optimize_threshold_degenerate_scores() {
        let scores = vec![vec![0.5, 0.5, 0.5, 0.5]];
        let labels = vec![vec![false, true, false, true]];
        let r = optimize_threshold(&scores, &labels).unwrap();
        assert!((r.balanced_accuracy - 0.5).abs() < 1e-12);
    }

    #[test]
    fn optimize_threshold_excludes_single_class_subjects() {
        let scores = vec![vec![0.1, 0.9], vec![0.3, 0.4]];
        let labels = vec![vec![false, true], vec![true, true]];
        let r = optimize_threshold(&scores, &labels).unwrap();
        assert_eq!(r.excluded_subjects, vec![1]);
        assert_eq!(r.balanced_accuracy, 1.0);
        let all_single = optimize_threshold(&scores[1..].to_vec(), &labels[1..].to_vec());
        assert!(matches!(all_single, Err(Error::SingleClass)));
    }

    #[test]
    fn optimize_threshold_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let n_subj = rng.gen_range(2..5);
            let mut scores = Vec::new();
            let mut labels = Vec::new();
            for _ in 0..n_subj {
                let n = rng.gen_range(6..15);
                scores.push((0..n).map(|_| rng.gen_range(0.0..1.0)).collect::<Vec<f64>>());
                labels.push((0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<bool>>());
            }
            let Ok(r) = optimize_threshold(&scores, &labels) else {
                continue;
            };
            // Independent exhaustive search over the same candidate set,
            // written from scratch.
            let mut pooled: Vec<f64> = scores.iter().flatten().copied().collect();
            pooled.sort_by(|a, b| a.partial_cmp(b).unwrap());
            pooled.dedup();
            let mut cands = vec![pooled[0] - 1.0];
            for w in pooled.windows(2) {
                cands.push((w[0] + w[1]) / 2.0);
            }
            cands.push(pooled.last().unwrap() + 1.0);
            let mut best = f64::NEG_INFINITY;
            let mut best_thr = cands[0];
            for &thr in &cands {
                let mut total = 0.0;
                let mut count = 0usize;
                for (ss, ll) in scores.iter().zip(&labels) {
                    let pos: Vec<usize> =
                        (0..ll.len()).filter(|&i| ll[i]).collect();
                    let neg: Vec<usize> =
                        (0..ll.len()).filter(|&i| !ll[i]).collect();
                    if pos.is_empty() || neg.is_empty() {
                        continue;
                    }
                    let tpr = pos.iter().filter(|&&i| ss[i] >= thr).count() as f64
                        / pos.len() as f64;
                    let tnr = neg.iter().filter(|&&i| ss[i] < thr).count() as f64
                        / neg.len() as f64;
                    total += 0.5 * (tpr + tnr);
                    count += 1;
                }
                let ba = total / count as f64;
                if ba >= best {
                    best = ba;
                    best_thr = thr;
                }
            }
            assert!((r.balanced_accuracy - best).abs() < 1e-12);
            assert!((r.threshold - best_thr).abs() < 1e-12);
        }
    }
}
