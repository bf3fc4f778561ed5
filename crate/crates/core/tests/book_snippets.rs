//! Every code snippet shown in the guide (`book/`) lives here, marked with
//! `// ANCHOR` comments and pulled into the chapters by mdBook's
//! `{{#include}}`. Running `cargo test` therefore compiles and executes
//! exactly the code the book displays, so the two cannot drift apart.

use rand::{Rng, SeedableRng};

// ANCHOR: preprocess
use gaitseg::signal_prep::{preprocess_recording, RawRecording};

/// A static device measures pure gravity; after per-axis detrending the
/// residual magnitude is (numerically) zero.
#[test]
fn static_device_preprocesses_to_zero() {
    let n = 500;
    let rec = RawRecording {
        timestamps: (0..n).map(|i| i as f64 * 0.02).collect(),
        ax: vec![3.0; n],
        ay: vec![4.0; n],
        az: vec![0.0; n],
        subject_id: "demo".into(),
        tags: vec![],
    };
    // lambda <= 0 picks a per-channel default weight.
    let signal = preprocess_recording(&rec, 50.0, 0.0).unwrap();
    assert_eq!(signal.sample_rate, 50.0);
    assert!(signal.values.iter().all(|v| v.abs() <= 1e-6));
}
// ANCHOR_END: preprocess

// ANCHOR: trend_filter
use gaitseg::signal_prep::{l1_trend_filter, l1tf_objective};

/// The filter reproduces a noiseless piecewise-linear input almost exactly
/// at a small penalty weight, and a huge weight collapses the trend to the
/// least-squares line.
#[test]
fn trend_filter_recovers_piecewise_linear() {
    let x: Vec<f64> = (0..300)
        .map(|t| if t < 150 { t as f64 * 0.01 } else { 1.5 + (t - 150) as f64 * -0.02 })
        .collect();
    let z = l1_trend_filter(&x, 1e-4).unwrap();
    let worst = x.iter().zip(&z).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    assert!(worst <= 1e-3);
    // The returned trend attains a lower objective than the input itself.
    assert!(l1tf_objective(&x, &z, 1e-4) <= l1tf_objective(&x, &x, 1e-4));
}
// ANCHOR_END: trend_filter

// ANCHOR: ar_fit
use gaitseg::ar::{ar_psd, fit_ar_ard, psd_features, ArdConfig};

/// Fit an order-10 model to an AR(2) draw: the two true lags are recovered
/// and the other eight are pruned to (near) zero by the ARD prior. The
/// parametric spectrum peaks where the pole pair says it should.
#[test]
fn ard_fit_prunes_irrelevant_lags() {
    let fs = 50.0;
    let coeffs = gaitseg::synth::resonant_ar2(3.0, 0.95, fs); // peak near 3 Hz
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let mut x = vec![0.0f64; 20_000];
    for t in 2..x.len() {
        x[t] = coeffs[0] * x[t - 1] + coeffs[1] * x[t - 2] + rng.gen_range(-1.0..1.0);
    }
    let fit = fit_ar_ard(&x, 10, &ArdConfig::default()).unwrap();
    assert!((fit.coeffs[0] - coeffs[0]).abs() < 0.05);
    assert!((fit.coeffs[1] - coeffs[1]).abs() < 0.05);
    assert!(fit.coeffs[2..].iter().all(|a| a.abs() < 0.05));

    let psd = ar_psd(&fit, fs, 512).unwrap();
    let feats = psd_features(&psd, 0.5, 10.0).unwrap();
    assert!((feats.peak_position_hz - 3.0).abs() < 0.5);
}
// ANCHOR_END: ar_fit

// ANCHOR: segmentation
use gaitseg::switching::{infer_segmentation, SwitchingConfig};
use gaitseg::synth::{gen_piecewise_ar, GeneratorKind, PhaseTag, RegimeLabel, RegimeSpec};

/// Segment a signal that switches between two spectrally distinct AR
/// regimes. The state count is not given to the model; it discovers it.
#[test]
fn segmentation_recovers_two_regimes() {
    let fs = 50.0;
    let regime = |peak_hz: f64| RegimeSpec {
        duration_s: 20.0,
        kind: GeneratorKind::Ar {
            coeffs: gaitseg::synth::resonant_ar2(peak_hz, 0.95, fs),
            noise_variance: 1.0,
            mean: 0.0,
        },
        label: RegimeLabel::Gait,
        phase: PhaseTag::None,
    };
    let (signal, truth) = gen_piecewise_ar(&[regime(1.0), regime(6.0)], fs, 3).unwrap();

    let cfg = SwitchingConfig { ar_order: 6, seed: 3, ..Default::default() };
    let res = infer_segmentation(&signal, &cfg).unwrap();

    // The sweep-by-sweep score never decreases.
    for w in res.objective_trace.windows(2) {
        assert!(w[1] >= w[0]);
    }
    // Per-sample agreement with the generator, after matching state ids.
    let flip = res.labels.labels[0] != truth[0];
    let correct = res
        .labels
        .labels
        .iter()
        .zip(&truth)
        .filter(|(&z, &t)| (z != t) == flip)
        .count();
    assert!(correct as f64 >= 0.95 * truth.len() as f64);
}
// ANCHOR_END: segmentation

// ANCHOR: classify
use gaitseg::classify::{gait_features, label_states_gait, state_band_energies};
use gaitseg::synth::{gen_gait_recording, DriftSpec};

/// Label the discovered states gait / non-gait by parametric band energy
/// and pull per-segment spectral features for downstream classification.
#[test]
fn gait_states_labelled_by_band_energy() {
    let fs = 50.0;
    let rec = gen_gait_recording(
        0.4,                                      // walk fraction
        2.0,                                      // cadence in Hz
        DriftSpec { kinks: 2, max_slope: 0.02 },  // orientation drift
        fs,
        120.0,
        7,
    )
    .unwrap();
    let signal = preprocess_recording(&rec.recording, fs, 0.0).unwrap();
    let cfg = SwitchingConfig { ar_order: 6, seed: 7, ..Default::default() };
    let seg = infer_segmentation(&signal, &cfg).unwrap();

    // Pick the threshold between the lowest- and highest-energy state.
    let energies = state_band_energies(&seg, fs).unwrap();
    let lo = energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = energies.iter().cloned().fold(0.0f64, f64::max);
    let labels = label_states_gait(&seg, fs, (lo * hi).sqrt()).unwrap();
    assert!(labels.state_is_gait.iter().any(|&g| g));
    assert!(labels.state_is_gait.iter().any(|&g| !g));

    let segments = gait_features(&seg, &labels.mask, fs, "demo").unwrap();
    assert!(!segments.is_empty());
    // features = [band energy, dominant-peak position (Hz), peak height]
    assert!(segments.iter().all(|s| s.features[0] > 0.0));
}
// ANCHOR_END: classify

// ANCHOR: detectors
use gaitseg::detectors::{optimize_threshold, std_detector};

/// The simplest baseline: windowed standard deviation, with the decision
/// threshold picked by maximizing mean per-subject balanced accuracy.
#[test]
fn std_detector_with_learned_threshold() {
    let fs = 50.0;
    let mut scores = Vec::new();
    let mut labels = Vec::new();
    for subject in 0..3u64 {
        let rec = gen_gait_recording(
            0.3, 2.0, DriftSpec { kinks: 2, max_slope: 0.02 }, fs, 120.0, subject,
        )
        .unwrap();
        let signal = preprocess_recording(&rec.recording, fs, 0.0).unwrap();
        let det = std_detector(&signal, 1.0, 0.0).unwrap();
        // Majority ground truth per window.
        let truth: Vec<bool> = det
            .window_starts
            .iter()
            .map(|&s| {
                let w = &rec.gait_mask[s..s + det.window_length];
                2 * w.iter().filter(|&&b| b).count() >= w.len()
            })
            .collect();
        scores.push(det.scores);
        labels.push(truth);
    }
    let search = optimize_threshold(&scores, &labels).unwrap();
    assert!(search.balanced_accuracy >= 0.9);
}
// ANCHOR_END: detectors

// ANCHOR: evaluation
use gaitseg::eval::{loso_evaluate, roc_curve, SubjectScores};

/// ROC + leave-one-subject-out evaluation of per-sample scores.
#[test]
fn roc_and_loso() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    let cohort: Vec<SubjectScores> = (0..4)
        .map(|i| {
            let truth: Vec<bool> = (0..500).map(|_| rng.gen_bool(0.4)).collect();
            let scores: Vec<f64> = truth
                .iter()
                .map(|&t| if t { 1.0 } else { 0.0 } + rng.gen_range(-0.8..0.8))
                .collect();
            SubjectScores { subject_id: format!("s{i}"), scores, truth }
        })
        .collect();

    let roc = roc_curve(&cohort[0].scores, &cohort[0].truth).unwrap();
    assert!(roc.auc > 0.7);

    let report = loso_evaluate(&cohort).unwrap();
    assert_eq!(report.folds.len(), 4);
    assert!(report.mean_balanced_accuracy > 0.6);
}
// ANCHOR_END: evaluation
