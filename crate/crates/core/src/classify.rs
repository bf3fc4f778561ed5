//! Turn a segmentation into gait/non-gait labels and medication-state
//! predictions via AR spectral features.
//!
//! States are labelled gait by thresholding their AR-spectrum band energy on
//! [0.5, 10] Hz. Each contiguous run of gait samples becomes a
//! [`GaitSegment`] carrying the owning state's spectral features (band
//! energy, dominant-peak position and height), which are z-scored per
//! subject and fed to a small logistic classifier.

use serde::{Deserialize, Serialize};

use crate::ar::{ar_psd, psd_features, PsdFeatures};
use crate::switching::SegmentationResult;
use crate::{Error, Result};

/// Spectral band used for gait labelling and features, in Hz.
pub const GAIT_BAND: (f64, f64) = (0.5, 10.0);

/// One contiguous gait segment with its state's spectral features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaitSegment {
    /// Half-open sample range.
    pub start: usize,
    pub end: usize,
    pub state_id: usize,
    /// `[band_energy, peak_position_hz, peak_height]`.
    pub features: [f64; 3],
    pub subject_id: String,
    /// Medication phase when known: "before", "after", or empty.
    pub phase: String,
}

/// Linear logistic classifier predicting the probability of the
/// "after medication" phase.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticModel {
    pub weights: Vec<f64>,
    pub bias: f64,
}

/// Per-state gait labels plus the expanded per-sample mask.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaitLabels {
    pub state_is_gait: Vec<bool>,
    pub state_band_energy: Vec<f64>,
    pub mask: Vec<bool>,
}

/// Label each state gait iff its AR-spectrum energy on [`GAIT_BAND`] is at
/// least `energy_threshold`; the mask is the union of samples of gait
/// states.
pub fn label_states_gait(
    seg: &SegmentationResult,
    fs: f64,
    energy_threshold: f64,
) -> Result<GaitLabels> {
    let energies = state_band_energies(seg, fs)?;
    let state_is_gait: Vec<bool> = energies.iter().map(|&e| e >= energy_threshold).collect();
    let mask: Vec<bool> = seg.labels.labels.iter().map(|&z| state_is_gait[z]).collect();
    Ok(GaitLabels {
        state_is_gait,
        state_band_energy: energies,
        mask,
    })
}

/// Band energy of every state's AR spectrum on [`GAIT_BAND`].
pub fn state_band_energies(seg: &SegmentationResult, fs: f64) -> Result<Vec<f64>> {
    state_features(seg, fs).map(|f| f.into_iter().map(|p| p.band_energy).collect())
}

/// Full spectral features of every state on [`GAIT_BAND`].
pub fn state_features(seg: &SegmentationResult, fs: f64) -> Result<Vec<PsdFeatures>> {
    seg.states
        .iter()
        .map(|p| {
            let psd = ar_psd(p, fs, 512)?;
            psd_features(&psd, GAIT_BAND.0, GAIT_BAND.1)
        })
        .collect()
}

/// Cut the gait mask into contiguous segments and attach each one's owning
/// state features. Phase labels are left empty; callers with session tags
/// fill them in.
pub fn gait_features(
    seg: &SegmentationResult,
    mask: &[bool],
    fs: f64,
    subject_id: &str,
) -> Result<Vec<GaitSegment>> {
    if mask.len() != seg.labels.labels.len() {
        return Err(Error::InvalidInput(format!(
            "gait_features: mask has {} samples, labels {}",
            mask.len(),
            seg.labels.labels.len()
        )));
    }
    let feats = state_features(seg, fs)?;
    let mut out = Vec::new();
    let mut t = 0;
    while t < mask.len() {
        if !mask[t] {
            t += 1;
            continue;
        }
        let start = t;
        while t < mask.len() && mask[t] {
            t += 1;
        }
        // The dominant state of the run (runs usually hold one state; after
        // short-run merging a run can straddle several).
        let mut counts = vec![0usize; seg.states.len()];
        for &z in &seg.labels.labels[start..t] {
            counts[z] += 1;
        }
        let state_id = counts
            .iter()
            .enumerate()
            .max_by_key(|&(_, &c)| c)
            .map(|(i, _)| i)
            .unwrap();
        let f = &feats[state_id];
        out.push(GaitSegment {
            start,
            end: t,
            state_id,
            features: [f.band_energy, f.peak_position_hz, f.peak_height],
            subject_id: subject_id.to_string(),
            phase: String::new(),
        });
    }
    Ok(out)
}

/// Z-score each feature within each subject: `(x − mean)/std` over that
/// subject's segments. Constant features (or single-segment subjects) map
/// to 0; affected subjects are returned for reporting.
pub fn zscore_per_subject(segments: &mut [GaitSegment]) -> Vec<String> {
    let mut subjects: Vec<String> = segments.iter().map(|s| s.subject_id.clone()).collect();
    subjects.sort();
    subjects.dedup();
    let mut warned = Vec::new();
    for subj in &subjects {
        let idx: Vec<usize> = (0..segments.len())
            .filter(|&i| &segments[i].subject_id == subj)
            .collect();
        if idx.len() < 2 {
            for &i in &idx {
                segments[i].features = [0.0; 3];
            }
            warned.push(subj.clone());
            continue;
        }
        let n = idx.len() as f64;
        for f in 0..3 {
            let mean = idx.iter().map(|&i| segments[i].features[f]).sum::<f64>() / n;
            let var = idx
                .iter()
                .map(|&i| (segments[i].features[f] - mean).powi(2))
                .sum::<f64>()
                / n;
            let std = var.sqrt();
            for &i in &idx {
                segments[i].features[f] = if std > 0.0 {
                    (segments[i].features[f] - mean) / std
                } else {
                    0.0
                };
            }
        }
    }
    warned
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// Which features feed the classifier. The interpretable default is one
/// feature at a time; `All` pools the three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeatureSelection {
    BandEnergy,
    PeakPosition,
    PeakHeight,
    All,
}

impl FeatureSelection {
    pub fn extract(&self, features: &[f64; 3]) -> Vec<f64> {
        match self {
            FeatureSelection::BandEnergy => vec![features[0]],
            FeatureSelection::PeakPosition => vec![features[1]],
            FeatureSelection::PeakHeight => vec![features[2]],
            FeatureSelection::All => features.to_vec(),
        }
    }
}

/// Train an L2-regularized logistic classifier (label: phase == "after") by
/// gradient descent to gradient norm ≤ 1e-6. The loss is the mean logistic
/// loss plus `0.5·l2_weight·‖w‖²` (bias unpenalized).
pub fn logistic_train(
    segments: &[GaitSegment],
    selection: FeatureSelection,
    l2_weight: f64,
) -> Result<LogisticModel> {
    let data: Vec<(Vec<f64>, f64)> = segments
        .iter()
        .filter(|s| s.phase == "before" || s.phase == "after")
        .map(|s| (selection.extract(&s.features), if s.phase == "after" { 1.0 } else { 0.0 }))
        .collect();
    if data.is_empty() {
        return Err(Error::InvalidInput("logistic_train: no labelled segments".into()));
    }
    let n_pos = data.iter().filter(|(_, y)| *y == 1.0).count();
    if n_pos == 0 || n_pos == data.len() {
        return Err(Error::SingleClass);
    }
    let dim = data[0].0.len();
    let n = data.len() as f64;
    let mut w = vec![0.0f64; dim];
    let mut b = 0.0f64;
    // Lipschitz bound of the mean logistic loss gradient: ¼·max row norm²
    // (plus the ridge term); a constant step of 1/L converges.
    let max_sq = data
        .iter()
        .map(|(x, _)| x.iter().map(|v| v * v).sum::<f64>() + 1.0)
        .fold(0.0, f64::max);
    let step = 1.0 / (0.25 * max_sq + l2_weight);
    let max_iter = 2_000_000;
    for _ in 0..max_iter {
        let mut gw = vec![0.0f64; dim];
        let mut gb = 0.0f64;
        for (x, y) in &data {
            let z = b + w.iter().zip(x).map(|(wi, xi)| wi * xi).sum::<f64>();
            let err = sigmoid(z) - y;
            for (g, xi) in gw.iter_mut().zip(x) {
                *g += err * xi;
            }
            gb += err;
        }
        for (g, wi) in gw.iter_mut().zip(&w) {
            *g = *g / n + l2_weight * wi;
        }
        gb /= n;
        let gnorm = (gw.iter().map(|g| g * g).sum::<f64>() + gb * gb).sqrt();
        if gnorm <= 1e-6 {
            return Ok(LogisticModel { weights: w, bias: b });
        }
        for (wi, g) in w.iter_mut().zip(&gw) {
            *wi -= step * g;
        }
        b -= step * gb;
    }
    // Separable data without regularization diverges slowly; return the
    // current iterate rather than spinning forever.
    Ok(LogisticModel { weights: w, bias: b })
}

/// Probability that the segment is "after medication".
pub fn logistic_predict(
    model: &LogisticModel,
    segment: &GaitSegment,
    selection: FeatureSelection,
) -> Result<f64> {
    let x = selection.extract(&segment.features);
    if x.len() != model.weights.len() {
        return Err(Error::FeatureMismatch {
            expected: model.weights.len(),
            got: x.len(),
        });
    }
    let z = model.bias + model.weights.iter().zip(&x).map(|(w, v)| w * v).sum::<f64>();
    Ok(sigmoid(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::ArdConfig;
    use crate::signal_prep::PreprocessedSignal;
    use crate::switching::{infer_segmentation, SwitchingConfig};
    use crate::synth::{gen_piecewise_ar, resonant_ar2, GeneratorKind, PhaseTag, RegimeLabel, RegimeSpec};

    fn two_regime_seg() -> (PreprocessedSignal, SegmentationResult, Vec<usize>) {
        let fs = 50.0;
        let specs = [
            RegimeSpec {
                duration_s: 30.0,
                kind: GeneratorKind::Ar {
                    coeffs: vec![0.3],
                    noise_variance: 0.002,
                    mean: 0.0,
                },
                label: RegimeLabel::NonGait,
                phase: PhaseTag::None,
            },
            RegimeSpec {
                duration_s: 30.0,
                kind: GeneratorKind::Ar {
                    coeffs: resonant_ar2(2.0, 0.97, fs),
                    noise_variance: 1.0,
                    mean: 0.0,
                },
                label: RegimeLabel::Gait,
                phase: PhaseTag::None,
            },
        ];
        let (s, truth) = gen_piecewise_ar(&specs, fs, 21).unwrap();
        let cfg = SwitchingConfig {
            ar_order: 6,
            seed: 4,
            ..Default::default()
        };
        let seg = infer_segmentation(&s, &cfg).unwrap();
        (s, seg, truth)
    }

    #[test]
    fn quiet_state_below_energetic_state() {
        let (s, seg, truth) = two_regime_seg();
        let energies = state_band_energies(&seg, s.sample_rate).unwrap();
        // The state owning the rest half must have far lower band energy
        // than the one owning the gait half.
        let rest_state = seg.labels.labels[truth.iter().position(|&t| t == 0).unwrap() + 100];
        let gait_state =
            seg.labels.labels[truth.iter().position(|&t| t == 1).unwrap() + 100];
        assert!(energies[rest_state] * 10.0 < energies[gait_state]);
        // Any threshold between the two separates them.
        let thr = (energies[rest_state] * energies[gait_state]).sqrt();
        let labels = label_states_gait(&seg, s.sample_rate, thr).unwrap();
        assert!(!labels.state_is_gait[rest_state]);
        assert!(labels.state_is_gait[gait_state]);
        // Mask is the per-sample expansion.
        for (t, &z) in seg.labels.labels.iter().enumerate() {
            assert_eq!(labels.mask[t], labels.state_is_gait[z]);
        }
    }

    #[test]
    fn gait_mask_monotone_in_threshold() {
        let (s, seg, _) = two_regime_seg();
        let energies = state_band_energies(&seg, s.sample_rate).unwrap();
        let mut sorted = energies.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let lo = label_states_gait(&seg, s.sample_rate, sorted[0] * 0.5).unwrap();
        let hi = label_states_gait(&seg, s.sample_rate, sorted[sorted.len() - 1] * 2.0).unwrap();
        for (a, b) in hi.mask.iter().zip(&lo.mask) {
            assert!(!a | b, "higher threshold must give a subset mask");
        }
    }

    #[test]
    fn gait_features_empty_when_no_gait() {
        let (s, seg, _) = two_regime_seg();
        let mask = vec![false; seg.labels.labels.len()];
        let got = gait_features(&seg, &mask, s.sample_rate, "s0").unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn gait_features_per_state_and_compositional() {
        let (s, seg, _) = two_regime_seg();
        let energies = state_band_energies(&seg, s.sample_rate).unwrap();
        let max_e = energies.iter().cloned().fold(0.0, f64::max);
        let min_e = energies.iter().cloned().fold(f64::INFINITY, f64::min);
        let labels = label_states_gait(&seg, s.sample_rate, (min_e * max_e).sqrt()).unwrap();
        let segs = gait_features(&seg, &labels.mask, s.sample_rate, "s0").unwrap();
        assert!(!segs.is_empty());
        let feats = state_features(&seg, s.sample_rate).unwrap();
        for g in &segs {
            let f = &feats[g.state_id];
            assert_eq!(g.features, [f.band_energy, f.peak_position_hz, f.peak_height]);
            assert!(g.end > g.start);
        }
        // Two runs of one state share features.
        for a in &segs {
            for b in &segs {
                if a.state_id == b.state_id {
                    assert_eq!(a.features, b.features);
                }
            }
        }
    }

    fn seg_with(subject: &str, phase: &str, features: [f64; 3]) -> GaitSegment {
        GaitSegment {
            start: 0,
            end: 1,
            state_id: 0,
            features,
            subject_id: subject.to_string(),
            phase: phase.to_string(),
        }
    }

    #[test]
    fn zscore_normalizes_each_subject() {
        let mut segs = vec![
            seg_with("a", "", [1.0, 10.0, 5.0]),
            seg_with("a", "", [3.0, 20.0, 5.0]),
            seg_with("a", "", [5.0, 30.0, 5.0]),
            seg_with("b", "", [100.0, 1.0, 2.0]),
            seg_with("b", "", [200.0, 3.0, 4.0]),
        ];
        let warned = zscore_per_subject(&mut segs);
        assert!(warned.is_empty());
        for subj in ["a", "b"] {
            let idx: Vec<usize> = (0..segs.len())
                .filter(|&i| segs[i].subject_id == subj)
                .collect();
            let n = idx.len() as f64;
            for f in 0..3 {
                let mean = idx.iter().map(|&i| segs[i].features[f]).sum::<f64>() / n;
                assert!(mean.abs() <= 1e-9, "{subj} feature {f} mean {mean}");
                let var = idx
                    .iter()
                    .map(|&i| segs[i].features[f].powi(2))
                    .sum::<f64>()
                    / n;
                // Constant features map to zero variance; others to 1.
                assert!(var.abs() < 1e-9 || (var - 1.0).abs() < 1e-9);
            }
        }
        // Constant feature (peak_height of subject a) became all zeros.
        assert!(segs[0].features[2] == 0.0 && segs[1].features[2] == 0.0);
    }

    #[test]
    fn zscore_matches_direct_computation() {
        let raw = [2.0, 4.0, 9.0];
        let mut segs: Vec<GaitSegment> =
            raw.iter().map(|&v| seg_with("a", "", [v, 0.0, 0.0])).collect();
        zscore_per_subject(&mut segs);
        let mean = raw.iter().sum::<f64>() / 3.0;
        let std = (raw.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / 3.0).sqrt();
        for (s, &v) in segs.iter().zip(&raw) {
            assert!((s.features[0] - (v - mean) / std).abs() < 1e-12);
        }
    }

    #[test]
    fn zscore_single_segment_subject_warned() {
        let mut segs = vec![seg_with("solo", "", [7.0, 8.0, 9.0])];
        let warned = zscore_per_subject(&mut segs);
        assert_eq!(warned, vec!["solo".to_string()]);
        assert_eq!(segs[0].features, [0.0; 3]);
    }

    #[test]
    fn logistic_separable_perfect_accuracy() {
        let segs = vec![
            seg_with("a", "before", [-2.0, 0.0, 0.0]),
            seg_with("a", "before", [-1.0, 0.0, 0.0]),
            seg_with("a", "after", [1.0, 0.0, 0.0]),
            seg_with("a", "after", [2.0, 0.0, 0.0]),
        ];
        let model = logistic_train(&segs, FeatureSelection::BandEnergy, 0.01).unwrap();
        for s in &segs {
            let p = logistic_predict(&model, s, FeatureSelection::BandEnergy).unwrap();
            assert_eq!(p >= 0.5, s.phase == "after");
        }
    }

    #[test]
    fn logistic_gradient_matches_finite_differences() {
        let segs = vec![
            seg_with("a", "before", [-1.0, 0.5, 0.0]),
            seg_with("a", "before", [0.2, -0.3, 0.0]),
            seg_with("a", "after", [0.8, 0.1, 0.0]),
            seg_with("a", "after", [1.5, -0.6, 0.0]),
            seg_with("a", "before", [-0.4, 0.9, 0.0]),
        ];
        let l2 = 0.1;
        let model = logistic_train(&segs, FeatureSelection::All, l2).unwrap();
        // Independent loss evaluation for finite differences.
        let loss = |w: &[f64], b: f64| -> f64 {
            let mut total = 0.0;
            for s in &segs {
                let y = if s.phase == "after" { 1.0 } else { 0.0 };
                let z = b + w.iter().zip(&s.features).map(|(wi, xi)| wi * xi).sum::<f64>();
                total += (1.0 + z.exp()).ln() - y * z;
            }
            total / segs.len() as f64 + 0.5 * l2 * w.iter().map(|v| v * v).sum::<f64>()
        };
        let h = 1e-6;
        for j in 0..3 {
            let mut wp = model.weights.clone();
            let mut wm = model.weights.clone();
            wp[j] += h;
            wm[j] -= h;
            let g = (loss(&wp, model.bias) - loss(&wm, model.bias)) / (2.0 * h);
            assert!(g.abs() <= 1e-4, "weight {j} gradient {g}");
        }
        let gb = (loss(&model.weights, model.bias + h) - loss(&model.weights, model.bias - h))
            / (2.0 * h);
        assert!(gb.abs() <= 1e-4, "bias gradient {gb}");
    }

    #[test]
    fn logistic_zero_model_predicts_half() {
        let model = LogisticModel {
            weights: vec![0.0],
            bias: 0.0,
        };
        let s = seg_with("a", "", [3.7, 0.0, 0.0]);
        let p = logistic_predict(&model, &s, FeatureSelection::BandEnergy).unwrap();
        assert_eq!(p, 0.5);
    }

    #[test]
    fn logistic_monotone_in_positive_weight_feature() {
        let model = LogisticModel {
            weights: vec![2.0],
            bias: -0.3,
        };
        let mut last = 0.0;
        for v in [-2.0, -1.0, 0.0, 1.0, 2.0] {
            let s = seg_with("a", "", [v, 0.0, 0.0]);
            let p = logistic_predict(&model, &s, FeatureSelection::BandEnergy).unwrap();
            assert!(p > last);
            last = p;
        }
    }

    #[test]
    fn logistic_single_class_errors() {
        let segs = vec![
            seg_with("a", "after", [1.0, 0.0, 0.0]),
            seg_with("a", "after", [2.0, 0.0, 0.0]),
        ];
        assert!(matches!(
            logistic_train(&segs, FeatureSelection::BandEnergy, 0.01),
            Err(Error::SingleClass)
        ));
    }

    #[test]
    fn logistic_feature_mismatch_errors() {
        let model = LogisticModel {
            weights: vec![1.0, 2.0],
            bias: 0.0,
        };
        let s = seg_with("a", "", [1.0, 0.0, 0.0]);
        assert!(matches!(
            logistic_predict(&model, &s, FeatureSelection::BandEnergy),
            Err(Error::FeatureMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn predictions_invariant_to_subject_affine_rescale() {
        // Raw features of two subjects; subject b is an affine transform of
        // its own scale. After z-scoring, decisions must be identical to a
        // run where b's raw features are rescaled.
        let build = |scale: f64, shift: f64| -> Vec<GaitSegment> {
            vec![
                seg_with("a", "before", [1.0, 0.0, 0.0]),
                seg_with("a", "after", [3.0, 0.0, 0.0]),
                seg_with("a", "before", [1.5, 0.0, 0.0]),
                seg_with("a", "after", [2.5, 0.0, 0.0]),
                seg_with("b", "before", [scale * 1.2 + shift, 0.0, 0.0]),
                seg_with("b", "after", [scale * 3.1 + shift, 0.0, 0.0]),
                seg_with("b", "before", [scale * 0.9 + shift, 0.0, 0.0]),
                seg_with("b", "after", [scale * 2.8 + shift, 0.0, 0.0]),
            ]
        };
        let mut base = build(1.0, 0.0);
        let mut scaled = build(7.0, -4.0);
        zscore_per_subject(&mut base);
        zscore_per_subject(&mut scaled);
        let m1 = logistic_train(&base, FeatureSelection::BandEnergy, 0.05).unwrap();
        let m2 = logistic_train(&scaled, FeatureSelection::BandEnergy, 0.05).unwrap();
        for (s1, s2) in base.iter().zip(&scaled) {
            let p1 = logistic_predict(&m1, s1, FeatureSelection::BandEnergy).unwrap();
            let p2 = logistic_predict(&m2, s2, FeatureSelection::BandEnergy).unwrap();
            assert_eq!(p1 >= 0.5, p2 >= 0.5);
            assert!((p1 - p2).abs() < 1e-6);
        }
    }

    #[test]
    fn threshold_protocol_separates_states() {
        // Ten tiny "subjects": per-state energies from segmentations of
        // rest/gait signals, thresholded via the optimizer.
        let mut scores = Vec::new();
        let mut labels = Vec::new();
        for subj in 0..4u64 {
            let fs = 50.0;
            let specs = [
                RegimeSpec {
                    duration_s: 25.0,
                    kind: GeneratorKind::Ar {
                        coeffs: vec![0.3],
                        noise_variance: 0.002,
                        mean: 0.0,
                    },
                    label: RegimeLabel::NonGait,
                    phase: PhaseTag::None,
                },
                RegimeSpec {
                    duration_s: 25.0,
                    kind: GeneratorKind::Ar {
                        coeffs: resonant_ar2(2.0, 0.97, fs),
                        noise_variance: 1.0,
                        mean: 0.0,
                    },
                    label: RegimeLabel::Gait,
                    phase: PhaseTag::None,
                },
            ];
            let (s, truth) = gen_piecewise_ar(&specs, fs, 100 + subj).unwrap();
            let cfg = SwitchingConfig {
                ar_order: 6,
                seed: subj,
                ard: ArdConfig::default(),
                ..Default::default()
            };
            let seg = infer_segmentation(&s, &cfg).unwrap();
            let energies = state_band_energies(&seg, fs).unwrap();
            // Label each state by its majority ground truth.
            let mut subj_scores = Vec::new();
            let mut subj_labels = Vec::new();
            for (k, &e) in energies.iter().enumerate() {
                let mut gait_votes = 0usize;
                let mut total = 0usize;
                for (&z, &t) in seg.labels.labels.iter().zip(&truth) {
                    if z == k {
                        total += 1;
                        gait_votes += t;
                    }
                }
                if total > 0 {
                    subj_scores.push(e.ln());
                    subj_labels.push(gait_votes * 2 > total);
                }
            }
            scores.push(subj_scores);
            labels.push(subj_labels);
        }
        let r = optimize_threshold_wrapper(&scores, &labels);
        assert!(r >= 0.95, "balanced accuracy {r}");
    }

    fn optimize_threshold_wrapper(scores: &[Vec<f64>], labels: &[Vec<bool>]) -> f64 {
        crate::detectors::optimize_threshold(scores, labels)
            .map(|r| r.balanced_accuracy)
            .unwrap_or(0.0)
    }
}
