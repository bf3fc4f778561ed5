//! Metrics, ROC curves, and the leave-one-subject-out protocol.
//!
//! Evaluation is sample-level: window decisions are expanded to per-sample
//! masks first, so detectors with different window sizes stay comparable.
//! Annotation intervals are half-open `[start, end)` in seconds.

use serde::{Deserialize, Serialize};

use crate::detectors::optimize_threshold;
use crate::{Error, Result};

/// Interval label of an annotation track.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalLabel {
    Gait,
    NonGait,
}

/// Hand-labelled intervals over a recording. The gait convention is an
/// activity of at least five consecutive steps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnotationTrack {
    /// (start s, end s, label); half-open intervals.
    pub intervals: Vec<(f64, f64, IntervalLabel)>,
}

impl AnnotationTrack {
    pub fn validate(&self) -> Result<()> {
        for &(start, end, _) in &self.intervals {
            if !(start < end) || !start.is_finite() || !end.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "annotation interval [{start}, {end}) must satisfy start < end"
                )));
            }
        }
        Ok(())
    }
}

/// Confusion counts plus the derived rates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub true_positives: u64,
    pub false_positives: u64,
    pub true_negatives: u64,
    pub false_negatives: u64,
    /// TP/(TP+FN); `None` when the truth has no positives.
    pub sensitivity: Option<f64>,
    /// TN/(TN+FP); `None` when the truth has no negatives.
    pub specificity: Option<f64>,
    /// Mean of the defined rates. With one class absent this equals the
    /// defined rate and `degenerate` is set.
    pub balanced_accuracy: f64,
    /// True when the truth contained a single class.
    pub degenerate: bool,
}

impl MetricsReport {
    pub fn total(&self) -> u64 {
        self.true_positives + self.false_positives + self.true_negatives + self.false_negatives
    }
}

/// Expand an annotation track to per-sample gait labels: sample `i` is gait
/// iff `i/fs` lies in some gait interval; overlapping gait intervals union.
pub fn rasterize_annotations(track: &AnnotationTrack, fs: f64, length: usize) -> Result<Vec<bool>> {
    track.validate()?;
    let span = length as f64 / fs;
    let mut mask = vec![false; length];
    for &(start, end, label) in &track.intervals {
        if start < 0.0 || start > span || end > span + 0.5 / fs {
            return Err(Error::AnnotationOutOfRange { start, end, span });
        }
        if label != IntervalLabel::Gait {
            continue;
        }
        // First sample with i/fs >= start, first with i/fs >= end.
        let lo = (start * fs).ceil() as usize;
        let hi = ((end * fs).ceil() as usize).min(length);
        for m in mask.iter_mut().take(hi).skip(lo) {
            *m = true;
        }
    }
    Ok(mask)
}

/// Sample-level confusion metrics of a predicted mask against truth.
pub fn confusion_metrics(predicted: &[bool], truth: &[bool]) -> Result<MetricsReport> {
    if predicted.len() != truth.len() {
        return Err(Error::InvalidInput(format!(
            "confusion_metrics: predicted mask has {} samples, truth has {}",
            predicted.len(),
            truth.len()
        )));
    }
    if predicted.is_empty() {
        return Err(Error::InvalidInput("confusion_metrics: empty masks".into()));
    }
    let (mut tp, mut fp, mut tn, mut fn_) = (0u64, 0u64, 0u64, 0u64);
    for (&p, &t) in predicted.iter().zip(truth) {
        match (p, t) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, false) => tn += 1,
            (false, true) => fn_ += 1,
        }
    }
    let sensitivity = if tp + fn_ > 0 {
        Some(tp as f64 / (tp + fn_) as f64)
    } else {
        None
    };
    let specificity = if tn + fp > 0 {
        Some(tn as f64 / (tn + fp) as f64)
    } else {
        None
    };
    let (balanced_accuracy, degenerate) = match (sensitivity, specificity) {
        (Some(se), Some(sp)) => (0.5 * (se + sp), false),
        (Some(se), None) => (se, true),
        (None, Some(sp)) => (sp, true),
        (None, None) => unreachable!("non-empty masks have at least one class"),
    };
    Ok(MetricsReport {
        true_positives: tp,
        false_positives: fp,
        true_negatives: tn,
        false_negatives: fn_,
        sensitivity,
        specificity,
        balanced_accuracy,
        degenerate,
    })
}

/// One point of a ROC curve: (false-positive rate, true-positive rate).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RocPoint {
    pub fpr: f64,
    pub tpr: f64,
    pub threshold: f64,
}

/// ROC curve and its trapezoid AUC.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RocCurve {
    /// Sorted from (0,0) to (1,1).
    pub points: Vec<RocPoint>,
    pub auc: f64,
}

/// Sweep every distinct score as a decision threshold (`score >= threshold`
/// predicts gait) and integrate the trapezoid AUC.
pub fn roc_curve(scores: &[f64], truth: &[bool]) -> Result<RocCurve> {
    if scores.len() != truth.len() {
        return Err(Error::InvalidInput(format!(
            "roc_curve: {} scores but {} labels",
            scores.len(),
            truth.len()
        )));
    }
    let pos = truth.iter().filter(|&&t| t).count();
    let neg = truth.len() - pos;
    if pos == 0 || neg == 0 {
        return Err(Error::SingleClass);
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(Error::InvalidInput("roc_curve: non-finite score".into()));
    }
    // Sort by descending score; walk thresholds from above the maximum
    // score down. The initial threshold is a finite sentinel (JSON cannot
    // carry infinity): any value above every score classifies nothing gait.
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].partial_cmp(&scores[a]).unwrap());
    let top = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let mut points = vec![RocPoint {
        fpr: 0.0,
        tpr: 0.0,
        threshold: top,
    }];
    let (mut tp, mut fp) = (0u64, 0u64);
    let mut i = 0;
    while i < order.len() {
        let thr = scores[order[i]];
        // Consume every sample tied at this score.
        while i < order.len() && scores[order[i]] == thr {
            if truth[order[i]] {
                tp += 1;
            } else {
                fp += 1;
            }
            i += 1;
        }
        points.push(RocPoint {
            fpr: fp as f64 / neg as f64,
            tpr: tp as f64 / pos as f64,
            threshold: thr,
        });
    }
    let mut auc = 0.0;
    for w in points.windows(2) {
        auc += (w[1].fpr - w[0].fpr) * 0.5 * (w[0].tpr + w[1].tpr);
    }
    Ok(RocCurve { points, auc })
}

/// One subject's detector scores and per-sample ground truth for the
/// leave-one-subject-out protocol. Scores and labels are per evaluation
/// unit (window or sample, as produced upstream).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubjectScores {
    pub subject_id: String,
    pub scores: Vec<f64>,
    pub truth: Vec<bool>,
}

/// Per-fold record of a LOSO run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LosoFold {
    pub subject_id: String,
    pub threshold: f64,
    pub metrics: MetricsReport,
}

/// Summary of a LOSO run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LosoReport {
    pub folds: Vec<LosoFold>,
    /// Subjects skipped because their truth had one class.
    pub skipped_subjects: Vec<String>,
    pub mean_balanced_accuracy: f64,
    /// Population standard deviation across folds.
    pub std_balanced_accuracy: f64,
}

/// Leave-one-subject-out threshold evaluation: each fold fits a threshold on
/// the remaining subjects with [`optimize_threshold`] (maximizing mean
/// per-subject balanced accuracy) and evaluates it on the held-out subject.
/// Subjects whose truth has one class are skipped and reported. Folds are
/// ordered by subject id for determinism.
pub fn loso_evaluate(cohort: &[SubjectScores]) -> Result<LosoReport> {
    if cohort.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "loso_evaluate needs at least 2 subjects, got {}",
            cohort.len()
        )));
    }
    let mut order: Vec<usize> = (0..cohort.len()).collect();
    order.sort_by(|&a, &b| cohort[a].subject_id.cmp(&cohort[b].subject_id));

    let mut folds = Vec::new();
    let mut skipped = Vec::new();
    for &held in &order {
        let subj = &cohort[held];
        let has_pos = subj.truth.iter().any(|&t| t);
        let has_neg = subj.truth.iter().any(|&t| !t);
        if !has_pos || !has_neg {
            skipped.push(subj.subject_id.clone());
            continue;
        }
        let train_scores: Vec<Vec<f64>> = order
            .iter()
            .filter(|&&i| i != held)
            .map(|&i| cohort[i].scores.clone())
            .collect();
        let train_truth: Vec<Vec<bool>> = order
            .iter()
            .filter(|&&i| i != held)
            .map(|&i| cohort[i].truth.clone())
            .collect();
        let search = optimize_threshold(&train_scores, &train_truth)?;
        let predicted: Vec<bool> = subj.scores.iter().map(|&s| s >= search.threshold).collect();
        let metrics = confusion_metrics(&predicted, &subj.truth)?;
        folds.push(LosoFold {
            subject_id: subj.subject_id.clone(),
            threshold: search.threshold,
            metrics,
        });
    }
    if folds.is_empty() {
        return Err(Error::SingleClass);
    }
    let n = folds.len() as f64;
    let mean = folds.iter().map(|f| f.metrics.balanced_accuracy).sum::<f64>() / n;
    let var = folds
        .iter()
        .map(|f| (f.metrics.balanced_accuracy - mean).powi(2))
        .sum::<f64>()
        / n;
    Ok(LosoReport {
        folds,
        skipped_subjects: skipped,
        mean_balanced_accuracy: mean,
        std_balanced_accuracy: var.sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rasterize_basic_interval() {
        let track = AnnotationTrack {
            intervals: vec![(1.0, 2.0, IntervalLabel::Gait)],
        };
        let mask = rasterize_annotations(&track, 50.0, 150).unwrap();
        for (i, &m) in mask.iter().enumerate() {
            assert_eq!(m, (50..100).contains(&i), "sample {i}");
        }
    }

    #[test]
    fn rasterize_empty_track() {
        let track = AnnotationTrack { intervals: vec![] };
        let mask = rasterize_annotations(&track, 50.0, 100).unwrap();
        assert!(mask.iter().all(|&m| !m));
    }

    #[test]
    fn rasterize_overlap_union() {
        let track = AnnotationTrack {
            intervals: vec![
                (0.0, 1.0, IntervalLabel::Gait),
                (0.5, 1.5, IntervalLabel::Gait),
                (1.6, 1.8, IntervalLabel::NonGait),
            ],
        };
        let mask = rasterize_annotations(&track, 50.0, 100).unwrap();
        for (i, &m) in mask.iter().enumerate() {
            assert_eq!(m, i < 75, "sample {i}");
        }
    }

    #[test]
    fn rasterize_out_of_range_errors() {
        let track = AnnotationTrack {
            intervals: vec![(1.0, 3.0, IntervalLabel::Gait)],
        };
        let err = rasterize_annotations(&track, 50.0, 100).unwrap_err();
        assert!(matches!(err, Error::AnnotationOutOfRange { .. }));
    }

    #[test]
    fn confusion_perfect_and_inverted() {
        let truth = vec![true, true, false, false, true];
        let m = confusion_metrics(&truth, &truth).unwrap();
        assert_eq!(m.sensitivity, Some(1.0));
        assert_eq!(m.specificity, Some(1.0));
        assert_eq!(m.balanced_accuracy, 1.0);
        assert_eq!(m.total(), 5);
        let inv: Vec<bool> = truth.iter().map(|&t| !t).collect();
        let m = confusion_metrics(&inv, &truth).unwrap();
        assert_eq!(m.sensitivity, Some(0.0));
        assert_eq!(m.specificity, Some(0.0));
        assert_eq!(m.balanced_accuracy, 0.0);
    }

    #[test]
    fn confusion_arithmetic_mean() {
        // 5 positives with 4 hits (0.8), 5 negatives with 3 hits (0.6).
        let truth = vec![true, true, true, true, true, false, false, false, false, false];
        let pred = vec![true, true, true, true, false, false, false, false, true, true];
        let m = confusion_metrics(&pred, &truth).unwrap();
        assert_eq!(m.sensitivity, Some(0.8));
        assert_eq!(m.specificity, Some(0.6));
        assert!((m.balanced_accuracy - 0.7).abs() < 1e-12);
        assert!(!m.degenerate);
    }

    #[test]
    fn confusion_single_class_truth_flagged() {
        let truth = vec![true, true, true];
        let pred = vec![true, false, true];
        let m = confusion_metrics(&pred, &truth).unwrap();
        assert!(m.degenerate);
        assert_eq!(m.specificity, None);
        assert!((m.balanced_accuracy - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn roc_perfectly_ranked() {
        let scores = vec![0.9, 0.8, 0.7, 0.2, 0.1];
        let truth = vec![true, true, true, false, false];
        let roc = roc_curve(&scores, &truth).unwrap();
        assert!((roc.auc - 1.0).abs() < 1e-12);
    }

    #[test]
    fn roc_endpoints_and_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let scores: Vec<f64> = (0..100).map(|_| rng.gen_range(0.0..1.0)).collect();
        let truth: Vec<bool> = (0..100).map(|_| rng.gen_bool(0.4)).collect();
        let roc = roc_curve(&scores, &truth).unwrap();
        let first = roc.points.first().unwrap();
        let last = roc.points.last().unwrap();
        assert_eq!((first.fpr, first.tpr), (0.0, 0.0));
        assert_eq!((last.fpr, last.tpr), (1.0, 1.0));
        for w in roc.points.windows(2) {
            assert!(w[1].fpr >= w[0].fpr);
            assert!(w[1].tpr >= w[0].tpr);
        }
    }

    #[test]
    fn roc_auc_matches_pairwise_probability() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        // Discrete scores force plenty of ties.
        let scores: Vec<f64> = (0..200).map(|_| rng.gen_range(0..10) as f64 / 10.0).collect();
        let truth: Vec<bool> = (0..200).map(|_| rng.gen_bool(0.5)).collect();
        let roc = roc_curve(&scores, &truth).unwrap();
        let mut wins = 0.0;
        let mut pairs = 0.0;
        for i in 0..scores.len() {
            if !truth[i] {
                continue;
            }
            for j in 0..scores.len() {
                if truth[j] {
                    continue;
                }
                pairs += 1.0;
                if scores[i] > scores[j] {
                    wins += 1.0;
                } else if scores[i] == scores[j] {
                    wins += 0.5;
                }
            }
        }
        assert!((roc.auc - wins / pairs).abs() < 1e-12);
    }

    #[test]
    fn roc_single_class_errors() {
        let err = roc_curve(&[0.1, 0.2], &[true, true]).unwrap_err();
        assert!(matches!(err, Error::SingleClass));
    }

    #[test]
    fn roc_invariant_to_monotone_transform() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let scores: Vec<f64> = (0..150).map(|_| rng.gen_range(0.0..1.0)).collect();
        let truth: Vec<bool> = (0..150).map(|_| rng.gen_bool(0.5)).collect();
        let a = roc_curve(&scores, &truth).unwrap();
        let transformed: Vec<f64> = scores.iter().map(|&s| (3.0 * s).exp()).collect();
        let b = roc_curve(&transformed, &truth).unwrap();
        assert!((a.auc - b.auc).abs() < 1e-12);
        assert_eq!(a.points.len(), b.points.len());
    }

    #[test]
    fn metrics_prevalence_independent() {
        let truth = vec![true, true, false, false, false];
        let pred = vec![true, false, false, true, false];
        let base = confusion_metrics(&pred, &truth).unwrap();
        // Duplicate every non-gait sample.
        let mut truth2 = Vec::new();
        let mut pred2 = Vec::new();
        for (&t, &p) in truth.iter().zip(&pred) {
            truth2.push(t);
            pred2.push(p);
            if !t {
                truth2.push(t);
                pred2.push(p);
            }
        }
        let doubled = confusion_metrics(&pred2, &truth2).unwrap();
        assert_eq!(base.sensitivity, doubled.sensitivity);
        assert_eq!(base.specificity, doubled.specificity);
    }

    fn toy_subject(id: &str, rng: &mut ChaCha8Rng) -> SubjectScores {
        let n = 40;
        let truth: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let scores: Vec<f64> = truth
            .iter()
            .map(|&t| if t { rng.gen_range(0.5..1.0) } else { rng.gen_range(0.0..0.6) })
            .collect();
        SubjectScores {
            subject_id: id.to_string(),
            scores,
            truth,
        }
    }

    #[test]
    fn loso_counts_folds_and_orders_by_subject() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let cohort: Vec<SubjectScores> = ["s3", "s1", "s2"]
            .iter()
            .map(|id| toy_subject(id, &mut rng))
            .collect();
        let report = loso_evaluate(&cohort).unwrap();
        let ids: Vec<&str> = report.folds.iter().map(|f| f.subject_id.as_str()).collect();
        assert_eq!(ids, vec!["s1", "s2", "s3"]);
    }

    #[test]
    fn loso_identical_subjects_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let one = toy_subject("a", &mut rng);
        let cohort: Vec<SubjectScores> = (0..4)
            .map(|i| SubjectScores {
                subject_id: format!("s{i}"),
                ..one.clone()
            })
            .collect();
        let report = loso_evaluate(&cohort).unwrap();
        let t0 = report.folds[0].threshold;
        for f in &report.folds {
            assert_eq!(f.threshold, t0);
            assert_eq!(f.metrics, report.folds[0].metrics);
        }
        assert_eq!(report.std_balanced_accuracy, 0.0);
    }

    #[test]
    fn loso_held_out_subject_unused_in_fitting() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut cohort: Vec<SubjectScores> =
            (0..3).map(|i| toy_subject(&format!("s{i}"), &mut rng)).collect();
        let report_a = loso_evaluate(&cohort).unwrap();
        // Corrupt one subject's scores wildly; every other fold's threshold
        // changes only through that subject's training contribution, so the
        // fold holding it out must be byte-identical in threshold... and the
        // direct check: replace held-out data, rerun, compare that fold's
        // threshold.
        let original = cohort[2].clone();
        cohort[2].scores = cohort[2].scores.iter().map(|&s| s + 100.0).collect();
        let report_b = loso_evaluate(&cohort).unwrap();
        let fold_a = report_a.folds.iter().find(|f| f.subject_id == "s2").unwrap();
        let fold_b = report_b.folds.iter().find(|f| f.subject_id == "s2").unwrap();
        assert_eq!(fold_a.threshold, fold_b.threshold);
        cohort[2] = original;
    }

    #[test]
    fn loso_skips_single_class_subjects() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut cohort: Vec<SubjectScores> =
            (0..3).map(|i| toy_subject(&format!("s{i}"), &mut rng)).collect();
        cohort[1].truth = vec![true; cohort[1].truth.len()];
        let report = loso_evaluate(&cohort).unwrap();
        assert_eq!(report.folds.len(), 2);
        assert_eq!(report.skipped_subjects, vec!["s1".to_string()]);
    }

    #[test]
    fn loso_invariant_to_subject_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let cohort: Vec<SubjectScores> =
            (0..4).map(|i| toy_subject(&format!("s{i}"), &mut rng)).collect();
        let mut shuffled = cohort.clone();
        shuffled.reverse();
        let a = loso_evaluate(&cohort).unwrap();
        let b = loso_evaluate(&shuffled).unwrap();
        assert_eq!(a, b);
    }
}
