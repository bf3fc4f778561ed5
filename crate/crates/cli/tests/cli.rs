use std::path::Path;
use std::process::Command;

use gaitseg::io::{write_json, Artifact};
use gaitseg::signal_prep::PreprocessedSignal;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gaitseg"))
}

fn run_ok(args: &[&str], dir: &Path) {
    let out = bin().args(args).current_dir(dir).output().unwrap();
    assert!(
        out.status.success(),
        "gaitseg {:?} failed:\n{}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_violation_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["--set", "kapa=1", "synth", "--output", "x.csv"],
        vec!["--set", "sample_rate=-2", "synth", "--output", "x.csv"],
    ] {
        let out = bin().args(&args).current_dir(dir.path()).output().unwrap();
        assert_eq!(out.status.code(), Some(3), "args {args:?}");
    }
}

#[test]
fn config_file_with_unknown_key_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"ar_order": 6, "bogus_key": 1}"#).unwrap();
    let out = bin()
        .args(["--config", cfg.to_str().unwrap(), "synth", "--output", "x.csv"])
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus_key"));
}

fn run_pipeline(dir: &Path) {
    run_ok(
        &[
            "--set", "seed=7", "synth", "--output", "rec.csv", "--truth", "truth.csv",
            "--tags", "tags.csv", "--duration", "120", "--walk-fraction", "0.3",
        ],
        dir,
    );
    run_ok(
        &["--set", "seed=7", "preprocess", "--input", "rec.csv", "--output", "sig.json"],
        dir,
    );
    run_ok(
        &[
            "--set", "seed=7", "--set", "ar_order=6", "segment", "--input", "sig.json",
            "--output", "seg.json", "--svg", "timeline.svg",
        ],
        dir,
    );
    run_ok(
        &["--set", "seed=7", "detect", "--input", "sig.json", "--method", "std",
          "--output", "det.json"],
        dir,
    );
    run_ok(
        &[
            "--set", "seed=7", "classify", "--segmentation", "seg.json", "--signal",
            "sig.json", "--tags", "tags.csv", "--output", "segs.csv", "--mask", "mask.json",
        ],
        dir,
    );
    run_ok(
        &[
            "--set", "seed=7", "evaluate", "--detection", "mask.json", "--truth",
            "truth.csv", "--signal", "sig.json", "--method", "ar-shmm", "--output",
            "m_ar.json",
        ],
        dir,
    );
    run_ok(
        &[
            "--set", "seed=7", "evaluate", "--detection", "det.json", "--truth",
            "truth.csv", "--signal", "sig.json", "--method", "std", "--output",
            "m_std.json",
        ],
        dir,
    );
    run_ok(
        &["report", "--metrics", "m_ar.json", "m_std.json", "--output-dir", "report"],
        dir,
    );
}

#[test]
fn pipeline_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    std::fs::create_dir_all(&a).unwrap();
    std::fs::create_dir_all(&b).unwrap();
    run_pipeline(&a);
    run_pipeline(&b);
    for name in [
        "rec.csv", "truth.csv", "tags.csv", "sig.json", "seg.json", "timeline.svg",
        "det.json", "segs.csv", "mask.json", "m_ar.json", "m_std.json",
        "report/report.json", "report/summary.txt", "report/roc_points.csv",
    ] {
        let fa = std::fs::read(a.join(name)).unwrap();
        let fb = std::fs::read(b.join(name)).unwrap();
        assert_eq!(fa, fb, "artifact {name} differs between identical runs");
    }
}

#[test]
fn report_summary_consistent_with_json() {
    let dir = tempfile::tempdir().unwrap();
    run_pipeline(dir.path());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report/report.json")).unwrap())
            .unwrap();
    let entries = report.as_array().unwrap();
    // Every configured method appears exactly once.
    let methods: Vec<&str> = entries
        .iter()
        .map(|e| e["method"].as_str().unwrap())
        .collect();
    assert_eq!(methods, vec!["ar-shmm", "std"]);
    let summary = std::fs::read_to_string(dir.path().join("report/summary.txt")).unwrap();
    for e in entries {
        let m = &e["metrics"];
        let se = m["sensitivity"].as_f64();
        let sp = m["specificity"].as_f64();
        let ba = m["balanced_accuracy"].as_f64().unwrap();
        if let (Some(se), Some(sp)) = (se, sp) {
            assert!((ba - 0.5 * (se + sp)).abs() < 1e-12);
        }
        // The printed percentage rounds the JSON value.
        let printed = format!("{:.1}%", 100.0 * ba);
        assert!(summary.contains(&printed), "summary missing {printed}:\n{summary}");
    }
}

#[test]
fn roc_csv_recomputes_to_stored_auc() {
    let dir = tempfile::tempdir().unwrap();
    run_pipeline(dir.path());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report/report.json")).unwrap())
            .unwrap();
    let csv = std::fs::read_to_string(dir.path().join("report/roc_points.csv")).unwrap();
    for e in report.as_array().unwrap() {
        let Some(roc) = e["roc"].as_object() else { continue };
        let stored_auc = roc["auc"].as_f64().unwrap();
        let method = e["method"].as_str().unwrap();
        // Re-integrate the trapezoid from the CSV rows alone.
        let pts: Vec<(f64, f64)> = csv
            .lines()
            .skip(1)
            .filter(|l| l.starts_with(&format!("{method},")))
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                (f[1].parse().unwrap(), f[2].parse().unwrap())
            })
            .collect();
        assert!(pts.len() >= 2, "method {method} has no ROC rows");
        let mut auc = 0.0;
        for w in pts.windows(2) {
            auc += (w[1].0 - w[0].0) * 0.5 * (w[0].1 + w[1].1);
        }
        assert!(
            (auc - stored_auc).abs() <= 1e-9,
            "method {method}: recomputed {auc} vs stored {stored_auc}"
        );
    }
}

#[test]
fn segment_stationary_signal_one_dominant_state() {
    use rand::{Rng, SeedableRng};
    let dir = tempfile::tempdir().unwrap();
    // 60 s stationary AR(1) signal written as a signal artifact.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let n = 3000;
    let mut values = vec![0.0f64; n];
    for t in 1..n {
        values[t] = 0.6 * values[t - 1] + rng.gen_range(-1.0..1.0);
    }
    let sig = PreprocessedSignal {
        values,
        sample_rate: 50.0,
        origin_time: 0.0,
    };
    write_json(
        &dir.path().join("sig.json"),
        &Artifact {
            config: serde_json::json!({}),
            seed: 0,
            payload: sig,
        },
    )
    .unwrap();
    run_ok(
        &["--set", "ar_order=4", "segment", "--input", "sig.json", "--output", "seg.json"],
        dir.path(),
    );
    let seg: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("seg.json")).unwrap())
            .unwrap();
    let runs = seg["payload"]["label_runs"].as_array().unwrap();
    let mut counts = std::collections::HashMap::new();
    for run in runs {
        let state = run[0].as_u64().unwrap();
        let len = run[1].as_u64().unwrap();
        *counts.entry(state).or_insert(0u64) += len;
    }
    let max = counts.values().max().copied().unwrap();
    assert!(
        max as f64 >= 0.99 * n as f64,
        "dominant state covers {max}/{n} samples"
    );
}

#[test]
fn recording_parse_speed_180k_rows() {
    use std::fmt::Write as _;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.csv");
    let mut text = String::with_capacity(8 * 1024 * 1024);
    text.push_str("t,ax,ay,az\n");
    for i in 0..180_000u64 {
        writeln!(text, "{:.3},{:.4},{:.4},{:.4}", i as f64 * 0.02, 0.1, 9.81, -0.05).unwrap();
    }
    std::fs::write(&path, text).unwrap();
    let start = std::time::Instant::now();
    let (rec, warnings) = gaitseg::io::load_recording_csv(&path, "s0").unwrap();
    let elapsed = start.elapsed();
    assert_eq!(rec.timestamps.len(), 180_000);
    assert!(warnings.is_empty());
    assert!(
        elapsed.as_secs_f64() < 2.0,
        "parse took {:.2} s",
        elapsed.as_secs_f64()
    );
}
