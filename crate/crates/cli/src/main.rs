//! Batch front-end for the gait segmentation pipeline.
//!
//! Subcommands: synth, preprocess, segment, detect, classify, evaluate,
//! report. Exit codes: 0 success, 2 usage error, 3 config violation,
//! 1 any other failure. Artifacts embed the full config echo and seed;
//! identical inputs, config, and seed give byte-identical outputs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use gaitseg::ar::ArParams;
use gaitseg::classify::{gait_features, label_states_gait, state_band_energies, GaitSegment};
use gaitseg::config::PipelineConfig;
use gaitseg::detectors::{
    cwt_detector, default_cwt_freqs, default_nasc_lag_range, nasc_detector, std_detector,
    stft_detector, BinaryDetection,
};
use gaitseg::eval::{
    confusion_metrics, rasterize_annotations, roc_curve, AnnotationTrack, IntervalLabel,
    MetricsReport, RocCurve,
};
use gaitseg::io::{
    load_annotation_csv, load_recording_csv, load_session_tag_csv, read_json, rle_decode,
    rle_decode_bool, rle_encode, rle_encode_bool, write_annotation_csv, write_json,
    write_recording_csv, Artifact,
};
use gaitseg::signal_prep::{preprocess_recording, PreprocessedSignal, SessionTag};
use gaitseg::switching::{infer_segmentation, Segment, TransitionModel};
use gaitseg::synth::{gen_gait_recording_scaled, DriftSpec};
use gaitseg::Error;

#[derive(Parser)]
#[command(name = "gaitseg", version, about = "Unsupervised gait segmentation pipeline")]
struct Cli {
    /// JSON config file; defaults apply when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Override a config key, e.g. --set kappa=25. Repeatable.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic labelled recording.
    Synth {
        /// Output recording CSV.
        #[arg(long)]
        output: PathBuf,
        /// Ground-truth annotation CSV (start,end,label).
        #[arg(long)]
        truth: Option<PathBuf>,
        /// Session-tag CSV marking the medication phases.
        #[arg(long)]
        tags: Option<PathBuf>,
        /// Recording duration in seconds.
        #[arg(long, default_value_t = 600.0)]
        duration: f64,
        /// Fraction of time spent walking.
        #[arg(long, default_value_t = 0.2)]
        walk_fraction: f64,
        /// Gait amplitude scale after the phase switch (energy contrast).
        #[arg(long, default_value_t = 1.0)]
        amp_after: f64,
    },
    /// Resample, detrend, and reduce a raw recording to magnitude.
    Preprocess {
        /// Input recording CSV.
        #[arg(long)]
        input: PathBuf,
        /// Subject identifier stored in artifacts.
        #[arg(long, default_value = "s0")]
        subject: String,
        /// Output signal JSON.
        #[arg(long)]
        output: PathBuf,
    },
    /// Fit the switching-AR model to a preprocessed signal.
    Segment {
        /// Input signal JSON.
        #[arg(long)]
        input: PathBuf,
        /// Output segmentation JSON.
        #[arg(long)]
        output: PathBuf,
        /// Optional SVG timeline of the state bands.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run one of the windowed baseline detectors.
    Detect {
        /// Input signal JSON.
        #[arg(long)]
        input: PathBuf,
        /// Detector: std, stft, nasc, or cwt.
        #[arg(long)]
        method: String,
        /// Output detection JSON.
        #[arg(long)]
        output: PathBuf,
    },
    /// Label states gait/non-gait and emit per-segment features.
    Classify {
        /// Segmentation JSON from `segment`.
        #[arg(long)]
        segmentation: PathBuf,
        /// Signal JSON the segmentation was fit on.
        #[arg(long)]
        signal: PathBuf,
        /// Band-energy threshold; 0 picks the geometric mid of the state
        /// energy range.
        #[arg(long, default_value_t = 0.0)]
        energy_threshold: f64,
        /// Session-tag CSV assigning medication phases.
        #[arg(long)]
        tags: Option<PathBuf>,
        /// Output segment-features CSV.
        #[arg(long)]
        output: PathBuf,
        /// Optional gait-mask JSON (for evaluation).
        #[arg(long)]
        mask: Option<PathBuf>,
    },
    /// Score a detection or gait mask against annotations.
    Evaluate {
        /// Detection or mask JSON.
        #[arg(long)]
        detection: PathBuf,
        /// Annotation CSV ground truth.
        #[arg(long)]
        truth: PathBuf,
        /// Signal JSON (for the sample grid).
        #[arg(long)]
        signal: PathBuf,
        /// Method name recorded in the report.
        #[arg(long, default_value = "detector")]
        method: String,
        /// Output metrics JSON.
        #[arg(long)]
        output: PathBuf,
    },
    /// Merge metrics files into a summary table, JSON, and ROC CSV.
    Report {
        /// Metrics JSON files from `evaluate`.
        #[arg(long, num_args = 1..)]
        metrics: Vec<PathBuf>,
        /// Output directory.
        #[arg(long)]
        output_dir: PathBuf,
    },
}

/// Segmentation artifact payload with run-length-encoded labels.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct SegmentationPayload {
    states: Vec<ArParams>,
    label_runs: Vec<(usize, usize)>,
    transition: TransitionModel,
    objective_trace: Vec<f64>,
    segments: Vec<Segment>,
    converged: bool,
    sweeps: usize,
    sample_rate: f64,
}

/// Detection artifact payload with a run-length-encoded mask.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct DetectionPayload {
    method: String,
    window_starts: Vec<usize>,
    window_length: usize,
    scores: Vec<f64>,
    threshold: f64,
    mask_runs: Vec<(bool, usize)>,
    sample_rate: f64,
}

/// Metrics artifact payload.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct MetricsPayload {
    method: String,
    metrics: MetricsReport,
    roc: Option<RocCurve>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Config { key, message }) => {
            eprintln!("config error for key `{key}`: {message}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn load_config(cli: &Cli) -> gaitseg::Result<PipelineConfig> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            PipelineConfig::from_json(&text)?
        }
        None => PipelineConfig::default(),
    };
    for spec in &cli.overrides {
        cfg.apply_override(spec)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn config_echo(cfg: &PipelineConfig) -> serde_json::Value {
    serde_json::to_value(cfg).expect("config serializes")
}

fn run(cli: Cli) -> gaitseg::Result<()> {
    let cfg = load_config(&cli)?;
    match &cli.command {
        Command::Synth {
            output,
            truth,
            tags,
            duration,
            walk_fraction,
            amp_after,
        } => cmd_synth(&cfg, output, truth.as_deref(), tags.as_deref(), *duration, *walk_fraction, *amp_after),
        Command::Preprocess {
            input,
            subject,
            output,
        } => cmd_preprocess(&cfg, input, subject, output),
        Command::Segment { input, output, svg } => cmd_segment(&cfg, input, output, svg.as_deref()),
        Command::Detect {
            input,
            method,
            output,
        } => cmd_detect(&cfg, input, method, output),
        Command::Classify {
            segmentation,
            signal,
            energy_threshold,
            tags,
            output,
            mask,
        } => cmd_classify(
            &cfg,
            segmentation,
            signal,
            *energy_threshold,
            tags.as_deref(),
            output,
            mask.as_deref(),
        ),
        Command::Evaluate {
            detection,
            truth,
            signal,
            method,
            output,
        } => cmd_evaluate(&cfg, detection, truth, signal, method, output),
        Command::Report {
            metrics,
            output_dir,
        } => cmd_report(metrics, output_dir),
    }
}

fn cmd_synth(
    cfg: &PipelineConfig,
    output: &Path,
    truth: Option<&Path>,
    tags: Option<&Path>,
    duration: f64,
    walk_fraction: f64,
    amp_after: f64,
) -> gaitseg::Result<()> {
    let gen = gen_gait_recording_scaled(
        walk_fraction,
        2.0,
        DriftSpec {
            kinks: 3,
            max_slope: 0.02,
        },
        cfg.sample_rate,
        duration,
        cfg.seed,
        1.0,
        amp_after,
    )?;
    write_recording_csv(output, &gen.recording)?;
    if let Some(path) = truth {
        let fs = cfg.sample_rate;
        let mut intervals = Vec::new();
        let mut t = 0usize;
        let mask = &gen.gait_mask;
        while t < mask.len() {
            let start = t;
            let val = mask[t];
            while t < mask.len() && mask[t] == val {
                t += 1;
            }
            intervals.push((
                start as f64 / fs,
                t as f64 / fs,
                if val { IntervalLabel::Gait } else { IntervalLabel::NonGait },
            ));
        }
        write_annotation_csv(path, &AnnotationTrack { intervals })?;
    }
    if let Some(path) = tags {
        let half = duration / 2.0;
        let text = format!("start,end,label\n0.0,{half},before\n{half},{duration},after\n");
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn cmd_preprocess(
    cfg: &PipelineConfig,
    input: &Path,
    subject: &str,
    output: &Path,
) -> gaitseg::Result<()> {
    let (rec, warnings) = load_recording_csv(input, subject)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let signal = preprocess_recording(&rec, cfg.sample_rate, cfg.lambda)?;
    write_json(
        output,
        &Artifact {
            config: config_echo(cfg),
            seed: cfg.seed,
            payload: signal,
        },
    )
}

fn read_signal(path: &Path) -> gaitseg::Result<PreprocessedSignal> {
    let artifact: Artifact<PreprocessedSignal> = read_json(path)?;
    Ok(artifact.payload)
}

fn cmd_segment(
    cfg: &PipelineConfig,
    input: &Path,
    output: &Path,
    svg: Option<&Path>,
) -> gaitseg::Result<()> {
    let signal = read_signal(input)?;
    let res = infer_segmentation(&signal, &cfg.switching())?;
    if let Some(path) = svg {
        std::fs::write(path, timeline_svg(&res.segments, signal.values.len()))?;
    }
    write_json(
        output,
        &Artifact {
            config: config_echo(cfg),
            seed: cfg.seed,
            payload: SegmentationPayload {
                states: res.states,
                label_runs: rle_encode(&res.labels.labels),
                transition: res.transition,
                objective_trace: res.objective_trace,
                segments: res.segments,
                converged: res.converged,
                sweeps: res.sweeps,
                sample_rate: signal.sample_rate,
            },
        },
    )
}

const PALETTE: [&str; 8] = [
    "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3", "#8c8c8c",
];

fn timeline_svg(segments: &[Segment], n: usize) -> String {
    let width = 1000.0;
    let height = 60.0;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    );
    for seg in segments {
        let x = seg.start as f64 / n as f64 * width;
        let w = (seg.end - seg.start) as f64 / n as f64 * width;
        let color = PALETTE[seg.state % PALETTE.len()];
        out.push_str(&format!(
            "  <rect x=\"{x:.2}\" y=\"0\" width=\"{w:.2}\" height=\"{height}\" \
             fill=\"{color}\"><title>state {}</title></rect>\n",
            seg.state
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn cmd_detect(
    cfg: &PipelineConfig,
    input: &Path,
    method: &str,
    output: &Path,
) -> gaitseg::Result<()> {
    let signal = read_signal(input)?;
    let det: BinaryDetection = match method {
        "std" => std_detector(&signal, cfg.std_window_s, cfg.std_threshold)?,
        "stft" => stft_detector(
            &signal,
            cfg.stft_window_s,
            (cfg.band_lo_hz, cfg.band_hi_hz),
            cfg.stft_threshold,
        )?,
        "nasc" => {
            let w = (cfg.nasc_window_s * signal.sample_rate).round() as usize;
            nasc_detector(
                &signal,
                cfg.nasc_std_threshold,
                cfg.nasc_window_s,
                default_nasc_lag_range(signal.sample_rate, w),
                cfg.nasc_threshold,
            )?
        }
        "cwt" => cwt_detector(
            &signal,
            cfg.cwt_window_s,
            &default_cwt_freqs(signal.sample_rate),
            (cfg.walking_lo_hz, cfg.walking_hi_hz),
            cfg.cwt_threshold,
        )?,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown detector {other:?}; expected std, stft, nasc, or cwt"
            )))
        }
    };
    write_json(
        output,
        &Artifact {
            config: config_echo(cfg),
            seed: cfg.seed,
            payload: DetectionPayload {
                method: method.to_string(),
                window_starts: det.window_starts,
                window_length: det.window_length,
                scores: det.scores,
                threshold: det.threshold,
                mask_runs: rle_encode_bool(&det.mask),
                sample_rate: signal.sample_rate,
            },
        },
    )
}

fn phase_of(tags: &[SessionTag], start_s: f64, end_s: f64) -> String {
    for tag in tags {
        if start_s >= tag.start_s && end_s <= tag.end_s {
            return tag.label.clone();
        }
    }
    // Straddles a boundary or falls outside every tag: left unlabelled.
    String::new()
}

fn cmd_classify(
    cfg: &PipelineConfig,
    segmentation: &Path,
    signal_path: &Path,
    energy_threshold: f64,
    tags: Option<&Path>,
    output: &Path,
    mask_out: Option<&Path>,
) -> gaitseg::Result<()> {
    let signal = read_signal(signal_path)?;
    let artifact: Artifact<SegmentationPayload> = read_json(segmentation)?;
    let payload = artifact.payload;
    let res = gaitseg::switching::SegmentationResult {
        states: payload.states,
        labels: gaitseg::switching::HiddenStateSequence {
            labels: rle_decode(&payload.label_runs),
        },
        transition: payload.transition,
        objective_trace: payload.objective_trace,
        segments: payload.segments,
        converged: payload.converged,
        sweeps: payload.sweeps,
    };
    let threshold = if energy_threshold > 0.0 {
        energy_threshold
    } else {
        // Geometric mid of the state energy range: separates a bimodal
        // rest/gait energy profile without supervision.
        let energies = state_band_energies(&res, signal.sample_rate)?;
        let lo = energies.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = energies.iter().cloned().fold(0.0f64, f64::max);
        (lo.max(1e-12) * hi.max(1e-12)).sqrt()
    };
    let labels = label_states_gait(&res, signal.sample_rate, threshold)?;
    let subject = "s0";
    let mut segs = gait_features(&res, &labels.mask, signal.sample_rate, subject)?;
    let session_tags = match tags {
        Some(path) => load_session_tag_csv(path)?,
        None => Vec::new(),
    };
    let fs = signal.sample_rate;
    for s in &mut segs {
        let start_s = signal.origin_time + s.start as f64 / fs;
        let end_s = signal.origin_time + s.end as f64 / fs;
        s.phase = phase_of(&session_tags, start_s, end_s);
    }
    write_segments_csv(output, &segs, fs, signal.origin_time)?;
    if let Some(path) = mask_out {
        write_json(
            path,
            &Artifact {
                config: config_echo(cfg),
                seed: cfg.seed,
                payload: DetectionPayload {
                    method: "ar-shmm".to_string(),
                    window_starts: vec![],
                    window_length: 0,
                    scores: labels.state_band_energy.clone(),
                    threshold,
                    mask_runs: rle_encode_bool(&labels.mask),
                    sample_rate: fs,
                },
            },
        )?;
    }
    Ok(())
}

fn write_segments_csv(
    path: &Path,
    segs: &[GaitSegment],
    fs: f64,
    origin: f64,
) -> gaitseg::Result<()> {
    use std::fmt::Write as _;
    let mut out = String::from("subject,start_s,end_s,state,band_energy,peak_pos_hz,peak_height,phase\n");
    for s in segs {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            s.subject_id,
            origin + s.start as f64 / fs,
            origin + s.end as f64 / fs,
            s.state_id,
            s.features[0],
            s.features[1],
            s.features[2],
            s.phase
        )
        .expect("string write");
    }
    std::fs::write(path, out)?;
    Ok(())
}

fn cmd_evaluate(
    cfg: &PipelineConfig,
    detection: &Path,
    truth: &Path,
    signal_path: &Path,
    method: &str,
    output: &Path,
) -> gaitseg::Result<()> {
    let signal = read_signal(signal_path)?;
    let artifact: Artifact<DetectionPayload> = read_json(detection)?;
    let det = artifact.payload;
    let mask = rle_decode_bool(&det.mask_runs);
    let track = load_annotation_csv(truth)?;
    let truth_mask = rasterize_annotations(&track, signal.sample_rate, signal.values.len())?;
    if mask.len() != truth_mask.len() {
        return Err(Error::InvalidInput(format!(
            "detection mask has {} samples, signal has {}",
            mask.len(),
            truth_mask.len()
        )));
    }
    let metrics = confusion_metrics(&mask, &truth_mask)?;
    // Window-level ROC when per-window scores exist: each scored window is
    // labelled by its majority truth.
    let roc = if !det.window_starts.is_empty() {
        let mut labels = Vec::with_capacity(det.window_starts.len());
        for &start in &det.window_starts {
            let end = (start + det.window_length).min(truth_mask.len());
            let gait = truth_mask[start..end].iter().filter(|&&t| t).count();
            labels.push(2 * gait >= end - start);
        }
        roc_curve(&det.scores, &labels).ok()
    } else {
        None
    };
    write_json(
        output,
        &Artifact {
            config: config_echo(cfg),
            seed: cfg.seed,
            payload: MetricsPayload {
                method: method.to_string(),
                metrics,
                roc,
            },
        },
    )
}

fn cmd_report(metrics: &[PathBuf], output_dir: &Path) -> gaitseg::Result<()> {
    use std::fmt::Write as _;
    if metrics.is_empty() {
        return Err(Error::InvalidInput("report: no metrics files given".into()));
    }
    std::fs::create_dir_all(output_dir)?;
    let mut payloads = Vec::new();
    for path in metrics {
        let artifact: Artifact<MetricsPayload> = read_json(path)?;
        payloads.push(artifact.payload);
    }
    payloads.sort_by(|a, b| a.method.cmp(&b.method));
    write_json(&output_dir.join("report.json"), &payloads)?;

    let fmt_rate = |r: Option<f64>| match r {
        Some(v) => format!("{:.1}%", 100.0 * v),
        None => "--".to_string(),
    };
    let mut table = String::new();
    writeln!(table, "{:<12} {:>12} {:>12} {:>18}", "method", "sensitivity", "specificity", "balanced accuracy").expect("write");
    for p in &payloads {
        writeln!(
            table,
            "{:<12} {:>12} {:>12} {:>18}",
            p.method,
            fmt_rate(p.metrics.sensitivity),
            fmt_rate(p.metrics.specificity),
            format!("{:.1}%", 100.0 * p.metrics.balanced_accuracy),
        )
        .expect("write");
    }
    std::fs::write(output_dir.join("summary.txt"), table)?;

    let mut roc_csv = String::from("method,fpr,tpr,threshold\n");
    for p in &payloads {
        if let Some(roc) = &p.roc {
            for pt in &roc.points {
                writeln!(roc_csv, "{},{},{},{}", p.method, pt.fpr, pt.tpr, pt.threshold)
                    .expect("write");
            }
        }
    }
    std::fs::write(output_dir.join("roc_points.csv"), roc_csv)?;
    Ok(())
}
