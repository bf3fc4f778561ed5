//! File formats: recording CSV (`t,ax,ay,az`), annotation and session-tag
//! CSV (`start,end,label`), and JSON artifacts with run-length-encoded
//! label sequences.
//!
//! CSV parse errors carry the file path and 1-based line number. Duplicate
//! timestamps are dropped with a warning record; decreasing timestamps are
//! a hard error.

use std::fmt::Write as _;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::eval::{AnnotationTrack, IntervalLabel};
use crate::signal_prep::{RawRecording, SessionTag};
use crate::{Error, Result};

fn csv_err(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Csv {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

fn parse_f64(path: &Path, line: usize, field: &str, raw: &str) -> Result<f64> {
    raw.trim()
        .parse::<f64>()
        .map_err(|_| csv_err(path, line, format!("field `{field}`: not a number: {raw:?}")))
}

/// Parse a recording CSV with header `t,ax,ay,az` (`t` in seconds, axes in
/// m/s²). Rows with a timestamp equal to the previous row are dropped and
/// reported in the warning list; a decreasing timestamp is an error.
pub fn load_recording_csv(path: &Path, subject_id: &str) -> Result<(RawRecording, Vec<String>)> {
    let text = std::fs::read_to_string(path)?;
    parse_recording_csv(&text, path, subject_id)
}

/// [`load_recording_csv`] over in-memory text (the path is only used in
/// error messages).
pub fn parse_recording_csv(
    text: &str,
    path: &Path,
    subject_id: &str,
) -> Result<(RawRecording, Vec<String>)> {
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(csv_err(path, 1, "empty file, expected header `t,ax,ay,az`"));
    };
    if header.trim() != "t,ax,ay,az" {
        return Err(csv_err(
            path,
            1,
            format!("expected header `t,ax,ay,az`, got {header:?}"),
        ));
    }
    let mut rec = RawRecording {
        timestamps: Vec::new(),
        ax: Vec::new(),
        ay: Vec::new(),
        az: Vec::new(),
        subject_id: subject_id.to_string(),
        tags: Vec::new(),
    };
    let mut warnings = Vec::new();
    for (idx, row) in lines {
        let line = idx + 1; // 1-based
        if row.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 4 {
            return Err(csv_err(
                path,
                line,
                format!("expected 4 fields, got {}", fields.len()),
            ));
        }
        let t = parse_f64(path, line, "t", fields[0])?;
        let x = parse_f64(path, line, "ax", fields[1])?;
        let y = parse_f64(path, line, "ay", fields[2])?;
        let z = parse_f64(path, line, "az", fields[3])?;
        if let Some(&last) = rec.timestamps.last() {
            if t == last {
                warnings.push(format!(
                    "{}:{line}: dropped duplicate timestamp {t}",
                    path.display()
                ));
                continue;
            }
            if t < last {
                return Err(Error::NonMonotoneTimestamps {
                    index: rec.timestamps.len(),
                });
            }
        }
        rec.timestamps.push(t);
        rec.ax.push(x);
        rec.ay.push(y);
        rec.az.push(z);
    }
    if rec.timestamps.len() < 2 {
        return Err(csv_err(path, 1, "recording needs at least 2 data rows"));
    }
    Ok((rec, warnings))
}

/// Write a recording as `t,ax,ay,az` CSV.
pub fn write_recording_csv(path: &Path, rec: &RawRecording) -> Result<()> {
    let mut out = String::from("t,ax,ay,az\n");
    for i in 0..rec.timestamps.len() {
        writeln!(
            out,
            "{},{},{},{}",
            fmt_f64(rec.timestamps[i]),
            fmt_f64(rec.ax[i]),
            fmt_f64(rec.ay[i]),
            fmt_f64(rec.az[i])
        )
        .expect("string write");
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Shortest round-trip decimal representation.
fn fmt_f64(v: f64) -> String {
    let mut s = format!("{v}");
    if !s.contains('.') && !s.contains('e') && !s.contains("inf") && !s.contains("NaN") {
        s.push_str(".0");
    }
    s
}

/// Parse an annotation CSV with header `start,end,label`; labels are
/// `gait` or `non-gait`.
pub fn load_annotation_csv(path: &Path) -> Result<AnnotationTrack> {
    let text = std::fs::read_to_string(path)?;
    parse_annotation_csv(&text, path)
}

/// [`load_annotation_csv`] over in-memory text.
pub fn parse_annotation_csv(text: &str, path: &Path) -> Result<AnnotationTrack> {
    let rows = parse_interval_rows(text, path)?;
    let mut intervals = Vec::new();
    for (line, start, end, label) in rows {
        let label = match label.as_str() {
            "gait" => IntervalLabel::Gait,
            "non-gait" => IntervalLabel::NonGait,
            other => {
                return Err(csv_err(
                    path,
                    line,
                    format!("label must be `gait` or `non-gait`, got {other:?}"),
                ))
            }
        };
        intervals.push((start, end, label));
    }
    let track = AnnotationTrack { intervals };
    track.validate()?;
    Ok(track)
}

/// Write an annotation track as `start,end,label` CSV.
pub fn write_annotation_csv(path: &Path, track: &AnnotationTrack) -> Result<()> {
    let mut out = String::from("start,end,label\n");
    for &(start, end, label) in &track.intervals {
        let label = match label {
            IntervalLabel::Gait => "gait",
            IntervalLabel::NonGait => "non-gait",
        };
        writeln!(out, "{},{},{label}", fmt_f64(start), fmt_f64(end)).expect("string write");
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Parse a session-tag CSV with header `start,end,label` and free-form
/// labels (e.g. medication phases).
pub fn parse_session_tag_csv(text: &str, path: &Path) -> Result<Vec<SessionTag>> {
    let rows = parse_interval_rows(text, path)?;
    Ok(rows
        .into_iter()
        .map(|(_, start_s, end_s, label)| SessionTag {
            start_s,
            end_s,
            label,
        })
        .collect())
}

pub fn load_session_tag_csv(path: &Path) -> Result<Vec<SessionTag>> {
    let text = std::fs::read_to_string(path)?;
    parse_session_tag_csv(&text, path)
}

fn parse_interval_rows(text: &str, path: &Path) -> Result<Vec<(usize, f64, f64, String)>> {
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(csv_err(path, 1, "empty file, expected header `start,end,label`"));
    };
    if header.trim() != "start,end,label" {
        return Err(csv_err(
            path,
            1,
            format!("expected header `start,end,label`, got {header:?}"),
        ));
    }
    let mut rows = Vec::new();
    for (idx, row) in lines {
        let line = idx + 1;
        if row.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 3 {
            return Err(csv_err(
                path,
                line,
                format!("expected 3 fields, got {}", fields.len()),
            ));
        }
        let start = parse_f64(path, line, "start", fields[0])?;
        let end = parse_f64(path, line, "end", fields[1])?;
        rows.push((line, start, end, fields[2].trim().to_string()));
    }
    Ok(rows)
}

/// Run-length encoding of a label sequence as (value, count) pairs.
pub fn rle_encode(labels: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &l in labels {
        match out.last_mut() {
            Some((v, c)) if *v == l => *c += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

pub fn rle_decode(runs: &[(usize, usize)]) -> Vec<usize> {
    let mut out = Vec::new();
    for &(v, c) in runs {
        out.extend(std::iter::repeat(v).take(c));
    }
    out
}

/// RLE for boolean masks (detector outputs).
pub fn rle_encode_bool(mask: &[bool]) -> Vec<(bool, usize)> {
    let mut out: Vec<(bool, usize)> = Vec::new();
    for &b in mask {
        match out.last_mut() {
            Some((v, c)) if *v == b => *c += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

pub fn rle_decode_bool(runs: &[(bool, usize)]) -> Vec<bool> {
    let mut out = Vec::new();
    for &(v, c) in runs {
        out.extend(std::iter::repeat(v).take(c));
    }
    out
}

/// JSON artifact wrapper embedding provenance: the full config echo and the
/// seed that produced the payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Artifact<T> {
    pub config: serde_json::Value,
    pub seed: u64,
    pub payload: T,
}

/// Serialize any value as pretty JSON with a trailing newline
/// (byte-deterministic for a fixed value).
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    fn p() -> PathBuf {
        PathBuf::from("test.csv")
    }

    #[test]
    fn recording_round_trip() {
        let rec = RawRecording {
            timestamps: vec![0.0, 0.02, 0.04, 0.061],
            ax: vec![0.1, -0.2, 0.3, 0.0],
            ay: vec![9.8, 9.81, 9.79, 9.8],
            az: vec![0.0, 0.01, -0.01, 0.02],
            subject_id: "s1".into(),
            tags: vec![],
        };
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rec.csv");
        write_recording_csv(&path, &rec).unwrap();
        let (back, warnings) = load_recording_csv(&path, "s1").unwrap();
        assert_eq!(back, rec);
        assert!(warnings.is_empty());
    }

    #[test]
    fn malformed_row_names_line() {
        let text = "t,ax,ay,az\n0.0,1,2,3\n0.02,1,2,3\n0.04,1,2,3\n0.06,1,2,3\n0.08,1,2,3\n0.10,1,2\n";
        let err = parse_recording_csv(text, &p(), "s").unwrap_err();
        match err {
            Error::Csv { line, .. } => assert_eq!(line, 7),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn bad_number_names_line_and_field() {
        let text = "t,ax,ay,az\n0.0,1,2,3\n0.02,oops,2,3\n";
        let err = parse_recording_csv(text, &p(), "s").unwrap_err();
        match err {
            Error::Csv { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("ax"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn duplicate_timestamp_dropped_with_warning() {
        let text = "t,ax,ay,az\n0.0,1,2,3\n0.02,4,5,6\n0.02,7,8,9\n0.04,1,1,1\n";
        let (rec, warnings) = parse_recording_csv(text, &p(), "s").unwrap();
        assert_eq!(rec.timestamps, vec![0.0, 0.02, 0.04]);
        assert_eq!(rec.ax, vec![1.0, 4.0, 1.0]);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains(":4:"), "{}", warnings[0]);
    }

    #[test]
    fn decreasing_timestamp_errors() {
        let text = "t,ax,ay,az\n0.0,1,2,3\n0.04,1,2,3\n0.02,1,2,3\n";
        let err = parse_recording_csv(text, &p(), "s").unwrap_err();
        assert!(matches!(err, Error::NonMonotoneTimestamps { index: 2 }));
    }

    #[test]
    fn wrong_header_errors() {
        let err = parse_recording_csv("time,x,y,z\n0,1,2,3\n", &p(), "s").unwrap_err();
        assert!(matches!(err, Error::Csv { line: 1, .. }));
    }

    #[test]
    fn annotation_round_trip() {
        let track = AnnotationTrack {
            intervals: vec![
                (0.0, 12.5, IntervalLabel::NonGait),
                (12.5, 30.0, IntervalLabel::Gait),
            ],
        };
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ann.csv");
        write_annotation_csv(&path, &track).unwrap();
        let back = load_annotation_csv(&path).unwrap();
        assert_eq!(back, track);
    }

    #[test]
    fn annotation_bad_label_errors() {
        let text = "start,end,label\n0,1,walking\n";
        let err = parse_annotation_csv(text, &p()).unwrap_err();
        match err {
            Error::Csv { line, message, .. } => {
                assert_eq!(line, 2);
                assert!(message.contains("walking"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn session_tags_parse() {
        let text = "start,end,label\n0,300,before\n300,600,after\n";
        let tags = parse_session_tag_csv(text, &p()).unwrap();
        assert_eq!(
            tags,
            vec![
                SessionTag {
                    start_s: 0.0,
                    end_s: 300.0,
                    label: "before".into()
                },
                SessionTag {
                    start_s: 300.0,
                    end_s: 600.0,
                    label: "after".into()
                },
            ]
        );
    }

    #[test]
    fn rle_round_trip() {
        let labels = vec![0, 0, 0, 1, 1, 2, 0, 0];
        let runs = rle_encode(&labels);
        assert_eq!(runs, vec![(0, 3), (1, 2), (2, 1), (0, 2)]);
        assert_eq!(rle_decode(&runs), labels);
        let mask = vec![true, true, false, true];
        assert_eq!(rle_decode_bool(&rle_encode_bool(&mask)), mask);
        assert!(rle_encode(&[]).is_empty());
    }

    #[test]
    fn json_artifact_round_trip_and_deterministic() {
        let artifact = Artifact {
            config: serde_json::json!({"sample_rate": 50.0, "ar_order": 12}),
            seed: 42,
            payload: vec![1usize, 2, 3],
        };
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.json");
        let b = dir.path().join("b.json");
        write_json(&a, &artifact).unwrap();
        write_json(&b, &artifact).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        let back: Artifact<Vec<usize>> = read_json(&a).unwrap();
        assert_eq!(back, artifact);
    }
}
