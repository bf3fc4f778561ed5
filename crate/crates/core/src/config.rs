//! Pipeline configuration: one flat struct echoing every tunable, loaded
//! from JSON with unknown keys rejected, plus `key=value` overrides.

use serde::{Deserialize, Serialize};

use crate::ar::ArdConfig;
use crate::switching::SwitchingConfig;
use crate::{Error, Result};

/// Every knob of the pipeline. Serialized into artifacts for provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PipelineConfig {
    /// Target uniform sample rate in Hz.
    pub sample_rate: f64,
    /// ℓ1 trend-filter weight; 0 selects the per-recording default
    /// 0.01·n·var.
    pub lambda: f64,
    /// AR order of every hidden state.
    pub ar_order: usize,
    /// Inverse-gamma noise prior shape.
    pub noise_shape: f64,
    /// Inverse-gamma noise prior scale.
    pub noise_scale: f64,
    /// Initial ARD precision.
    pub ard_init: f64,
    /// Coefficients with precision above this are pruned to zero.
    pub prune_precision: f64,
    /// Transition concentration α.
    pub alpha: f64,
    /// Top-level concentration γ.
    pub gamma: f64,
    /// Self-transition bias κ.
    pub kappa: f64,
    /// Minimum segment duration in seconds.
    pub min_duration_s: f64,
    /// Gait spectral band in Hz.
    pub band_lo_hz: f64,
    pub band_hi_hz: f64,
    /// Detector windows in seconds.
    pub std_window_s: f64,
    pub stft_window_s: f64,
    pub nasc_window_s: f64,
    pub cwt_window_s: f64,
    /// Detector thresholds (used when not optimized per cohort).
    pub std_threshold: f64,
    pub stft_threshold: f64,
    pub nasc_std_threshold: f64,
    pub nasc_threshold: f64,
    pub cwt_threshold: f64,
    /// Walking band for the wavelet detector in Hz.
    pub walking_lo_hz: f64,
    pub walking_hi_hz: f64,
    /// RNG seed used by synthesis and inference initialization.
    pub seed: u64,
    /// Free-form cohort tag (e.g. "pd" or "control") echoed in artifacts.
    pub cohort: String,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        let sw = SwitchingConfig::default();
        let ard = ArdConfig::default();
        PipelineConfig {
            sample_rate: 50.0,
            lambda: 0.0,
            ar_order: sw.ar_order,
            noise_shape: ard.noise_shape,
            noise_scale: ard.noise_scale,
            ard_init: ard.ard_init,
            prune_precision: ard.prune_precision,
            alpha: sw.alpha,
            gamma: sw.gamma,
            kappa: sw.kappa,
            min_duration_s: sw.min_duration_s,
            band_lo_hz: 0.5,
            band_hi_hz: 10.0,
            std_window_s: 1.0,
            stft_window_s: 1.0,
            nasc_window_s: 2.0,
            cwt_window_s: 2.0,
            std_threshold: 0.5,
            stft_threshold: 1.0,
            nasc_std_threshold: 0.1,
            nasc_threshold: 0.7,
            cwt_threshold: 0.5,
            walking_lo_hz: 0.5,
            walking_hi_hz: 3.0,
            seed: 0,
            cohort: String::new(),
        }
    }
}

fn check(ok: bool, key: &str, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Config {
            key: key.to_string(),
            message: message.to_string(),
        })
    }
}

impl PipelineConfig {
    /// Parse from JSON text; unknown keys are hard errors.
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: PipelineConfig = serde_json::from_str(text).map_err(|e| Error::Config {
            key: "<json>".into(),
            message: e.to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        check(
            self.sample_rate.is_finite() && self.sample_rate > 0.0,
            "sample_rate",
            "must be a positive number of Hz",
        )?;
        check(self.lambda >= 0.0, "lambda", "must be non-negative")?;
        check(
            (1..=64).contains(&self.ar_order),
            "ar_order",
            "must be in 1..=64",
        )?;
        check(self.noise_shape > 0.0, "noise_shape", "must be positive")?;
        check(self.noise_scale > 0.0, "noise_scale", "must be positive")?;
        check(self.ard_init > 0.0, "ard_init", "must be positive")?;
        check(
            self.prune_precision > 0.0,
            "prune_precision",
            "must be positive",
        )?;
        check(self.alpha > 0.0, "alpha", "must be positive")?;
        check(self.gamma > 0.0, "gamma", "must be positive")?;
        check(self.kappa >= 0.0, "kappa", "must be non-negative")?;
        check(
            self.min_duration_s >= 0.0,
            "min_duration_s",
            "must be non-negative",
        )?;
        check(
            0.0 <= self.band_lo_hz && self.band_lo_hz < self.band_hi_hz,
            "band_lo_hz",
            "band must satisfy 0 <= lo < hi",
        )?;
        check(
            self.band_hi_hz <= self.sample_rate / 2.0,
            "band_hi_hz",
            "band must end at or below the Nyquist frequency",
        )?;
        check(
            0.0 <= self.walking_lo_hz && self.walking_lo_hz < self.walking_hi_hz,
            "walking_lo_hz",
            "walking band must satisfy 0 <= lo < hi",
        )?;
        for (key, v) in [
            ("std_window_s", self.std_window_s),
            ("stft_window_s", self.stft_window_s),
            ("nasc_window_s", self.nasc_window_s),
            ("cwt_window_s", self.cwt_window_s),
        ] {
            check(v > 0.0 && v <= 60.0, key, "window must be in (0, 60] seconds")?;
        }
        Ok(())
    }

    /// Apply one `key=value` override (the CLI `--set` flag).
    pub fn apply_override(&mut self, spec: &str) -> Result<()> {
        let Some((key, value)) = spec.split_once('=') else {
            return Err(Error::Config {
                key: spec.to_string(),
                message: "override must have the form key=value".into(),
            });
        };
        let key = key.trim();
        let value = value.trim();
        // Round-trip through the JSON representation so the same names work
        // in the file and on the command line, and unknown keys still fail.
        let mut map = match serde_json::to_value(&self) {
            Ok(serde_json::Value::Object(m)) => m,
            _ => unreachable!("config serializes to an object"),
        };
        let slot = map.get_mut(key).ok_or_else(|| Error::Config {
            key: key.to_string(),
            message: "unknown config key".into(),
        })?;
        *slot = match slot {
            serde_json::Value::String(_) => serde_json::Value::String(value.to_string()),
            _ => serde_json::from_str(value).map_err(|_| Error::Config {
                key: key.to_string(),
                message: format!("cannot parse value {value:?}"),
            })?,
        };
        let updated: PipelineConfig =
            serde_json::from_value(serde_json::Value::Object(map)).map_err(|e| Error::Config {
                key: key.to_string(),
                message: e.to_string(),
            })?;
        updated.validate()?;
        *self = updated;
        Ok(())
    }

    pub fn ard(&self) -> ArdConfig {
        ArdConfig {
            noise_shape: self.noise_shape,
            noise_scale: self.noise_scale,
            ard_init: self.ard_init,
            prune_precision: self.prune_precision,
            ..ArdConfig::default()
        }
    }

    pub fn switching(&self) -> SwitchingConfig {
        SwitchingConfig {
            ar_order: self.ar_order,
            ard: self.ard(),
            alpha: self.alpha,
            gamma: self.gamma,
            kappa: self.kappa,
            min_duration_s: self.min_duration_s,
            seed: self.seed,
            ..SwitchingConfig::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        PipelineConfig::default().validate().unwrap();
    }

    #[test]
    fn unknown_key_rejected() {
        let err = PipelineConfig::from_json(r#"{"sample_rate": 50.0, "smaple_rate": 60.0}"#)
            .unwrap_err();
        match err {
            Error::Config { message, .. } => assert!(message.contains("smaple_rate"), "{message}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn partial_json_fills_defaults() {
        let cfg = PipelineConfig::from_json(r#"{"ar_order": 6, "seed": 9}"#).unwrap();
        assert_eq!(cfg.ar_order, 6);
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.sample_rate, 50.0);
    }

    #[test]
    fn out_of_range_named() {
        let err = PipelineConfig::from_json(r#"{"ar_order": 0}"#).unwrap_err();
        match err {
            Error::Config { key, .. } => assert_eq!(key, "ar_order"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn override_sets_value() {
        let mut cfg = PipelineConfig::default();
        cfg.apply_override("kappa=12.5").unwrap();
        assert_eq!(cfg.kappa, 12.5);
        cfg.apply_override("cohort=pd").unwrap();
        assert_eq!(cfg.cohort, "pd");
    }

    #[test]
    fn override_unknown_key_rejected() {
        let mut cfg = PipelineConfig::default();
        let err = cfg.apply_override("kapa=12.5").unwrap_err();
        match err {
            Error::Config { key, .. } => assert_eq!(key, "kapa"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn override_validates_result() {
        let mut cfg = PipelineConfig::default();
        assert!(cfg.apply_override("sample_rate=-5").is_err());
        assert!(cfg.apply_override("gamma=abc").is_err());
        // Config unchanged after failed overrides.
        assert_eq!(cfg, PipelineConfig::default());
    }

    #[test]
    fn band_must_fit_nyquist() {
        let err = PipelineConfig::from_json(r#"{"sample_rate": 10.0}"#).unwrap_err();
        match err {
            Error::Config { key, .. } => assert_eq!(key, "band_hi_hz"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
