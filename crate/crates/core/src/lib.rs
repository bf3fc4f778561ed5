//! Unsupervised segmentation and gait analysis for tri-axial accelerometer
//! recordings.
//!
//! The pipeline, end to end:
//!
//! 1. [`signal_prep`] — resample a raw recording to a uniform rate, strip
//!    piecewise-linear orientation drift per axis with an ℓ1 trend filter,
//!    and collapse the axes into a scalar acceleration magnitude.
//! 2. [`switching`] — segment the magnitude series into an a-priori-unknown
//!    number of stationary autoregressive regimes (a switching AR process
//!    with a hierarchical-Dirichlet-process transition prior, fit by
//!    hard-assignment MAP coordinate ascent).
//! 3. [`classify`] — label each regime gait or non-gait by the band energy
//!    of its parametric power spectrum, and classify gait segments by
//!    medication state from spectral features.
//! 4. [`detectors`] — four classical windowed gait detectors (window
//!    standard deviation, STFT band energy, normalized autocorrelation,
//!    wavelet energy ratio) used as baselines.
//! 5. [`eval`] — sensitivity/specificity/balanced accuracy, ROC curves,
//!    and leave-one-subject-out cross-validation.
//!
//! [`synth`] generates ground-truthed recordings for testing all of the
//! above; [`io`] holds the CSV/JSON formats shared with the command-line
//! front-end.
//!
//! # Example
//!
//! Segment a synthetic signal that switches between two spectrally distinct
//! regimes; the model discovers the state count on its own (the guide in
//! `book/` walks through every stage in depth):
//!
//! ```
//! use gaitseg::switching::{infer_segmentation, SwitchingConfig};
//! use gaitseg::synth::{gen_piecewise_ar, GeneratorKind, PhaseTag, RegimeLabel, RegimeSpec};
//!
//! let fs = 50.0;
//! let regime = |peak_hz: f64| RegimeSpec {
//!     duration_s: 20.0,
//!     kind: GeneratorKind::Ar {
//!         coeffs: gaitseg::synth::resonant_ar2(peak_hz, 0.95, fs),
//!         noise_variance: 1.0,
//!         mean: 0.0,
//!     },
//!     label: RegimeLabel::Gait,
//!     phase: PhaseTag::None,
//! };
//! let (signal, _truth) = gen_piecewise_ar(&[regime(1.0), regime(6.0)], fs, 3).unwrap();
//!
//! let cfg = SwitchingConfig { ar_order: 6, seed: 3, ..Default::default() };
//! let result = infer_segmentation(&signal, &cfg).unwrap();
//! assert_eq!(result.n_states(), 2);
//! assert!(result.converged);
//! ```

pub mod ar;
pub mod classify;
pub mod config;
pub mod detectors;
pub mod error;
pub mod eval;
pub mod io;
pub mod signal_prep;
pub mod switching;
pub mod synth;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
