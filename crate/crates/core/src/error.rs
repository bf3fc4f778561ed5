use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("timestamps must be strictly increasing (violated at index {index})")]
    NonMonotoneTimestamps { index: usize },

    #[error("need at least {needed} samples for {what}, got {got}")]
    TooShort {
        what: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("trend filter did not converge: relative duality gap {gap:.3e} after {iterations} iterations")]
    TrendFilterNonConvergence { gap: f64, iterations: usize },

    #[error("ill-conditioned AR design matrix (condition estimate {condition:.3e})")]
    IllConditioned { condition: f64 },

    #[error("AR spectrum is singular at {frequency_hz} Hz (pole on the unit circle)")]
    SpectrumPole { frequency_hz: f64 },

    #[error("frequency band [{lo}, {hi}] Hz lies outside the grid [{grid_lo}, {grid_hi}] Hz")]
    BandOutOfRange {
        lo: f64,
        hi: f64,
        grid_lo: f64,
        grid_hi: f64,
    },

    #[error("annotation interval [{start}, {end}) s exceeds the signal span of {span} s")]
    AnnotationOutOfRange { start: f64, end: f64, span: f64 },

    #[error("training data contains a single class; both classes are required")]
    SingleClass,

    #[error("feature count mismatch: model has {expected}, segment has {got}")]
    FeatureMismatch { expected: usize, got: usize },

    #[error("{path}:{line}: {message}")]
    Csv {
        path: String,
        line: usize,
        message: String,
    },

    #[error("config error for key `{key}`: {message}")]
    Config { key: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
