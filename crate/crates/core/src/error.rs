//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alpha must lie in [-1/2, 1), got {0}")]
    InvalidAlpha(f64),
    #[error("this operation requires alpha in [0, 1), got {0}")]
    AlphaNotSupported(f64),
    #[error("radius must lie strictly inside (0, 1), got {0}")]
    InvalidRadius(f64),
    #[error("radius {value} too large for this operation (max {max})")]
    RadiusTooLarge { value: f64, max: f64 },
    #[error("section orders must satisfy n >= 1 and m >= 2, got n = {n}, m = {m}")]
    InvalidSectionOrder { n: u32, m: u32 },
    #[error("point must satisfy |z| < 1, got |z| = {0}")]
    PointOutsideDisk(f64),
    #[error("invalid harmonic polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("coefficient extraction needs samples >= 4*count, got count = {count}, samples = {samples}")]
    InvalidExtraction { count: usize, samples: usize },
    #[error("contour radius must lie in (0, 1), got {0}")]
    InvalidContourRadius(f64),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("grid has {points} points, pairwise scan is capped at {max}")]
    GridTooLarge { points: usize, max: usize },
    #[error("gap stays certifiably positive up to r = {scanned_to}; root >= {scanned_to}")]
    NoSignChange { scanned_to: f64 },
    #[error("sign of the gap at r = {r} cannot be certified: |{value:e}| <= tail error {tail_error:e}")]
    AmbiguousSign { r: f64, value: f64, tail_error: f64 },
    #[error("asymptotic bound is valid for orders >= {min}, got n = {n}")]
    OrderBelowThreshold { n: u32, min: u32 },
    #[error("decay majorant requires 0 < x <= n, got x = {x}, n = {n}")]
    InvalidDecayArgument { x: f64, n: u32 },
    #[error("{context} did not converge")]
    NoConvergence { context: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
