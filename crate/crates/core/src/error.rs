use crate::norms::MultiIndex;

/// Error type shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("lattice needs at least 2 points per axis, got {0}")]
    TooFewPoints(usize),

    #[error("dyadic level {level} needs offset ({points}-1)/2^{level} to be a whole number of spacings")]
    BadDyadicLevel { level: u32, points: usize },

    #[error("radius must be positive, got {0}")]
    NonpositiveRadius(f64),

    #[error("dimension mismatch: field family is {spec}-dimensional, lattice is {lattice}-dimensional")]
    DimensionMismatch { spec: usize, lattice: usize },

    #[error("covariance matrix is not positive semidefinite (Cholesky failed, final jitter {jitter:e})")]
    NotPositiveSemidefinite { jitter: f64 },

    #[error("invalid field parameter: {0}")]
    InvalidFieldSpec(String),

    #[error("no closed-form increment moment for this field family")]
    NoClosedForm,

    #[error("derivative order {requested} unavailable (sampler provides up to {available})")]
    DerivativeUnavailable { requested: usize, available: usize },

    #[error("finite-difference stencil for {alpha} does not fit on axis {axis} ({points} points)")]
    StencilTooWide {
        alpha: MultiIndex,
        axis: usize,
        points: usize,
    },

    #[error("constant field: all increments vanish at every level")]
    ConstantField,

    #[error("need at least {need} usable lag points, got {got}")]
    TooFewLags { need: usize, got: usize },

    #[error("moment exponent must be positive, got epsilon = {0}")]
    NonpositiveEpsilon(f64),

    #[error("p must lie in (1, inf), got {0}")]
    InvalidP(f64),

    #[error("order s must be nonnegative, got {0}")]
    InvalidOrder(f64),

    #[error("need at least {need} sample fields, got {got}")]
    TooFewSamples { need: usize, got: usize },

    #[error("cap angle must lie in (0, pi/2), got {0}")]
    CapAngleOutOfRange(f64),

    #[error("transition width {width} does not fit the overlap band of half-width {band}")]
    TransitionWidthTooLarge { width: f64, band: f64 },

    #[error("point ({0}, {1}, {2}) is not covered by any chart")]
    NotInAnyChart(f64, f64, f64),

    #[error("band limit {0} exceeds the direct-summation cap of 64")]
    BandLimitTooLarge(usize),

    #[error("embedding hypothesis violated: need s > t + n/p (or s = t + n/p with noninteger t), got s = {s}, t = {t}, n/p = {np}")]
    EmbeddingHypothesis { s: f64, t: f64, np: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
