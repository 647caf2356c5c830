use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty spectrum")]
    EmptySpectrum,

    #[error("zero missing: contiguous radius is only defined for sets containing 0")]
    ZeroMissing,

    #[error("invalid generator grid: {0}")]
    InvalidGrid(String),

    #[error("scheme constraint violated: {0}")]
    SchemeConstraint(String),

    #[error("no closed form; use size/K bound")]
    NoClosedForm,

    #[error(
        "certification failed for {kind}: {} predicted element(s) missing, {} unexpected element(s)",
        missing.len(),
        extra.len()
    )]
    Certification {
        kind: String,
        missing: Vec<Rational>,
        extra: Vec<Rational>,
    },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("not a Golomb ruler: {0}")]
    NotGolomb(String),

    #[error("desk-scale limit: {0}")]
    DeskScaleLimit(String),

    #[error("duplicate element {0} in mark set")]
    Duplicates(i64),

    #[error("base set has no unit step")]
    NoUnitStep,

    #[error("area mismatch: {src_rows}x{src_cols} has area {}, {dst_rows}x{dst_cols} has area {}", src_rows * src_cols, dst_rows * dst_cols)]
    AreaMismatch {
        src_rows: usize,
        src_cols: usize,
        dst_rows: usize,
        dst_cols: usize,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid bijection: {0}")]
    InvalidBijection(String),

    #[error("simulator requires integer spectrum")]
    NonIntegerSpectrum,

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("spectrum element limit exceeded: {size} > {limit}")]
    LimitExceeded { size: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable identifier used in CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptySpectrum => "empty_spectrum",
            Error::ZeroMissing => "zero_missing",
            Error::InvalidGrid(_) => "invalid_grid",
            Error::SchemeConstraint(_) => "scheme_constraint",
            Error::NoClosedForm => "no_closed_form",
            Error::Certification { .. } => "certification_failed",
            Error::Verification(_) => "verification_failed",
            Error::NotGolomb(_) => "not_golomb",
            Error::DeskScaleLimit(_) => "desk_scale_limit",
            Error::Duplicates(_) => "duplicates",
            Error::NoUnitStep => "no_unit_step",
            Error::AreaMismatch { .. } => "area_mismatch",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::InvalidBijection(_) => "invalid_bijection",
            Error::NonIntegerSpectrum => "non_integer_spectrum",
            Error::Numerical(_) => "numerical_failure",
            Error::LimitExceeded { .. } => "limit_exceeded",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Parse(_) => "parse_error",
            Error::Checkpoint(_) => "checkpoint_error",
            Error::Io(_) => "io_error",
            Error::Json(_) => "json_error",
        }
    }

    /// True for errors that mean a computed result disagreed with its prediction.
    pub fn is_certification_failure(&self) -> bool {
        matches!(self, Error::Certification { .. } | Error::Verification(_))
    }
}
