use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[source] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("{0}")]
    Core(#[from] xi_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl AppError {
    pub fn schema(msg: impl Into<String>) -> Self {
        AppError::Schema(msg.into())
    }

    /// Stable identifier for the error record.
    pub fn kind(&self) -> &'static str {
        use xi_core::Error as E;
        match self {
            AppError::Io { .. } => "io",
            AppError::Json(_) => "json",
            AppError::Schema(_) => "schema",
            AppError::Usage(_) => "usage",
            AppError::Core(e) => match e {
                E::Schema(_) => "schema",
                E::OpenComponent(_) => "open_component",
                E::NotPlanar { .. } => "not_planar",
                E::UnknownComponent(_) => "unknown_component",
                E::SharedArc(_) => "shared_arc",
                E::MissingColor(_) => "missing_color",
                E::InvalidColoring(_) => "invalid_coloring",
                E::ColorOutOfRange(_) => "color_out_of_range",
                E::NotSquare => "not_square",
                E::NotSymmetric => "not_symmetric",
                E::DimensionMismatch => "dimension_mismatch",
                E::BadExponent => "bad_exponent",
                E::LiftDoesNotClose { .. } => "lift_does_not_close",
                E::InfiniteOrder => "infinite_order",
                E::NotRationalHomologySphere => "not_rational_homology_sphere",
                E::ArcNotOnAlpha(_) => "arc_not_on_alpha",
                E::MissingMonodromy(_) => "missing_monodromy",
                E::MissingBlock { .. } => "missing_block",
                E::NotCharacteristic => "not_characteristic",
                E::Unsupported(_) => "unsupported",
            },
        }
    }

    pub fn record(&self) -> ErrorRecord {
        ErrorRecord {
            error: ErrorBody {
                kind: self.kind(),
                message: self.to_string(),
            },
        }
    }
}

/// What the CLI prints on stderr when a command fails.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}
