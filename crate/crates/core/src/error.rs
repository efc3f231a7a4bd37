use thiserror::Error;

use crate::eigen::SpectrumOutside;

/// Everything that can go wrong inside the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite {field} entry at lattice index {index}")]
    NonFinite { field: &'static str, index: i64 },

    #[error("a-window holds {count} bonds with a < 1, cap is {cap}")]
    TooManyBonds { count: usize, cap: usize },

    #[error(
        "half-width {half_width} does not cover the support with margin (need at least {required})"
    )]
    WindowTooSmall { half_width: usize, required: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular system in {0}")]
    Singular(&'static str),

    #[error(
        "dense eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    DenseNotConverged { sweeps: usize, off_norm: f64 },

    #[error("truncation did not converge up to half-width {max_half_width} (last movement {})", partial.est_error)]
    NotConverged {
        max_half_width: usize,
        partial: Box<SpectrumOutside>,
    },

    #[error("instance file: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
