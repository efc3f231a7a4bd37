//! Spectral computations: Sturm bisection for the discrete spectrum of a
//! perturbed Jacobi operator outside `[-2, 2]`, a cyclic Jacobi eigensolver
//! for the small dense matrices built by [`crate::constructs`], and Ky-Fan
//! norms.

mod dense;
mod outside;
mod sturm;

pub use dense::{
    dense_eigen, dense_eigenvalues, eigenvalue_sum_top, kyfan, DenseSymmetric, SymmetricEigen,
};
pub use outside::{
    boundary_closed_count_above, boundary_closed_count_below, boundary_closed_eigenvalues,
    eigenvalues_outside, truncated_outside, SpectrumOutside,
};
pub use sturm::{bisect, sturm_count};

use crate::{Error, Result};

/// Tolerances for the eigensolvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenConfig {
    /// Only eigenvalues beyond `2 + edge_buffer` in modulus are reported.
    pub edge_buffer: f64,
    /// Stop doubling the truncation once no reported eigenvalue moves by
    /// this much.
    pub bisect_tol: f64,
    pub max_half_width: usize,
    /// Dense Jacobi stops when the off-diagonal Frobenius norm drops below
    /// `dense_tol` times the initial Frobenius norm.
    pub dense_tol: f64,
}

impl Default for EigenConfig {
    fn default() -> Self {
        EigenConfig {
            edge_buffer: 1e-7,
            bisect_tol: 1e-11,
            max_half_width: 1 << 14,
            dense_tol: 1e-12,
        }
    }
}

impl EigenConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = self.edge_buffer > 0.0
            && self.bisect_tol > 0.0
            && self.dense_tol > 0.0
            && self.max_half_width > 0;
        if !positive {
            return Err(Error::Domain(format!(
                "eigen config must be positive: {self:?}"
            )));
        }
        if self.bisect_tol >= self.edge_buffer {
            return Err(Error::Domain(format!(
                "bisect_tol {} must be below edge_buffer {}",
                self.bisect_tol, self.edge_buffer
            )));
        }
        Ok(())
    }
}
