//! Executable versions of the operator constructions behind the eigenvalue
//! bounds: the sign-pattern convex decomposition of the hopping part, the
//! Birman-Schwinger kernel and its rescaling `L_μ`, the Poisson density
//! `g_μ`, operator convexity of the resolvent and Ky-Fan averaging.

mod convexity;
mod decomposition;
mod gmu;
mod kernels;

pub use convexity::{kyfan_averaging_check, operator_convexity_gap};
pub use decomposition::{
    reconstruct_offdiagonal, sign_pattern_decomposition, SignDecomposition, SignTerm,
};
pub use gmu::{convolve_g, fourier_g, g_mu_eval, GmuDensity};
pub use kernels::{
    averaged_l_mu, birman_schwinger, l_mu, l_mu_free_closed_form, positive_sites,
    resolvent_half_width, s_n_curve, sign_average,
};

/// Sites carrying a positive potential, `(n, b_n)`, ascending in `n`.
pub type Sites = [(i64, f64)];
