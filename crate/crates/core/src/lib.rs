//! Doubly-infinite Jacobi operators with finitely supported perturbations,
//! their discrete spectrum outside `[-2, 2]`, and executable versions of the
//! constructions behind Lieb-Thirring type bounds on that spectrum.
//!
//! The crate is organised bottom-up:
//!
//! - [`perturbation`]: the instance model `{a_n, b_n}`, finite sections and the
//!   sandwich / sign-flip transformations.
//! - [`eigen`]: Sturm bisection with adaptive truncation, a cyclic Jacobi
//!   solver for small dense matrices, Ky-Fan norms.
//! - [`functionals`]: eigenvalue sums, Riesz means, Beta function and the
//!   right-hand sides of the bounds.
//! - [`constructs`]: sign-pattern decomposition, Birman-Schwinger kernels,
//!   the `g_mu` density, operator convexity and Ky-Fan averaging.
//! - [`harness`]: seeded instance generation, verification reports and the
//!   property suites driven by the `jacobi-lt` binary.
//!
//! Every major capability has a runnable program under `examples/`:
//!
//! ```bash
//! cargo run -p jacobi-lt --example spectrum
//! ```

// Parameter checks are written as `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constructs;
pub mod eigen;
mod error;
pub mod functionals;
pub mod harness;
pub mod perturbation;

pub mod cli;

pub use error::{Error, Result};
pub use perturbation::{Perturbation, TruncatedTridiagonal};
