//! How tight the eigenvalue-sum bound is: a single enlarged bond
//! `a = 1 + 2^-k` gives the ratio `(a + 1)/(2a) -> 1`, a single site gives
//! equality.
//!
//! ```bash
//! cargo run -p jacobi-lt --example sharpness
//! ```

use jacobi_lt::eigen::EigenConfig;
use jacobi_lt::harness::sharpness::{dyadic_grid, sharpness_curve, sharpness_row, SharpnessMode};

pub fn main() {
    let cfg = EigenConfig::default();
    println!(
        "{:>14} {:>20} {:>20} {:>14}",
        "a", "sum sqrt(E^2-4)", "4(a-1)", "ratio"
    );
    let rows = sharpness_curve(SharpnessMode::Bond, &dyadic_grid(1, 10), &cfg).unwrap();
    for r in &rows {
        println!(
            "{:>14.10} {:>20.14e} {:>20.14e} {:>14.12}",
            r.param, r.lhs, r.rhs, r.ratio
        );
        assert!((r.ratio - r.ratio_closed).abs() < 1e-6);
    }
    assert!(rows.windows(2).all(|w| w[0].ratio < w[1].ratio));

    let site = sharpness_row(SharpnessMode::Site, 1.5, &cfg).unwrap();
    println!(
        "single site b = 1.5: lhs = {:.15}, rhs = {}, ratio = {:.15}",
        site.lhs, site.rhs, site.ratio
    );
}
