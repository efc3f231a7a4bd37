//! Writes the hopping part with `0 <= a_n <= 1` as a convex combination of
//! sign-flipped copies of the free hopping, and checks that the weights
//! reproduce every bond.
//!
//! ```bash
//! cargo run -p jacobi-lt --example sign_decomposition
//! ```

use jacobi_lt::constructs::{reconstruct_offdiagonal, sign_pattern_decomposition};
use jacobi_lt::Perturbation;

pub fn main() {
    let p = Perturbation::new(-1, vec![0.5, 1.0, 0.0], 0, vec![1.0]).unwrap();
    let d = sign_pattern_decomposition(&p).unwrap();
    println!(
        "bonds with a < 1 at {:?}, kappa = {:?}",
        d.bond_positions, d.kappa
    );
    for term in &d.terms {
        let sites: Vec<i64> = (-1..=2).collect();
        println!(
            "  weight {:.4}  bond signs {:?}  site signs on {:?}: {:?}",
            term.weight,
            term.signs,
            sites,
            d.site_signs(term, &sites)
        );
    }
    let rebuilt = reconstruct_offdiagonal(&d);
    println!(
        "reconstructed bonds {rebuilt:?}, total weight {}",
        d.total_weight()
    );
    for (r, k) in rebuilt.iter().zip(&d.kappa) {
        assert!((r - k).abs() < 1e-12);
    }
    assert!((d.total_weight() - 1.0).abs() < 1e-12);
}
