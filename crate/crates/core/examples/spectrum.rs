//! Discrete spectrum outside [-2, 2] for a few perturbations with known
//! eigenvalues, computed by Sturm bisection on doubling finite sections and
//! cross-checked against the exact boundary-closed count.
//!
//! ```bash
//! cargo run -p jacobi-lt --example spectrum
//! ```

use jacobi_lt::eigen::{boundary_closed_eigenvalues, eigenvalues_outside, EigenConfig};
use jacobi_lt::Perturbation;

pub fn main() {
    let cfg = EigenConfig::default();
    let cases = [
        (
            "single site b_0 = 1.5",
            Perturbation::potential(0, vec![1.5]).unwrap(),
            vec![2.5],
            vec![],
        ),
        (
            "single bond a_0 = 2",
            Perturbation::hopping(0, vec![2.0]).unwrap(),
            vec![2.5],
            vec![-2.5],
        ),
        (
            "b_0 = -1.5",
            Perturbation::potential(0, vec![-1.5]).unwrap(),
            vec![],
            vec![-2.5],
        ),
        ("free operator", Perturbation::free(), vec![], vec![]),
    ];
    for (name, p, plus, minus) in cases {
        let s = eigenvalues_outside(&p, &cfg).expect("converges");
        println!(
            "{name:24} E+ = {:?}  E- = {:?}  (half-width {}, movement {:.1e})",
            s.e_plus, s.e_minus, s.n_used, s.est_error
        );
        assert_eq!(s.e_plus.len(), plus.len());
        assert_eq!(s.e_minus.len(), minus.len());
        for (got, want) in s.iter().zip(plus.iter().chain(&minus)) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    // A weak potential binds a state barely above the edge; its decay length
    // is hundreds of sites, so the finite sections have to grow.
    let weak = Perturbation::potential(0, vec![0.02]).unwrap();
    let s = eigenvalues_outside(&weak, &cfg).unwrap();
    let (exact, _) = boundary_closed_eigenvalues(&weak, cfg.edge_buffer);
    println!(
        "weak potential b_0 = 0.02: E+ = {:.15} (boundary-closed {:.15}, half-width {})",
        s.e_plus[0], exact[0], s.n_used
    );
    assert!((s.e_plus[0] - (0.02f64 * 0.02 + 4.0).sqrt()).abs() < 1e-11);
}
