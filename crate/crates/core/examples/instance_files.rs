//! Instance files, the sandwich operators `J̃⁻ <= J <= J̃⁺` and the sign flip
//! `b -> -b`, which mirrors the spectrum.
//!
//! ```bash
//! cargo run -p jacobi-lt --example instance_files
//! ```

use jacobi_lt::eigen::{eigenvalues_outside, EigenConfig};
use jacobi_lt::perturbation::{negate_b, sandwich};
use jacobi_lt::Perturbation;

pub fn main() {
    let text = r#"{ "a_offset": 0, "a": [1.5, 0.5], "b_offset": -1, "b": [0.0, 0.7] }"#;
    let p = Perturbation::from_json_str(text).unwrap();
    let canonical = p.to_json_string();
    print!("canonical form:\n{canonical}");
    assert_eq!(Perturbation::from_json_str(&canonical).unwrap(), p);

    let s = sandwich(&p);
    println!("J~- : a = {:?}, b = {:?}", s.minus.a(), s.minus.b());
    println!("J~+ : a = {:?}, b = {:?}", s.plus.a(), s.plus.b());

    let cfg = EigenConfig::default();
    let spec = eigenvalues_outside(&p, &cfg).unwrap();
    let mirrored = eigenvalues_outside(&negate_b(&p), &cfg).unwrap();
    println!("spec J(a, b)  : +{:?} -{:?}", spec.e_plus, spec.e_minus);
    println!(
        "spec J(a, -b) : +{:?} -{:?}",
        mirrored.e_plus, mirrored.e_minus
    );
    for (x, y) in spec.e_plus.iter().zip(&mirrored.e_minus) {
        assert!((x + y).abs() < 1e-9);
    }
}
