//! Runs every program under `examples/`; each asserts its own results.

#[path = "../examples/birman_schwinger.rs"]
mod birman_schwinger;
#[path = "../examples/gmu_semigroup.rs"]
mod gmu_semigroup;
#[path = "../examples/instance_files.rs"]
mod instance_files;
#[path = "../examples/kyfan_monotonicity.rs"]
mod kyfan_monotonicity;
#[path = "../examples/riesz_means.rs"]
mod riesz_means;
#[path = "../examples/sharpness.rs"]
mod sharpness;
#[path = "../examples/sign_decomposition.rs"]
mod sign_decomposition;
#[path = "../examples/spectrum.rs"]
mod spectrum;
#[path = "../examples/verify_random.rs"]
mod verify_random;

mod run {
    #[test]
    fn spectrum() {
        super::spectrum::main();
    }

    #[test]
    fn verify_random() {
        super::verify_random::main();
    }

    #[test]
    fn sharpness() {
        super::sharpness::main();
    }

    #[test]
    fn sign_decomposition() {
        super::sign_decomposition::main();
    }

    #[test]
    fn birman_schwinger() {
        super::birman_schwinger::main();
    }

    #[test]
    fn riesz_means() {
        super::riesz_means::main();
    }

    #[test]
    fn gmu_semigroup() {
        super::gmu_semigroup::main();
    }

    #[test]
    fn kyfan_monotonicity() {
        super::kyfan_monotonicity::main();
    }

    #[test]
    fn instance_files() {
        super::instance_files::main();
    }
}
