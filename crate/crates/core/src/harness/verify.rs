use super::report::{Inequality, VerificationReport};
use super::Instance;
use crate::eigen::{eigenvalues_outside, EigenConfig, SpectrumOutside};
use crate::functionals::{
    ks_lhs, ks_rhs_squared, ks_rhs_unsquared, lt_lhs_main, remark_lower_bounds, rhs_hs, rhs_main,
    riesz_lhs, riesz_mean, riesz_rhs, RieszConfig, Sign,
};
use crate::{Error, Result};

/// Default margin tolerance of the inequality checks.
pub const DEFAULT_TOL: f64 = 1e-7;

/// Default exponents of the Riesz-mean checks.
pub const DEFAULT_GAMMAS: [f64; 4] = [0.75, 1.0, 1.5, 2.5];

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub gammas: Vec<f64>,
    pub tol: f64,
    pub eigen: EigenConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            gammas: DEFAULT_GAMMAS.to_vec(),
            tol: DEFAULT_TOL,
            eigen: EigenConfig::default(),
        }
    }
}

/// Rejects exponents `γ <= 1/2`, where the Riesz means diverge.
pub fn check_gammas(gammas: &[f64]) -> Result<()> {
    match gammas.iter().find(|&&g| !(g > 0.5) || !g.is_finite()) {
        Some(g) => Err(Error::Domain(format!("gamma must exceed 1/2, got {g}"))),
        None => Ok(()),
    }
}

struct Rows<'a> {
    id: &'a str,
    spectrum: &'a SpectrumOutside,
    tol: f64,
    out: Vec<VerificationReport>,
}

impl Rows<'_> {
    fn push(&mut self, inequality: Inequality, gamma: Option<f64>, lhs: f64, rhs: f64) {
        self.out.push(VerificationReport::new(
            self.id,
            inequality,
            gamma,
            lhs,
            rhs,
            self.spectrum.n_used,
            self.spectrum.est_error,
            self.tol,
        ));
    }

    fn riesz(&mut self, p: &crate::Perturbation, gamma: f64) -> Result<()> {
        let cfg = RieszConfig::new(gamma);
        for (sign, label) in [
            (Sign::Plus, Inequality::Eq4Plus),
            (Sign::Minus, Inequality::Eq4Minus),
        ] {
            let lhs = riesz_lhs(self.spectrum, sign, &cfg)?;
            let rhs = riesz_rhs(p, gamma, sign)?;
            self.push(label, Some(gamma), lhs, rhs);
        }
        Ok(())
    }

    /// One row per lower bound: the eigenvalue where the bound comes
    /// closest to its Riesz mean, or zeros without eigenvalues.
    fn remark(&mut self, gamma: f64) -> Result<()> {
        let cfg = RieszConfig::new(gamma);
        let mut worst = [(0.0, 0.0); 2];
        let mut worst_margin = [f64::INFINITY; 2];
        for e in self.spectrum.iter() {
            let mean = riesz_mean(e, &cfg)?;
            let (first, second) = remark_lower_bounds(e, gamma)?;
            for (k, bound) in [first, second].into_iter().enumerate() {
                if mean - bound < worst_margin[k] {
                    worst_margin[k] = mean - bound;
                    worst[k] = (bound, mean);
                }
            }
        }
        self.push(
            Inequality::RemarkPowerGamma,
            Some(gamma),
            worst[0].0,
            worst[0].1,
        );
        self.push(
            Inequality::RemarkPowerGammaHalf,
            Some(gamma),
            worst[1].0,
            worst[1].1,
        );
        Ok(())
    }
}

/// eq1, eq2, eq4 (both branches, every `γ`) and the informational eq3
/// comparisons for one instance. The eq4 rows are skipped when some
/// `a_n < 0`, where the Riesz bound is not claimed.
pub fn verify_instance(inst: &Instance, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    check_gammas(&opts.gammas)?;
    let p = &inst.perturbation;
    let spectrum = eigenvalues_outside(p, &opts.eigen)?;
    let mut rows = Rows {
        id: &inst.id,
        spectrum: &spectrum,
        tol: opts.tol,
        out: Vec::new(),
    };
    let lhs = lt_lhs_main(&spectrum);
    rows.push(Inequality::Eq1, None, lhs, rhs_hs(p));
    rows.push(Inequality::Eq2, None, lhs, rhs_main(p));
    if p.a().iter().all(|&a| a >= 0.0) {
        for &gamma in &opts.gammas {
            rows.riesz(p, gamma)?;
        }
    }
    let f_sum = ks_lhs(&spectrum);
    rows.push(Inequality::Eq3Report, None, f_sum, ks_rhs_squared(p));
    rows.push(
        Inequality::Eq3ReportUnsquared,
        None,
        f_sum,
        ks_rhs_unsquared(p),
    );
    let three_halves = RieszConfig::new(1.5);
    let riesz_both = riesz_lhs(&spectrum, Sign::Plus, &three_halves)?
        + riesz_lhs(&spectrum, Sign::Minus, &three_halves)?;
    rows.push(
        Inequality::Eq3ReportRiesz,
        Some(1.5),
        riesz_both,
        0.5 * f_sum,
    );
    Ok(rows.out)
}

/// eq4 rows and the two lower-bound rows for every `γ` of the grid.
pub fn sweep_instance(inst: &Instance, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    check_gammas(&opts.gammas)?;
    let p = &inst.perturbation;
    if let Some((n, a)) = p.bonds().find(|&(_, a)| a < 0.0) {
        return Err(Error::Precondition(format!(
            "Riesz bounds need a >= 0, got a_{n} = {a}"
        )));
    }
    let spectrum = eigenvalues_outside(p, &opts.eigen)?;
    let mut rows = Rows {
        id: &inst.id,
        spectrum: &spectrum,
        tol: opts.tol,
        out: Vec::new(),
    };
    for &gamma in &opts.gammas {
        rows.riesz(p, gamma)?;
        rows.remark(gamma)?;
    }
    Ok(rows.out)
}
