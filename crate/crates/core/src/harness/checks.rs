use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;

use super::model::RandomModel;
use super::par_map;
use super::report::fmt_real;
use super::rng::SplitMix64;
use crate::constructs::{
    averaged_l_mu, birman_schwinger, convolve_g, fourier_g, g_mu_eval, kyfan_averaging_check, l_mu,
    l_mu_free_closed_form, operator_convexity_gap, positive_sites, reconstruct_offdiagonal,
    resolvent_half_width, s_n_curve, sign_pattern_decomposition, GmuDensity,
};
use crate::eigen::{dense_eigenvalues, eigenvalues_outside, DenseSymmetric, EigenConfig};
use crate::functionals::mu_of_e;
use crate::{Error, Perturbation, Result};

/// Property suites over the proof constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Decomposition,
    Bs,
    Smu,
    Gmu,
    Convexity,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Decomposition,
        Suite::Bs,
        Suite::Smu,
        Suite::Gmu,
        Suite::Convexity,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Suite::Decomposition => "decomposition",
            Suite::Bs => "bs",
            Suite::Smu => "smu",
            Suite::Gmu => "gmu",
            Suite::Convexity => "convexity",
        }
    }

    /// `all` or one suite name.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.label() == s)
            .map(|suite| vec![suite])
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown suite '{s}' (expected all, decomposition, bs, smu, gmu or convexity)"
                ))
            })
    }
}

/// Pass/fail summary of one property over a suite's cases. `worst` is the
/// largest violation measure seen; a case fails when it exceeds `tol`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub suite: Suite,
    pub check: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub worst: f64,
    pub tol: f64,
    pub pass: bool,
    /// The first few failing cases with their seeds and data.
    pub details: Vec<String>,
}

const MAX_DETAILS: usize = 5;

struct Tally {
    suite: Suite,
    check: &'static str,
    tol: f64,
    cases: usize,
    failures: usize,
    worst: f64,
    details: Vec<String>,
}

impl Tally {
    fn new(suite: Suite, check: &'static str, tol: f64) -> Self {
        Tally {
            suite,
            check,
            tol,
            cases: 0,
            failures: 0,
            worst: 0.0,
            details: Vec::new(),
        }
    }

    fn record(&mut self, violation: f64, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if violation > self.worst || violation.is_nan() {
            self.worst = violation;
        }
        if !(violation <= self.tol) {
            self.failures += 1;
            if self.details.len() < MAX_DETAILS {
                self.details.push(detail());
            }
        }
    }

    fn finish(self) -> CheckSummary {
        CheckSummary {
            suite: self.suite,
            check: self.check,
            cases: self.cases,
            failures: self.failures,
            worst: self.worst,
            tol: self.tol,
            pass: self.failures == 0 && self.cases > 0,
            details: self.details,
        }
    }
}

/// Case counts and tolerances of the suites. `tol` overrides every
/// per-check tolerance when set.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub tol: Option<f64>,
    pub decomposition_cases: u64,
    pub bs_cases: u64,
    pub smu_cases: u64,
    pub convexity_cases: u64,
}

impl SuiteOptions {
    pub fn new(seed: u64) -> Self {
        SuiteOptions {
            seed,
            tol: None,
            decomposition_cases: 200,
            bs_cases: 100,
            smu_cases: 200,
            convexity_cases: 200,
        }
    }

    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

/// `μ` grid of the monotonicity check.
pub const S_N_GRID: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

fn describe(p: &Perturbation) -> String {
    p.to_json_string()
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
}

fn matrix(m: &DenseSymmetric) -> String {
    format!("{:?}", m.rows())
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<CheckSummary>> {
    match suite {
        Suite::Decomposition => decomposition_suite(opts),
        Suite::Bs => bs_suite(opts),
        Suite::Smu => smu_suite(opts),
        Suite::Gmu => Ok(gmu_suite(opts)),
        Suite::Convexity => convexity_suite(opts),
    }
}

/// Reconstruction `Σ λ_σ σ_i = κ_i` and `Σ λ_σ = 1`, `λ_σ >= 0`.
pub fn decomposition_suite(opts: &SuiteOptions) -> Result<Vec<CheckSummary>> {
    let model = RandomModel::constructs(opts.seed);
    let mut recon = Tally::new(Suite::Decomposition, "reconstruction", opts.tol(1e-12));
    let mut weights = Tally::new(Suite::Decomposition, "weights", opts.tol(1e-12));
    for i in 0..opts.decomposition_cases {
        let p = model.instance(i)?;
        let d = sign_pattern_decomposition(&p)?;
        let err = reconstruct_offdiagonal(&d)
            .iter()
            .zip(&d.kappa)
            .map(|(r, k)| (r - k).abs())
            .fold(0.0, f64::max);
        let id = model.instance_id(i);
        recon.record(err, || format!("{id}: {}", describe(&p)));
        let negative = d.terms.iter().map(|t| -t.weight).fold(0.0, f64::max);
        weights.record((d.total_weight() - 1.0).abs().max(negative), || {
            format!("{id}: total {}", d.total_weight())
        });
    }
    Ok(vec![recon.finish(), weights.finish()])
}

/// Each `E_j⁺` is where the `j`-th eigenvalue of `K(A; E)` crosses one; the
/// resolvent route to `L_μ` matches the closed form for `a ≡ 1`; and `L_μ`
/// is dominated eigenvalue-wise by the sign average.
pub fn bs_suite(opts: &SuiteOptions) -> Result<Vec<CheckSummary>> {
    let model = RandomModel::constructs(opts.seed);
    let cfg = EigenConfig::default();
    let mut bs = Tally::new(Suite::Bs, "birman_schwinger", opts.tol(1e-6));
    let mut kernel = Tally::new(Suite::Bs, "kernel_agreement", opts.tol(1e-8));
    let mut dominated = Tally::new(Suite::Bs, "domination", opts.tol(1e-8));

    let per_instance = par_map((0..opts.bs_cases).collect(), |&i| -> Result<_> {
        let p = model.instance(i)?;
        let sites = positive_sites(&p)?;
        let s = eigenvalues_outside(&p, &cfg)?;
        let mut bs_errors = Vec::new();
        for (j, &e) in s.e_plus.iter().enumerate() {
            let mu = mu_of_e(e)?.mu;
            let k = birman_schwinger(&p, e, resolvent_half_width(&p, mu))?;
            let values = dense_eigenvalues(&k, &cfg)?;
            let jth = values
                .get(values.len().wrapping_sub(j + 1))
                .copied()
                .unwrap_or(f64::NAN);
            bs_errors.push((e, (jth - 1.0).abs(), values));
        }

        let free = Perturbation::potential(p.b_offset(), p.b().to_vec())?;
        let d = sign_pattern_decomposition(&p)?;
        let mut kernel_errors = Vec::new();
        let mut domination = Vec::new();
        for mu in [0.2, 0.5, 0.8] {
            let via_resolvent = l_mu(&free, mu, resolvent_half_width(&free, mu))?;
            let closed = l_mu_free_closed_form(&sites, mu)?;
            kernel_errors.push((mu, via_resolvent.max_abs_diff(&closed)));

            let actual = dense_eigenvalues(&l_mu(&p, mu, resolvent_half_width(&p, mu))?, &cfg)?;
            let averaged = dense_eigenvalues(&averaged_l_mu(&d, &sites, mu)?, &cfg)?;
            let excess = actual
                .iter()
                .zip(&averaged)
                .map(|(x, y)| x - y)
                .fold(0.0, f64::max);
            domination.push((mu, excess, actual, averaged));
        }
        Ok((p, bs_errors, kernel_errors, domination))
    });

    for (i, result) in (0..opts.bs_cases).zip(per_instance) {
        let (p, bs_errors, kernel_errors, domination) = result?;
        let id = model.instance_id(i);
        for (e, err, values) in bs_errors {
            bs.record(err, || {
                format!("{id}: E = {e}, K eigenvalues {values:?}, {}", describe(&p))
            });
        }
        for (mu, err) in kernel_errors {
            kernel.record(err, || format!("{id}: mu = {mu}, {}", describe(&p)));
        }
        for (mu, excess, actual, averaged) in domination {
            dominated.record(excess, || {
                format!(
                    "{id}: mu = {mu}, L {actual:?} vs averaged {averaged:?}, {}",
                    describe(&p)
                )
            });
        }
    }
    Ok(vec![bs.finish(), kernel.finish(), dominated.finish()])
}

/// `S_n(μ)` is non-decreasing on the grid, `S_all(1) = Σ b`, and `S_n` is
/// unchanged when every bond sign is flipped.
pub fn smu_suite(opts: &SuiteOptions) -> Result<Vec<CheckSummary>> {
    let model = RandomModel::constructs(opts.seed);
    let mut mono = Tally::new(Suite::Smu, "monotonicity", opts.tol(1e-10));
    let mut trace = Tally::new(Suite::Smu, "trace_step", opts.tol(1e-10));
    let mut even = Tally::new(Suite::Smu, "evenness", opts.tol(1e-10));
    for i in 0..opts.smu_cases {
        let p = model.instance(i)?;
        let id = model.instance_id(i);
        let sites = positive_sites(&p)?;
        let d = sign_pattern_decomposition(&p)?;
        let flipped = d.negated();
        for n in 1..=sites.len() {
            let curve = s_n_curve(&d, &sites, n, &S_N_GRID)?;
            let drop = curve.windows(2).map(|w| w[0] - w[1]).fold(0.0, f64::max);
            mono.record(drop, || {
                format!("{id}: n = {n}, curve {curve:?}, {}", describe(&p))
            });
            let other = s_n_curve(&flipped, &sites, n, &S_N_GRID)?;
            let diff = curve
                .iter()
                .zip(&other)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            even.record(diff, || format!("{id}: n = {n}, {curve:?} vs {other:?}"));
            if n == sites.len() {
                let total: f64 = sites.iter().map(|&(_, b)| b).sum();
                let at_one = *curve.last().expect("grid ends at 1");
                trace.record((at_one - total).abs(), || {
                    format!("{id}: S(1) = {at_one}, Σb = {total}")
                });
            }
        }
    }
    Ok(vec![mono.finish(), trace.finish(), even.finish()])
}

/// `(ĝ_μ)_n = μ^{|n|}` for `|n| <= 12`, and `g_ν * g_{μ/ν} = g_μ` on a
/// 256-point grid.
pub fn gmu_suite(opts: &SuiteOptions) -> Vec<CheckSummary> {
    let mut fourier = Tally::new(Suite::Gmu, "fourier", opts.tol(1e-10));
    for mu in [0.3, 0.5, 0.7] {
        let g = GmuDensity::new(mu).expect("mu in (0, 1)");
        for n in -12i64..=12 {
            let got = fourier_g(&g, n);
            let want = mu.powi(n.unsigned_abs() as i32);
            fourier.record((got - want).abs(), || {
                format!("mu = {mu}, n = {n}: {got} vs {want}")
            });
        }
    }
    let mut conv = Tally::new(Suite::Gmu, "convolution", opts.tol(1e-8));
    for (mu, nu) in [(0.25, 0.5), (0.35, 0.7)] {
        let target = GmuDensity::new(mu).expect("mu in (0, 1)");
        let outer = GmuDensity::new(nu).expect("nu in (0, 1)");
        let inner = GmuDensity::new(mu / nu).expect("mu / nu in (0, 1)");
        for i in 0..256 {
            let k = -PI + 2.0 * PI * i as f64 / 256.0;
            let got = convolve_g(&outer, &inner, k);
            let want = g_mu_eval(&target, k) / (2.0 * PI).sqrt();
            conv.record((got - want).abs(), || {
                format!("mu = {mu}, nu = {nu}, k = {k}: {got} vs {want}")
            });
        }
    }
    vec![fourier.finish(), conv.finish()]
}

/// Symmetric matrix with entries uniform in `[-1, 1]`.
pub fn random_symmetric(rng: &mut SplitMix64, dim: usize) -> DenseSymmetric {
    let mut upper = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in i..dim {
            upper[i * dim + j] = rng.uniform(-1.0, 1.0);
        }
    }
    DenseSymmetric::from_fn(dim, |i, j| upper[i * dim + j])
}

/// `G Gᵀ` for `G` with entries uniform in `[-1, 1]`.
pub fn random_psd(rng: &mut SplitMix64, dim: usize) -> DenseSymmetric {
    let g: Vec<f64> = (0..dim * dim).map(|_| rng.uniform(-1.0, 1.0)).collect();
    DenseSymmetric::from_fn(dim, |i, j| {
        (0..dim).map(|k| g[i * dim + k] * g[j * dim + k]).sum()
    })
}

/// One to four `±1` diagonals with random convex weights.
pub fn random_conjugators(rng: &mut SplitMix64, dim: usize) -> Vec<(f64, Vec<f64>)> {
    let count = rng.int_inclusive(1, 4) as usize;
    let raw: Vec<f64> = (0..count).map(|_| rng.uniform(0.05, 1.0)).collect();
    let total: f64 = raw.iter().sum();
    raw.iter()
        .map(|w| (w / total, (0..dim).map(|_| rng.sign()).collect()))
        .collect()
}

/// Operator convexity of `X ↦ (β - X)^{-1}` on random symmetric pairs and
/// Ky-Fan monotonicity under `±1` diagonal averaging on random PSD matrices.
pub fn convexity_suite(opts: &SuiteOptions) -> Result<Vec<CheckSummary>> {
    let cfg = EigenConfig::default();
    let mut convex = Tally::new(Suite::Convexity, "operator_convexity", opts.tol(1e-10));
    let mut kyfan = Tally::new(Suite::Convexity, "kyfan_averaging", opts.tol(1e-10));
    for i in 0..opts.convexity_cases {
        let mut rng = SplitMix64::for_instance(opts.seed, i);
        let dim = rng.int_inclusive(1, 8) as usize;
        let x1 = random_symmetric(&mut rng, dim);
        let x2 = random_symmetric(&mut rng, dim);
        let top = |m: &DenseSymmetric| -> Result<f64> {
            Ok(*dense_eigenvalues(m, &cfg)?.last().expect("dim >= 1"))
        };
        let beta = top(&x1)?.max(top(&x2)?) + rng.uniform(0.05, 2.0);
        let lam = rng.next_f64();
        let gap = operator_convexity_gap(&x1, &x2, beta, lam, &cfg)?;
        convex.record((-gap).max(0.0), || {
            format!(
                "seed {} case {i}: beta = {beta}, lambda = {lam}, x1 = {}, x2 = {}",
                opts.seed,
                matrix(&x1),
                matrix(&x2)
            )
        });

        let dim = rng.int_inclusive(1, 8) as usize;
        let t = random_psd(&mut rng, dim);
        let conj = random_conjugators(&mut rng, dim);
        for n in 1..=dim {
            let (averaged, original) = kyfan_averaging_check(&t, &conj, n, &cfg)?;
            kyfan.record((averaged - original).max(0.0), || {
                format!(
                    "seed {} case {i}: n = {n}, t = {}, conjugators {conj:?}",
                    opts.seed,
                    matrix(&t)
                )
            });
        }
    }
    Ok(vec![convex.finish(), kyfan.finish()])
}

pub const CHECKS_CSV_HEADER: &str = "suite,check,cases,failures,worst,tol,pass";

pub fn checks_to_csv(checks: &[CheckSummary]) -> String {
    let mut out = String::from(CHECKS_CSV_HEADER);
    out.push('\n');
    for c in checks {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            c.suite.label(),
            c.check,
            c.cases,
            c.failures,
            fmt_real(c.worst),
            fmt_real(c.tol),
            c.pass
        )
        .expect("writing to a String");
    }
    out
}
