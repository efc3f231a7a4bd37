use serde::Serialize;

use super::rng::SplitMix64;
use crate::perturbation::Perturbation;
use crate::{Error, Result};

/// Sites and bonds of random instances are drawn from `[-SUPPORT, SUPPORT]`.
pub const SUPPORT: i64 = 10;

/// Parameters of the random perturbation generator.
///
/// An instance draws a number of perturbed sites from `b_sites` and of
/// perturbed bonds from `a_bonds`. Each set is, with equal probability, a
/// contiguous block or scattered over `[-10, 10]`. Potentials are uniform in
/// `[-b_magnitude, b_magnitude]` (or `[0, b_magnitude]` without
/// `allow_negative_b`); perturbed bonds are uniform in `[a_low, a_high]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomModel {
    pub seed: u64,
    pub b_sites: (usize, usize),
    pub b_magnitude: f64,
    pub a_bonds: (usize, usize),
    pub a_low: f64,
    pub a_high: f64,
    pub allow_negative_b: bool,
}

impl RandomModel {
    /// Defaults for the eigenvalue-sum bounds: 1-9 sites with `|b| <= 2`,
    /// 0-8 bonds with `a ∈ [0, 2]`.
    pub fn new(seed: u64) -> Self {
        RandomModel {
            seed,
            b_sites: (1, 9),
            b_magnitude: 2.0,
            a_bonds: (0, 8),
            a_low: 0.0,
            a_high: 2.0,
            allow_negative_b: true,
        }
    }

    /// Non-negative potentials and `a ∈ [0, 1]`, the setting of the
    /// decomposition and Birman-Schwinger constructions.
    pub fn constructs(seed: u64) -> Self {
        RandomModel {
            a_high: 1.0,
            allow_negative_b: false,
            ..RandomModel::new(seed)
        }
    }

    /// Named presets: `default` and `constructs`.
    pub fn preset(name: &str, seed: u64) -> Result<Self> {
        match name {
            "default" => Ok(RandomModel::new(seed)),
            "constructs" => Ok(RandomModel::constructs(seed)),
            other => Err(Error::Parse(format!(
                "unknown model '{other}' (expected default or constructs)"
            ))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let width = (2 * SUPPORT + 1) as usize;
        let ok = self.b_sites.0 <= self.b_sites.1
            && self.b_sites.1 <= width
            && self.a_bonds.0 <= self.a_bonds.1
            && self.a_bonds.1 <= width
            && self.b_magnitude.is_finite()
            && self.b_magnitude >= 0.0
            && self.a_low.is_finite()
            && self.a_high.is_finite()
            && self.a_low <= self.a_high;
        if !ok {
            return Err(Error::Domain(format!("invalid random model {self:?}")));
        }
        Ok(())
    }

    fn positions(rng: &mut SplitMix64, count: usize) -> Vec<i64> {
        if count == 0 {
            return Vec::new();
        }
        if rng.coin() {
            let start = rng.int_inclusive(-SUPPORT, SUPPORT - count as i64 + 1);
            (start..start + count as i64).collect()
        } else {
            rng.distinct_sorted(-SUPPORT, SUPPORT, count)
        }
    }

    /// Instance `index`; depends only on the model and `index`.
    pub fn instance(&self, index: u64) -> Result<Perturbation> {
        self.validate()?;
        let mut rng = SplitMix64::for_instance(self.seed, index);

        let nb = rng.int_inclusive(self.b_sites.0 as i64, self.b_sites.1 as i64) as usize;
        let sites = Self::positions(&mut rng, nb);
        let b_lo = if self.allow_negative_b {
            -self.b_magnitude
        } else {
            0.0
        };
        let site_values: Vec<f64> = sites
            .iter()
            .map(|_| rng.uniform(b_lo, self.b_magnitude))
            .collect();

        let na = rng.int_inclusive(self.a_bonds.0 as i64, self.a_bonds.1 as i64) as usize;
        let bonds = Self::positions(&mut rng, na);
        let bond_values: Vec<f64> = bonds
            .iter()
            .map(|_| rng.uniform(self.a_low, self.a_high))
            .collect();

        let (b_offset, b) = fill_window(&sites, &site_values, 0.0);
        let (a_offset, a) = fill_window(&bonds, &bond_values, 1.0);
        Perturbation::new(a_offset, a, b_offset, b)
    }

    pub fn instance_id(&self, index: u64) -> String {
        format!("s{}-{:04}", self.seed, index)
    }
}

/// Dense window covering the given positions, `background` elsewhere.
fn fill_window(positions: &[i64], values: &[f64], background: f64) -> (i64, Vec<f64>) {
    match (positions.first(), positions.last()) {
        (Some(&lo), Some(&hi)) => {
            let mut window = vec![background; (hi - lo + 1) as usize];
            for (&n, &v) in positions.iter().zip(values) {
                window[(n - lo) as usize] = v;
            }
            (lo, window)
        }
        _ => (0, Vec::new()),
    }
}
