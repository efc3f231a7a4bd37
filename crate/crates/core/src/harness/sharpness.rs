use std::fmt::Write as _;

use serde::Serialize;

use super::report::fmt_real;
use crate::eigen::{eigenvalues_outside, EigenConfig};
use crate::functionals::{lt_lhs_main, rhs_main};
use crate::{Error, Perturbation, Result};

/// One-parameter family probing how tight the eigenvalue-sum bound is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SharpnessMode {
    /// a single bond `a_0 = a > 1`; closed form `lhs = 2(a - 1/a)`,
    /// `rhs = 4(a - 1)`, ratio `(a + 1)/(2a)`
    Bond,
    /// a single site `b_0 = b`; `lhs = rhs = |b|`
    Site,
}

impl SharpnessMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "bond" => Ok(SharpnessMode::Bond),
            "site" => Ok(SharpnessMode::Site),
            other => Err(Error::Parse(format!(
                "unknown mode '{other}' (expected bond or site)"
            ))),
        }
    }

    pub fn default_grid(self) -> Vec<f64> {
        match self {
            SharpnessMode::Bond => dyadic_grid(1, 10),
            SharpnessMode::Site => vec![0.5, 1.0, 1.5, 2.0],
        }
    }
}

/// `1 + 2^{-k}` for `k = from..=to`.
pub fn dyadic_grid(from: i32, to: i32) -> Vec<f64> {
    (from..=to).map(|k| 1.0 + 2f64.powi(-k)).collect()
}

/// Parses `dyadic:K1..K2` or a comma-separated list of numbers.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || {
        Error::Parse(format!(
            "bad grid '{spec}' (use dyadic:K1..K2 or v1,v2,...)"
        ))
    };
    if let Some(range) = spec.strip_prefix("dyadic:") {
        let (a, b) = range.split_once("..").ok_or_else(bad)?;
        let a: i32 = a.trim().parse().map_err(|_| bad())?;
        let b: i32 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok(dyadic_grid(a, b));
    }
    let values: Vec<f64> = spec
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
        return Err(bad());
    }
    Ok(values)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessRow {
    pub mode: SharpnessMode,
    pub param: f64,
    /// eigenvalue sum from the solver
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub lhs_closed: f64,
    pub ratio_closed: f64,
    pub e_plus: Vec<f64>,
    pub e_minus: Vec<f64>,
    pub n_used: usize,
    pub est_error: f64,
}

pub fn sharpness_row(mode: SharpnessMode, param: f64, cfg: &EigenConfig) -> Result<SharpnessRow> {
    let (p, lhs_closed, ratio_closed) = match mode {
        SharpnessMode::Bond => {
            if !(param > 1.0) {
                return Err(Error::Domain(format!("bond mode needs a > 1, got {param}")));
            }
            let lhs = 2.0 * (param - 1.0 / param);
            (
                Perturbation::hopping(0, vec![param])?,
                lhs,
                (param + 1.0) / (2.0 * param),
            )
        }
        SharpnessMode::Site => {
            if param == 0.0 {
                return Err(Error::Domain("site mode needs b != 0".into()));
            }
            (Perturbation::potential(0, vec![param])?, param.abs(), 1.0)
        }
    };
    let s = eigenvalues_outside(&p, cfg)?;
    let lhs = lt_lhs_main(&s);
    let rhs = rhs_main(&p);
    Ok(SharpnessRow {
        mode,
        param,
        lhs,
        rhs,
        ratio: lhs / rhs,
        lhs_closed,
        ratio_closed,
        e_plus: s.e_plus,
        e_minus: s.e_minus,
        n_used: s.n_used,
        est_error: s.est_error,
    })
}

pub fn sharpness_curve(
    mode: SharpnessMode,
    grid: &[f64],
    cfg: &EigenConfig,
) -> Result<Vec<SharpnessRow>> {
    grid.iter().map(|&x| sharpness_row(mode, x, cfg)).collect()
}

pub const SHARPNESS_CSV_HEADER: &str =
    "mode,param,lhs,rhs,ratio,lhs_closed,ratio_closed,n_used,est_error";

pub fn sharpness_to_csv(rows: &[SharpnessRow]) -> String {
    let mut out = String::from(SHARPNESS_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let mode = match r.mode {
            SharpnessMode::Bond => "bond",
            SharpnessMode::Site => "site",
        };
        writeln!(
            out,
            "{mode},{},{},{},{},{},{},{},{}",
            fmt_real(r.param),
            fmt_real(r.lhs),
            fmt_real(r.rhs),
            fmt_real(r.ratio),
            fmt_real(r.lhs_closed),
            fmt_real(r.ratio_closed),
            r.n_used,
            fmt_real(r.est_error)
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bond_family_approaches_one() {
        let rows = sharpness_curve(
            SharpnessMode::Bond,
            &dyadic_grid(1, 10),
            &EigenConfig::default(),
        )
        .unwrap();
        for r in &rows {
            assert!((r.ratio - r.ratio_closed).abs() < 1e-6);
        }
        assert!(rows.windows(2).all(|w| w[0].ratio < w[1].ratio));
        let two = sharpness_row(SharpnessMode::Bond, 2.0, &EigenConfig::default()).unwrap();
        assert!((two.ratio - 0.75).abs() < 1e-10);
    }

    #[test]
    fn site_is_sharp() {
        let r = sharpness_row(SharpnessMode::Site, 1.5, &EigenConfig::default()).unwrap();
        assert!((r.ratio - 1.0).abs() < 1e-8);
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("dyadic:1..2").unwrap(), vec![1.5, 1.25]);
        assert_eq!(parse_grid("2, 3").unwrap(), vec![2.0, 3.0]);
        assert!(parse_grid("dyadic:3..1").is_err());
        assert!(parse_grid("x").is_err());
    }
}
