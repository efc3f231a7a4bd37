use std::fmt::Write as _;
use std::io::{self, Write};

use serde::{Serialize, Serializer};

/// Which bound a report row checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    /// `Σ √(E²-4) <= Σ |b| + 4 Σ |a-1|`
    Eq1,
    /// `Σ √(E²-4) <= Σ |b| + 4 Σ (a-1)_+`
    Eq2,
    /// Riesz means of `E⁺` against `B(γ-1/2, 2) Σ (b̃⁺)^{γ+1/2}`
    Eq4Plus,
    /// Riesz means of `E⁻` against `B(γ-1/2, 2) Σ (b̃⁻)^{γ+1/2}`
    Eq4Minus,
    /// `Σ F(E)` against `Σ b² + 2 Σ G(a)²` (informational)
    Eq3Report,
    /// `Σ F(E)` against `Σ b² + 2 Σ G(a)` (informational)
    Eq3ReportUnsquared,
    /// Riesz means at `γ = 3/2` of both branches against `½ Σ F(E)`
    /// (informational)
    Eq3ReportRiesz,
    /// `2B(γ-1/2, 3/2)(|E|-2)^γ` against the Riesz mean of `E`, tightest
    /// eigenvalue
    RemarkPowerGamma,
    /// `B(γ-1/2, 2)(|E|-2)^{γ+1/2}` against the Riesz mean of `E`, tightest
    /// eigenvalue
    RemarkPowerGammaHalf,
}

impl Inequality {
    pub fn label(self) -> &'static str {
        match self {
            Inequality::Eq1 => "eq1",
            Inequality::Eq2 => "eq2",
            Inequality::Eq4Plus => "eq4_plus",
            Inequality::Eq4Minus => "eq4_minus",
            Inequality::Eq3Report => "eq3_report",
            Inequality::Eq3ReportUnsquared => "eq3_report_unsquared",
            Inequality::Eq3ReportRiesz => "eq3_report_riesz",
            Inequality::RemarkPowerGamma => "remark_power_gamma",
            Inequality::RemarkPowerGammaHalf => "remark_power_gamma_half",
        }
    }

    pub fn is_informational(self) -> bool {
        matches!(
            self,
            Inequality::Eq3Report | Inequality::Eq3ReportUnsquared | Inequality::Eq3ReportRiesz
        )
    }
}

/// Outcome of one row: JSON renders `true`, `false` or `"informational"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Informational,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "true",
            Verdict::Fail => "false",
            Verdict::Informational => "informational",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Pass => s.serialize_bool(true),
            Verdict::Fail => s.serialize_bool(false),
            Verdict::Informational => s.serialize_str("informational"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub instance_id: String,
    pub inequality: Inequality,
    pub gamma: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`
    pub margin: f64,
    pub n_used: usize,
    pub est_error: f64,
    pub pass: Verdict,
}

impl VerificationReport {
    /// Row with `pass` decided by `margin >= -tol`, or `Informational` for
    /// the informational comparisons.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        instance_id: &str,
        inequality: Inequality,
        gamma: Option<f64>,
        lhs: f64,
        rhs: f64,
        n_used: usize,
        est_error: f64,
        tol: f64,
    ) -> Self {
        let margin = rhs - lhs;
        let pass = if inequality.is_informational() {
            Verdict::Informational
        } else if margin >= -tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            instance_id: instance_id.to_string(),
            inequality,
            gamma,
            lhs,
            rhs,
            margin,
            n_used,
            est_error,
            pass,
        }
    }

    pub fn failed(&self) -> bool {
        self.pass == Verdict::Fail
    }
}

pub const REPORT_CSV_HEADER: &str =
    "instance_id,inequality,gamma,lhs,rhs,margin,n_used,est_error,pass";

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    out.push_str(REPORT_CSV_HEADER);
    out.push('\n');
    for r in reports {
        let gamma = r.gamma.map(fmt_real).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.instance_id,
            r.inequality.label(),
            gamma,
            fmt_real(r.lhs),
            fmt_real(r.rhs),
            fmt_real(r.margin),
            r.n_used,
            fmt_real(r.est_error),
            r.pass.label()
        )
        .expect("writing to a String");
    }
    out
}

/// Pretty JSON; non-finite numbers become `null`.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn write_all(out: &mut dyn Write, text: &str) -> io::Result<()> {
    out.write_all(text.as_bytes())?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows() {
        let r = VerificationReport::new("x", Inequality::Eq2, None, 1.5, 1.5, 33, 0.0, 1e-7);
        let i = VerificationReport::new(
            "x",
            Inequality::Eq3Report,
            Some(1.5),
            3.0,
            1.0,
            33,
            0.0,
            1e-7,
        );
        let csv = reports_to_csv(&[r, i]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], REPORT_CSV_HEADER);
        assert_eq!(
            lines[1],
            "x,eq2,,1.5000000000000000e0,1.5000000000000000e0,0.0000000000000000e0,33,0.0000000000000000e0,true"
        );
        assert!(lines[2].starts_with("x,eq3_report,1.5000000000000000e0,"));
        assert!(lines[2].ends_with(",informational"));
    }

    #[test]
    fn verdicts() {
        let fail = VerificationReport::new("x", Inequality::Eq1, None, 2.0, 1.0, 1, 0.0, 1e-7);
        assert!(fail.failed());
        let edge =
            VerificationReport::new("x", Inequality::Eq1, None, 1.0 + 5e-8, 1.0, 1, 0.0, 1e-7);
        assert!(!edge.failed());
        let json = to_json(&[fail]);
        assert!(json.contains("\"pass\": false"));
        assert!(json.contains("\"inequality\": \"eq1\""));
    }
}
