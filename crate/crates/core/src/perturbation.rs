//! Finitely supported perturbations of the free Jacobi operator.
//!
//! A [`Perturbation`] stores two windows of lattice values: off-diagonal
//! entries `a_n` (implicitly 1 outside the window) and diagonal entries `b_n`
//! (implicitly 0 outside). Bond `n` couples sites `n` and `n + 1`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Maximum number of bonds with `a_n < 1` in one instance. The sign-pattern
/// decomposition enumerates `2^m` terms over these bonds.
pub const MAX_SUB_UNIT_BONDS: usize = 20;

/// Deviation `{a_n, b_n}` from the free Jacobi operator, kept in canonical
/// (trimmed) form so that equality of instances is structural.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "InstanceFile", into = "InstanceFile")]
pub struct Perturbation {
    a_offset: i64,
    a: Vec<f64>,
    b_offset: i64,
    b: Vec<f64>,
}

/// On-disk instance layout. Missing keys mean empty windows.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    #[serde(default)]
    a_offset: i64,
    #[serde(default)]
    a: Vec<f64>,
    #[serde(default)]
    b_offset: i64,
    #[serde(default)]
    b: Vec<f64>,
}

impl TryFrom<InstanceFile> for Perturbation {
    type Error = Error;

    fn try_from(raw: InstanceFile) -> Result<Self> {
        Perturbation::new(raw.a_offset, raw.a, raw.b_offset, raw.b)
    }
}

impl From<Perturbation> for InstanceFile {
    fn from(p: Perturbation) -> Self {
        InstanceFile {
            a_offset: p.a_offset,
            a: p.a,
            b_offset: p.b_offset,
            b: p.b,
        }
    }
}

/// Strip leading and trailing entries equal to `neutral`, shifting the
/// offset. An emptied window gets offset 0.
fn trim(offset: i64, mut values: Vec<f64>, neutral: f64) -> (i64, Vec<f64>) {
    let Some(first) = values.iter().position(|&v| v != neutral) else {
        return (0, Vec::new());
    };
    let last = values.iter().rposition(|&v| v != neutral).unwrap();
    values.truncate(last + 1);
    values.drain(..first);
    (offset + first as i64, values)
}

fn check_finite(field: &'static str, offset: i64, values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(i) => Err(Error::NonFinite {
            field,
            index: offset + i as i64,
        }),
        None => Ok(()),
    }
}

impl Perturbation {
    /// Validate and canonicalise a perturbation; `a[i]` is `a_{a_offset + i}`
    /// and `b[i]` is `b_{b_offset + i}`.
    pub fn new(a_offset: i64, a: Vec<f64>, b_offset: i64, b: Vec<f64>) -> Result<Self> {
        check_finite("a", a_offset, &a)?;
        check_finite("b", b_offset, &b)?;
        let (a_offset, a) = trim(a_offset, a, 1.0);
        let (b_offset, b) = trim(b_offset, b, 0.0);
        let sub_unit = a.iter().filter(|&&v| v < 1.0).count();
        if sub_unit > MAX_SUB_UNIT_BONDS {
            return Err(Error::TooManyBonds {
                count: sub_unit,
                cap: MAX_SUB_UNIT_BONDS,
            });
        }
        Ok(Perturbation {
            a_offset,
            a,
            b_offset,
            b,
        })
    }

    /// The free operator `a ≡ 1`, `b ≡ 0`.
    pub fn free() -> Self {
        Perturbation {
            a_offset: 0,
            a: Vec::new(),
            b_offset: 0,
            b: Vec::new(),
        }
    }

    /// Diagonal-only perturbation.
    pub fn potential(b_offset: i64, b: Vec<f64>) -> Result<Self> {
        Self::new(0, Vec::new(), b_offset, b)
    }

    /// Off-diagonal-only perturbation.
    pub fn hopping(a_offset: i64, a: Vec<f64>) -> Result<Self> {
        Self::new(a_offset, a, 0, Vec::new())
    }

    pub fn a_offset(&self) -> i64 {
        self.a_offset
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b_offset(&self) -> i64 {
        self.b_offset
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn is_free(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    /// `a_n`, equal to 1 off the stored window.
    pub fn a_at(&self, n: i64) -> f64 {
        window_at(self.a_offset, &self.a, n).unwrap_or(1.0)
    }

    /// `b_n`, equal to 0 off the stored window.
    pub fn b_at(&self, n: i64) -> f64 {
        window_at(self.b_offset, &self.b, n).unwrap_or(0.0)
    }

    /// Stored bonds as `(n, a_n)`; bond `n` couples sites `n` and `n + 1`.
    pub fn bonds(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let off = self.a_offset;
        self.a
            .iter()
            .enumerate()
            .map(move |(i, &v)| (off + i as i64, v))
    }

    /// Stored sites as `(n, b_n)`.
    pub fn sites(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let off = self.b_offset;
        self.b
            .iter()
            .enumerate()
            .map(move |(i, &v)| (off + i as i64, v))
    }

    /// Smallest half-width accepted by [`truncate`]: every stored site lies in
    /// `[-N + 1, N - 1]` and both ends of every stored bond do too.
    pub fn support_radius(&self) -> usize {
        let mut radius = 1i64;
        if !self.b.is_empty() {
            let lo = self.b_offset;
            let hi = self.b_offset + self.b.len() as i64 - 1;
            radius = radius.max(1 - lo).max(hi + 1);
        }
        if !self.a.is_empty() {
            let lo = self.a_offset;
            let hi = self.a_offset + self.a.len() as i64 - 1;
            radius = radius.max(1 - lo).max(hi + 2);
        }
        radius as usize
    }

    /// Number of lattice sites spanned by the union of both windows.
    pub fn support_width(&self) -> usize {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        if !self.b.is_empty() {
            lo = lo.min(self.b_offset);
            hi = hi.max(self.b_offset + self.b.len() as i64 - 1);
        }
        if !self.a.is_empty() {
            lo = lo.min(self.a_offset);
            hi = hi.max(self.a_offset + self.a.len() as i64);
        }
        if lo > hi {
            0
        } else {
            (hi - lo + 1) as usize
        }
    }

    /// Parse an instance from its JSON text.
    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical instance file text (pretty JSON, trailing newline).
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serialises");
        s.push('\n');
        s
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json_string())?;
        Ok(())
    }
}

fn window_at(offset: i64, values: &[f64], n: i64) -> Option<f64> {
    let i = n.checked_sub(offset)?;
    usize::try_from(i).ok().and_then(|i| values.get(i).copied())
}

/// Entry point mirroring the instance-file fields.
pub fn make_perturbation(
    a_offset: i64,
    a: &[f64],
    b_offset: i64,
    b: &[f64],
) -> Result<Perturbation> {
    Perturbation::new(a_offset, a.to_vec(), b_offset, b.to_vec())
}

/// Finite symmetric tridiagonal section of a Jacobi operator on the sites
/// `lo, lo + 1, ..., lo + diag.len() - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedTridiagonal {
    lo: i64,
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TruncatedTridiagonal {
    pub fn new(lo: i64, diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::Dimension(format!(
                "tridiagonal with {} diagonal and {} off-diagonal entries",
                diag.len(),
                offdiag.len()
            )));
        }
        check_finite("diag", lo, &diag)?;
        check_finite("offdiag", lo, &offdiag)?;
        Ok(TruncatedTridiagonal { lo, diag, offdiag })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Gershgorin enclosure `[lower, upper]` of the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lower = f64::INFINITY;
        let mut upper = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 {
                self.offdiag[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.offdiag[i].abs()
            } else {
                0.0
            };
            lower = lower.min(self.diag[i] - left - right);
            upper = upper.max(self.diag[i] + left + right);
        }
        (lower, upper)
    }

    /// Max-abs entry, used to scale pivot guards.
    pub fn max_abs(&self) -> f64 {
        self.diag
            .iter()
            .chain(&self.offdiag)
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Same section with `shift` added to the first and last diagonal entry.
    pub(crate) fn with_end_shift(&self, shift: f64) -> Self {
        let mut diag = self.diag.clone();
        let last = diag.len() - 1;
        diag[0] += shift;
        diag[last] += shift;
        TruncatedTridiagonal {
            lo: self.lo,
            diag,
            offdiag: self.offdiag.clone(),
        }
    }
}

/// Finite section of `p` on `[-half_width, half_width]`.
pub fn truncate(p: &Perturbation, half_width: usize) -> Result<TruncatedTridiagonal> {
    let required = p.support_radius();
    if half_width < required {
        return Err(Error::WindowTooSmall {
            half_width,
            required,
        });
    }
    let hw = half_width as i64;
    let diag = (-hw..=hw).map(|n| p.b_at(n)).collect();
    let offdiag = (-hw..hw).map(|n| p.a_at(n)).collect();
    Ok(TruncatedTridiagonal {
        lo: -hw,
        diag,
        offdiag,
    })
}

/// `b ↦ -b` with `a` unchanged. `W(a, b)` is unitarily equivalent to
/// `-W(a, -b)` through the diagonal `(-1)^n`.
pub fn negate_b(p: &Perturbation) -> Perturbation {
    Perturbation {
        a_offset: p.a_offset,
        a: p.a.clone(),
        b_offset: p.b_offset,
        b: p.b.iter().map(|&v| -v).collect(),
    }
}

/// Comparison operators bracketing `J` in the semidefinite order.
#[derive(Debug, Clone, PartialEq)]
pub struct Sandwich {
    /// `J̃⁻`, below `J`.
    pub minus: Perturbation,
    /// `J̃⁺`, above `J`.
    pub plus: Perturbation,
}

fn pos(x: f64) -> f64 {
    x.max(0.0)
}

/// Replace every bond `a_n > 1` by 1 and move the excess `(a_n - 1)_+` onto
/// both adjacent diagonal entries, with sign `±` and `b` split into its
/// positive and negative parts.
pub fn sandwich(p: &Perturbation) -> Sandwich {
    let capped: Vec<f64> = p.a.iter().map(|&v| v.min(1.0)).collect();
    let excess = |n: i64| pos(p.a_at(n) - 1.0);

    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    if !p.b.is_empty() {
        lo = p.b_offset;
        hi = p.b_offset + p.b.len() as i64 - 1;
    }
    if !p.a.is_empty() {
        lo = lo.min(p.a_offset);
        hi = hi.max(p.a_offset + p.a.len() as i64);
    }

    let (mut b_plus, mut b_minus) = (Vec::new(), Vec::new());
    if lo <= hi {
        for n in lo..=hi {
            let shift = excess(n - 1) + excess(n);
            let b = p.b_at(n);
            b_plus.push(pos(b) + shift);
            b_minus.push(-pos(-b) - shift);
        }
    }
    let make = |b: Vec<f64>| {
        let (a_offset, a) = trim(p.a_offset, capped.clone(), 1.0);
        let (b_offset, b) = trim(lo, b, 0.0);
        Perturbation {
            a_offset,
            a,
            b_offset,
            b,
        }
    };
    Sandwich {
        minus: make(b_minus),
        plus: make(b_plus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_instance_has_empty_windows() {
        let p = make_perturbation(0, &[], 0, &[]).unwrap();
        assert!(p.is_free());
        assert_eq!(p, Perturbation::free());
    }

    #[test]
    fn trailing_neutral_entries_are_trimmed() {
        let p = make_perturbation(0, &[1.0, 1.0], 0, &[0.0]).unwrap();
        assert!(p.a().is_empty());
        assert!(p.b().is_empty());
        assert_eq!(p.a_offset(), 0);

        let q = make_perturbation(-3, &[1.0, 0.5, 1.0, 2.0, 1.0], 4, &[0.0, 0.0, 1.0]).unwrap();
        assert_eq!(q.a_offset(), -2);
        assert_eq!(q.a(), &[0.5, 1.0, 2.0]);
        assert_eq!(q.b_offset(), 6);
        assert_eq!(q.b(), &[1.0]);
    }

    #[test]
    fn stored_values_pass_through() {
        let p = make_perturbation(-1, &[0.5, 2.0], 0, &[1.5]).unwrap();
        assert_eq!(p.a_at(-1), 0.5);
        assert_eq!(p.a_at(0), 2.0);
        assert_eq!(p.a_at(1), 1.0);
        assert_eq!(p.a_at(-2), 1.0);
        assert_eq!(p.b_at(0), 1.5);
        assert_eq!(p.b_at(1), 0.0);
    }

    #[test]
    fn non_finite_entry_is_reported_with_its_index() {
        let err = make_perturbation(-2, &[1.0, f64::NAN], 0, &[]).unwrap_err();
        assert!(matches!(
            err,
            Error::NonFinite {
                field: "a",
                index: -1
            }
        ));
        let err = make_perturbation(0, &[], 5, &[f64::INFINITY]).unwrap_err();
        assert!(matches!(
            err,
            Error::NonFinite {
                field: "b",
                index: 5
            }
        ));
    }

    #[test]
    fn sub_unit_bond_cap() {
        let ok = vec![0.5; MAX_SUB_UNIT_BONDS];
        assert!(Perturbation::hopping(0, ok).is_ok());
        let too_many = vec![0.5; MAX_SUB_UNIT_BONDS + 1];
        assert!(matches!(
            Perturbation::hopping(0, too_many),
            Err(Error::TooManyBonds { .. })
        ));
        // bonds above 1 do not count towards the cap
        assert!(Perturbation::hopping(0, vec![1.5; 40]).is_ok());
    }

    #[test]
    fn truncate_free() {
        let t = truncate(&Perturbation::free(), 1).unwrap();
        assert_eq!(t.lo(), -1);
        assert_eq!(t.diag(), &[0.0, 0.0, 0.0]);
        assert_eq!(t.offdiag(), &[1.0, 1.0]);
    }

    #[test]
    fn truncate_places_site_and_bond() {
        let p = Perturbation::potential(0, vec![1.5]).unwrap();
        let t = truncate(&p, 2).unwrap();
        assert_eq!(t.diag(), &[0.0, 0.0, 1.5, 0.0, 0.0]);
        assert_eq!(t.offdiag(), &[1.0; 4]);

        let p = Perturbation::hopping(0, vec![2.0]).unwrap();
        let t = truncate(&p, 2).unwrap();
        assert_eq!(t.offdiag(), &[1.0, 1.0, 2.0, 1.0]);
    }

    #[test]
    fn truncate_rejects_short_window() {
        let p = Perturbation::hopping(0, vec![2.0]).unwrap();
        assert_eq!(p.support_radius(), 2);
        assert!(matches!(
            truncate(&p, 1),
            Err(Error::WindowTooSmall {
                half_width: 1,
                required: 2
            })
        ));
        let p = Perturbation::potential(-4, vec![1.0]).unwrap();
        assert_eq!(p.support_radius(), 5);
    }

    #[test]
    fn negate_b_examples() {
        let p = Perturbation::potential(0, vec![1.5]).unwrap();
        assert_eq!(negate_b(&p).b(), &[-1.5]);
        assert!(negate_b(&Perturbation::free()).b().is_empty());
        let p = make_perturbation(0, &[2.0], 0, &[0.3, -0.4]).unwrap();
        let q = negate_b(&p);
        assert_eq!(q.a(), &[2.0]);
        assert_eq!(q.b(), &[-0.3, 0.4]);
        assert_eq!(negate_b(&q), p);
    }

    #[test]
    fn sandwich_single_enlarged_bond() {
        let p = Perturbation::hopping(0, vec![2.0]).unwrap();
        let s = sandwich(&p);
        assert!(s.plus.a().is_empty());
        assert_eq!(s.plus.b_offset(), 0);
        assert_eq!(s.plus.b(), &[1.0, 1.0]);
        assert!(s.minus.a().is_empty());
        assert_eq!(s.minus.b(), &[-1.0, -1.0]);
    }

    #[test]
    fn sandwich_sub_unit_bond_is_untouched() {
        let p = Perturbation::hopping(3, vec![0.5]).unwrap();
        let s = sandwich(&p);
        assert_eq!(s.plus.a(), &[0.5]);
        assert_eq!(s.plus.a_offset(), 3);
        assert!(s.plus.b().is_empty());
        assert!(s.minus.b().is_empty());
    }

    #[test]
    fn sandwich_splits_potential_by_sign() {
        let p = Perturbation::potential(0, vec![-2.0]).unwrap();
        let s = sandwich(&p);
        assert!(s.plus.b().is_empty());
        assert_eq!(s.minus.b(), &[-2.0]);
        assert_eq!(s.minus.b_offset(), 0);
    }

    #[test]
    fn sandwich_adjacent_bonds_accumulate() {
        // bonds 0 and 1 both enlarged: site 1 touches both
        let p = make_perturbation(0, &[1.5, 3.0], 1, &[0.25]).unwrap();
        let s = sandwich(&p);
        assert_eq!(s.plus.b_offset(), 0);
        assert_eq!(s.plus.b(), &[0.5, 0.25 + 0.5 + 2.0, 2.0]);
        assert_eq!(s.minus.b(), &[-0.5, -2.5, -2.0]);
    }

    #[test]
    fn instance_file_defaults_and_round_trip() {
        let p = Perturbation::from_json_str(r#"{"b": [1.5]}"#).unwrap();
        assert_eq!(p, Perturbation::potential(0, vec![1.5]).unwrap());
        let text = make_perturbation(-1, &[0.5, 2.0], 3, &[1.0, 0.0, -1.0])
            .unwrap()
            .to_json_string();
        let again = Perturbation::from_json_str(&text).unwrap();
        assert_eq!(again.to_json_string(), text);
        assert!(Perturbation::from_json_str("{\"a\": [1, \"x\"]}").is_err());
        assert!(Perturbation::from_json_str("{\"c\": []}").is_err());
    }
}
