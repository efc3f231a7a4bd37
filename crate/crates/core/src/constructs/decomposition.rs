use crate::perturbation::{Perturbation, MAX_SUB_UNIT_BONDS};
use crate::{Error, Result};

/// One conjugate `D_σ A_1 D_σ` with its weight `λ_σ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignTerm {
    pub weight: f64,
    /// `σ_i ∈ {+1, -1}`, aligned with [`SignDecomposition::bond_positions`].
    pub signs: Vec<i8>,
}

/// Convex decomposition `A = Σ_σ λ_σ D_σ A_1 D_σ` of a hopping part with
/// entries `κ_i ∈ [0, 1]` on the listed bonds (and 1 elsewhere).
#[derive(Debug, Clone, PartialEq)]
pub struct SignDecomposition {
    pub bond_positions: Vec<i64>,
    pub kappa: Vec<f64>,
    pub terms: Vec<SignTerm>,
}

impl SignDecomposition {
    /// Expand `Π_i ((1 + κ_i)/2 [σ_i = +1] + (1 - κ_i)/2 [σ_i = -1])`,
    /// dropping terms of weight zero.
    pub fn from_bonds(bonds: &[(i64, f64)]) -> Result<Self> {
        if bonds.len() > MAX_SUB_UNIT_BONDS {
            return Err(Error::TooManyBonds {
                count: bonds.len(),
                cap: MAX_SUB_UNIT_BONDS,
            });
        }
        if let Some(&(n, k)) = bonds.iter().find(|&&(_, k)| !(0.0..=1.0).contains(&k)) {
            return Err(Error::Precondition(format!(
                "bond {n} has a = {k} outside [0, 1]"
            )));
        }
        let mut terms = vec![SignTerm {
            weight: 1.0,
            signs: Vec::with_capacity(bonds.len()),
        }];
        for &(_, kappa) in bonds {
            let up = 0.5 * (1.0 + kappa);
            let down = 0.5 * (1.0 - kappa);
            let mut next = Vec::with_capacity(terms.len() * 2);
            for term in terms {
                for (sign, w) in [(1i8, up), (-1i8, down)] {
                    if w > 0.0 {
                        let mut signs = term.signs.clone();
                        signs.push(sign);
                        next.push(SignTerm {
                            weight: term.weight * w,
                            signs,
                        });
                    }
                }
            }
            terms = next;
        }
        Ok(SignDecomposition {
            bond_positions: bonds.iter().map(|&(n, _)| n).collect(),
            kappa: bonds.iter().map(|&(_, k)| k).collect(),
            terms,
        })
    }

    /// The trivial decomposition of `A_1` itself.
    pub fn trivial() -> Self {
        Self::from_bonds(&[]).expect("empty bond list")
    }

    pub fn total_weight(&self) -> f64 {
        self.terms.iter().map(|t| t.weight).sum()
    }

    /// Diagonal of `D_σ` on `sites` (ascending): the product of `σ_i` over
    /// flipped bonds lying between the first site and each site, so the
    /// first site always carries `+1`.
    pub fn site_signs(&self, term: &SignTerm, sites: &[i64]) -> Vec<f64> {
        let Some(&first) = sites.first() else {
            return Vec::new();
        };
        sites
            .iter()
            .map(|&n| {
                let flips = self
                    .bond_positions
                    .iter()
                    .zip(&term.signs)
                    .filter(|&(&k, &s)| s < 0 && k >= first && k < n)
                    .count();
                if flips % 2 == 0 {
                    1.0
                } else {
                    -1.0
                }
            })
            .collect()
    }

    /// Same weights with every sign flipped: the decomposition of `-A`
    /// relative to the flipped bonds.
    pub fn negated(&self) -> Self {
        SignDecomposition {
            bond_positions: self.bond_positions.clone(),
            kappa: self.kappa.iter().map(|k| -k).collect(),
            terms: self
                .terms
                .iter()
                .map(|t| SignTerm {
                    weight: t.weight,
                    signs: t.signs.iter().map(|s| -s).collect(),
                })
                .collect(),
        }
    }
}

/// Decompose the hopping part of `p`; requires every stored `a_n ∈ [0, 1]`.
/// Bonds with `a_n = 1` contribute nothing and are left out.
pub fn sign_pattern_decomposition(p: &Perturbation) -> Result<SignDecomposition> {
    if let Some((n, a)) = p.bonds().find(|&(_, a)| !(0.0..=1.0).contains(&a)) {
        return Err(Error::Precondition(format!(
            "sign-pattern decomposition needs 0 <= a <= 1, a_{n} = {a}"
        )));
    }
    let bonds: Vec<(i64, f64)> = p.bonds().filter(|&(_, a)| a < 1.0).collect();
    SignDecomposition::from_bonds(&bonds)
}

/// `Σ_σ λ_σ σ_i` per bond, which must give back `κ_i`.
pub fn reconstruct_offdiagonal(d: &SignDecomposition) -> Vec<f64> {
    (0..d.bond_positions.len())
        .map(|i| {
            d.terms
                .iter()
                .map(|t| t.weight * f64::from(t.signs[i]))
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(d: &SignDecomposition) -> Vec<f64> {
        d.terms.iter().map(|t| t.weight).collect()
    }

    #[test]
    fn single_half_bond() {
        let d = SignDecomposition::from_bonds(&[(0, 0.5)]).unwrap();
        assert_eq!(weights(&d), vec![0.75, 0.25]);
        assert_eq!(d.terms[0].signs, vec![1]);
        assert_eq!(d.terms[1].signs, vec![-1]);
        assert_eq!(reconstruct_offdiagonal(&d), vec![0.5]);
    }

    #[test]
    fn unit_bond_prunes_to_one_term() {
        let d = SignDecomposition::from_bonds(&[(0, 1.0)]).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(
            d.terms[0],
            SignTerm {
                weight: 1.0,
                signs: vec![1]
            }
        );
    }

    #[test]
    fn two_bonds_multiply() {
        let d = SignDecomposition::from_bonds(&[(0, 0.5), (1, 0.0)]).unwrap();
        let mut w = weights(&d);
        w.sort_by(|a, b| b.total_cmp(a));
        assert_eq!(w, vec![0.375, 0.375, 0.125, 0.125]);
        assert_eq!(reconstruct_offdiagonal(&d), vec![0.5, 0.0]);
        assert_eq!(d.total_weight(), 1.0);
    }

    #[test]
    fn zero_bond_reconstructs_to_zero() {
        let d = SignDecomposition::from_bonds(&[(4, 0.0)]).unwrap();
        assert_eq!(reconstruct_offdiagonal(&d), vec![0.0]);
    }

    #[test]
    fn decomposition_of_perturbation_checks_range() {
        let p = Perturbation::new(-1, vec![0.5, 1.0, 0.25], 0, vec![1.0]).unwrap();
        let d = sign_pattern_decomposition(&p).unwrap();
        assert_eq!(d.bond_positions, vec![-1, 1]);
        assert_eq!(d.terms.len(), 4);
        let bad = Perturbation::hopping(0, vec![1.5]).unwrap();
        assert!(matches!(
            sign_pattern_decomposition(&bad),
            Err(Error::Precondition(_))
        ));
        let neg = Perturbation::hopping(0, vec![-0.5]).unwrap();
        assert!(sign_pattern_decomposition(&neg).is_err());
        assert_eq!(
            sign_pattern_decomposition(&Perturbation::free()).unwrap(),
            SignDecomposition::trivial()
        );
    }

    #[test]
    fn site_signs_follow_flipped_bonds() {
        let d = SignDecomposition::from_bonds(&[(0, 0.0), (2, 0.0)]).unwrap();
        let term = d.terms.iter().find(|t| t.signs == vec![-1, 1]).unwrap();
        assert_eq!(d.site_signs(term, &[0, 1, 3]), vec![1.0, -1.0, -1.0]);
        let term = d.terms.iter().find(|t| t.signs == vec![-1, -1]).unwrap();
        assert_eq!(d.site_signs(term, &[0, 1, 3]), vec![1.0, -1.0, 1.0]);
        // bonds left of the first site do not matter
        assert_eq!(d.site_signs(term, &[1, 2, 3]), vec![1.0, 1.0, -1.0]);
    }
}
