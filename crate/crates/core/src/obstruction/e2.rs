use std::fmt;

use super::coefficients::{AbelianGroup, GradedCoefficients};
use crate::classifying::{SpaceModel, SpacePresentation};
use crate::error::{Error, Result};

/// The `E_n` levels with closed-form cohomology models: `B²BU ≃ BSU` and
/// `B⁴BU ≃ BU<6>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperadLevel {
    E2,
    E4,
}

impl OperadLevel {
    pub fn n(self) -> u32 {
        match self {
            OperadLevel::E2 => 2,
            OperadLevel::E4 => 4,
        }
    }

    /// Cohomology model of `BⁿBU`.
    pub fn space(self) -> SpacePresentation {
        SpacePresentation::new(match self {
            OperadLevel::E2 => SpaceModel::Bsu,
            OperadLevel::E4 => SpaceModel::Bu6,
        })
    }
}

impl TryFrom<u32> for OperadLevel {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        match n {
            2 => Ok(OperadLevel::E2),
            4 => Ok(OperadLevel::E4),
            _ => Err(Error::UnsupportedLevel(n)),
        }
    }
}

impl fmt::Display for OperadLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.n())
    }
}

/// `H^s(BⁿBU; π_q R)`. The cohomology is free in every degree, so this is
/// `rank H^s` copies of `π_q R`.
pub fn e2_entry(n: u32, s: u32, q: u32, coeffs: &GradedCoefficients) -> Result<AbelianGroup> {
    let level = OperadLevel::try_from(n)?;
    Ok(entry(&level.space(), s, &coeffs.group(q)))
}

fn entry(space: &SpacePresentation, s: u32, coeff: &AbelianGroup) -> AbelianGroup {
    let copies = space.rank(s);
    AbelianGroup {
        rank: copies * coeff.rank,
        torsion: coeff
            .torsion
            .iter()
            .flat_map(|&t| std::iter::repeat_n(t, copies as usize))
            .collect(),
    }
}

/// One factor `H^{n+2k}(BⁿBU; π_{2k} R)` of `π₀ E_n-Ring(MU, R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi0Factor {
    pub k: u32,
    pub cohomological_degree: u32,
    pub coefficient_degree: u32,
    pub group: AbelianGroup,
}

/// The factors `H^{n+2k}(BⁿBU; π_{2k}R)` for `1 <= k <= max_degree/2`.
///
/// Only meaningful for even `R`; they are reported as a list because the
/// product carries no natural group structure.
pub fn pi0_factors(n: u32, coeffs: &GradedCoefficients, max_degree: u32) -> Result<Vec<Pi0Factor>> {
    let level = OperadLevel::try_from(n)?;
    if let Some(q) = coeffs.first_odd_degree() {
        return Err(Error::TargetNotEven(q));
    }
    let space = level.space();
    Ok((1..=max_degree / 2)
        .map(|k| {
            let s = level.n() + 2 * k;
            Pi0Factor {
                k,
                cohomological_degree: s,
                coefficient_degree: 2 * k,
                group: entry(&space, s, &coeffs.group(2 * k)),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::builtin_coefficients;

    #[test]
    fn entry_examples() {
        let mu = builtin_coefficients("MU").unwrap();
        assert_eq!(e2_entry(2, 4, 2, &mu).unwrap(), AbelianGroup::free(1));
        assert!(e2_entry(2, 5, 2, &mu).unwrap().is_zero());
        assert_eq!(e2_entry(4, 10, 2, &mu).unwrap(), AbelianGroup::free(1));
        assert_eq!(e2_entry(2, 12, 4, &mu).unwrap(), AbelianGroup::free(8));
        assert!(matches!(e2_entry(3, 4, 2, &mu), Err(Error::UnsupportedLevel(3))));
    }

    #[test]
    fn torsion_is_carried() {
        let c = GradedCoefficients::from_table("T", [(2, AbelianGroup { rank: 1, torsion: vec![2, 3] })]).unwrap();
        let g = e2_entry(2, 12, 2, &c).unwrap();
        assert_eq!(g, AbelianGroup { rank: 4, torsion: vec![2, 2, 2, 2, 3, 3, 3, 3] });
    }

    #[test]
    fn pi0_examples() {
        let mu = builtin_coefficients("MU").unwrap();
        let f = pi0_factors(2, &mu, 6).unwrap();
        let ranks: Vec<u64> = f.iter().map(|x| x.group.rank).collect();
        assert_eq!(ranks, [1, 2, 6]);
        assert_eq!(f[1].cohomological_degree, 6);
        let z = builtin_coefficients("Z_even_shift(2)").unwrap();
        let f = pi0_factors(2, &z, 4).unwrap();
        assert_eq!(f[0].group, AbelianGroup::free(1));
        assert!(f[1].group.is_zero());
        assert!(pi0_factors(2, &mu, 0).unwrap().is_empty());
    }

    #[test]
    fn evenness_gate() {
        let odd = GradedCoefficients::from_table("odd", [(2, AbelianGroup::free(1)), (3, AbelianGroup::free(1))]).unwrap();
        assert_eq!(pi0_factors(2, &odd, 10).unwrap_err(), Error::TargetNotEven(3));
        assert!(pi0_factors(4, &builtin_coefficients("sl1MU").unwrap(), 10).is_ok());
    }
}
