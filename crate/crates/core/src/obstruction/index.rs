use super::e2::OperadLevel;
use crate::classifying::{bsu_restriction_coefficient, bu6_generator_image};
use crate::error::Result;
use crate::scalar::Coefficient;

/// Index of the image of `H̃^{2m+n}(BⁿBU) -> H̃^{2m}(BU(1)) ≅ Z`.
///
/// Decomposables map to zero, so the image is generated by the coefficient
/// of the degree-`2m+n` generator.
pub fn restriction_index<C: Coefficient>(n: u32, m: u32) -> Result<C> {
    Ok(match OperadLevel::try_from(n)? {
        OperadLevel::E2 => bsu_restriction_coefficient::<C>(m)?.abs(),
        OperadLevel::E4 => bu6_generator_image::<C>(m)?.coefficient.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e4_table() {
        let got: Vec<i64> = (1..=8).map(|m| restriction_index(4, m).unwrap()).collect();
        assert_eq!(got, [1, 1, 2, 1, 6, 1, 4, 3]);
    }

    #[test]
    fn e2_is_always_one() {
        for m in 1..=30 {
            assert_eq!(restriction_index::<i64>(2, m).unwrap(), 1);
        }
        assert!(restriction_index::<i64>(6, 1).is_err());
        assert!(restriction_index::<i64>(2, 0).is_err());
    }
}
