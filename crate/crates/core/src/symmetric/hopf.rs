use std::collections::HashMap;

use crate::classifying::bu_homology_ring;
use crate::error::Result;
use crate::graded_poly::{check_ring, GradedPolynomial, Monomial};
use crate::scalar::Coefficient;

use super::tensor::TensorPolynomial;

/// The ring map `H_*(BU) -> H_*(BU) ⊗ H_*(BU)` with
/// `b_n ↦ Σ_{i+j=n} b_i ⊗ b_j` and `b_0 = 1`.
pub fn coproduct<C: Coefficient>(p: &GradedPolynomial<C>) -> Result<TensorPolynomial<C>> {
    let bu = bu_homology_ring();
    check_ring(&bu, p.ring())?;

    let mut on_generators: HashMap<u32, TensorPolynomial<C>> = HashMap::new();
    let mut out = TensorPolynomial::zero(&bu);
    for (m, c) in p.terms() {
        let mut acc = TensorPolynomial::tensor(
            &GradedPolynomial::constant(&bu, c.clone()),
            &GradedPolynomial::one(&bu),
        )?;
        for &(g, e) in m.factors() {
            let n = g.index();
            let psi = on_generators.entry(n).or_insert_with(|| {
                let b = |i: u32| {
                    if i == 0 {
                        Monomial::one()
                    } else {
                        Monomial::generator(&bu, bu.indexed_generator("b", i).expect("b_i exists"))
                    }
                };
                let mut t = TensorPolynomial::zero(&bu);
                for i in 0..=n {
                    let term = TensorPolynomial::tensor(
                        &GradedPolynomial::term(&bu, b(i), C::one()),
                        &GradedPolynomial::term(&bu, b(n - i), C::one()),
                    )
                    .expect("same ring");
                    t = t.try_add(&term).expect("same ring");
                }
                t
            });
            acc = acc.try_mul(&psi.pow(e)?)?;
        }
        out = out.try_add(&acc)?;
    }
    Ok(out)
}

/// `ψ(p) - p⊗1 - 1⊗p`; zero exactly when `p` is primitive.
pub fn primitive_defect<C: Coefficient>(p: &GradedPolynomial<C>) -> Result<TensorPolynomial<C>> {
    let one = GradedPolynomial::one(p.ring());
    coproduct(p)?
        .try_sub(&TensorPolynomial::tensor(p, &one)?)?
        .try_sub(&TensorPolynomial::tensor(&one, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::power_sum_s;
    use num_bigint::BigInt;

    fn p(s: &str) -> GradedPolynomial<BigInt> {
        GradedPolynomial::parse(&bu_homology_ring(), s).unwrap()
    }

    #[test]
    fn coproduct_on_generators() {
        assert_eq!(coproduct(&p("b1")).unwrap().to_string(), "1⊗b1 + b1⊗1");
        assert_eq!(coproduct(&p("b2")).unwrap().to_string(), "1⊗b2 + b1⊗b1 + b2⊗1");
        assert_eq!(coproduct(&p("1")).unwrap().to_string(), "1⊗1");
    }

    #[test]
    fn power_sums_are_primitive() {
        for m in 1..=10 {
            let s = power_sum_s::<BigInt>(m).unwrap();
            assert!(primitive_defect(&s).unwrap().is_zero(), "s{m} not primitive");
        }
        // b2 is not
        assert!(!primitive_defect(&p("b2")).unwrap().is_zero());
    }

    #[test]
    fn s3_coproduct_text() {
        let s3 = power_sum_s::<BigInt>(3).unwrap();
        assert_eq!(
            coproduct(&s3).unwrap().to_string(),
            "1⊗b1^3 - 3*1⊗b1*b2 + 3*1⊗b3 + b1^3⊗1 - 3*b1*b2⊗1 + 3*b3⊗1"
        );
    }

    #[test]
    fn rejects_other_rings() {
        let sym = crate::symmetric::elementary_ring(2).unwrap();
        let q = GradedPolynomial::<BigInt>::var(&sym, "s1").unwrap();
        assert!(coproduct(&q).is_err());
    }
}
