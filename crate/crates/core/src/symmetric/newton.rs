use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::classifying::bu_homology_ring;
use crate::error::{Error, Result};
use crate::graded_poly::{Family, GradedPolynomial, RingSpec};
use crate::scalar::Coefficient;

/// `Z[s1, ..., sm]`, the elementary symmetric polynomials with `deg sj = 2j`.
pub fn elementary_ring(m: u32) -> Result<Arc<RingSpec>> {
    if m == 0 {
        return Err(Error::InvalidArgument("need at least one elementary symmetric polynomial".into()));
    }
    Ok(Arc::new(RingSpec::new(
        &format!("Sym[{m}]"),
        vec![Family::indexed_until("s", 1, m)],
    )?))
}

/// `q_1, ..., q_m` over `Z[s1, ..., sm]` via Newton's identities
/// `q_n = s1 q_{n-1} - s2 q_{n-2} + ... + (-1)^{n-2} s_{n-1} q_1 + (-1)^{n-1} n s_n`.
///
/// Results are memoized per coefficient type. The cache is computed under a
/// lock and only ever extended, so concurrent first calls agree.
pub fn newton_polynomials<C: Coefficient>(m: u32) -> Result<Vec<GradedPolynomial<C>>> {
    let ring = elementary_ring(m)?;
    with_cache(m, |known: &[GradedPolynomial<C>]| {
        known
            .iter()
            .map(|q| q.rename_into(&ring, |g| ring.indexed_generator("s", g.index())))
            .collect()
    })
}

fn with_cache<C, T, F>(m: u32, read: F) -> Result<T>
where
    C: Coefficient,
    F: FnOnce(&[GradedPolynomial<C>]) -> Result<T>,
{
    static CACHE: OnceLock<Mutex<HashMap<TypeId, Box<dyn Any + Send>>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    let slot = cache
        .entry(TypeId::of::<C>())
        .or_insert_with(|| Box::new(Vec::<GradedPolynomial<C>>::new()));
    let known = slot
        .downcast_mut::<Vec<GradedPolynomial<C>>>()
        .expect("cache keyed by type");

    // The cache lives in Z[s1, s2, ...]; callers get copies in Z[s1..sm].
    static SYM: OnceLock<Arc<RingSpec>> = OnceLock::new();
    let big = SYM.get_or_init(|| Arc::new(RingSpec::new("Sym", vec![Family::indexed("s", 1)]).expect("valid ring")));
    let e = |j: u32| GradedPolynomial::<C>::generator(big, big.indexed_generator("s", j).expect("in range"));
    for n in known.len() as u32 + 1..=m {
        let mut acc = e(n).scale(&(C::sign_power(u64::from(n) - 1) * C::from_int(n.into())));
        for i in 1..n {
            let term = e(i).try_mul(&known[(n - i) as usize - 1])?;
            acc.add_scaled(&term, &C::sign_power(u64::from(i) - 1))?;
        }
        known.push(acc);
    }
    read(&known[..m as usize])
}

/// The `m`-th Newton polynomial: `q_m(e_1, ..., e_m) = t_1^m + ... + t_k^m`.
pub fn newton_polynomial<C: Coefficient>(m: u32) -> Result<GradedPolynomial<C>> {
    let ring = elementary_ring(m)?;
    with_cache(m, |known: &[GradedPolynomial<C>]| {
        known[m as usize - 1].rename_into(&ring, |g| ring.indexed_generator("s", g.index()))
    })
}

/// `s_m = q_m(b_1, ..., b_m)` in `H_*(BU)`.
pub fn power_sum_s<C: Coefficient>(m: u32) -> Result<GradedPolynomial<C>> {
    let q = newton_polynomial::<C>(m)?;
    let bu = bu_homology_ring();
    q.rename_into(&bu, |g| bu.indexed_generator("b", g.index()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_poly::Monomial;
    use num_bigint::BigInt;

    #[test]
    fn newton_examples() {
        let text = |m| newton_polynomial::<BigInt>(m).unwrap().to_string();
        assert_eq!(text(1), "s1");
        assert_eq!(text(2), "s1^2 - 2*s2");
        assert_eq!(text(3), "s1^3 - 3*s1*s2 + 3*s3");
        assert_eq!(text(4), "s1^4 - 4*s1^2*s2 + 4*s1*s3 + 2*s2^2 - 4*s4");
        assert!(newton_polynomial::<BigInt>(0).is_err());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum_s::<BigInt>(1).unwrap().to_string(), "b1");
        assert_eq!(power_sum_s::<BigInt>(2).unwrap().to_string(), "b1^2 - 2*b2");
        let s5 = power_sum_s::<i64>(5).unwrap();
        assert_eq!(s5.homogeneous_degree(), Some(10));
        assert!(power_sum_s::<i64>(0).is_err());
    }

    #[test]
    fn power_sum_leading_coefficients() {
        let bu = bu_homology_ring();
        let b1 = bu.generator("b1").unwrap();
        for m in 1..=12u32 {
            let s = power_sum_s::<BigInt>(m).unwrap();
            let top = Monomial::power(&bu, b1, m);
            assert_eq!(s.coefficient_of(&top).unwrap(), BigInt::from(1));
            let bm = Monomial::generator(&bu, bu.indexed_generator("b", m).unwrap());
            let expected = if m % 2 == 1 { m as i64 } else { -(m as i64) };
            assert_eq!(s.coefficient_of(&bm).unwrap(), BigInt::from(expected));
        }
    }

    #[test]
    fn fixed_width_agrees_with_bigint() {
        for m in 1..=9 {
            let a = newton_polynomial::<i64>(m).unwrap().to_string();
            let b = newton_polynomial::<BigInt>(m).unwrap().to_string();
            assert_eq!(a, b);
        }
    }
}
