use super::maps::bott_map;
use super::primes::prime_power;
use super::spaces::bu_homology_ring;
use crate::error::{Error, Result};
use crate::graded_poly::{check_ring, GradedPolynomial, Monomial};
use crate::scalar::Coefficient;

fn positive(m: u32, what: &str) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidArgument(format!("{what} must be >= 1")))
    } else {
        Ok(())
    }
}

/// `B_*` or `B_*^2` applied to a homogeneous element of `H_*(BU)`.
pub fn bott_pushforward<C: Coefficient>(p: &GradedPolynomial<C>, iterate: u32) -> Result<GradedPolynomial<C>> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    bott_map(iterate)?.apply(p)
}

/// Two single Bott steps, projecting onto indecomposables in between.
pub fn pushforward_via_single_steps<C: Coefficient>(p: &GradedPolynomial<C>) -> Result<GradedPolynomial<C>> {
    let once = bott_pushforward(p, 1)?;
    bott_pushforward(&once.indecomposable_part(), 1)
}

/// Kronecker pairing `<c_n, p>`: `c_n` is dual to `b_1^n` in the monomial
/// basis, so this reads off the coefficient of `b_1^n`.
pub fn pair_with_chern<C: Coefficient>(n: u32, p: &GradedPolynomial<C>) -> Result<C> {
    let bu = bu_homology_ring();
    check_ring(&bu, p.ring())?;
    let b1 = bu.generator("b1")?;
    p.coefficient_of(&Monomial::power(&bu, b1, n))
}

fn b<C: Coefficient>(m: u32) -> Result<GradedPolynomial<C>> {
    let bu = bu_homology_ring();
    Ok(GradedPolynomial::generator(&bu, bu.indexed_generator("b", m)?))
}

/// Coefficient of `x^m` in the image of `c_{m+1}` under `H^{*+2}(BSU) -> H^*(BU(1))`,
/// computed as `<c_{m+1}, B_* b_m>`.
pub fn bsu_restriction_coefficient<C: Coefficient>(m: u32) -> Result<C> {
    positive(m, "m")?;
    pair_with_chern(m + 1, &bott_pushforward(&b::<C>(m)?, 1)?)
}

/// Coefficient of `x^m` in the image of `c_{m+2}` under `H^{*+4}(BU) -> H^*(BU(1))`,
/// computed as `<c_{m+2}, B_*^2 b_m>`.
pub fn bu_restriction_coefficient_4<C: Coefficient>(m: u32) -> Result<C> {
    positive(m, "m")?;
    pair_with_chern(m + 2, &bott_pushforward(&b::<C>(m)?, 2)?)
}

/// Image of the generator `y_{m+2}` of `H^{2m+4}(BU<6>)` in `H^{2m}(BU(1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bu6Image<C> {
    pub coefficient: C,
    pub power: u32,
    /// `(p, t)` when `m + 1 = p^t`.
    pub prime_power: Option<(u64, u32)>,
}

/// When `m + 1 = p^t` the image of `c_{m+2}` is `p` times a generator, so
/// the generator maps to `(-1)^{m+1} (m+1)/p x^m`; otherwise `y_{m+2}` is
/// the image of `c_{m+2}` and maps to `(-1)^{m+1} (m+1) x^m`.
///
/// The sign of `y_{m+2}` is fixed to agree with the image of `c_{m+2}`.
pub fn bu6_generator_image<C: Coefficient>(m: u32) -> Result<Bu6Image<C>> {
    positive(m, "m")?;
    let n = u64::from(m) + 1;
    let pp = prime_power(n);
    let magnitude = match pp {
        Some((p, _)) => n / p,
        None => n,
    };
    let magnitude = C::from_u64(magnitude).expect("small index fits");
    Ok(Bu6Image {
        coefficient: C::sign_power(n) * magnitude,
        power: m,
        prime_power: pp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::power_sum_s;
    use num_bigint::BigInt;

    type P = GradedPolynomial<BigInt>;

    fn p(s: &str) -> P {
        P::parse(&bu_homology_ring(), s).unwrap()
    }

    #[test]
    fn pushforward_examples() {
        assert_eq!(bott_pushforward(&p("b1"), 1).unwrap(), p("-b1^2 + 2*b2"));
        assert!(bott_pushforward(&p("b1*b2"), 1).unwrap().is_zero());
        let s4 = power_sum_s::<BigInt>(4).unwrap();
        assert_eq!(bott_pushforward(&p("b2"), 2).unwrap(), s4.scale(&BigInt::from(-3)));
        assert_eq!(bott_pushforward(&p("b1 + b2"), 1).unwrap_err(), Error::NotHomogeneous);
        assert!(bott_pushforward(&p("b1"), 0).is_err());
    }

    #[test]
    fn pushforward_is_linear_on_mixed_terms() {
        let lhs = bott_pushforward(&p("3*b2 - 5*b1^2"), 1).unwrap();
        let rhs = power_sum_s::<BigInt>(3).unwrap().scale(&BigInt::from(3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_examples() {
        let s2 = power_sum_s::<BigInt>(2).unwrap();
        assert_eq!(pair_with_chern(2, &s2).unwrap(), BigInt::from(1));
        assert_eq!(pair_with_chern(2, &p("b2")).unwrap(), BigInt::from(0));
        assert_eq!(pair_with_chern(3, &p("b1^3")).unwrap(), BigInt::from(1));
        assert_eq!(pair_with_chern(4, &p("b1^3")).unwrap(), BigInt::from(0));
    }

    #[test]
    fn restriction_coefficient_examples() {
        let bsu = |m| bsu_restriction_coefficient::<i64>(m).unwrap();
        assert_eq!((bsu(1), bsu(2), bsu(7)), (-1, 1, -1));
        let bu4 = |m| bu_restriction_coefficient_4::<i64>(m).unwrap();
        assert_eq!((bu4(1), bu4(2), bu4(5)), (2, -3, 6));
        assert!(bsu_restriction_coefficient::<i64>(0).is_err());
    }

    #[test]
    fn bu6_examples() {
        let img = |m| {
            let i = bu6_generator_image::<i64>(m).unwrap();
            (i.coefficient, i.power)
        };
        assert_eq!(img(1), (1, 1));
        assert_eq!(img(3), (2, 3));
        assert_eq!(img(5), (6, 5));
        assert_eq!(img(8), (-3, 8));
        assert_eq!(bu6_generator_image::<i64>(7).unwrap().prime_power, Some((2, 3)));
    }

    #[test]
    fn iterate_consistency() {
        for m in 1..=10 {
            let bm = p(&format!("b{m}"));
            assert_eq!(
                pushforward_via_single_steps(&bm).unwrap(),
                bott_pushforward(&bm, 2).unwrap(),
                "m = {m}"
            );
        }
    }
}
