use genus_core::classifying::{bott_pushforward, bu_homology_ring};
use genus_core::obstruction::{builtin_coefficients, coordinate_obstruction, restriction_index, Coordinate, Verdict};
use genus_core::partitions::{enumerate_partitions, partition_count};
use genus_core::symmetric::{coproduct, TensorPolynomial};
use genus_core::{BigInt, Monomial, Polynomial};
use proptest::prelude::*;

/// Polynomials in b1..b4 with small exponents and coefficients.
fn poly() -> impl Strategy<Value = Polynomial> {
    poly_in(4, 3, 6)
}

/// Polynomials in `b1..b{gens}` with exponents below `max_exp` and fewer than `max_terms` terms.
fn poly_in(gens: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..max_exp, gens), -20i64..=20), 0..max_terms).prop_map(|terms| {
        let bu = bu_homology_ring();
        let mut p = Polynomial::zero(&bu);
        for (exps, c) in terms {
            let factors = exps
                .iter()
                .enumerate()
                .map(|(i, &e)| (bu.indexed_generator("b", i as u32 + 1).unwrap(), e));
            let m = Monomial::from_factors(&bu, factors).unwrap();
            p = p.try_add(&Polynomial::term(&bu, m, BigInt::from(c))).unwrap();
        }
        p
    })
}

fn homogeneous_poly() -> impl Strategy<Value = Polynomial> {
    (poly(), 1u32..=6).prop_map(|(p, d)| p.homogeneous_part(2 * d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        let left = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
        let right = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let distributed = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(a.try_mul(&b.try_add(&c).unwrap()).unwrap(), distributed);
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn products_of_homogeneous_are_homogeneous(a in homogeneous_poly(), b in homogeneous_poly()) {
        let p = a.try_mul(&b).unwrap();
        if !p.is_zero() {
            prop_assert!(p.is_homogeneous());
            prop_assert_eq!(p.homogeneous_degree(), Some(a.homogeneous_degree().unwrap() + b.homogeneous_degree().unwrap()));
        }
    }

    #[test]
    fn homogeneous_parts_sum_back(p in poly()) {
        let mut sum = Polynomial::zero(p.ring());
        for d in p.degrees() {
            let part = p.homogeneous_part(d);
            prop_assert!(part.is_homogeneous());
            sum = sum.try_add(&part).unwrap();
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(Polynomial::parse(p.ring(), &text).unwrap(), p);
    }

    #[test]
    fn coproduct_is_multiplicative(a in poly_in(3, 2, 4), b in poly_in(3, 2, 4)) {
        let lhs = coproduct(&a.try_mul(&b).unwrap()).unwrap();
        let rhs: TensorPolynomial<BigInt> = coproduct(&a).unwrap().try_mul(&coproduct(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bott_kills_products(a in homogeneous_poly(), b in homogeneous_poly(), iterate in 1u32..=2) {
        let p = a.try_mul(&b).unwrap();
        if !p.is_zero() {
            prop_assert!(bott_pushforward(&p, iterate).unwrap().is_zero());
        }
    }

    #[test]
    fn multiples_of_the_index_are_unobstructed(m in 1u32..=8, raw in prop::collection::vec(-50i64..=50, 22)) {
        let mu = builtin_coefficients("MU").unwrap();
        let rank = mu.rank(2 * m) as usize;
        let a: Vec<BigInt> = raw.iter().take(rank).map(|&v| BigInt::from(v)).collect();
        prop_assume!(a.iter().any(|v| v != &BigInt::from(0)));
        let d = restriction_index::<BigInt>(4, m).unwrap();
        let coord = Coordinate::new(mu, [(m, a)]).unwrap();
        let scaled = coord.scaled(&d);
        let report = coordinate_obstruction(&scaled, 4).unwrap();
        prop_assert_eq!(report.records[0].verdict, Verdict::Unobstructed);
        // scaling never creates an obstruction
        if coordinate_obstruction(&coord, 4).unwrap().obstructed_at().is_none() {
            let again = coordinate_obstruction(&coord.scaled(&BigInt::from(5)), 4).unwrap();
            prop_assert_eq!(again.obstructed_at(), None);
        }
    }

    #[test]
    fn partition_counts_match_enumeration(n in 0u32..=18, min_part in 1u32..=4) {
        prop_assert_eq!(partition_count(n, min_part), enumerate_partitions(n, min_part).len() as u64);
    }
}
