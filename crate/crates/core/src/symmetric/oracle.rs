//! Power sums rewritten in elementary symmetric polynomials by the classical
//! leading-term elimination. This deliberately shares nothing with the
//! Newton recursion so the two can check each other.
//!
//! A symmetric polynomial in `t_1..t_k` is determined by its coefficients on
//! non-increasing exponent vectors, so the elimination keeps only those
//! coefficients. Multiplying by `e_j` then reads, for each target vector
//! `λ`, the coefficients at `sort(λ - 1_S)` over the `j`-subsets `S` of the
//! support of `λ`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::newton::elementary_ring;
use crate::error::{Error, Result};
use crate::graded_poly::{Family, GradedPolynomial, Monomial, RingSpec};
use crate::scalar::Coefficient;

/// Coefficients of a homogeneous symmetric polynomial on sorted exponent vectors.
type Symmetric<C> = BTreeMap<Vec<u32>, C>;

/// Expands `t_1^m + ... + t_k^m` and rewrites it in `e_1, ..., e_m`.
///
/// The result lives in `Z[s1, ..., sm]` and does not depend on `k` once `k >= m`.
pub fn brute_force_newton<C: Coefficient>(m: u32, k: u32) -> Result<GradedPolynomial<C>> {
    if m == 0 {
        return Err(Error::InvalidArgument("power sum index must be positive".into()));
    }
    if k < m {
        return Err(Error::InsufficientVariables { needed: m, got: k });
    }
    let roots = Arc::new(RingSpec::new(&format!("Z[t1..t{k}]"), vec![Family::indexed_until("t", 1, k)])?);
    let t: Vec<_> = (1..=k)
        .map(|i| roots.indexed_generator("t", i).expect("in range"))
        .collect();

    let mut expanded = GradedPolynomial::<C>::zero(&roots);
    for &g in &t {
        expanded.add_scaled(&GradedPolynomial::term(&roots, Monomial::power(&roots, g, m), C::one()), &C::one())?;
    }
    let mut remainder: Symmetric<C> = Symmetric::new();
    for (mono, c) in expanded.terms() {
        let alpha: Vec<u32> = t.iter().map(|&g| mono.exponent(g)).collect();
        if alpha.windows(2).all(|w| w[0] >= w[1]) {
            remainder.insert(alpha, c.clone());
        }
    }

    let sym = elementary_ring(m)?;
    let mut result = GradedPolynomial::<C>::zero(&sym);
    // The largest key is the lexicographic leading term.
    while let Some((alpha, c)) = remainder.iter().next_back().map(|(a, c)| (a.clone(), c.clone())) {
        let mut product: Symmetric<C> = Symmetric::from([(vec![0; k as usize], C::one())]);
        let mut weight = 0;
        let mut sym_factors = Vec::new();
        for j in 1..=k as usize {
            let r = alpha[j - 1] - alpha.get(j).copied().unwrap_or(0);
            for _ in 0..r {
                product = times_elementary(&product, weight, j, k as usize);
                weight += j as u32;
            }
            if r > 0 {
                // deg e_j * r <= deg of the remainder, so j <= m here
                sym_factors.push((sym.indexed_generator("s", j as u32)?, r));
            }
        }
        for (lambda, v) in product {
            let slot = remainder.entry(lambda).or_insert_with(C::zero);
            *slot = slot.clone() - c.clone() * v;
        }
        remainder.retain(|_, v| !v.is_zero());
        if remainder.contains_key(&alpha) {
            return Err(Error::Unsupported("leading term did not cancel; input is not symmetric".into()));
        }
        result.add_scaled(&GradedPolynomial::term(&sym, Monomial::from_factors(&sym, sym_factors)?, c), &C::one())?;
    }
    Ok(result)
}

/// `a * e_j` where `a` has weight `weight`.
fn times_elementary<C: Coefficient>(a: &Symmetric<C>, weight: u32, j: usize, k: usize) -> Symmetric<C> {
    let mut out = Symmetric::new();
    for lambda in partitions_with_at_most(weight + j as u32, k) {
        let support = lambda.iter().take_while(|&&x| x > 0).count();
        let mut total = C::zero();
        for subset in subsets(support, j) {
            let mut mu = lambda.clone();
            for &i in &subset {
                mu[i] -= 1;
            }
            mu.sort_unstable_by(|x, y| y.cmp(x));
            if let Some(v) = a.get(&mu) {
                total = total + v.clone();
            }
        }
        if !total.is_zero() {
            out.insert(lambda, total);
        }
    }
    out
}

/// Non-increasing vectors of length `k` with entries summing to `n`.
fn partitions_with_at_most(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for part in (0..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All `j`-element subsets of `0..n`.
fn subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if j <= n {
        go(0, n, j, &mut Vec::with_capacity(j), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn oracle_examples() {
        let text = |m, k| brute_force_newton::<BigInt>(m, k).unwrap().to_string();
        for k in 2..=4 {
            assert_eq!(text(2, k), "s1^2 - 2*s2");
        }
        assert_eq!(text(1, 5), "s1");
        assert_eq!(text(4, 4), "s1^4 - 4*s1^2*s2 + 4*s1*s3 + 2*s2^2 - 4*s4");
        assert_eq!(text(4, 5), text(4, 4));
    }

    #[test]
    fn oracle_errors() {
        assert!(matches!(
            brute_force_newton::<BigInt>(3, 2),
            Err(Error::InsufficientVariables { needed: 3, got: 2 })
        ));
        assert!(brute_force_newton::<BigInt>(0, 2).is_err());
    }

    #[test]
    fn symmetric_product_matches_full_expansion() {
        // e1 * e2 in three variables: m_{21} + 3 m_{111}
        let one: Symmetric<i64> = Symmetric::from([(vec![0, 0, 0], 1)]);
        let e1 = times_elementary(&one, 0, 1, 3);
        let e1e2 = times_elementary(&e1, 1, 2, 3);
        assert_eq!(e1e2, Symmetric::from([(vec![1, 1, 1], 3), (vec![2, 1, 0], 1)]));
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(partitions_with_at_most(4, 2), vec![vec![4, 0], vec![3, 1], vec![2, 2]]);
    }
}
