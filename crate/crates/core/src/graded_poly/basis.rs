use super::monomial::Monomial;
use super::ring::{Generator, RingSpec};

/// All monomials of topological degree `d`, in graded-lex order.
pub fn monomial_basis(ring: &RingSpec, d: u32) -> Vec<Monomial> {
    if !d.is_multiple_of(2) {
        return Vec::new();
    }
    let gens: Vec<(Generator, u32)> = ring
        .generators_up_to(d)
        .into_iter()
        .map(|g| (g, ring.degree(g)))
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(&gens, 0, d, d, &mut stack, &mut out);
    out.sort();
    out
}

fn extend(
    gens: &[(Generator, u32)],
    from: usize,
    total: u32,
    remaining: u32,
    stack: &mut Vec<(Generator, u32)>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::from_raw(total, stack.clone()));
        return;
    }
    for (i, &(g, deg)) in gens.iter().enumerate().skip(from) {
        for e in 1..=remaining / deg {
            stack.push((g, e));
            extend(gens, i + 1, total, remaining - e * deg, stack, out);
            stack.pop();
        }
    }
}

/// `(degree, rank)` for every even degree up to `max_degree`.
///
/// Computed as the truncated product of geometric series over the
/// generators, which counts the same monomials [`monomial_basis`] lists.
pub fn poincare_ranks(ring: &RingSpec, max_degree: u32) -> Vec<(u32, u64)> {
    let top = (max_degree / 2) as usize;
    let mut series = vec![0u64; top + 1];
    series[0] = 1;
    for g in ring.generators_up_to(max_degree) {
        let w = ring.weight(g) as usize;
        for i in w..=top {
            series[i] = series[i].saturating_add(series[i - w]);
        }
    }
    series
        .into_iter()
        .enumerate()
        .map(|(w, r)| (2 * w as u32, r))
        .collect()
}

/// Rank of the degree-`d` part; zero in odd degrees.
pub fn poincare_rank(ring: &RingSpec, d: u32) -> u64 {
    if !d.is_multiple_of(2) {
        return 0;
    }
    poincare_ranks(ring, d).last().map_or(0, |&(_, r)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_poly::ring::Family;

    fn text(ring: &RingSpec, d: u32) -> Vec<String> {
        monomial_basis(ring, d).iter().map(|m| m.to_text(ring)).collect()
    }

    #[test]
    fn basis_examples() {
        let bsu = RingSpec::new("BSU", vec![Family::indexed("c", 2)]).unwrap();
        assert_eq!(text(&bsu, 10), ["c2*c3", "c5"]);
        assert_eq!(text(&bsu, 12), ["c2^3", "c2*c4", "c3^2", "c6"]);
        let bu1 = RingSpec::new("BU1", vec![Family::single("x", 2)]).unwrap();
        assert_eq!(text(&bu1, 6), ["x^3"]);
        let bu6 = RingSpec::new("BU6", vec![Family::indexed("y", 3)]).unwrap();
        assert_eq!(text(&bu6, 10), ["y5"]);
        assert_eq!(text(&bu6, 4), Vec::<String>::new());
        assert_eq!(text(&bu6, 0), ["1"]);
        assert!(monomial_basis(&bu6, 7).is_empty());
    }

    #[test]
    fn rank_examples() {
        let bsu = RingSpec::new("BSU", vec![Family::indexed("c", 2)]).unwrap();
        assert_eq!(poincare_rank(&bsu, 4), 1);
        assert_eq!(poincare_rank(&bsu, 12), 4);
        assert_eq!(poincare_rank(&bsu, 0), 1);
        assert_eq!(poincare_rank(&bsu, 2), 0);
        assert_eq!(poincare_rank(&bsu, 5), 0);
        let ranks = poincare_ranks(&bsu, 13);
        assert_eq!(ranks.last(), Some(&(12, 4)));
        assert_eq!(ranks.len(), 7);
    }

    #[test]
    fn repeated_degrees_count_separately() {
        let r = RingSpec::new("r", vec![Family::single("u", 2), Family::single("v", 2)]).unwrap();
        assert_eq!(text(&r, 4), ["u^2", "u*v", "v^2"]);
        assert_eq!(poincare_rank(&r, 4), 3);
    }
}
