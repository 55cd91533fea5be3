use std::collections::BTreeMap;
use std::sync::Arc;

use super::monomial::Monomial;
use super::ring::{Generator, RingSpec};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Sparse polynomial with exact coefficients over a [`RingSpec`].
///
/// Terms are kept in a `BTreeMap` keyed by monomial, so the term list is
/// always in canonical graded-lex order and never stores a zero coefficient.
#[derive(Debug, Clone)]
pub struct GradedPolynomial<C> {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Monomial, C>,
}

pub(crate) fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::IncompatibleRings {
            left: a.name().to_string(),
            right: b.name().to_string(),
        })
    }
}

fn accumulate<C: Coefficient>(terms: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().clone() + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl<C: Coefficient> GradedPolynomial<C> {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        GradedPolynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &Arc<RingSpec>, c: C) -> Self {
        Self::term(ring, Monomial::one(), c)
    }

    pub fn term(ring: &Arc<RingSpec>, m: Monomial, c: C) -> Self {
        let mut p = Self::zero(ring);
        accumulate(&mut p.terms, m, c);
        p
    }

    pub fn generator(ring: &Arc<RingSpec>, g: Generator) -> Self {
        Self::term(ring, Monomial::generator(ring, g), C::one())
    }

    /// The generator with the given printed symbol, e.g. `var(&ring, "b3")`.
    pub fn var(ring: &Arc<RingSpec>, symbol: &str) -> Result<Self> {
        Ok(Self::generator(ring, ring.generator(symbol)?))
    }

    /// Sums the given terms; monomials must belong to `ring`.
    pub fn from_terms<I>(ring: &Arc<RingSpec>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            if !m.fits(ring) {
                return Err(Error::IncompatibleRings {
                    left: ring.name().to_string(),
                    right: "monomial".to_string(),
                });
            }
            accumulate(&mut p.terms, m, c);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every monomial has the same degree (the zero polynomial is homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.terms.keys().next().map(Monomial::degree)
        } else {
            None
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Leading term in the monomial order restricted to the top degree: the
    /// lexicographically largest monomial of maximal degree.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        let top = self.max_degree()?;
        self.terms.iter().find(|(m, _)| m.degree() == top)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    /// `self += k * other`, in place.
    pub fn add_scaled(&mut self, other: &Self, k: &C) -> Result<()> {
        check_ring(&self.ring, &other.ring)?;
        for (m, c) in &other.terms {
            accumulate(&mut self.terms, m.clone(), c.clone() * k.clone());
        }
        Ok(())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GradedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        GradedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * k.clone()))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut out.terms, m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.try_mul(&base).expect("same ring");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.try_mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Terms of exact topological degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        GradedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees that carry at least one term, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        out.dedup();
        out
    }

    /// Coefficient of `m`, or zero. Fails if `m` mentions generators outside the ring.
    pub fn coefficient_of(&self, m: &Monomial) -> Result<C> {
        if !m.fits(&self.ring) {
            return Err(Error::IncompatibleRings {
                left: self.ring.name().to_string(),
                right: "monomial".to_string(),
            });
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(C::zero))
    }

    /// Projection onto the indecomposable quotient: keeps exactly the terms
    /// that are a single generator to the first power.
    pub fn indecomposable_part(&self) -> Self {
        GradedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.as_generator().is_some())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Moves the polynomial into `target` by renaming generators.
    ///
    /// The degree of every renamed generator is revalidated, so a renaming
    /// can never silently regrade a polynomial.
    pub fn rename_into<F>(&self, target: &Arc<RingSpec>, rename: F) -> Result<Self>
    where
        F: Fn(Generator) -> Result<Generator>,
    {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut factors = Vec::with_capacity(m.factors().len());
            for &(g, e) in m.factors() {
                let h = rename(g)?;
                if !target.contains(h) {
                    return Err(Error::UnknownGenerator {
                        symbol: self.ring.symbol(g),
                        ring: target.name().to_string(),
                    });
                }
                let (from, to) = (self.ring.degree(g), target.degree(h));
                if from != to {
                    return Err(Error::DegreeMismatch {
                        expected: from as i64,
                        found: to as i64,
                    });
                }
                factors.push((h, e));
            }
            let renamed = Monomial::from_factors(target, factors)?;
            accumulate(&mut out.terms, renamed, c.clone());
        }
        Ok(out)
    }

    /// Ring map determined by the images of generators.
    pub fn substitute<F>(&self, target: &Arc<RingSpec>, image: F) -> Result<Self>
    where
        F: Fn(Generator) -> Result<GradedPolynomial<C>>,
    {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for &(g, e) in m.factors() {
                let img = image(g)?;
                check_ring(target, &img.ring)?;
                acc = acc.try_mul(&img.pow(e))?;
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }
}

impl<C: Coefficient> PartialEq for GradedPolynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<C: Coefficient> Eq for GradedPolynomial<C> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_poly::ring::Family;
    use num_bigint::BigInt;

    type P = GradedPolynomial<BigInt>;

    fn ring() -> Arc<RingSpec> {
        Arc::new(RingSpec::new("H_*BU", vec![Family::indexed("b", 1)]).unwrap())
    }

    fn p(r: &Arc<RingSpec>, s: &str) -> P {
        P::parse(r, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = ring();
        let sym = Arc::new(RingSpec::new("Sym", vec![Family::indexed("s", 1)]).unwrap());
        assert!(p(&sym, "s1").try_add(&p(&sym, "-s1")).unwrap().is_zero());
        assert_eq!(p(&r, "b1^2").try_add(&p(&r, "b2")).unwrap(), p(&r, "b1^2 + b2"));
        assert_eq!(p(&r, "2*b1*b2").try_add(&p(&r, "3*b1*b2")).unwrap(), p(&r, "5*b1*b2"));
    }

    #[test]
    fn mul_examples() {
        let r = ring();
        assert_eq!(p(&r, "b1").try_mul(&p(&r, "b1")).unwrap(), p(&r, "b1^2"));
        assert_eq!(p(&r, "b1 - b2").try_mul(&P::one(&r)).unwrap(), p(&r, "b1 - b2"));
        let prod = p(&r, "b1 + b2").try_mul(&p(&r, "b1 - b2")).unwrap();
        assert_eq!(prod.to_string(), "b1^2 - b2^2");
    }

    #[test]
    fn ring_mismatch() {
        let r = ring();
        let other = Arc::new(RingSpec::new("H^*BU", vec![Family::indexed("c", 1)]).unwrap());
        let err = p(&r, "b1").try_add(&P::zero(&other)).unwrap_err();
        assert!(err.to_string().contains("incompatible rings"));
        assert!(p(&r, "b1").try_mul(&P::one(&other)).is_err());
    }

    #[test]
    fn homogeneous_part_examples() {
        let r = ring();
        assert_eq!(p(&r, "b1^2 + b2").homogeneous_part(4), p(&r, "b1^2 + b2"));
        assert_eq!(p(&r, "b1^2 + b3").homogeneous_part(6), p(&r, "b3"));
        assert_eq!(p(&r, "5").homogeneous_part(0), p(&r, "5"));
        assert!(p(&r, "b1").homogeneous_part(4).is_zero());
    }

    #[test]
    fn coefficient_examples() {
        let r = ring();
        let s3 = p(&r, "b1^3 - 3*b1*b2 + 3*b3");
        let m = |s| Monomial::parse(&r, s).unwrap();
        assert_eq!(s3.coefficient_of(&m("b1^3")).unwrap(), BigInt::from(1));
        assert_eq!(s3.coefficient_of(&m("b3")).unwrap(), BigInt::from(3));
        assert_eq!(P::zero(&r).coefficient_of(&m("b2")).unwrap(), BigInt::from(0));
        // c1 does not exist in Z[c2, c3, ...]
        let bu = RingSpec::new("BU", vec![Family::indexed("c", 1)]).unwrap();
        let c1 = Monomial::parse(&bu, "c1").unwrap();
        let bsu = Arc::new(RingSpec::new("BSU", vec![Family::indexed("c", 2)]).unwrap());
        assert!(P::zero(&bsu).coefficient_of(&c1).is_err());
    }

    #[test]
    fn indecomposables_and_homogeneity() {
        let r = ring();
        let q = p(&r, "b1^3 - 3*b1*b2 + 3*b3");
        assert_eq!(q.indecomposable_part(), p(&r, "3*b3"));
        assert!(q.is_homogeneous());
        assert_eq!(q.homogeneous_degree(), Some(6));
        assert!(!p(&r, "b1 + b2").is_homogeneous());
        assert_eq!(p(&r, "b1 + b1^2 + b2").degrees(), vec![2, 4]);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let r = ring();
        let x = p(&r, "b1 - 2*b2");
        let mut acc = P::one(&r);
        for _ in 0..5 {
            acc = acc.try_mul(&x).unwrap();
        }
        assert_eq!(x.pow(5), acc);
        assert_eq!(x.pow(0), P::one(&r));
    }

    #[test]
    fn rename_checks_degree() {
        let sym = Arc::new(RingSpec::new("Sym", vec![Family::indexed("s", 1)]).unwrap());
        let r = ring();
        let q = p(&sym, "s1^2 - 2*s2");
        let moved = q
            .rename_into(&r, |g| r.indexed_generator("b", g.index()))
            .unwrap();
        assert_eq!(moved, p(&r, "b1^2 - 2*b2"));
        let shifted = q.rename_into(&r, |g| r.indexed_generator("b", g.index() + 1));
        assert!(matches!(shifted, Err(Error::DegreeMismatch { .. })));
    }
}
