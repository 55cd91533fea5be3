use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::graded_poly::{check_ring, GradedPolynomial, Monomial, RingSpec};
use crate::scalar::Coefficient;

/// Element of `A ⊗ A` for a polynomial ring `A`, with terms ordered
/// lexicographically on (left, right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorPolynomial<C> {
    ring: Arc<RingSpec>,
    terms: BTreeMap<(Monomial, Monomial), C>,
}

/// Sign from moving a right factor of degree `right` past a left factor of
/// degree `left`.
fn koszul_sign(right: u32, left: u32) -> bool {
    (u64::from(right) * u64::from(left)) % 2 == 1
}

impl<C: Coefficient> TensorPolynomial<C> {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        TensorPolynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        let mut t = Self::zero(ring);
        t.insert((Monomial::one(), Monomial::one()), C::one());
        t
    }

    /// `left ⊗ right`.
    pub fn tensor(left: &GradedPolynomial<C>, right: &GradedPolynomial<C>) -> Result<Self> {
        check_ring(left.ring(), right.ring())?;
        let mut t = Self::zero(left.ring());
        for (a, ca) in left.terms() {
            for (b, cb) in right.terms() {
                t.insert((a.clone(), b.clone()), ca.clone() * cb.clone());
            }
        }
        Ok(t)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: (Monomial, Monomial), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ± ac ⊗ bd`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = Self::zero(&self.ring);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let mut coeff = x.clone() * y.clone();
                if koszul_sign(b.degree(), c.degree()) {
                    coeff = -coeff;
                }
                out.insert((a.mul(c), b.mul(d)), coeff);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Bidegrees `(deg left, deg right)` of all terms.
    pub fn bidegrees(&self) -> Vec<(u32, u32)> {
        let mut v: Vec<_> = self.terms.keys().map(|(a, b)| (a.degree(), b.degree())).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl<C: Coefficient> fmt::Display for TensorPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}⊗{}", a.to_text(&self.ring), b.to_text(&self.ring))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifying::bu_homology_ring;
    use num_bigint::BigInt;

    #[test]
    fn even_degrees_never_pick_up_a_sign() {
        let bu = bu_homology_ring();
        for g in bu.generators_up_to(40) {
            for h in bu.generators_up_to(40) {
                assert!(!koszul_sign(bu.degree(g), bu.degree(h)));
            }
        }
        assert!(koszul_sign(1, 3));
    }

    #[test]
    fn componentwise_product() {
        let bu = bu_homology_ring();
        let p = |s| GradedPolynomial::<BigInt>::parse(&bu, s).unwrap();
        let x = TensorPolynomial::tensor(&p("b1"), &p("b2")).unwrap();
        let y = TensorPolynomial::tensor(&p("b1 + b2"), &p("1")).unwrap();
        let prod = x.try_mul(&y).unwrap();
        assert_eq!(prod.to_string(), "b1^2⊗b2 + b1*b2⊗b2");
        assert_eq!(prod.bidegrees(), vec![(4, 4), (6, 4)]);
        assert!(x.try_sub(&x).unwrap().is_zero());
    }
}
