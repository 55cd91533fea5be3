use std::cmp::Ordering;

use super::ring::{Generator, RingSpec};
use crate::error::{Error, Result};

/// A product of generators with positive exponents.
///
/// Factors are kept sorted by the canonical generator order and the
/// topological degree is cached, so monomials compare without a ring at hand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(Generator, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            factors: Vec::new(),
        }
    }

    pub fn generator(ring: &RingSpec, g: Generator) -> Self {
        Self::power(ring, g, 1)
    }

    pub fn power(ring: &RingSpec, g: Generator, exponent: u32) -> Self {
        if exponent == 0 {
            return Self::one();
        }
        Monomial {
            degree: ring.degree(g) * exponent,
            factors: vec![(g, exponent)],
        }
    }

    /// Builds a monomial from (generator, exponent) pairs in any order;
    /// repeated generators accumulate and zero exponents are dropped.
    pub fn from_factors<I>(ring: &RingSpec, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, u32)>,
    {
        let mut out = Self::one();
        for (g, e) in factors {
            if !ring.contains(g) {
                return Err(Error::UnknownGenerator {
                    symbol: format!("{g:?}"),
                    ring: ring.name().to_string(),
                });
            }
            out = out.mul(&Self::power(ring, g, e));
        }
        Ok(out)
    }

    /// Parses `b1^2*b3` style text.
    pub fn parse(ring: &RingSpec, text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "1" {
            return Ok(Self::one());
        }
        let mut factors = Vec::new();
        for factor in text.split('*') {
            let (sym, exp) = match factor.split_once('^') {
                Some((s, e)) => (
                    s,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            factors.push((ring.generator(sym)?, exp));
        }
        Self::from_factors(ring, factors)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weight(&self) -> u32 {
        self.degree / 2
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.factors
            .binary_search_by(|(h, _)| h.cmp(&g))
            .map_or(0, |i| self.factors[i].1)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of exponents (word length).
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// The generator if this monomial is a single generator to the first power.
    pub fn as_generator(&self) -> Option<Generator> {
        match self.factors.as_slice() {
            [(g, 1)] => Some(*g),
            _ => None,
        }
    }

    /// A product of at least two positive-degree factors.
    pub fn is_decomposable(&self) -> bool {
        self.length() >= 2
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    factors.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors,
        }
    }

    /// Whether every generator of this monomial lives in `ring` with a
    /// matching degree.
    pub(crate) fn fits(&self, ring: &RingSpec) -> bool {
        self.factors.iter().all(|&(g, _)| ring.contains(g))
            && self.factors.iter().map(|&(g, e)| ring.degree(g) * e).sum::<u32>() == self.degree
    }

    pub(crate) fn from_raw(degree: u32, factors: Vec<(Generator, u32)>) -> Self {
        Monomial { degree, factors }
    }

    pub fn to_text(&self, ring: &RingSpec) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    ring.symbol(g)
                } else {
                    format!("{}^{e}", ring.symbol(g))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Graded lexicographic order: lower degree first; within a degree, the
/// monomial with the larger exponent on the earliest differing generator
/// comes first (so `b1^3 < b1*b2 < b3`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (&(a, ea), &(b, eb)) in self.factors.iter().zip(&other.factors) {
                let ord = a.cmp(&b).then(eb.cmp(&ea));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            // the shorter list has zeros where the longer still has a factor
            other.factors.len().cmp(&self.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
