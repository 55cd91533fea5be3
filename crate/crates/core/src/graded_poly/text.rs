//! Canonical text form: terms in monomial order joined by ` + ` / ` - `,
//! decimal coefficients, `*` between factors and `^` for exponents, e.g.
//! `b1^3 - 3*b1*b2 + 3*b3`.

use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::poly::GradedPolynomial;
use super::ring::RingSpec;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

impl<C: Coefficient> fmt::Display for GradedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.to_text(self.ring()))?;
            } else {
                write!(f, "{abs}*{}", m.to_text(self.ring()))?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> GradedPolynomial<C> {
    /// Parses the canonical text form. Terms may appear in any order and
    /// repeated monomials are combined, so the result is always canonical.
    pub fn parse(ring: &Arc<RingSpec>, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero(ring);
        for (negative, body) in split_terms(&compact)? {
            let mut coeff = C::one();
            let mut factors = Vec::new();
            for piece in body.split('*') {
                if piece.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{body}`")));
                }
                if piece.bytes().all(|b| b.is_ascii_digit()) {
                    let c: C = piece
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{piece}`")))?;
                    coeff = coeff * c;
                } else {
                    factors.push(piece);
                }
            }
            let m = if factors.is_empty() {
                Monomial::one()
            } else {
                Monomial::parse(ring, &factors.join("*"))?
            };
            if negative {
                coeff = -coeff;
            }
            out = out.try_add(&Self::term(ring, m, coeff))?;
        }
        Ok(out)
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        negative = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if i == start {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            out.push((negative, &s[start..i]));
            negative = bytes[i] == b'-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((negative, &s[start..]));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_poly::ring::Family;
    use num_bigint::BigInt;

    type P = GradedPolynomial<BigInt>;

    #[test]
    fn canonical_rendering() {
        let r = Arc::new(RingSpec::new("BU", vec![Family::indexed("b", 1)]).unwrap());
        let p = P::parse(&r, "3*b3 + b1^3 - 3 * b2*b1").unwrap();
        assert_eq!(p.to_string(), "b1^3 - 3*b1*b2 + 3*b3");
        assert_eq!(P::parse(&r, "-b1 + 2").unwrap().to_string(), "2 - b1");
        assert_eq!(P::parse(&r, "b1 - b1").unwrap().to_string(), "0");
        assert_eq!(P::parse(&r, "-1").unwrap().to_string(), "-1");
        assert_eq!(P::parse(&r, "2*3*b2").unwrap().to_string(), "6*b2");
    }

    #[test]
    fn parse_errors() {
        let r = Arc::new(RingSpec::new("BU", vec![Family::indexed("b", 1)]).unwrap());
        for bad in ["", "b1 +", "b1 + - b2", "b0", "q1", "b1^x", "b1**b2", "-"] {
            assert!(P::parse(&r, bad).is_err(), "{bad:?} should not parse");
        }
    }
}
