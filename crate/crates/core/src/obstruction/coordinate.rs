use std::collections::BTreeMap;
use std::fmt;

use super::coefficients::GradedCoefficients;
use super::e2::OperadLevel;
use super::index::restriction_index;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A coordinate `x + a_1 x^2 + a_2 x^3 + ...` with `a_m ∈ π_{2m} R`, each
/// `a_m` written in a caller-chosen ordered basis of `π_{2m} R`.
///
/// Entries above the truncation degree are unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinate<C> {
    coefficients: GradedCoefficients,
    entries: BTreeMap<u32, Vec<C>>,
    truncation: u32,
}

impl<C: Coefficient> Coordinate<C> {
    /// Every `a_m` must have length `rank π_{2m} R`. The truncation degree
    /// defaults to the largest `m` given.
    pub fn new<I>(coefficients: GradedCoefficients, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, Vec<C>)>,
    {
        let mut map = BTreeMap::new();
        for (m, a) in entries {
            if m == 0 {
                return Err(Error::MalformedCoordinate("entries start at m = 1".into()));
            }
            let rank = coefficients.rank(2 * m);
            if a.len() as u64 != rank {
                return Err(Error::MalformedCoordinate(format!(
                    "a_{m} has {} components but π_{} {} has rank {rank}",
                    a.len(),
                    2 * m,
                    coefficients.name()
                )));
            }
            if map.insert(m, a).is_some() {
                return Err(Error::MalformedCoordinate(format!("a_{m} given twice")));
            }
        }
        let truncation = map.keys().next_back().copied().unwrap_or(0);
        Ok(Coordinate {
            coefficients,
            entries: map,
            truncation,
        })
    }

    /// Reads one `m v1 v2 ... v_rank` record per line; `#` starts a comment.
    pub fn parse(coefficients: GradedCoefficients, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = || Error::Parse(format!("line {}: `{raw}`", lineno + 1));
            let mut fields = line.split_whitespace();
            let m: u32 = fields.next().and_then(|f| f.parse().ok()).ok_or_else(err)?;
            let values = fields
                .map(|f| f.parse::<C>().map_err(|_| err()))
                .collect::<Result<Vec<C>>>()?;
            entries.push((m, values));
        }
        Self::new(coefficients, entries)
    }

    /// Declares entries up to `m` known even if they were not listed
    /// (missing ones are then zero).
    pub fn with_truncation(mut self, m: u32) -> Result<Self> {
        if m < self.truncation {
            return Err(Error::MalformedCoordinate(format!(
                "truncation {m} below the last given entry a_{}",
                self.truncation
            )));
        }
        self.truncation = m;
        Ok(self)
    }

    pub fn coefficients(&self) -> &GradedCoefficients {
        &self.coefficients
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// `a_m`, with unlisted entries at or below the truncation read as zero.
    pub fn entry(&self, m: u32) -> Option<Vec<C>> {
        if m == 0 || m > self.truncation {
            return None;
        }
        Some(
            self.entries
                .get(&m)
                .cloned()
                .unwrap_or_else(|| vec![C::zero(); self.coefficients.rank(2 * m) as usize]),
        )
    }

    /// The lowest degree with a nonzero entry.
    pub fn leading(&self) -> Option<(u32, &[C])> {
        self.entries
            .iter()
            .find(|(_, a)| a.iter().any(|v| !v.is_zero()))
            .map(|(&m, a)| (m, a.as_slice()))
    }

    /// Multiplies every entry by `k`.
    pub fn scaled(&self, k: &C) -> Self {
        Coordinate {
            coefficients: self.coefficients.clone(),
            entries: self
                .entries
                .iter()
                .map(|(&m, a)| (m, a.iter().map(|v| v.clone() * k.clone()).collect()))
                .collect(),
            truncation: self.truncation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The leading coefficient lies in the image; nothing is claimed about
    /// higher filtration.
    Unobstructed,
    /// The leading coefficient is not divisible by the restriction index:
    /// no `E_n` lift exists.
    Obstructed,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Unobstructed => "unobstructed at leading order",
            Verdict::Obstructed => "obstructed",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRecord<C> {
    pub m: u32,
    pub index: C,
    pub verdict: Verdict,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport<C> {
    pub level: OperadLevel,
    pub records: Vec<DegreeRecord<C>>,
}

impl<C> ObstructionReport<C> {
    /// The degree of a definite obstruction, if one was found.
    pub fn obstructed_at(&self) -> Option<u32> {
        self.records
            .iter()
            .find(|r| r.verdict == Verdict::Obstructed)
            .map(|r| r.m)
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Leading-order lifting verdicts for a coordinate at level `E_n`.
///
/// Only the first nonzero `a_m` gets a definite verdict: above it the
/// identification with ordinary cohomology holds only up to filtration, so
/// later degrees are `Indeterminate` at `E4`. At `E2` every restriction index
/// is 1 and every degree is unobstructed.
pub fn coordinate_obstruction<C: Coefficient>(coord: &Coordinate<C>, n: u32) -> Result<ObstructionReport<C>> {
    let level = OperadLevel::try_from(n)?;
    let coeffs = coord.coefficients();
    if !coeffs.is_torsion_free() {
        return Err(Error::Unsupported(format!(
            "coefficient system `{}` has torsion; divisibility verdicts need a free target",
            coeffs.name()
        )));
    }
    if let Some(q) = coeffs.first_odd_degree() {
        return Err(Error::TargetNotEven(q));
    }
    let mut report = ObstructionReport {
        level,
        records: Vec::new(),
    };
    let Some((lead, leading_entry)) = coord.leading() else {
        return Ok(report);
    };

    let index = restriction_index::<C>(level.n(), lead)?;
    let offending = leading_entry
        .iter()
        .enumerate()
        .find(|(_, v)| !v.is_multiple_of(&index));
    let (verdict, note) = match offending {
        None => (
            Verdict::Unobstructed,
            format!("a_{lead} lies in {index}·π_{}; higher filtration not controlled", 2 * lead),
        ),
        Some((i, v)) => (
            Verdict::Obstructed,
            format!("component {} of a_{lead} is {v}, not divisible by {index}: no {level} lift", i + 1),
        ),
    };
    report.records.push(DegreeRecord {
        m: lead,
        index,
        verdict,
        note,
    });

    for m in lead + 1..=coord.truncation() {
        let index = restriction_index::<C>(level.n(), m)?;
        let (verdict, note) = match level {
            OperadLevel::E2 => (
                Verdict::Unobstructed,
                "restriction index is 1 in every degree".to_string(),
            ),
            OperadLevel::E4 => (
                Verdict::Indeterminate,
                format!("above the leading degree {lead}: identification holds only up to filtration"),
            ),
        };
        report.records.push(DegreeRecord { m, index, verdict, note });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::{builtin_coefficients, AbelianGroup};

    fn mu() -> GradedCoefficients {
        builtin_coefficients("MU").unwrap()
    }

    fn a3(v: [i64; 3]) -> Coordinate<i64> {
        Coordinate::new(mu(), [(1, vec![0]), (2, vec![0, 0]), (3, v.to_vec())]).unwrap()
    }

    #[test]
    fn odd_a3_is_obstructed_at_e4() {
        let r = coordinate_obstruction(&a3([1, 0, 0]), 4).unwrap();
        assert_eq!(r.obstructed_at(), Some(3));
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.records[0].index, 2);
    }

    #[test]
    fn even_a3_is_unobstructed_at_leading_order() {
        let c = a3([2, -4, 0]).with_truncation(5).unwrap();
        let r = coordinate_obstruction(&c, 4).unwrap();
        let verdicts: Vec<_> = r.records.iter().map(|x| (x.m, x.verdict)).collect();
        assert_eq!(
            verdicts,
            [(3, Verdict::Unobstructed), (4, Verdict::Indeterminate), (5, Verdict::Indeterminate)]
        );
        assert_eq!(r.obstructed_at(), None);
    }

    #[test]
    fn e2_never_obstructs() {
        let c = Coordinate::<i64>::new(mu(), [(1, vec![1]), (2, vec![3, 5]), (3, vec![1, 1, 1])]).unwrap();
        let r = coordinate_obstruction(&c, 2).unwrap();
        assert_eq!(r.records.len(), 3);
        assert!(r.records.iter().all(|x| x.verdict == Verdict::Unobstructed && x.index == 1));
    }

    #[test]
    fn zero_coordinate_gives_empty_report() {
        let c = Coordinate::<i64>::new(mu(), [(1, vec![0]), (2, vec![0, 0])]).unwrap();
        assert!(coordinate_obstruction(&c, 4).unwrap().is_empty());
        let empty = Coordinate::<i64>::new(mu(), []).unwrap();
        assert!(coordinate_obstruction(&empty, 2).unwrap().is_empty());
    }

    #[test]
    fn scaling_by_index_clears_obstruction() {
        // m = 5 has index 6
        let c = Coordinate::<i64>::new(mu(), [(5, vec![1, 2, 3, 4, 5, 6, 7])]).unwrap();
        assert_eq!(coordinate_obstruction(&c, 4).unwrap().obstructed_at(), Some(5));
        let fixed = c.scaled(&6);
        assert_eq!(coordinate_obstruction(&fixed, 4).unwrap().records[0].verdict, Verdict::Unobstructed);
    }

    #[test]
    fn validation() {
        assert!(Coordinate::<i64>::new(mu(), [(2, vec![1])]).is_err());
        assert!(Coordinate::<i64>::new(mu(), [(0, vec![1])]).is_err());
        assert!(Coordinate::<i64>::new(mu(), [(1, vec![1]), (1, vec![2])]).is_err());
        assert!(a3([1, 0, 0]).with_truncation(2).is_err());
        let torsion = GradedCoefficients::from_table("T", [(2, AbelianGroup { rank: 1, torsion: vec![2] })]).unwrap();
        let c = Coordinate::<i64>::new(torsion, [(1, vec![1])]).unwrap();
        assert!(matches!(coordinate_obstruction(&c, 4), Err(Error::Unsupported(_))));
        assert!(coordinate_obstruction(&a3([1, 0, 0]), 3).is_err());
    }

    #[test]
    fn parse_coordinate_file() {
        let c = Coordinate::<i64>::parse(mu(), "# a3 odd\n3 1 0 0\n").unwrap();
        assert_eq!(c.leading(), Some((3, &[1i64, 0, 0][..])));
        assert_eq!(c.entry(1), Some(vec![0]));
        assert_eq!(c.entry(4), None);
        assert!(Coordinate::<i64>::parse(mu(), "3 1 x 0\n").is_err());
        assert!(Coordinate::<i64>::parse(mu(), "3 1 0\n").is_err());
    }
}
