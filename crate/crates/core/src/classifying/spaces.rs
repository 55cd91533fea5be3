use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::graded_poly::{monomial_basis, poincare_rank, poincare_ranks, Family, Monomial, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceModel {
    /// `H_*(BU) = Z[b1, b2, ...]`, `deg b_m = 2m`.
    BuHomology,
    /// `H^*(BU) = Z[c1, c2, ...]`.
    BuCohomology,
    /// `H^*(BU(1)) = Z[x]`, `deg x = 2`.
    Bu1,
    /// `H^*(BSU) = Z[c2, c3, ...]`.
    Bsu,
    /// `H^*(BU<6>) = Z[y3, y4, ...]`, `deg y_k = 2k`.
    Bu6,
}

impl SpaceModel {
    pub const ALL: [SpaceModel; 5] = [
        SpaceModel::BuHomology,
        SpaceModel::BuCohomology,
        SpaceModel::Bu1,
        SpaceModel::Bsu,
        SpaceModel::Bu6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceModel::BuHomology => "H_BU_homology",
            SpaceModel::BuCohomology => "H_BU_cohomology",
            SpaceModel::Bu1 => "H_BU1",
            SpaceModel::Bsu => "H_BSU",
            SpaceModel::Bu6 => "H_BU6",
        }
    }

    pub fn is_homology(self) -> bool {
        self == SpaceModel::BuHomology
    }

    pub fn ring(self) -> Arc<RingSpec> {
        static RINGS: OnceLock<[Arc<RingSpec>; 5]> = OnceLock::new();
        let rings = RINGS.get_or_init(|| {
            let make = |name: &str, fam: Family| Arc::new(RingSpec::new(name, vec![fam]).expect("valid builtin ring"));
            [
                make("H_*(BU)", Family::indexed("b", 1)),
                make("H^*(BU)", Family::indexed("c", 1)),
                make("H^*(BU(1))", Family::single("x", 2)),
                make("H^*(BSU)", Family::indexed("c", 2)),
                make("H^*(BU<6>)", Family::indexed("y", 3)),
            ]
        });
        Arc::clone(&rings[self as usize])
    }
}

impl fmt::Display for SpaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpaceModel::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSpace(s.to_string()))
    }
}

/// `Z[b1, b2, ...]` with `deg b_m = 2m`.
pub fn bu_homology_ring() -> Arc<RingSpec> {
    SpaceModel::BuHomology.ring()
}

/// A free polynomial presentation of one of the supported (co)homology rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacePresentation {
    model: SpaceModel,
    ring: Arc<RingSpec>,
}

impl SpacePresentation {
    pub fn new(model: SpaceModel) -> Self {
        SpacePresentation {
            model,
            ring: model.ring(),
        }
    }

    pub fn model(&self) -> SpaceModel {
        self.model
    }

    pub fn name(&self) -> &'static str {
        self.model.name()
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn basis(&self, degree: u32) -> Vec<Monomial> {
        monomial_basis(&self.ring, degree)
    }

    /// Rank of the free abelian group in `degree`.
    pub fn rank(&self, degree: u32) -> u64 {
        poincare_rank(&self.ring, degree)
    }

    pub fn ranks(&self, max_degree: u32) -> Vec<(u32, u64)> {
        poincare_ranks(&self.ring, max_degree)
    }
}

pub fn space_model(name: &str) -> Result<SpacePresentation> {
    Ok(SpacePresentation::new(name.parse()?))
}
