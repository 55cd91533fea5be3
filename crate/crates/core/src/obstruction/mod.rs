//! E2-term ranks, the π₀ product formula for even targets, restriction
//! indices and leading-order lifting verdicts for coordinates.

mod coefficients;
mod coordinate;
mod e2;
mod index;

pub use coefficients::{builtin_coefficients, AbelianGroup, GradedCoefficients};
pub use coordinate::{coordinate_obstruction, Coordinate, DegreeRecord, ObstructionReport, Verdict};
pub use e2::{e2_entry, pi0_factors, OperadLevel, Pi0Factor};
pub use index::restriction_index;
