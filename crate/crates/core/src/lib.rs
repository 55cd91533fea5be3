//! Symmetric functions, Bott maps and the obstruction calculus for lifting
//! ring maps `MU -> R` to E2 and E4 ring maps.
//!
//! The polynomial engine is generic over an exact integer coefficient type
//! (see [`Coefficient`]); the aliases below fix it to `BigInt`.

pub mod classifying;
pub mod error;
pub mod graded_poly;
pub mod obstruction;
pub mod partitions;
pub mod scalar;
pub mod selftest;
pub mod symmetric;

pub use error::{Error, Result};
pub use graded_poly::{
    monomial_basis, poincare_rank, poincare_ranks, Family, Generator, GradedPolynomial, Monomial, RingSpec,
};
pub use scalar::Coefficient;

pub use num_bigint::BigInt;

pub type Polynomial = GradedPolynomial<BigInt>;
pub type Tensor = symmetric::TensorPolynomial<BigInt>;
pub type Coord = obstruction::Coordinate<BigInt>;
pub type Report = obstruction::ObstructionReport<BigInt>;
pub type ProjectedImage = classifying::Bu6Image<BigInt>;
pub type BottMap = classifying::GeneratorMap<BigInt>;

/// Fixed-width variants for callers that know their degrees stay small.
pub type Polynomial64 = GradedPolynomial<i64>;
pub type Coord64 = obstruction::Coordinate<i64>;
