//! Sparse exact-integer polynomials on even-degree generators.
//!
//! All generators sit in even degree, so the rings are strictly commutative
//! and no Koszul signs ever appear.

mod basis;
mod monomial;
mod poly;
mod ring;
mod text;

pub use basis::{monomial_basis, poincare_rank, poincare_ranks};
pub use monomial::Monomial;
pub use poly::GradedPolynomial;
pub use ring::{Family, Generator, RingSpec};

pub(crate) use poly::check_ring;
