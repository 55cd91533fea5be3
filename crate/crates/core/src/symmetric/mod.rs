//! Newton polynomials, power sums in `H_*(BU)` and the Hopf coproduct used
//! to certify that power sums are primitive.

mod hopf;
mod newton;
mod oracle;
mod tensor;

pub use hopf::{coproduct, primitive_defect};
pub use newton::{elementary_ring, newton_polynomial, newton_polynomials, power_sum_s};
pub use oracle::brute_force_newton;
pub use tensor::TensorPolynomial;
