//! Cohomology presentations of BU, BU(1), BSU and BU<6>, the Bott map on
//! `H_*(BU)`, Kronecker pairing against Chern classes, and the generator
//! images of the restriction maps to `H^*(BU(1))`.

mod bott;
mod maps;
mod primes;
mod spaces;

pub use bott::{
    bott_pushforward, bsu_restriction_coefficient, bu6_generator_image, bu_restriction_coefficient_4,
    pair_with_chern, pushforward_via_single_steps, Bu6Image,
};
pub use maps::{bott_map, bsu_to_bu1, bu6_to_bu1, GeneratorMap, Variance};
pub use primes::prime_power;
pub use spaces::{bu_homology_ring, space_model, SpaceModel, SpacePresentation};
