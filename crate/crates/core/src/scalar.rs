//! Coefficient rings for the polynomial engine.
//!
//! Everything downstream is a divisibility statement, so only exact integer
//! types qualify. `BigInt` is the default; the fixed-width types are there for
//! callers that know their inputs stay small (they panic on overflow in debug
//! builds like any other integer arithmetic).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait Coefficient:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(value: i64) -> Self {
        <Self as FromPrimitive>::from_i64(value).expect("i64 fits every coefficient type")
    }

    /// `(-1)^k`.
    fn sign_power(k: u64) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}
