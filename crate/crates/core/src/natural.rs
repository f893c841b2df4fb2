//! Natural-number scalars.
//!
//! The even-number system and the partial-recursive evaluator work over any
//! unsigned integer type that satisfies [`Natural`]. Fixed-width types report
//! overflow instead of wrapping; [`num_bigint::BigUint`] never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, ToPrimitive, Unsigned};

/// An unsigned integer usable as a domain element and as a program value.
pub trait Natural:
    Unsigned
    + Num
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// `self + 1`, or `None` when the type cannot represent it.
    fn checked_succ(&self) -> Option<Self> {
        self.checked_add(&Self::one())
    }

    /// Parses a decimal literal.
    fn parse_decimal(text: &str) -> Option<Self> {
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Self::from_str_radix(text, 10).ok()
    }
}

macro_rules! natural_impl {
    ($($t:ty)*) => ($(
        impl Natural for $t {}
    )*)
}

natural_impl!(u8 u16 u32 u64 u128 usize BigUint);
