//! The scalar abstraction shared by every exact computation in this crate.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::Signed;

/// An exact, integer-like coefficient type.
///
/// Every kernel in this crate (polynomials, rational functions, series,
/// matrices, counting tables) is generic over `Scalar`. The crate-level
/// aliases ([`crate::Int`] and friends) fix [`num_bigint::BigInt`], which can
/// never overflow; `i64` and `i128` satisfy the same bound and are convenient
/// in tests where the inputs are known to be tiny. Floating-point types are
/// deliberately excluded: all results here are exact integers or integer
/// rational functions.
pub trait Scalar: Integer + Signed + Clone + Debug + Display + From<i64> {}

impl<T> Scalar for T where T: Integer + Signed + Clone + Debug + Display + From<i64> {}
