//! Exact arithmetic kernels: dense integer polynomials, reduced rational
//! functions, truncated power series, and square integer matrices together
//! with their resolvents `t (I - Mt)^{-1} v`.
//!
//! Everything here is generic over [`crate::Scalar`] and never rounds: gcds
//! are computed by primitive pseudo-remainder sequences, linear systems over
//! the polynomial ring are solved by fraction-free (Bareiss) elimination, and
//! series expansion fails loudly if a coefficient would not be an integer.

mod matrix;
mod polynomial;
mod rational;
mod series;

pub use matrix::SquareMatrix;
pub use polynomial::Polynomial;
pub use rational::{poly_substitute_mobius, RationalFunction};
pub use series::{series_compose, series_compose_rational, Series};

use thiserror::Error;

/// Errors produced by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// A rational function was given a zero denominator.
    #[error("denominator is zero")]
    ZeroDenominator,
    /// A Moebius substitution `p(a t / (b + c t))` was requested with `b = 0`.
    #[error("pole at origin")]
    PoleAtOrigin,
    /// Series expansion of a rational function whose denominator vanishes at
    /// `t = 0`.
    #[error("not expandable at origin")]
    NotExpandableAtOrigin,
    /// The Maclaurin expansion has a non-integer coefficient at this order.
    #[error("series coefficient of t^{0} is not an integer")]
    NonIntegerCoefficient(usize),
    /// Series composition requires the inner series to vanish at the origin.
    #[error("inner series has nonzero constant term")]
    InnerNotZeroAtOrigin,
    /// A truncated series was too short for the requested operation.
    #[error("series order {have} is smaller than the required order {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Renders scalars as a JSON array of decimal strings: `["1","-6","9"]`.
///
/// Decimal strings keep arbitrary-precision coefficients safe from any
/// consumer-side integer-width assumption.
pub(crate) fn json_decimal_array<T: std::fmt::Display>(values: &[T]) -> String {
    let mut out = String::from("[");
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('"');
        out.push_str(&v.to_string());
        out.push('"');
    }
    out.push(']');
    out
}
