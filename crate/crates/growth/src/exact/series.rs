//! Truncated power series with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::exact::{json_decimal_array, ArithError, RationalFunction};
use crate::scalar::Scalar;

/// A power series truncated at an explicit order: `coeffs[n]` is the
/// coefficient of `t^n` for `n = 0..=order`, so the vector is never empty.
///
/// Arithmetic never silently exceeds the truncation order; combining series of
/// different orders truncates to the shorter one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// Wraps coefficients `a_0..a_N`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Series { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Shortens to the requested order (no-op if already shorter).
    pub fn truncated(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn mul_scalar(&self, s: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Substitutes `inner` (which must vanish at the origin) into `self`,
    /// truncated to the shorter of the two orders.
    pub fn compose(&self, inner: &Series<T>) -> Result<Series<T>, ArithError> {
        if !inner.coeffs[0].is_zero() {
            return Err(ArithError::InnerNotZeroAtOrigin);
        }
        let order = self.order().min(inner.order());
        // Horner: inner has valuation >= 1, so coefficients of self beyond
        // `order` cannot contribute.
        let mut acc = Series::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &(&acc * inner).truncated(order) + &Series::constant(self.coeffs[k].clone(), order);
        }
        Ok(acc)
    }

    /// `{"order":N,"coeffs":["..."]}` with coefficients as decimal strings.
    pub fn to_json_string(&self) -> String {
        format!(
            "{{\"order\":{},\"coeffs\":{}}}",
            self.order(),
            json_decimal_array(&self.coeffs)
        )
    }
}

/// Truncated composition `outer(inner(t))` where the outer factor is already a
/// series. The outer series must carry at least `order` coefficients: inner
/// has valuation one, so every outer coefficient up to `order` matters.
pub fn series_compose<T: Scalar>(
    outer: &Series<T>,
    inner: &RationalFunction<T>,
    order: usize,
) -> Result<Series<T>, ArithError> {
    if outer.order() < order {
        return Err(ArithError::InsufficientOrder {
            have: outer.order(),
            need: order,
        });
    }
    let inner = inner.expand(order)?;
    outer.truncated(order).compose(&inner)
}

/// Truncated composition with a rational outer factor.
pub fn series_compose_rational<T: Scalar>(
    outer: &RationalFunction<T>,
    inner: &RationalFunction<T>,
    order: usize,
) -> Result<Series<T>, ArithError> {
    series_compose(&outer.expand(order)?, inner, order)
}

impl<'b, T: Scalar> Add<&'b Series<T>> for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: &'b Series<T>) -> Series<T> {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].clone() + rhs.coeffs[n].clone())
                .collect(),
        }
    }
}

impl<'b, T: Scalar> Sub<&'b Series<T>> for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: &'b Series<T>) -> Series<T> {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].clone() - rhs.coeffs[n].clone())
                .collect(),
        }
    }
}

impl<'b, T: Scalar> Mul<&'b Series<T>> for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: &'b Series<T>) -> Series<T> {
        let order = self.order().min(rhs.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs: out }
    }
}

impl<T: Scalar> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " (order {})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = Series<i64>;
    type R = RationalFunction<i64>;

    #[test]
    fn truncating_arithmetic() {
        let a = S::from_i64(&[1, 1, 1, 1]);
        let b = S::from_i64(&[1, 2]);
        assert_eq!((&a + &b).coeffs(), &[2, 3]);
        assert_eq!((&a * &b).coeffs(), &[1, 3]);
        assert_eq!((&a - &a).coeffs(), &[0, 0, 0, 0]);
    }

    #[test]
    fn compose_geometric_into_geometric() {
        // 1/(1-u) at u = t/(1-t) equals (1-t)/(1-2t): 1, 1, 2, 4.
        let outer = R::from_i64(&[1], &[1, -1]).unwrap();
        let inner = R::from_i64(&[0, 1], &[1, -1]).unwrap();
        let s = series_compose_rational(&outer, &inner, 3).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 2, 4]);
    }

    #[test]
    fn compose_identity_substitution() {
        let outer = R::from_i64(&[1, 1], &[1, -3]).unwrap();
        let inner = R::from_i64(&[0, 1], &[1]).unwrap();
        let s = series_compose_rational(&outer, &inner, 4).unwrap();
        assert_eq!(s, outer.expand(4).unwrap());
    }

    #[test]
    fn compose_doubling_argument() {
        // (1+u)/(1-u) at u = 2t/(1-t) equals (1+t)/(1-3t): 1, 4, 12.
        let outer = R::from_i64(&[1, 1], &[1, -1]).unwrap();
        let inner = R::from_i64(&[0, 2], &[1, -1]).unwrap();
        let s = series_compose_rational(&outer, &inner, 2).unwrap();
        assert_eq!(s.coeffs(), &[1, 4, 12]);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let outer = S::from_i64(&[1, 1, 1]);
        let inner = R::from_i64(&[1, 1], &[1]).unwrap();
        assert_eq!(
            series_compose(&outer, &inner, 2),
            Err(ArithError::InnerNotZeroAtOrigin)
        );
    }

    #[test]
    fn compose_rejects_short_outer() {
        let outer = S::from_i64(&[1, 1]);
        let inner = R::from_i64(&[0, 1], &[1, -1]).unwrap();
        assert_eq!(
            series_compose(&outer, &inner, 5),
            Err(ArithError::InsufficientOrder { have: 1, need: 5 })
        );
    }

    #[test]
    fn json_form() {
        let s = S::from_i64(&[1, 4, 12]);
        assert_eq!(
            s.to_json_string(),
            "{\"order\":2,\"coeffs\":[\"1\",\"4\",\"12\"]}"
        );
    }
}
