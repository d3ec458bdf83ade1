//! Dense univariate polynomials with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// A univariate polynomial in `t`, stored densely: `coeffs[k]` is the
/// coefficient of `t^k`.
///
/// The zero polynomial is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients (index = degree), trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn mul_scalar(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of all coefficients; non-negative, zero only for the zero
    /// polynomial.
    pub fn content(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content. The zero polynomial maps to itself.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    /// Divides every coefficient by `s`; `None` if any division is inexact.
    pub fn div_scalar_exact(&self, s: &T) -> Option<Self> {
        if s.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(s);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Polynomial { coeffs: out })
    }

    /// Textbook pseudo-remainder: the remainder of
    /// `lc(d)^(deg(self) - deg(d) + 1) * self` under division by `d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(sd) = self.degree() else {
            return Self::zero();
        };
        if sd < dd {
            return self.clone();
        }
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut scale_left = sd - dd + 1;
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            rem = &rem.mul_scalar(&lead) - &d.shift_up(rd - dd).mul_scalar(&top);
            scale_left -= 1;
        }
        for _ in 0..scale_left {
            rem = rem.mul_scalar(&lead);
        }
        rem
    }

    /// Integer-polynomial gcd via the primitive pseudo-remainder sequence.
    ///
    /// Includes the gcd of the integer contents, so for example
    /// `gcd(2 + 2t, 2) = 2`. The result has a positive leading coefficient and
    /// is zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.abs_normalized();
        }
        if other.is_zero() {
            return self.abs_normalized();
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = Self::prs_step(&a, &b);
            a = b;
            b = r;
        }
        a.abs_normalized().mul_scalar(&content_gcd)
    }

    /// One primitive pseudo-remainder step. Unlike the textbook
    /// [`Self::pseudo_rem`], the remainder is reduced to its primitive part
    /// after every elimination, which keeps coefficient growth linear in the
    /// degree gap instead of exponential.
    fn prs_step(a: &Self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lead = b.leading().unwrap().clone();
        let mut rem = a.clone();
        while let Some(rd) = rem.degree() {
            if rd < db {
                break;
            }
            let top = rem.leading().unwrap().clone();
            rem = &rem.mul_scalar(&lead) - &b.shift_up(rd - db).mul_scalar(&top);
            rem = rem.primitive_part();
        }
        rem
    }

    /// Exact division in `Z[t]`; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let mut rem = self.clone();
        let mut q = vec![T::zero(); sd - dd + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (c, r) = rem.leading().unwrap().div_rem(d.leading().unwrap());
            if !r.is_zero() {
                return None;
            }
            rem = &rem - &d.shift_up(rd - dd).mul_scalar(&c);
            q[rd - dd] = c;
        }
        Some(Self::from_coeffs(q))
    }

    /// Negates iff the leading coefficient is negative.
    pub fn abs_normalized(&self) -> Self {
        match self.leading() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl<'b, T: Scalar> Add<&'b Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl<'b, T: Scalar> Sub<&'b Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl<'b, T: Scalar> Mul<&'b Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| T::zero() - c.clone()).collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}
