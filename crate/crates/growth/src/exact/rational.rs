//! Reduced rational functions over integer polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::exact::{json_decimal_array, ArithError, Polynomial, Series};
use crate::scalar::Scalar;

/// A rational function `num/den` kept in a canonical reduced form:
///
/// * the denominator is nonzero and has a positive leading coefficient,
/// * `gcd(num, den) = 1` in `Z[t]`, integer content included,
/// * the zero function is `0/1`.
///
/// Canonical form makes structural equality coincide with mathematical
/// equality, which the golden-value tests rely on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    /// Builds the reduced, sign-normalized fraction `num/den`.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        if den.leading().expect("nonzero").is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction { num, den })
    }

    /// Convenience constructor from machine-integer coefficient lists.
    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<Self, ArithError> {
        Self::new(Polynomial::from_i64(num), Polynomial::from_i64(den))
    }

    pub fn from_polynomial(p: Polynomial<T>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `den/num`; fails on the zero function.
    pub fn reciprocal(&self) -> Result<Self, ArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, exp: usize) -> Self {
        // num and den are already coprime, so only the sign normalization of
        // `new` matters here.
        Self::new(self.num.pow(exp), self.den.pow(exp)).expect("nonzero denominator")
    }

    /// Exact Maclaurin coefficients `a_0..a_order` by long division.
    ///
    /// Fails when the denominator vanishes at the origin, or when a
    /// coefficient would not be an integer.
    pub fn expand(&self, order: usize) -> Result<Series<T>, ArithError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(ArithError::NotExpandableAtOrigin);
        }
        let dd = self.den.degree().expect("nonzero");
        let mut coeffs: Vec<T> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for k in 1..=dd.min(n) {
                acc = acc - self.den.coeff(k) * coeffs[n - k].clone();
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(ArithError::NonIntegerCoefficient(n));
            }
            coeffs.push(q);
        }
        Ok(Series::new(coeffs))
    }

    /// `{"num":["..."],"den":["..."]}` with coefficients as decimal strings.
    pub fn to_json_string(&self) -> String {
        format!(
            "{{\"num\":{},\"den\":{}}}",
            poly_json(&self.num),
            poly_json(&self.den)
        )
    }
}

/// The zero polynomial serializes as `["0"]`, not `[]`.
pub(crate) fn poly_json<T: Scalar>(p: &Polynomial<T>) -> String {
    if p.is_zero() {
        "[\"0\"]".to_string()
    } else {
        json_decimal_array(p.coeffs())
    }
}

/// Substitutes the Moebius argument `a*t/(b + c*t)` into `p`, returning the
/// exact reduced rational function
/// `sum_k p_k (a t)^k (b + c t)^(deg-k) / (b + c t)^deg`.
pub fn poly_substitute_mobius<T: Scalar>(
    p: &Polynomial<T>,
    a: T,
    b: T,
    c: T,
) -> Result<RationalFunction<T>, ArithError> {
    if b.is_zero() {
        return Err(ArithError::PoleAtOrigin);
    }
    let Some(deg) = p.degree() else {
        return Ok(RationalFunction::zero());
    };
    let at = Polynomial::from_coeffs(vec![T::zero(), a]);
    let bct = Polynomial::from_coeffs(vec![b, c]);
    // Powers of (a t) and (b + c t) up to deg, computed once.
    let mut at_pows = Vec::with_capacity(deg + 1);
    let mut bct_pows = Vec::with_capacity(deg + 1);
    at_pows.push(Polynomial::one());
    bct_pows.push(Polynomial::one());
    for k in 1..=deg {
        at_pows.push(&at_pows[k - 1] * &at);
        bct_pows.push(&bct_pows[k - 1] * &bct);
    }
    let mut num = Polynomial::zero();
    for k in 0..=deg {
        let ck = p.coeff(k);
        if ck.is_zero() {
            continue;
        }
        num = &num + &(&at_pows[k] * &bct_pows[deg - k]).mul_scalar(&ck);
    }
    RationalFunction::new(num, bct_pows[deg].clone())
}

impl<'b, T: Scalar> Add<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn add(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<'b, T: Scalar> Sub<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn sub(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<'b, T: Scalar> Mul<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn mul(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

/// Panics when dividing by the zero function, like integer division.
impl<'b, T: Scalar> Div<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn div(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("nonzero denominator")
    }
}

impl<T: Scalar> Neg for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn neg(self) -> RationalFunction<T> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<T: Scalar> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
