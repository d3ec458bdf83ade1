//! Square integer matrices and the resolvent `t (I - Mt)^{-1} v`.
//!
//! The resolvent is computed by two independent routes that cross-check each
//! other: order-by-order iteration (`v_n = M^(n-1) v_1`), and a closed form
//! obtained by solving `(I - Mt) x = t v` over the rational-function field
//! with fraction-free (Bareiss) elimination on the polynomial matrix.

use crate::exact::{ArithError, Polynomial, RationalFunction};
use crate::scalar::Scalar;

/// A dense square matrix over an exact integer scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ArithError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(ArithError::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scaled(&self, s: &T) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn mat_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.n, v.len(), "matrix and vector dimensions differ");
        (0..self.n)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// The vectors `v_1, .., v_order` with `v_n = M^(n-1) v_1`, i.e. the
    /// coefficient vectors of `t^n` in `t (I - Mt)^{-1} v_1`.
    pub fn resolvent_apply(&self, v1: &[T], order: usize) -> Result<Vec<Vec<T>>, ArithError> {
        if v1.len() != self.n {
            return Err(ArithError::DimensionMismatch {
                left: self.n,
                right: v1.len(),
            });
        }
        let mut out = Vec::with_capacity(order);
        if order == 0 {
            return Ok(out);
        }
        out.push(v1.to_vec());
        for _ in 1..order {
            let next = self.mat_vec(out.last().unwrap());
            out.push(next);
        }
        Ok(out)
    }

    /// The exact rational vector `t (I - Mt)^{-1} v_1`, obtained by solving
    /// `(I - Mt) x = t v_1` with fraction-free elimination. Expanding each
    /// component reproduces [`Self::resolvent_apply`] at every order.
    pub fn resolvent_exact(&self, v1: &[T]) -> Result<Vec<RationalFunction<T>>, ArithError> {
        if v1.len() != self.n {
            return Err(ArithError::DimensionMismatch {
                left: self.n,
                right: v1.len(),
            });
        }
        let n = self.n;
        if n == 0 {
            return Ok(Vec::new());
        }
        // a = I - Mt as a polynomial matrix, b = t v1.
        let mut a: Vec<Vec<Polynomial<T>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c0 = if i == j { T::one() } else { T::zero() };
                        Polynomial::from_coeffs(vec![c0, T::zero() - self.get(i, j).clone()])
                    })
                    .collect()
            })
            .collect();
        let mut b: Vec<Polynomial<T>> = v1
            .iter()
            .map(|v| Polynomial::monomial(v.clone(), 1))
            .collect();

        // Fraction-free forward elimination; every division by the previous
        // pivot is exact.
        let mut prev = Polynomial::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Err(ArithError::Singular);
                };
                a.swap(k, r);
                b.swap(k, r);
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                let num = &(&a[k][k] * &b[i]) - &(&a[i][k] * &b[k]);
                b[i] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
                a[i][k] = Polynomial::zero();
            }
            prev = a[k][k].clone();
        }

        // Back substitution over the rational-function field.
        let mut x = vec![RationalFunction::zero(); n];
        for i in (0..n).rev() {
            let mut acc = RationalFunction::from_polynomial(b[i].clone());
            for j in i + 1..n {
                let term = &RationalFunction::from_polynomial(a[i][j].clone()) * &x[j];
                acc = &acc - &term;
            }
            x[i] = &acc / &RationalFunction::from_polynomial(a[i][i].clone());
        }
        Ok(x)
    }
}
