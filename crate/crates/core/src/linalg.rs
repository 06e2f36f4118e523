//! Fraction-free (Bareiss) determinants over integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::QPolynomial;

/// An integral domain with exact division, enough for Bareiss elimination.
pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, where the caller guarantees exactness.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(Zero::is_zero(&r), "inexact Bareiss step");
        q
    }
}

impl ExactRing for QPolynomial {
    fn zero() -> Self {
        QPolynomial::zero()
    }
    fn one() -> Self {
        QPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        QPolynomial::div_exact(self, rhs).expect("inexact Bareiss step")
    }
}

/// Determinant of a square matrix given as rows.
///
/// Panics if the matrix is not square.
pub fn determinant<R: ExactRing>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix is not square");
    if n == 0 {
        return R::one();
    }
    let mut m: Vec<Vec<R>> = matrix.to_vec();
    let mut prev = R::one();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}
