//! Polynomials in `q` with exact integer coefficients, and Gaussian
//! binomial coefficients.
//!
//! Coefficients live in `i64` and every arithmetic step is checked: an
//! overflow aborts the computation instead of wrapping. Gaussian binomials
//! are built from the q-Pascal recurrence
//!
//! ```text
//! [a; b] = [a-1; b-1] + q^b [a-1; b],    [a; 0] = [a; a] = 1,
//! ```
//!
//! never from polynomial division, so intermediate values stay polynomial
//! and exact.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in `q` with `i64` coefficients, stored densely by ascending
/// exponent. Canonical form carries no trailing zero coefficients; the zero
/// polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    /// `coeff * q^exponent`.
    pub fn monomial(coeff: i64, exponent: usize) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; exponent + 1];
        coeffs[exponent] = coeff;
        QPolynomial { coeffs }
    }

    /// Builds from an ascending coefficient list, normalising away trailing
    /// zeros.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Coefficient list, ascending by exponent, without trailing zeros.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^exponent` (zero beyond the degree).
    pub fn coeff(&self, exponent: usize) -> i64 {
        self.coeffs.get(exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Adds `coeff * q^exponent` in place. Errors on coefficient overflow.
    pub fn add_term(&mut self, coeff: i64, exponent: usize) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        if self.coeffs.len() <= exponent {
            self.coeffs.resize(exponent + 1, 0);
        }
        self.coeffs[exponent] = self.coeffs[exponent]
            .checked_add(coeff)
            .ok_or(Error::CoefficientOverflow)?;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        Ok(())
    }

    /// Sum, aborting on coefficient overflow.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len().max(other.coeffs.len()));
        for k in 0..self.coeffs.len().max(other.coeffs.len()) {
            coeffs.push(
                self.coeff(k)
                    .checked_add(other.coeff(k))
                    .ok_or(Error::CoefficientOverflow)?,
            );
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Product, aborting on coefficient overflow.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::CoefficientOverflow)?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(term)
                    .ok_or(Error::CoefficientOverflow)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Multiplication by `q^exponent` (an exponent shift).
    pub fn shifted(&self, exponent: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; exponent];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    /// Value at `q = 1`, i.e. the coefficient sum, checked.
    pub fn eval_at_one(&self) -> Result<i64> {
        let mut total = 0i64;
        for &c in &self.coeffs {
            total = total.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        }
        Ok(total)
    }

    /// True when the coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Exponents where `self` and `other` hold different coefficients.
    pub fn mismatch_exponents(&self, other: &Self) -> Vec<usize> {
        let top = self.coeffs.len().max(other.coeffs.len());
        (0..top).filter(|&k| self.coeff(k) != other.coeff(k)).collect()
    }
}

impl From<Vec<i64>> for QPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::from_coeffs(coeffs)
    }
}

impl From<QPolynomial> for Vec<i64> {
    fn from(poly: QPolynomial) -> Self {
        poly.coeffs
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        self.checked_add(rhs).expect("polynomial coefficient overflow")
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        self.checked_mul(rhs).expect("polynomial coefficient overflow")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Gaussian binomial coefficient `[top; bottom]_q` via the q-Pascal
/// triangle. Errors when `bottom > top`.
///
/// The triangle row for `a` is memoised from row `a - 1`, so each cell is a
/// single polynomial addition and one shift; no division ever occurs.
pub fn gaussian_binomial(top: usize, bottom: usize) -> Result<QPolynomial> {
    if bottom > top {
        return Err(Error::BinomialDomain { top, bottom });
    }
    // Row a of the triangle holds [a; 0] .. [a; a].
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for a in 1..=top {
        let mut next = Vec::with_capacity(a + 1);
        next.push(QPolynomial::one());
        for b in 1..a {
            let cell = row[b - 1].checked_add(&row[b].shifted(b))?;
            next.push(cell);
        }
        next.push(QPolynomial::one());
        row = next;
    }
    Ok(row[bottom].clone())
}
