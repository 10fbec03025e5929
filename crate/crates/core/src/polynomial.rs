//! Dense univariate polynomials with exact `i64` coefficients.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! stripped, so the zero polynomial is the empty vector. Every arithmetic
//! operation is checked and reports [`Error::IntegerOverflow`] instead of
//! wrapping.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

/// One degree at which two polynomials disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(usize, i64, i64)", into = "(usize, i64, i64)")]
pub struct CoeffDiff {
    pub degree: usize,
    pub left: i64,
    pub right: i64,
}

impl From<(usize, i64, i64)> for CoeffDiff {
    fn from((degree, left, right): (usize, i64, i64)) -> Self {
        CoeffDiff { degree, left, right }
    }
}

impl From<CoeffDiff> for (usize, i64, i64) {
    fn from(d: CoeffDiff) -> Self {
        (d.degree, d.left, d.right)
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: impl Into<Vec<i64>>) -> Self {
        let mut p = Polynomial { coeffs: coeffs.into() };
        p.normalize();
        p
    }

    /// The monomial `coeff * x^degree`.
    pub fn monomial(coeff: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Polynomial::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^degree`, zero beyond the stored range.
    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|d| self.coeff(d).checked_add(other.coeff(d)).ok_or(Error::IntegerOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }

    pub fn scale(&self, k: i64) -> Result<Polynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(k).ok_or(Error::IntegerOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// Returns `self + coeff * x^degree`.
    pub fn add_term(&self, coeff: i64, degree: usize) -> Result<Polynomial> {
        let mut out = self.clone();
        out.add_term_in_place(coeff, degree)?;
        Ok(out)
    }

    /// In-place accumulation used by the pair sums; avoids reallocating per term.
    pub fn add_term_in_place(&mut self, coeff: i64, degree: usize) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] = self.coeffs[degree]
            .checked_add(coeff)
            .ok_or(Error::IntegerOverflow)?;
        self.normalize();
        Ok(())
    }

    /// Horner evaluation at an integer point.
    pub fn evaluate(&self, x: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::IntegerOverflow)
        })
    }

    /// Every degree where `self` and `other` differ, ascending.
    pub fn diff_report(&self, other: &Polynomial) -> Vec<CoeffDiff> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .filter_map(|degree| {
                let (left, right) = (self.coeff(degree), other.coeff(degree));
                (left != right).then_some(CoeffDiff { degree, left, right })
            })
            .collect()
    }
}

impl From<Vec<i64>> for Polynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Polynomial::from_coeffs(coeffs)
    }
}

impl From<Polynomial> for Vec<i64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl fmt::Display for Polynomial {
    /// Ascending-degree form, e.g. `8 + 6x + 2x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (degree, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            if degree == 0 || magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            match degree {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{degree}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
