//! Polynomials in `n` held in the binomial-coefficient basis, and graded
//! tables of them.
//!
//! A Betti number of a configuration space `F_n(X)`, viewed as a function of
//! `n`, is a polynomial with non-negative integer coefficients when written in
//! the basis `C(n, 0), C(n, 1), C(n, 2), ...`. This module stores such
//! polynomials as their coefficient vectors (index `d` holds the coefficient
//! of `C(n, d)`) and implements the three table-level operations the Betti
//! derivations need:
//!
//! * an argument shift `n -> n + 1`, computed coefficient-wise through the
//!   Pascal identity `C(n+1, d) = C(n, d) + C(n, d-1)`;
//! * division of a graded table by `(1 + t)^2`, using the expansion
//!   `(1 + t)^{-2} = sum_i (-1)^i (i + 1) t^i`;
//! * multiplication of a graded table by `(1 + t)^2`.
//!
//! Both series operations are lower triangular in the grading, so a table
//! that truncates an infinite series still determines the result in the rows
//! it covers. Multiplication nevertheless appends two rows beyond the input
//! range (the polynomial product genuinely reaches them) and marks them
//! incomplete: their true values would need input rows the table does not
//! contain, and this module never guesses truncated data.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::combinatorics::binomial;

/// A polynomial in `n` written in the binomial-coefficient basis.
///
/// `coeffs[d]` is the coefficient of `C(n, d)`. The representation is
/// canonical: the trailing coefficient is non-zero unless the polynomial is
/// zero, in which case `coeffs` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialPolynomial {
    coeffs: Vec<BigInt>,
}

impl BinomialPolynomial {
    /// Builds a polynomial from coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the binomial basis (equals the ordinary degree); `None` for
    /// the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Canonical coefficient slice, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `C(n, d)`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Top coefficient; `None` for the zero polynomial.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Evaluates the polynomial at a concrete particle count `n`.
    pub fn evaluate(&self, n: u64) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| c * BigInt::from(binomial(n, d as u64)))
            .sum()
    }

    /// The polynomial `q` with `q(n) = p(n + 1)`, computed exactly in the
    /// binomial basis: `q_d = p_d + p_{d+1}` by the Pascal identity.
    pub fn shift(&self) -> Self {
        let s = (0..self.coeffs.len())
            .map(|d| self.coeff(d) + self.coeff(d + 1))
            .collect();
        Self::new(s)
    }

    fn scaled(&self, factor: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    fn plus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }
}

impl fmt::Display for BinomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*C(n,{d})")?,
            }
        }
        Ok(())
    }
}

/// A graded table of binomial-basis polynomials: row `k` is the coefficient
/// of `t^k` in a Poincaré series whose coefficients are polynomials in `n`.
///
/// `complete_through` records how far the rows can be trusted when the table
/// is a truncation of an infinite series; operations propagate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareTable {
    rows: Vec<BinomialPolynomial>,
    complete_through: usize,
}

impl PoincareTable {
    /// Builds a table whose rows are all trusted. Panics on an empty row set;
    /// a table always covers at least `k = 0`.
    pub fn from_rows(rows: Vec<BinomialPolynomial>) -> Self {
        assert!(!rows.is_empty(), "a Poincare table needs at least row 0");
        let complete_through = rows.len() - 1;
        Self {
            rows,
            complete_through,
        }
    }

    /// Largest grading the table covers.
    pub fn max_k(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[BinomialPolynomial] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> Option<&BinomialPolynomial> {
        self.rows.get(k)
    }

    /// Rows `0..=complete_through()` are exact; anything above reflects
    /// truncated inputs and must not be compared against closed forms.
    pub fn complete_through(&self) -> usize {
        self.complete_through
    }

    pub fn is_row_complete(&self, k: usize) -> bool {
        k <= self.complete_through
    }

    /// Applies the argument shift `n -> n + 1` to every row.
    pub fn shift_rows(&self) -> Self {
        Self {
            rows: self.rows.iter().map(BinomialPolynomial::shift).collect(),
            complete_through: self.complete_through,
        }
    }

    /// Divides the series by `(1 + t)^2`.
    ///
    /// Row `k` of the quotient is `sum_{m=0..k} (-1)^{k-m} (k + 1 - m) row_m`,
    /// straight from `(1 + t)^{-2} = sum_i (-1)^i (i + 1) t^i`. The operation
    /// is lower triangular, so every input row yields an exact output row and
    /// the trusted range is unchanged.
    pub fn divide_by_one_plus_t_squared(&self) -> Self {
        let rows = (0..self.rows.len())
            .map(|k| {
                let mut acc = BinomialPolynomial::zero();
                for (m, row) in self.rows.iter().enumerate().take(k + 1) {
                    let mult = BigInt::from((k + 1 - m) as u64);
                    let signed = if (k - m) % 2 == 0 { mult } else { -mult };
                    acc = acc.plus(&row.scaled(&signed));
                }
                acc
            })
            .collect();
        Self {
            rows,
            complete_through: self.complete_through,
        }
    }

    /// Multiplies the series by `(1 + t)^2`.
    ///
    /// Row `k` of the product is `row_k + 2 row_{k-1} + row_{k-2}` with
    /// missing rows read as zero. The product extends two rows past the input
    /// range; those rows would also draw on input rows beyond the table, so
    /// they are flagged incomplete rather than silently reported as exact.
    pub fn multiply_by_one_plus_t_squared(&self) -> Self {
        let get = |k: isize| -> BinomialPolynomial {
            if k < 0 {
                BinomialPolynomial::zero()
            } else {
                self.rows
                    .get(k as usize)
                    .cloned()
                    .unwrap_or_else(BinomialPolynomial::zero)
            }
        };
        let two = BigInt::from(2);
        let rows = (0..self.rows.len() + 2)
            .map(|k| {
                let k = k as isize;
                get(k).plus(&get(k - 1).scaled(&two)).plus(&get(k - 2))
            })
            .collect();
        Self {
            rows,
            complete_through: self.complete_through,
        }
    }
}

/// Sum of `coeff(d) * C(n, d)` with everything evaluated as non-negative
/// data; helper for callers that know the row is a Betti polynomial.
pub fn evaluate_non_negative(p: &BinomialPolynomial, n: u64) -> Option<BigUint> {
    p.evaluate(n).to_biguint()
}
