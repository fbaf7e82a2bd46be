//! Upper-triangular Toeplitz matrices built from a series' coefficients.
//!
//! Inverting the `n x n` truncation by plain back substitution gives the
//! reciprocal series' coefficients along every row, which is an independent
//! route to [`TruncatedLaurentSeries::reciprocal`](crate::series::TruncatedLaurentSeries::reciprocal).
//! Entries of `first_row` beyond `n` are ignored; missing entries are zero.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// `T[i][j] = first_row[j - i]` for `j >= i`, zero below the diagonal.
pub fn toeplitz_matrix(first_row: &[Rational], n: usize) -> Matrix {
    let entry = |k: usize| first_row.get(k).cloned().unwrap_or_else(Rational::zero);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j >= i {
                        entry(j - i)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Inverse of the `n x n` upper-triangular Toeplitz matrix with the given
/// first row.
#[allow(clippy::needless_range_loop)]
pub fn toeplitz_inverse(first_row: &[Rational], n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::domain("matrix size must be at least 1"));
    }
    if first_row.first().is_none_or(Zero::is_zero) {
        return Err(Error::domain(
            "singular Toeplitz matrix: first element is zero",
        ));
    }
    let t = toeplitz_matrix(first_row, n);
    let mut inv = vec![vec![Rational::zero(); n]; n];
    // Solve T x = e_col for each column by back substitution.
    for col in 0..n {
        for i in (0..n).rev() {
            let mut rhs = if i == col {
                Rational::one()
            } else {
                Rational::zero()
            };
            for j in i + 1..n {
                if !t[i][j].is_zero() && !inv[j][col].is_zero() {
                    rhs -= &t[i][j] * &inv[j][col];
                }
            }
            inv[i][col] = rhs / &t[i][i];
        }
    }
    Ok(inv)
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}
