//! Determinant forms for the special numbers.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, rat_powi, to_rat, ExactRat};
use crate::ltt::{bareiss_det, DenseMatrix};

/// Which determinant to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialDet {
    /// `B_n = n! det`, `(n+1)`-square.
    Laplace { n: usize },
    /// `B_{2p} = -(2p)!/(2^{2p} - 2) det`, `(p+1)`-square.
    BernoulliHalf { p: usize },
    /// `E_{2p} = (2p)! det`, `(p+1)`-square.
    EulerHalf { p: usize },
    /// `S(n, n-p) = n!/(n-p)! det(I + A^{n-p} T)`.
    Stirling2 { n: usize, p: usize },
    /// `s(n, n-p) = (n-1)!/(n-p-1)! det(A^n + T)`.
    Stirling1 { n: usize, p: usize },
}

fn inv_fact(n: usize) -> ExactRat {
    ExactRat::new(1.into(), factorial(n))
}

/// Lower-triangular Toeplitz block whose last column is `(1, 0, .., 0)`.
fn cornered(size: usize, entry: impl Fn(usize) -> ExactRat) -> DenseMatrix {
    DenseMatrix::from_fn(size, |i, j| {
        if j == size - 1 {
            if i == 0 {
                rat(1)
            } else {
                ExactRat::zero()
            }
        } else if i >= j {
            entry(i - j)
        } else {
            ExactRat::zero()
        }
    })
}

/// Zero matrix except for the last column `(1, 0, .., 0, -1)`.
fn corner_column(size: usize) -> DenseMatrix {
    DenseMatrix::from_fn(size, |i, j| {
        if j + 1 != size {
            ExactRat::zero()
        } else if i == 0 && size > 1 {
            rat(1)
        } else if i + 1 == size {
            if size == 1 {
                ExactRat::zero()
            } else {
                rat(-1)
            }
        } else {
            ExactRat::zero()
        }
    })
}

/// `LTT(1, 1/2!, .., 1/(size)!)`, the matrix of `(e^z - 1)/z`.
fn expm1_over_z(size: usize) -> DenseMatrix {
    DenseMatrix::from_fn(size, |i, j| if i >= j { inv_fact(i - j + 1) } else { ExactRat::zero() })
}

/// Prefactor and matrix for `kind`.
pub fn special_matrix(kind: SpecialDet) -> Result<(ExactRat, DenseMatrix)> {
    Ok(match kind {
        SpecialDet::Laplace { n } => (to_rat(&factorial(n)), cornered(n + 1, |d| inv_fact(d + 1))),
        SpecialDet::BernoulliHalf { p } => {
            let m = cornered(p + 1, |d| inv_fact(2 * d + 1));
            assert_eq!(m.dim(), p + 1);
            let pre = -to_rat(&factorial(2 * p)) / (rat_powi(&rat(2), 2 * p as i64)? - rat(2));
            (pre, m)
        }
        SpecialDet::EulerHalf { p } => {
            let m = cornered(p + 1, |d| inv_fact(2 * d));
            assert_eq!(m.dim(), p + 1);
            (to_rat(&factorial(2 * p)), m)
        }
        SpecialDet::Stirling2 { n, p } => {
            if p > n {
                return Err(Error::Range(format!("S(n, n-p) needs p <= n, got n = {n}, p = {p}")));
            }
            let size = p + 1;
            let a = expm1_over_z(size).pow((n - p) as u32);
            let m = DenseMatrix::identity(size).add(&a.mul(&corner_column(size))?)?;
            let pre = to_rat(&factorial(n)) / to_rat(&factorial(n - p));
            (pre, m)
        }
        SpecialDet::Stirling1 { n, p } => {
            if n == 0 || p >= n {
                return Err(Error::Range(format!("s(n, n-p) needs 0 <= p < n, got n = {n}, p = {p}")));
            }
            let size = p + 1;
            let m = expm1_over_z(size).pow(n as u32).add(&corner_column(size))?;
            let pre = to_rat(&factorial(n - 1)) / to_rat(&factorial(n - p - 1));
            (pre, m)
        }
    })
}

pub fn special_determinant(kind: SpecialDet) -> Result<ExactRat> {
    let (pre, m) = special_matrix(kind)?;
    Ok(pre * bareiss_det(&m))
}
