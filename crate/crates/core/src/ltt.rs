//! Lower-triangular Toeplitz (LTT) matrices stored by first column, plus
//! the exact determinant machinery behind the "base + tower" formulas.
//!
//! An LTT column `a_0..a_k` stands for the `(k+1) x (k+1)` matrix
//! `A[i][j] = a[i-j]` (`i >= j`), i.e. `sum_q a_q J^q` with `J` the lower
//! shift. Products and inverses of such matrices are again LTT and agree
//! with the truncated series operations, so everything except the dense
//! determinant oracle works on columns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_pow, ExactRat};
use crate::series::{series_inverse, series_pow_exact, RationalExponent, TruncSeries};

/// First column of a lower-triangular Toeplitz matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LttColumn(TruncSeries);

impl LttColumn {
    pub fn new(a: Vec<ExactRat>) -> Result<Self> {
        TruncSeries::new(a).map(Self)
    }

    pub fn from_series(s: TruncSeries) -> Self {
        Self(s)
    }

    pub fn from_ints(a: &[i64]) -> Self {
        Self(TruncSeries::from_ints(a))
    }

    /// Matrix dimension `k + 1`.
    pub fn dim(&self) -> usize {
        self.0.order() + 1
    }

    pub fn entries(&self) -> &[ExactRat] {
        self.0.coeffs()
    }

    pub fn as_series(&self) -> &TruncSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncSeries {
        self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.constant().is_one()
    }

    /// Length-`len` prefix, i.e. the leading `len x len` block.
    pub fn prefix(&self, len: usize) -> Result<Self> {
        assert!(len >= 1, "LTT columns are nonempty");
        self.0.truncate(len - 1).map(Self)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let a = self.entries();
        DenseMatrix::from_fn(self.dim(), |i, j| {
            if i >= j {
                a[i - j].clone()
            } else {
                ExactRat::zero()
            }
        })
    }
}

/// Inverse LTT matrix, column-wise identical to the reciprocal series.
pub fn ltt_inverse(a: &LttColumn) -> Result<LttColumn> {
    series_inverse(&a.0).map(LttColumn).map_err(|e| match e {
        Error::ZeroConstantTerm => Error::Singular,
        other => other,
    })
}

/// `A^X` for rational `X`.
pub fn ltt_pow(a: &LttColumn, x: &RationalExponent) -> Result<LttColumn> {
    series_pow_exact(&a.0, x).map(LttColumn)
}

/// Square matrix of exact rationals; only materialized for determinant
/// cross-checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<ExactRat>,
}

impl DenseMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ExactRat) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<ExactRat>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Range("matrix must be square".into()));
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ExactRat::one() } else { ExactRat::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactRat {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactRat) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[ExactRat] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OrderMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            let mut acc = ExactRat::zero();
            for k in 0..n {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * other.get(k, j);
                }
            }
            acc
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OrderMismatch { left: self.n, right: other.n });
        }
        Ok(Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(m: &DenseMatrix) -> ExactRat {
    let mut peak = 0;
    bareiss_det_probe(m, &mut peak)
}

/// [`bareiss_det`] that also records the largest intermediate bit length.
pub fn bareiss_det_probe(m: &DenseMatrix, peak_bits: &mut u64) -> ExactRat {
    let n = m.dim();
    if n == 0 {
        return ExactRat::one();
    }
    // clear denominators row by row; det scales by the product of the factors
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        a.push(row.iter().map(|v| v.numer() * (&l / v.denom())).collect());
        scale *= l;
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return ExactRat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                *peak_bits = (*peak_bits).max(v.bits());
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if negate { -&a[n - 1][n - 1] } else { a[n - 1][n - 1].clone() };
    *peak_bits = (*peak_bits).max(det.abs().bits());
    ExactRat::new(det, scale)
}

/// The `(p+1) x (p+1)` matrix whose determinant, times `a_0^{(p+1)X}`, is
/// the `z^p` coefficient of `a(z)^X`: the LTT matrix of `a^{-X}` with the
/// corner column `(1, 0, .., 0, -1/a_0^X)` added to its last column.
pub fn build_thm2_matrix(a: &TruncSeries, x: &RationalExponent, p: usize) -> Result<DenseMatrix> {
    if p > a.order() {
        return Err(Error::Range(format!("p = {p} exceeds series order {}", a.order())));
    }
    let neg = ltt_pow(&LttColumn(a.truncate(p)?), &-x)?;
    let corner = rat_pow(a.constant(), x)?.recip();
    let mut m = neg.to_dense();
    let top = m.get(0, p) + ExactRat::one();
    m.set(0, p, top);
    let bottom = m.get(p, p) - &corner;
    m.set(p, p, bottom);
    Ok(m)
}

/// Unit LTT base with its last column replaced by a tower column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    base: LttColumn,
    tower: Vec<ExactRat>,
}

impl TowerSpec {
    pub fn new(base: LttColumn, tower: Vec<ExactRat>) -> Result<Self> {
        if base.dim() != tower.len() {
            return Err(Error::OrderMismatch { left: base.dim(), right: tower.len() });
        }
        if !base.is_unit() {
            return Err(Error::UnsupportedBase);
        }
        Ok(Self { base, tower })
    }

    /// Takes the leading `size` coefficients of each series.
    pub fn from_series(base: &TruncSeries, tower: &TruncSeries, size: usize) -> Result<Self> {
        assert!(size >= 1, "tower determinants are at least 1 x 1");
        let base = LttColumn(base.truncate(size - 1)?);
        let tower = tower.truncate(size - 1)?.into_coeffs();
        Self::new(base, tower)
    }

    pub fn size(&self) -> usize {
        self.tower.len()
    }

    pub fn base(&self) -> &LttColumn {
        &self.base
    }

    pub fn tower(&self) -> &[ExactRat] {
        &self.tower
    }

    /// First `size - 1` columns from the base, last column the tower.
    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.size();
        let a = self.base.entries();
        DenseMatrix::from_fn(n, |i, j| {
            if j == n - 1 {
                self.tower[i].clone()
            } else if i >= j {
                a[i - j].clone()
            } else {
                ExactRat::zero()
            }
        })
    }
}

/// How [`tower_det`] evaluates the determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerMode {
    /// `sum_q tower[q] * b[k-q]` with `b` the inverse base column.
    FastConvolution,
    /// Dense Bareiss elimination of the full matrix.
    ExplicitBareiss,
}

pub fn tower_det(spec: &TowerSpec, mode: TowerMode) -> Result<ExactRat> {
    if !spec.base.is_unit() {
        return Err(Error::UnsupportedBase);
    }
    Ok(match mode {
        TowerMode::FastConvolution => {
            let b = ltt_inverse(&spec.base)?;
            let b = b.entries();
            let k = spec.size() - 1;
            spec.tower
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_zero())
                .map(|(q, t)| t * &b[k - q])
                .sum()
        }
        TowerMode::ExplicitBareiss => bareiss_det(&spec.to_dense()),
    })
}
