//! Finite sums `sum_{n<=k} p(n) x^n` as determinants.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::combinatorics::{gpn, pentagonal_coefficient, pentagonal_series};
use crate::error::{Error, Result};
use crate::exact::{rat, rat_powi, to_rat, ExactRat};
use crate::ltt::{bareiss_det, tower_det, DenseMatrix, TowerMode, TowerSpec};
use crate::series::TruncSeries;

use super::partition_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightedMode {
    /// Sum of the partition values directly.
    Direct,
    /// `x^k` times a `(k+1) x (k+1)` tower determinant with tower `x^{-q}`.
    DetC1,
    /// `k x k` banded determinant, free of division by `x`.
    DetC2,
}

impl WeightedMode {
    pub const ALL: [WeightedMode; 3] = [WeightedMode::Direct, WeightedMode::DetC1, WeightedMode::DetC2];

    pub fn tag(self) -> &'static str {
        match self {
            WeightedMode::Direct => "direct",
            WeightedMode::DetC1 => "det_c1",
            WeightedMode::DetC2 => "det_c2",
        }
    }
}

impl fmt::Display for WeightedMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WeightedMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::UnsupportedMethod(format!("weighted-sum mode `{s}`")))
    }
}

/// `sum_{n=0}^{k} p(n) x^n`.
pub fn weighted_partition_sum(x: &ExactRat, k: usize, mode: WeightedMode) -> Result<ExactRat> {
    match mode {
        WeightedMode::Direct => {
            let p = partition_table(k);
            let mut acc = ExactRat::zero();
            let mut xn = rat(1);
            for v in &p {
                acc += to_rat(v) * &xn;
                xn *= x;
            }
            Ok(acc)
        }
        WeightedMode::DetC1 => {
            if x.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let inv = x.recip();
            let mut tower = Vec::with_capacity(k + 1);
            let mut t = rat(1);
            for _ in 0..=k {
                tower.push(t.clone());
                t *= &inv;
            }
            let spec = TowerSpec::from_series(&pentagonal_series(k), &TruncSeries::new(tower)?, k + 1)?;
            Ok(rat_powi(x, k as i64)? * tower_det(&spec, TowerMode::ExplicitBareiss)?)
        }
        WeightedMode::DetC2 => Ok(bareiss_det(&c3_matrix(x, k))),
    }
}

/// The `k x k` matrix with `-x` on the superdiagonal and
/// `f_m = d_m - x d_{m+1}` on the `m`-th subdiagonal, `d_m` the pentagonal
/// coefficients.
pub fn c2_matrix(x: &ExactRat, k: usize) -> DenseMatrix {
    let d = |m: usize| rat(pentagonal_coefficient(m));
    DenseMatrix::from_fn(k, |i, j| {
        if j == i + 1 {
            -x.clone()
        } else if i >= j {
            let m = i - j;
            d(m) - x * d(m + 1)
        } else {
            ExactRat::zero()
        }
    })
}

/// The same matrix assembled from shift powers:
/// `I - x J^T + sum_{m>0} (-1)^m [J^{g+} + J^{g-} - x J^{g+ - 1} - x J^{g- - 1}]`
/// with `g+- = gpn(+-m)` and `J` the lower shift.
pub fn c3_matrix(x: &ExactRat, k: usize) -> DenseMatrix {
    // band[s] is the coefficient of J^s
    let mut band = vec![ExactRat::zero(); k.max(1)];
    let mut bump = |s: usize, c: ExactRat| {
        if s < k {
            band[s] += c;
        }
    };
    bump(0, rat(1));
    for m in 1i64.. {
        let lo = gpn(m) as usize;
        if lo > k {
            break;
        }
        let s = if m % 2 == 0 { rat(1) } else { rat(-1) };
        for g in [lo, gpn(-m) as usize] {
            bump(g, s.clone());
            bump(g - 1, -(&s * x));
        }
    }
    DenseMatrix::from_fn(k, |i, j| {
        if j == i + 1 {
            -x.clone()
        } else if i >= j {
            band[i - j].clone()
        } else {
            ExactRat::zero()
        }
    })
}
