//! The partition function and its relatives: pentagonal-partition sums,
//! LTT determinants, the pentagonal recurrence, restricted and distinct
//! partitions, the Ramanujan slices, and weighted partial sums.

mod slices;
mod weighted;

pub use slices::{
    a5_tower, check_j_identities, g1_g2_series, g_residue_one, h_polynomials, p_25k_a, p_5k_a,
    ramanujan_j_identities, ramanujan_slice, x_vector, z_vector, G12Pair, HPolySet, IdentityCheck,
    IdentityReport, SliceFamily, SliceKind,
};
pub use weighted::{c2_matrix, c3_matrix, weighted_partition_sum, WeightedMode};

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinatorics::{
    enum_restricted_partitions, gpn, gpn_sequence, pentagonal_series, PartSet,
};
use crate::error::{Error, Result};
use crate::exact::{as_integer, factorials, rat, ExactInt};
use crate::ltt::{bareiss_det_probe, tower_det, DenseMatrix, TowerMode, TowerSpec};
use crate::series::{series_inverse, TruncSeries};

/// Largest `n` for which the determinant route uses dense elimination.
pub const EXPLICIT_DET_CAP: usize = 60;

/// Route for [`partition_number`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionMethod {
    /// Signed multinomial sum over the pentagonal partitions of `n`.
    PentagonalSum,
    /// Reciprocal of the pentagonal series.
    Series,
    /// `(n+1) x (n+1)` pentagonal LTT determinant with a unit tower.
    Determinant,
    /// Pentagonal-number recurrence.
    Recurrence,
}

impl PartitionMethod {
    pub const ALL: [PartitionMethod; 4] = [
        PartitionMethod::PentagonalSum,
        PartitionMethod::Series,
        PartitionMethod::Determinant,
        PartitionMethod::Recurrence,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PartitionMethod::PentagonalSum => "pentagonal_sum",
            PartitionMethod::Series => "series",
            PartitionMethod::Determinant => "determinant",
            PartitionMethod::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for PartitionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PartitionMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::UnsupportedMethod(format!("partition method `{s}`")))
    }
}

/// `p(n)` by the requested route.
pub fn partition_number(n: usize, method: PartitionMethod) -> ExactInt {
    let mut peak = 0;
    partition_number_probe(n, method, &mut peak)
}

/// [`partition_number`] that also reports the bit length of the largest
/// operand the route touched.
pub fn partition_number_probe(n: usize, method: PartitionMethod, peak_bits: &mut u64) -> ExactInt {
    match method {
        PartitionMethod::PentagonalSum => pentagonal_sum(n, peak_bits),
        PartitionMethod::Series => {
            let inv = series_inverse(&pentagonal_series(n)).expect("unit constant term");
            for c in inv.coeffs() {
                *peak_bits = (*peak_bits).max(c.numer().bits());
            }
            inv.coeffs()[n].numer().clone()
        }
        PartitionMethod::Determinant => {
            let spec = partition_tower(n);
            let det = if n <= EXPLICIT_DET_CAP {
                bareiss_det_probe(&spec.to_dense(), peak_bits)
            } else {
                let d = tower_det(&spec, TowerMode::FastConvolution).expect("unit base");
                *peak_bits = (*peak_bits).max(d.numer().bits());
                d
            };
            as_integer(&det).expect("integer determinant")
        }
        PartitionMethod::Recurrence => {
            let table = partition_table(n);
            *peak_bits = (*peak_bits).max(table[n].bits());
            table[n].clone()
        }
    }
}

/// Pentagonal base with a unit tower entry `n` rows above the bottom.
fn partition_tower(n: usize) -> TowerSpec {
    let mut tower = vec![rat(0); n + 1];
    tower[0] = rat(1);
    TowerSpec::from_series(&pentagonal_series(n), &TruncSeries::new(tower).expect("nonempty"), n + 1)
        .expect("unit pentagonal base")
}

fn pentagonal_sum(n: usize, peak_bits: &mut u64) -> ExactInt {
    let parts = PartSet::pentagonal(n);
    // a part gpn(m) carries sign (-1)^{m+1} once the (-1)^K of the inverse is folded in
    let negative: Vec<bool> = parts
        .allowed()
        .iter()
        .map(|&g| {
            gpn_sequence()
                .find(|&(_, q)| q as usize == g)
                .map(|(m, _)| m.unsigned_abs() % 2 == 0)
                .expect("allowed parts are pentagonal")
        })
        .collect();
    let fact = factorials(n);
    let mut total = BigInt::zero();
    for v in enum_restricted_partitions(n, &parts) {
        let mut term = fact[v.total_parts()].clone();
        let mut flips = 0;
        for (i, &k) in v.exponents().iter().enumerate() {
            term /= &fact[k];
            if negative[i] {
                flips += k;
            }
        }
        *peak_bits = (*peak_bits).max(term.bits());
        if flips % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    *peak_bits = (*peak_bits).max(total.abs().bits());
    total
}

/// `p(0..=n)` from `p(n) = sum_{m != 0} (-1)^{m+1} p(n - gpn(m))`.
pub fn partition_table(n: usize) -> Vec<ExactInt> {
    let mut p: Vec<ExactInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::from(1));
    for i in 1..=n {
        p.push(recurrence_step(&p, i));
    }
    p
}

fn recurrence_step(p: &[ExactInt], i: usize) -> ExactInt {
    let mut acc = BigInt::zero();
    for (m, g) in gpn_sequence().skip(1) {
        let g = g as usize;
        if g > i {
            break;
        }
        if m.unsigned_abs() % 2 == 1 {
            acc += &p[i - g];
        } else {
            acc -= &p[i - g];
        }
    }
    acc
}

/// `sum_m (-1)^m p(n - gpn(m))` over every `m` with `gpn(m) <= n`; zero for
/// `n >= 1` by the pentagonal recurrence.
pub fn pentagonal_alternating_sum(n: usize, p: &[ExactInt]) -> ExactInt {
    signed_gpn_sum(n, 1, p)
}

fn signed_gpn_sum(n: usize, scale: usize, p: &[ExactInt]) -> ExactInt {
    let mut acc = BigInt::zero();
    for (m, g) in gpn_sequence() {
        let off = g as usize * scale;
        if off > n {
            break;
        }
        if m.unsigned_abs() % 2 == 0 {
            acc += &p[n - off];
        } else {
            acc -= &p[n - off];
        }
    }
    acc
}

/// `p(n)` as the `n x n` Hessenberg determinant
/// `det[-J^T + sum_{m>0} (-1)^{m+1} (J^{gpn(m)-1} + J^{gpn(-m)-1})]`.
pub fn partition_hessenberg_det(n: usize) -> ExactInt {
    let mut band = vec![0i64; n.max(1)];
    for m in 1i64.. {
        let lo = gpn(m) as usize - 1;
        if lo >= n {
            break;
        }
        let s = if m % 2 == 1 { 1 } else { -1 };
        band[lo] += s;
        let hi = gpn(-m) as usize - 1;
        if hi < n {
            band[hi] += s;
        }
    }
    let m = DenseMatrix::from_fn(n, |i, j| {
        if j == i + 1 {
            rat(-1)
        } else if i >= j {
            rat(band[i - j])
        } else {
            rat(0)
        }
    });
    let mut peak = 0;
    as_integer(&bareiss_det_probe(&m, &mut peak)).expect("integer determinant")
}

/// Number of partitions of `n` in which no part occurs more than `d` times.
pub fn restricted_partition_number(d: usize, n: usize) -> Result<ExactInt> {
    if d == 0 {
        return Err(Error::DegenerateCase(
            "D = 0 admits no parts; the tower determinant is the pentagonal recurrence".into(),
        ));
    }
    let spec = restricted_tower(d, n)?;
    let det = tower_det(&spec, TowerMode::FastConvolution)?;
    Ok(as_integer(&det).expect("integer determinant"))
}

/// Pentagonal base with tower `t_q = (-1)^m` at `q = (d+1) gpn(m)`.
pub fn restricted_tower(d: usize, n: usize) -> Result<TowerSpec> {
    let tower = pentagonal_series(n / (d + 1)).substitute_power(d + 1, n)?;
    TowerSpec::from_series(&pentagonal_series(n), &tower, n + 1)
}

/// `sum_m (-1)^m p(n - (d+1) gpn(m))`, including the `m = 0` term `p(n)`.
pub fn restricted_partition_number_by_sum(d: usize, n: usize, p: &[ExactInt]) -> ExactInt {
    signed_gpn_sum(n, d + 1, p)
}

/// Partitions of `n` into distinct parts (equivalently, into odd parts).
pub fn distinct_partition_number(n: usize) -> ExactInt {
    restricted_partition_number(1, n).expect("d = 1 is valid")
}

/// `q(n) = p(n) - p(n-2) - p(n-4) + p(n-10) + ...`.
pub fn distinct_partition_number_by_sum(n: usize) -> ExactInt {
    restricted_partition_number_by_sum(1, n, &partition_table(n))
}

/// Write-once table of `p(0..)`, extended on demand by the recurrence.
///
/// Entries are never modified once written; concurrent callers asking for
/// the same index all see the same value.
#[derive(Debug, Default)]
pub struct PartitionCache {
    values: Mutex<Vec<ExactInt>>,
}

impl PartitionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize) -> ExactInt {
        let mut values = self.values.lock().unwrap_or_else(|e| e.into_inner());
        if values.is_empty() {
            values.push(BigInt::from(1));
        }
        while values.len() <= n {
            let i = values.len();
            let next = recurrence_step(&values, i);
            values.push(next);
        }
        values[n].clone()
    }

    pub fn len(&self) -> usize {
        self.values.lock().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use std::sync::Arc;

    // brute-force counter: partitions of n with parts <= max and each part
    // used at most `cap` times
    fn brute(n: usize, max: usize, cap: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        if max == 0 {
            return 0;
        }
        (0..=cap.min(n / max)).map(|c| brute(n - c * max, max - 1, cap)).sum()
    }

    fn distinct_dp(n: usize) -> u64 {
        let mut c = vec![0u64; n + 1];
        c[0] = 1;
        for part in 1..=n {
            for i in (part..=n).rev() {
                c[i] += c[i - part];
            }
        }
        c[n]
    }

    #[test]
    fn partition_examples() {
        for m in PartitionMethod::ALL {
            assert_eq!(partition_number(9, m), int(30), "{m}");
            assert_eq!(partition_number(0, m), int(1), "{m}");
        }
        assert_eq!(partition_number(199, PartitionMethod::Series), int(3646072432125));
        assert_eq!(partition_number(199, PartitionMethod::Recurrence), int(3646072432125));
        assert_eq!(partition_number(199, PartitionMethod::Determinant), int(3646072432125));
    }

    #[test]
    fn methods_agree_with_brute_force() {
        for n in 0..=30 {
            let expected = BigInt::from(brute(n, n, n));
            for m in PartitionMethod::ALL {
                assert_eq!(partition_number(n, m), expected, "n = {n}, {m}");
            }
            assert_eq!(partition_hessenberg_det(n), expected, "hessenberg n = {n}");
        }
    }

    #[test]
    fn method_tags_round_trip() {
        for m in PartitionMethod::ALL {
            assert_eq!(m.tag().parse::<PartitionMethod>().unwrap(), m);
        }
        assert!("nope".parse::<PartitionMethod>().is_err());
    }

    #[test]
    fn recurrence_identity_vanishes() {
        let p = partition_table(120);
        for n in 1..=120 {
            assert!(pentagonal_alternating_sum(n, &p).is_zero(), "n = {n}");
        }
        assert_eq!(pentagonal_alternating_sum(0, &p), int(1));
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(restricted_partition_number(1, 5).unwrap(), int(3));
        assert_eq!(restricted_partition_number(2, 4).unwrap(), int(4));
        for n in 0..=12 {
            assert_eq!(restricted_partition_number(n.max(1), n).unwrap(), partition_number(n, PartitionMethod::Recurrence));
        }
        assert!(matches!(restricted_partition_number(0, 3), Err(Error::DegenerateCase(_))));
    }

    #[test]
    fn restricted_matches_brute_force_and_sum() {
        let p = partition_table(80);
        for d in 1..=3 {
            for n in 0..=80 {
                let det = restricted_partition_number(d, n).unwrap();
                assert_eq!(det, restricted_partition_number_by_sum(d, n, &p), "d = {d}, n = {n}");
                if n <= 30 {
                    assert_eq!(det, BigInt::from(brute(n, n, d)), "d = {d}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn restricted_explicit_determinant() {
        for d in 1..=3 {
            for n in 0..=12 {
                let spec = restricted_tower(d, n).unwrap();
                assert_eq!(
                    tower_det(&spec, TowerMode::ExplicitBareiss).unwrap(),
                    tower_det(&spec, TowerMode::FastConvolution).unwrap()
                );
            }
        }
    }

    #[test]
    fn distinct_examples() {
        assert_eq!(distinct_partition_number(6), int(4));
        assert_eq!(distinct_partition_number(0), int(1));
        assert_eq!(distinct_partition_number(10), int(10));
        for n in 0..=60 {
            let expected = BigInt::from(distinct_dp(n));
            assert_eq!(distinct_partition_number(n), expected);
            assert_eq!(distinct_partition_number_by_sum(n), expected);
        }
    }

    #[test]
    fn cache_is_consistent_across_threads() {
        let cache = Arc::new(PartitionCache::new());
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let cache = Arc::clone(&cache);
                std::thread::spawn(move || (0..=150).rev().map(|n| (n, cache.get((n + t * 7) % 151))).collect::<Vec<_>>())
            })
            .collect();
        let table = partition_table(150);
        for (t, h) in handles.into_iter().enumerate() {
            for (n, v) in h.join().unwrap() {
                assert_eq!(v, table[(n + t * 7) % 151]);
            }
        }
        assert_eq!(cache.len(), 151);
    }

    #[test]
    fn probe_reports_bits() {
        let mut bits = 0;
        let v = partition_number_probe(50, PartitionMethod::Determinant, &mut bits);
        assert_eq!(v, int(204226));
        assert!(bits >= 18);
    }
}
