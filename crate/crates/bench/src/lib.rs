//! Shared inputs for the benchmarks.

use seqkernel::exact::ratio;
use seqkernel::{pentagonal_series, ExactRat, TruncSeries};

/// Bases with unit constant term, labelled for benchmark ids.
pub fn power_bases(order: usize) -> Vec<(&'static str, TruncSeries)> {
    vec![
        ("pentagonal", pentagonal_series(order)),
        ("harmonic", TruncSeries::from_fn(order, |i| ratio(1, i as i64 + 1))),
        ("dense_ints", TruncSeries::from_fn(order, |i| ratio([1, 2, -1, 3][i % 4], 1))),
    ]
}

/// Exponents covering inverse, integer and fractional powers.
pub fn exponents() -> Vec<(&'static str, ExactRat)> {
    vec![("-1", ratio(-1, 1)), ("3", ratio(3, 1)), ("1/2", ratio(1, 2)), ("-2/3", ratio(-2, 3))]
}
