//! Restricted partitions and compositions, multinomials, and the
//! pentagonal-number building blocks of the q-series code.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{factorials, sign, ExactInt};
use crate::series::{pow_int, TruncSeries};

/// Strictly increasing list of allowed part sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSet {
    allowed: Arc<[usize]>,
    label: String,
}

impl PartSet {
    /// Fails unless `allowed` is nonempty, positive and strictly increasing.
    pub fn new(allowed: Vec<usize>, label: impl Into<String>) -> Option<Self> {
        let ok = !allowed.is_empty()
            && allowed[0] >= 1
            && allowed.windows(2).all(|w| w[0] < w[1]);
        ok.then(|| Self { allowed: allowed.into(), label: label.into() })
    }

    /// Every size in `lo..=hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        let lo = lo.max(1);
        let hi = hi.max(lo);
        Self { allowed: (lo..=hi).collect(), label: format!("{lo}..={hi}") }
    }

    /// Generalized pentagonal numbers in `1..=max` (at least `{1}`).
    pub fn pentagonal(max: usize) -> Self {
        let mut v: Vec<usize> = gpn_sequence()
            .map(|(_, g)| g as usize)
            .take_while(|&g| g <= max.max(1))
            .filter(|&g| g > 0)
            .collect();
        v.sort_unstable();
        Self { allowed: v.into(), label: "pentagonal".into() }
    }

    /// Odd sizes `1, 3, 5, ..` up to `max` (at least `{1}`).
    pub fn odd(max: usize) -> Self {
        Self { allowed: (1..=max.max(1)).step_by(2).collect(), label: "odd".into() }
    }

    /// Even sizes `2, 4, ..` up to `max` (at least `{2}`).
    pub fn even(max: usize) -> Self {
        Self { allowed: (2..=max.max(2)).step_by(2).collect(), label: "even".into() }
    }

    pub fn allowed(&self) -> &[usize] {
        &self.allowed
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// A partition of `p` written as multiplicities `k[i]` of `parts[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentVector {
    p: usize,
    parts: Arc<[usize]>,
    k: Vec<usize>,
}

impl ExponentVector {
    pub fn target(&self) -> usize {
        self.p
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn exponents(&self) -> &[usize] {
        &self.k
    }

    /// `K = sum k_i`, the number of parts.
    pub fn total_parts(&self) -> usize {
        self.k.iter().sum()
    }

    /// `K! / prod k_i!`: how many compositions share this partition.
    pub fn ordering_count(&self) -> ExactInt {
        let f = factorials(self.total_parts());
        let mut acc = f[self.total_parts()].clone();
        for &k in &self.k {
            acc /= &f[k];
        }
        acc
    }

    /// Multiplicity of part size `m`, zero if `m` is not an allowed part.
    pub fn multiplicity(&self, m: usize) -> usize {
        self.parts.iter().position(|&x| x == m).map_or(0, |i| self.k[i])
    }
}

/// `n! / (q_1! ... q_K!)` when `sum q_i = n`, else zero.
pub fn multinomial(n: usize, parts: &[usize]) -> ExactInt {
    if parts.iter().sum::<usize>() != n {
        return BigInt::zero();
    }
    let f = factorials(n);
    parts.iter().fold(f[n].clone(), |acc, &q| acc / &f[q])
}

/// Streams every exponent vector over `parts` summing to `n`, each once,
/// in lexicographically increasing order of `(k_1, k_2, ...)`.
pub fn enum_restricted_partitions(n: usize, parts: &PartSet) -> RestrictedPartitions {
    RestrictedPartitions::new(n, parts.allowed.clone())
}

/// Iterator returned by [`enum_restricted_partitions`].
///
/// Odometer over all but the last multiplicity; the last one is forced by
/// the remainder and candidates whose remainder it cannot absorb are
/// skipped.
#[derive(Debug, Clone)]
pub struct RestrictedPartitions {
    n: usize,
    parts: Arc<[usize]>,
    k: Vec<usize>,
    // rem[i] = n - sum_{j<i} k[j] * parts[j]
    rem: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedPartitions {
    fn new(n: usize, parts: Arc<[usize]>) -> Self {
        let m = parts.len();
        Self {
            n,
            parts,
            k: vec![0; m],
            rem: vec![n; m],
            started: false,
            done: false,
        }
    }

    fn settle_last(&mut self) -> bool {
        let last = self.parts.len() - 1;
        let r = self.rem[last];
        if r % self.parts[last] == 0 {
            self.k[last] = r / self.parts[last];
            true
        } else {
            false
        }
    }

    fn advance(&mut self) -> bool {
        let last = self.parts.len() - 1;
        let mut i = last;
        while i > 0 {
            i -= 1;
            if self.rem[i] >= (self.k[i] + 1) * self.parts[i] {
                self.k[i] += 1;
                let after = self.rem[i] - self.k[i] * self.parts[i];
                for j in i + 1..=last {
                    self.k[j] = 0;
                    self.rem[j] = after;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RestrictedPartitions {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        if self.done {
            return None;
        }
        if self.parts.is_empty() {
            self.done = true;
            return (self.n == 0).then(|| ExponentVector { p: 0, parts: self.parts.clone(), k: vec![] });
        }
        loop {
            if self.started && !self.advance() {
                self.done = true;
                return None;
            }
            self.started = true;
            if self.settle_last() {
                return Some(ExponentVector {
                    p: self.n,
                    parts: self.parts.clone(),
                    k: self.k.clone(),
                });
            }
        }
    }
}

/// Streams the `2^{n-1}` ordered compositions of `n` (one empty
/// composition for `n = 0`). Only meant for small `n`.
pub fn compositions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n <= 40, "composition enumeration is exponential; n = {n} is too large");
    let count: u64 = if n == 0 { 1 } else { 1 << (n - 1) };
    (0..count).map(move |mask| {
        if n == 0 {
            return Vec::new();
        }
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask & (1 << bit) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts
    })
}

/// Generalized pentagonal number `(3m^2 - m) / 2`.
pub fn gpn(m: i64) -> u64 {
    ((3 * m * m - m) / 2) as u64
}

/// `(m, gpn(m))` for `m = 0, 1, -1, 2, -2, ...`, which lists the
/// generalized pentagonal numbers in increasing order.
pub fn gpn_sequence() -> impl Iterator<Item = (i64, u64)> {
    (0i64..).map(|i| {
        let m = if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) };
        (m, gpn(m))
    })
}

/// Coefficient of `z^q` in `prod (1 - z^k)`: `(-1)^m` at `q = gpn(m)`, else 0.
pub fn pentagonal_coefficient(q: usize) -> i64 {
    for (m, g) in gpn_sequence() {
        if g as usize == q {
            return sign(m.unsigned_abs() as usize);
        }
        if g as usize > q {
            break;
        }
    }
    0
}

/// `(z; z)_inf` through `z^order`.
pub fn pentagonal_series(order: usize) -> TruncSeries {
    let mut c = vec![0i64; order + 1];
    for (m, g) in gpn_sequence() {
        let g = g as usize;
        if g > order {
            break;
        }
        c[g] = sign(m.unsigned_abs() as usize);
    }
    TruncSeries::from_ints(&c)
}

/// `((q^scale; q^scale)_inf)^exponent` through `q^order`.
pub fn eta_power_series(exponent: i64, scale: usize, order: usize) -> TruncSeries {
    assert!(scale >= 1, "scale must be positive");
    let short = pentagonal_series(order / scale);
    let powered = pow_int(&short, exponent).expect("pentagonal series has unit constant term");
    powered
        .substitute_power(scale, order)
        .expect("short series covers order / scale")
}

/// `(q)_inf^3 = sum_m (-1)^m (2m+1) q^{m(m+1)/2}` through `q^order`.
pub fn jacobi_cube_series(order: usize) -> TruncSeries {
    let mut c = vec![0i64; order + 1];
    for m in 0usize.. {
        let t = m * (m + 1) / 2;
        if t > order {
            break;
        }
        c[t] = sign(m) * (2 * m as i64 + 1);
    }
    TruncSeries::from_ints(&c)
}

pub fn fibonacci(n: usize) -> ExactInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `sum_K (-1)^K sum_{compositions of p into K parts} multinomial(p; q)`.
///
/// Each partition stands in for its `K!/prod k_m!` orderings, so the
/// composition sum is never materialized.
pub fn corollary_identity(p: usize) -> ExactInt {
    let f = factorials(p);
    let mut total = BigInt::zero();
    for v in enum_restricted_partitions(p, &PartSet::range(1, p)) {
        let big_k = v.total_parts();
        let mut term = v.ordering_count() * &f[p];
        for (&m, &k) in v.parts().iter().zip(v.exponents()) {
            for _ in 0..k {
                term /= &f[m];
            }
        }
        total += term * sign(big_k);
    }
    total
}
