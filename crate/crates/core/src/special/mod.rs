//! Bernoulli, Euler and Stirling numbers, higher-order Bernoulli numbers,
//! partial Bell polynomials and the Bernoulli/Euler polynomials, each from
//! the closed-form sums and determinants of the series-power machinery.

mod det;
mod stirling;

pub use det::{special_determinant, special_matrix, SpecialDet};
pub use stirling::{
    bell_partial, higher_bernoulli, stirling1, stirling1_by, stirling2, stirling2_by, Stirling1Method,
    Stirling2Method,
};

use num_traits::{One, Zero};

use crate::combinatorics::{enum_restricted_partitions, PartSet};
use crate::error::{Error, Result};
use crate::exact::{as_integer, binomial, factorial, factorials, rat, rat_powi, to_rat, ExactInt, ExactRat};
use crate::series::{series_inverse, TruncSeries};

macro_rules! method_enum {
    ($(#[$meta:meta])* $name:ident, $what:literal { $($(#[$vmeta:meta])* $variant:ident => $tag:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name {
            $($(#[$vmeta])* $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn tag(self) -> &'static str {
                match self {
                    $($name::$variant => $tag),+
                }
            }
        }

        impl ::std::fmt::Display for $name {
            fn fmt(&self, f: &mut ::std::fmt::Formatter<'_>) -> ::std::fmt::Result {
                f.write_str(self.tag())
            }
        }

        impl ::std::str::FromStr for $name {
            type Err = $crate::error::Error;

            fn from_str(s: &str) -> $crate::error::Result<Self> {
                Self::ALL
                    .iter()
                    .copied()
                    .find(|m| m.tag() == s)
                    .ok_or_else(|| $crate::error::Error::UnsupportedMethod(format!(concat!($what, " method `{}`"), s)))
            }
        }
    };
}
pub(crate) use method_enum;

method_enum! {
    /// Route for [`bernoulli`]. All routes use `B_1 = -1/2`.
    BernoulliMethod, "Bernoulli" {
        /// `n! sum_partitions (-1)^K K!/prod k_m! prod (1/(m+1)!)^{k_m}`.
        PartitionSum => "partition_sum",
        /// The same sum taken over compositions of `n`.
        CompositionSum => "composition_sum",
        /// Even `n` only, from `z / sinh z`.
        SinhPartition => "sinh_partition",
        /// Sum over even compositions; rejects `n = 1`.
        EvenComposition => "even_composition",
        /// `n!` times an `(n+1) x (n+1)` determinant.
        LaplaceDet => "laplace_det",
        /// `sum_K (-1)^K / (1+K) sum_compositions multinomial(n; q)`.
        VellaSum => "vella_sum",
        /// Even `n` only, a `(n/2 + 1)`-square determinant.
        HalfDet => "half_det",
        /// `sum_{k<=n} C(n+1, k) B_k = 0`.
        Recurrence => "recurrence",
    }
}

method_enum! {
    /// Route for [`euler_number`].
    EulerMethod, "Euler" {
        /// Even `n` only, partitions of `n/2` weighted by `1/(2m)!`.
        EvenPartition => "even_partition",
        /// Sum over the even compositions of `n`.
        EvenComposition => "even_composition",
        /// `n >= 2`, compositions of `n-1` into an odd number of odd parts.
        OddComposition => "odd_composition",
        /// `n >= 2`, partitions of `n-1` into odd parts.
        OddPartition => "odd_partition",
        /// Even `n` only, a `(n/2 + 1)`-square determinant.
        HalfDet => "half_det",
        /// `E_n = -sum_{k<n, k even} C(n, k) E_k`, the secant-series recurrence.
        SecantRecurrence => "secant_recurrence",
    }
}

/// `sum_v f(K) K!/prod k_m! prod w(m)^{k_m}` over the partitions `v` of `n`
/// into parts from `parts`; `f` returning `None` drops the term.
pub(crate) fn weighted_partition_sum(
    n: usize,
    parts: &PartSet,
    w: impl Fn(usize) -> ExactRat,
    f: impl Fn(usize) -> Option<ExactRat>,
) -> ExactRat {
    let weights: Vec<ExactRat> = parts.allowed().iter().map(|&m| w(m)).collect();
    let mut total = ExactRat::zero();
    for v in enum_restricted_partitions(n, parts) {
        let Some(outer) = f(v.total_parts()) else { continue };
        let mut term = outer * to_rat(&v.ordering_count());
        for (wm, &k) in weights.iter().zip(v.exponents()) {
            if k > 0 {
                term *= rat_powi(wm, k as i64).expect("nonzero weight");
            }
        }
        total += term;
    }
    total
}

/// `t[K][m] = sum over compositions of m into K parts of prod w(q_i)`, for
/// `K, m <= n`. Parts with `w(q) = None` are not allowed.
pub(crate) fn composition_table(n: usize, w: impl Fn(usize) -> Option<ExactRat>) -> Vec<Vec<ExactRat>> {
    let weights: Vec<Option<ExactRat>> = (0..=n).map(|q| if q == 0 { None } else { w(q) }).collect();
    let mut t = vec![vec![ExactRat::zero(); n + 1]; n + 1];
    t[0][0] = ExactRat::one();
    for k in 1..=n {
        for m in k..=n {
            let mut acc = ExactRat::zero();
            for q in 1..=m {
                if let Some(wq) = &weights[q] {
                    let prev = &t[k - 1][m - q];
                    if !prev.is_zero() {
                        acc += wq * prev;
                    }
                }
            }
            t[k][m] = acc;
        }
    }
    t
}

fn inv_factorial(n: usize) -> ExactRat {
    ExactRat::new(1.into(), factorial(n))
}

fn alternating(k: usize) -> ExactRat {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

fn need_even(n: usize, what: &str) -> Result<usize> {
    if n % 2 == 1 {
        return Err(Error::UnsupportedInput(format!("{what} needs an even index, got {n}")));
    }
    Ok(n / 2)
}

/// `B_n` by the requested route.
pub fn bernoulli(n: usize, method: BernoulliMethod) -> Result<ExactRat> {
    let nf = to_rat(&factorial(n));
    Ok(match method {
        BernoulliMethod::PartitionSum => {
            nf * weighted_partition_sum(n, &PartSet::range(1, n), |m| -inv_factorial(m + 1), |_| Some(rat(1)))
        }
        BernoulliMethod::CompositionSum => {
            let t = composition_table(n, |q| Some(inv_factorial(q + 1)));
            nf * (0..=n).map(|k| alternating(k) * &t[k][n]).sum::<ExactRat>()
        }
        BernoulliMethod::SinhPartition => {
            if n == 1 {
                return Err(Error::UnsupportedInput("the z/sinh z route has no B_1".into()));
            }
            let p = need_even(n, "the z/sinh z route")?;
            let s = weighted_partition_sum(p, &PartSet::range(1, p), |m| -inv_factorial(2 * m + 1), |_| Some(rat(1)));
            nf * s / (rat(2) - rat_powi(&rat(2), n as i64)?)
        }
        BernoulliMethod::EvenComposition => {
            if n == 1 {
                return Err(Error::UnsupportedInput("the even-composition route excludes B_1".into()));
            }
            let t = composition_table(n, |q| (q % 2 == 0).then(|| inv_factorial(q + 1)));
            let s: ExactRat = (0..=n / 2).map(|k| alternating(k) * &t[k][n]).sum();
            nf * s / (rat(2) - rat_powi(&rat(2), n as i64)?)
        }
        BernoulliMethod::LaplaceDet => special_determinant(SpecialDet::Laplace { n })?,
        BernoulliMethod::VellaSum => {
            let t = composition_table(n, |q| Some(inv_factorial(q)));
            let s: ExactRat = (0..=n).map(|k| alternating(k) * &t[k][n] / rat(1 + k as i64)).sum();
            nf * s
        }
        BernoulliMethod::HalfDet => special_determinant(SpecialDet::BernoulliHalf { p: need_even(n, "the half-size determinant")? })?,
        BernoulliMethod::Recurrence => bernoulli_recurrence(n).pop().expect("n + 1 values"),
    })
}

/// `B_0..=B_n` from `sum_{k<=m} C(m+1, k) B_k = 0`.
pub fn bernoulli_recurrence(n: usize) -> Vec<ExactRat> {
    let mut b: Vec<ExactRat> = Vec::with_capacity(n + 1);
    b.push(rat(1));
    for m in 1..=n {
        let s: ExactRat = (0..m).map(|k| to_rat(&binomial(m + 1, k)) * &b[k]).sum();
        b.push(-s / rat(m as i64 + 1));
    }
    b
}

/// `E_n` (secant numbers with alternating sign: 1, 0, -1, 0, 5, ...).
pub fn euler_number(n: usize, method: EulerMethod) -> Result<ExactInt> {
    let value = match method {
        EulerMethod::EvenPartition => {
            let p = need_even(n, "the even-partition route")?;
            let s = weighted_partition_sum(p, &PartSet::range(1, p), |m| -inv_factorial(2 * m), |_| Some(rat(1)));
            to_rat(&factorial(n)) * s
        }
        EulerMethod::EvenComposition => {
            let t = composition_table(n, |q| (q % 2 == 0).then(|| inv_factorial(q)));
            let s: ExactRat = (0..=n / 2).map(|k| alternating(k) * &t[k][n]).sum();
            to_rat(&factorial(n)) * s
        }
        EulerMethod::OddComposition => return odd_composition(n),
        EulerMethod::OddPartition => odd_partition(n)?,
        EulerMethod::HalfDet => special_determinant(SpecialDet::EulerHalf { p: need_even(n, "the half-size determinant")? })?,
        EulerMethod::SecantRecurrence => return Ok(euler_recurrence(n).pop().expect("n + 1 values")),
    };
    as_integer(&value).ok_or_else(|| Error::NotRepresentable(format!("E_{n} came out as {value}")))
}

/// `E_0..=E_n` from `E_m = -sum_{k<m, k even} C(m, k) E_k` for even `m`.
pub fn euler_recurrence(n: usize) -> Vec<ExactInt> {
    let mut e: Vec<ExactInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let v = if m == 0 {
            ExactInt::one()
        } else if m % 2 == 1 {
            ExactInt::zero()
        } else {
            -(0..m).step_by(2).map(|k| binomial(m, k) * &e[k]).sum::<ExactInt>()
        };
        e.push(v);
    }
    e
}

fn need_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::UnsupportedInput(format!("the odd-part routes need n >= 2, got {n}")));
    }
    Ok(())
}

/// `sum_{N>=1} (-1)^N sum multinomial(n-1; 2q_1-1, .., 2q_{2N-1}-1)`: the
/// compositions of `n-1` into an odd number of odd parts.
fn odd_composition(n: usize) -> Result<ExactInt> {
    need_two(n)?;
    let m = n - 1;
    let t = composition_table(m, |q| (q % 2 == 1).then(|| inv_factorial(q)));
    let mut s = ExactRat::zero();
    for k in (1..=m).step_by(2) {
        let big_n = (k + 1) / 2;
        s += alternating(big_n) * &t[k][m];
    }
    Ok(as_integer(&(to_rat(&factorial(m)) * s)).expect("multinomials are integers"))
}

/// `(-1)^{p-1} (2p-1)! sum K!/prod k_m! prod ((-1)^m/(2m-1)!)^{k_m}` over the
/// partitions of `n-1` into odd parts `2m-1`, `n = 2p`, keeping only terms
/// with an odd number of parts.
fn odd_partition(n: usize) -> Result<ExactRat> {
    need_two(n)?;
    let m = n - 1;
    let s = weighted_partition_sum(
        m,
        &PartSet::odd(m),
        |part| {
            let idx = (part + 1) / 2;
            alternating(idx) * inv_factorial(part)
        },
        |k| (k % 2 == 1).then(|| rat(1)),
    );
    let p = n / 2;
    Ok(alternating(p + 1) * to_rat(&factorial(m)) * s)
}

/// Result of checking the recursion satisfied by the odd-composition sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerRecursionReport {
    pub p: usize,
    /// `a_2, a_4, .., a_{2p}` from the odd-composition sum.
    pub values: Vec<ExactInt>,
    pub pass: bool,
    /// First `q` with `a_{2q}` not matching the recursion.
    pub first_failure: Option<usize>,
}

/// Checks `a_{2q} = -1 - sum_{j=1}^{q-1} C(2q-1, 2j) 2^{2j-1} a_{2q-2j}` for
/// `q = 1..=p`, with each `a` computed independently by the odd-composition
/// sum.
pub fn euler_recursion_check(p: usize) -> Result<EulerRecursionReport> {
    if p == 0 {
        return Err(Error::Range("p must be at least 1".into()));
    }
    let a: Vec<ExactInt> = (1..=p).map(|q| odd_composition(2 * q)).collect::<Result<_>>()?;
    let first_failure = (1..=p).find(|&q| {
        let mut rhs = ExactInt::from(-1);
        for j in 1..q {
            rhs -= binomial(2 * q - 1, 2 * j) * (ExactInt::one() << (2 * j - 1)) * &a[q - j - 1];
        }
        rhs != a[q - 1]
    });
    Ok(EulerRecursionReport { p, values: a, pass: first_failure.is_none(), first_failure })
}

/// `B_n(x)` as `n!` times the `z^n` coefficient of the reciprocal of
/// `sum_k z^k ((1-x)^{k+1} - (-x)^{k+1}) / (k+1)!`.
pub fn bernoulli_poly(n: usize, x: &ExactRat) -> ExactRat {
    let f = factorials(n + 1);
    let one_minus = rat(1) - x;
    let neg = -x.clone();
    let mut a = one_minus.clone();
    let mut b = neg.clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push((&a - &b) / to_rat(&f[k + 1]));
        a *= &one_minus;
        b *= &neg;
    }
    let inv = series_inverse(&TruncSeries::new(coeffs).expect("nonempty")).expect("constant term is 1");
    inv.coeffs()[n].clone() * to_rat(&f[n])
}

/// `E_n(x)` as `n!` times the `z^n` coefficient of twice the reciprocal of
/// `sum_k z^k ((1-x)^k + (-x)^k) / k!`.
pub fn euler_poly(n: usize, x: &ExactRat) -> ExactRat {
    let f = factorials(n);
    let one_minus = rat(1) - x;
    let neg = -x.clone();
    let mut a = rat(1);
    let mut b = rat(1);
    let mut coeffs = Vec::with_capacity(n + 1);
    for fk in &f {
        coeffs.push((&a + &b) / to_rat(fk));
        a *= &one_minus;
        b *= &neg;
    }
    let inv = series_inverse(&TruncSeries::new(coeffs).expect("nonempty")).expect("constant term is 2");
    inv.coeffs()[n].clone() * rat(2) * to_rat(&f[n])
}
