//! Truncated formal power series with exact rational coefficients, and the
//! coefficient-extraction routes for `F(z)^X`.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{enum_restricted_partitions, PartSet};
use crate::error::{Error, Result};
use crate::exact::{factorials, format_rat, rat, rat_pow, rat_powi, to_rat, ExactInt, ExactRat};
use crate::ltt::{bareiss_det, build_thm2_matrix};

/// Coefficients `c_0..c_L` of a power series known exactly through `z^L`.
///
/// Nothing is claimed about coefficients past the order; binary operations
/// insist on equal orders instead of silently truncating.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<ExactRat>,
}

/// Exponent of a series power. Complex exponents are not supported.
pub type RationalExponent = ExactRat;

impl TruncSeries {
    /// Builds a series from its coefficients. An empty list is rejected
    /// since order-`L` series always carry `L + 1` entries.
    pub fn new(coeffs: Vec<ExactRat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Range("a series needs at least one coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs: coeffs.iter().map(|&c| rat(c)).collect() }
    }

    pub fn from_big_ints(coeffs: &[ExactInt]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs: coeffs.iter().map(to_rat).collect() }
    }

    /// Series of order `order` whose coefficients come from `f(index)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> ExactRat) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![ExactRat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ExactRat::one();
        s
    }

    /// `z^k` truncated at `order` (zero when `k > order`).
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = ExactRat::one();
        }
        s
    }

    /// The exponential series `sum z^q / q!`.
    pub fn exp(order: usize) -> Self {
        let f = factorials(order);
        Self::from_fn(order, |q| ExactRat::new(One::one(), f[q].clone()))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactRat> {
        self.coeffs
    }

    /// Coefficient of `z^i`, or `None` past the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&ExactRat> {
        self.coeffs.get(i)
    }

    pub fn constant(&self) -> &ExactRat {
        &self.coeffs[0]
    }

    /// Drops coefficients above `order`. Asking for a longer series is an
    /// error because those coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: order });
        }
        Ok(Self { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// Substitutes `z -> z^factor`, keeping the order.
    ///
    /// Coefficients of the result above `order / factor * factor` only need
    /// the input through `order / factor`, so the input may be shorter than
    /// the output.
    pub fn substitute_power(&self, factor: usize, order: usize) -> Result<Self> {
        assert!(factor >= 1, "substitution factor must be positive");
        if order / factor > self.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: order / factor });
        }
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = i * factor;
            if j > order {
                break;
            }
            out.coeffs[j] = c.clone();
        }
        Ok(out)
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for i in k..=self.order() {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn scale(&self, factor: &ExactRat) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_orders(self, other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_orders(self, other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<ExactInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect()
    }

    /// True when this is `1 + O(z^{L+1})`.
    pub fn is_unit_series(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rat).collect();
        write!(f, "TruncSeries[{}]", parts.join(", "))
    }
}

fn check_orders(a: &TruncSeries, b: &TruncSeries) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    Ok(())
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
    check_orders(a, b)?;
    let n = a.coeffs.len();
    let mut out = vec![ExactRat::zero(); n];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..n - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    Ok(TruncSeries { coeffs: out })
}

/// Reciprocal series: `b_0 = 1/a_0`, `b_p = -(1/a_0) sum_{q=1..p} a_q b_{p-q}`.
pub fn series_inverse(a: &TruncSeries) -> Result<TruncSeries> {
    let a0 = a.constant();
    if a0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv0 = a0.recip();
    let mut b: Vec<ExactRat> = Vec::with_capacity(a.coeffs.len());
    b.push(inv0.clone());
    for p in 1..a.coeffs.len() {
        let mut acc = ExactRat::zero();
        for q in 1..=p {
            if !a.coeffs[q].is_zero() {
                acc += &a.coeffs[q] * &b[p - q];
            }
        }
        b.push(-acc * &inv0);
    }
    Ok(TruncSeries { coeffs: b })
}

/// `X (X-1) ... (X-N+1) / N!`, with the empty product for `N = 0`.
pub fn gen_binomial(x: &RationalExponent, n: usize) -> ExactRat {
    let mut acc = ExactRat::one();
    for i in 0..n {
        acc = acc * (x - rat(i as i64)) / rat(i as i64 + 1);
    }
    acc
}

/// Coefficient-extraction route for [`series_pow`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowMethod {
    /// Sum over exponent vectors `k_1..k_p` with `sum m k_m = p`.
    PartitionSum,
    /// Sum over ordered compositions, grouped by the number of parts.
    CompositionSum,
    /// Lower-triangular Toeplitz determinant with a corner tower column.
    Determinant,
    /// Binary exponentiation by repeated multiplication (integer `X` only).
    RepeatedMulOracle,
}

impl PowMethod {
    pub const ALL: [PowMethod; 4] = [
        PowMethod::PartitionSum,
        PowMethod::CompositionSum,
        PowMethod::Determinant,
        PowMethod::RepeatedMulOracle,
    ];
}

/// Coefficients of `a(z)^X` through the order of `a`.
pub fn series_pow(a: &TruncSeries, x: &RationalExponent, method: PowMethod) -> Result<TruncSeries> {
    if a.constant().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    match method {
        PowMethod::PartitionSum => pow_partition_sum(a, x),
        PowMethod::CompositionSum => pow_composition_sum(a, x),
        PowMethod::Determinant => pow_determinant(a, x),
        PowMethod::RepeatedMulOracle => {
            if !x.is_integer() {
                return Err(Error::UnsupportedMethod(format!(
                    "repeated multiplication needs an integer exponent, got {}",
                    format_rat(x)
                )));
            }
            let e = x
                .numer()
                .to_i64()
                .ok_or_else(|| Error::Range(format!("exponent {x} too large")))?;
            pow_int(a, e)
        }
    }
}

/// `a^X` by the cheapest exact route: binary exponentiation for integer
/// `X`, otherwise an exact `s`-th root followed by an integer power.
pub fn series_pow_exact(a: &TruncSeries, x: &RationalExponent) -> Result<TruncSeries> {
    if a.constant().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let num = x
        .numer()
        .to_i64()
        .ok_or_else(|| Error::Range(format!("exponent {x} too large")))?;
    let den = x
        .denom()
        .to_usize()
        .ok_or_else(|| Error::Range(format!("exponent {x} too large")))?;
    if den == 1 {
        pow_int(a, num)
    } else {
        pow_int(&series_root(a, den)?, num)
    }
}

/// Integer power by binary exponentiation; negative powers invert first.
pub fn pow_int(a: &TruncSeries, e: i64) -> Result<TruncSeries> {
    let mut base = if e < 0 { series_inverse(a)? } else { a.clone() };
    let mut acc = TruncSeries::one(a.order());
    let mut e = e.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = series_mul(&acc, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = series_mul(&base, &base)?;
        }
    }
    Ok(acc)
}

/// The series `b` with `b^s = a` and `b_0 = a_0^{1/s}`, solved one
/// coefficient at a time: `[z^n] b^s = s b_0^{s-1} b_n + (terms in b_{<n})`.
pub fn series_root(a: &TruncSeries, s: usize) -> Result<TruncSeries> {
    assert!(s >= 1, "root degree must be positive");
    let b0 = rat_pow(a.constant(), &ExactRat::new(1.into(), s.into()))?;
    if s == 1 {
        return Ok(a.clone());
    }
    let lead = rat(s as i64) * rat_powi(&b0, s as i64 - 1)?;
    let mut b = TruncSeries::zero(a.order());
    b.coeffs[0] = b0;
    for n in 1..=a.order() {
        let partial = pow_int(&b.truncate(n)?, s as i64)?;
        b.coeffs[n] = (&a.coeffs[n] - &partial.coeffs[n]) / &lead;
    }
    Ok(b)
}

fn pow_partition_sum(a: &TruncSeries, x: &RationalExponent) -> Result<TruncSeries> {
    let order = a.order();
    let a0x = rat_pow(a.constant(), x)?;
    let a0_inv = a.constant().recip();
    let fact = factorials(order);
    let mut out = Vec::with_capacity(order + 1);
    out.push(a0x.clone());
    for p in 1..=order {
        let parts = PartSet::range(1, p);
        let mut c = ExactRat::zero();
        for v in enum_restricted_partitions(p, &parts) {
            // X choose K, times K!/(k_1!..k_p!), times a_0^{X-K} prod a_m^{k_m}
            let big_k = v.total_parts();
            let mut term = gen_binomial(x, big_k) * to_rat(&fact[big_k]);
            let mut zero = false;
            for (&m, &k) in v.parts().iter().zip(v.exponents()) {
                if k == 0 {
                    continue;
                }
                if a.coeffs[m].is_zero() {
                    zero = true;
                    break;
                }
                term = term * rat_powi(&a.coeffs[m], k as i64)? / to_rat(&fact[k]);
            }
            if zero {
                continue;
            }
            c += term * rat_powi(&a0_inv, big_k as i64)?;
        }
        out.push(c * &a0x);
    }
    Ok(TruncSeries { coeffs: out })
}

/// `S_K(n) = sum over compositions (q_1..q_K) of n of prod a_{q_i}`, for all
/// `K, n <= order`. Built by peeling off the last part of each composition.
pub(crate) fn composition_products(a: &TruncSeries) -> Vec<Vec<ExactRat>> {
    let order = a.order();
    let mut table = vec![vec![ExactRat::zero(); order + 1]; order + 1];
    table[0][0] = ExactRat::one();
    for k in 1..=order {
        for n in k..=order {
            let mut acc = ExactRat::zero();
            for q in 1..=n - (k - 1) {
                let prev = &table[k - 1][n - q];
                if !prev.is_zero() && !a.coeffs[q].is_zero() {
                    acc += &a.coeffs[q] * prev;
                }
            }
            table[k][n] = acc;
        }
    }
    table
}

fn pow_composition_sum(a: &TruncSeries, x: &RationalExponent) -> Result<TruncSeries> {
    let order = a.order();
    let a0x = rat_pow(a.constant(), x)?;
    let a0_inv = a.constant().recip();
    let table = composition_products(a);
    let mut out = Vec::with_capacity(order + 1);
    for p in 0..=order {
        let mut c = ExactRat::zero();
        for (k, row) in table.iter().enumerate().take(p + 1) {
            if row[p].is_zero() {
                continue;
            }
            c += gen_binomial(x, k) * rat_powi(&a0_inv, k as i64)? * &row[p];
        }
        out.push(c * &a0x);
    }
    Ok(TruncSeries { coeffs: out })
}

fn pow_determinant(a: &TruncSeries, x: &RationalExponent) -> Result<TruncSeries> {
    let a0x = rat_pow(a.constant(), x)?;
    let mut out = Vec::with_capacity(a.order() + 1);
    for p in 0..=a.order() {
        let m = build_thm2_matrix(a, x, p)?;
        out.push(rat_powi(&a0x, p as i64 + 1)? * bareiss_det(&m));
    }
    Ok(TruncSeries { coeffs: out })
}

/// `prod_i a_i(z)^{X_i}`, all factors sharing one order.
pub fn series_product_powers(factors: &[(TruncSeries, RationalExponent)]) -> Result<TruncSeries> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Range("need at least one factor".into()))?;
    let mut acc = series_pow_exact(&first.0, &first.1)?;
    for (s, x) in rest {
        acc = series_mul(&acc, &series_pow_exact(s, x)?)?;
    }
    Ok(acc)
}

/// Sign of the leading nonzero coefficient, used by callers that need to
/// normalise series up to sign.
pub fn leading_sign(a: &TruncSeries) -> i32 {
    a.coeffs
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| if c.is_negative() { -1 } else { 1 })
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::pentagonal_series;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn s(c: &[i64]) -> TruncSeries {
        TruncSeries::from_ints(c)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(series_mul(&s(&[1, 1, 0]), &s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
        assert_eq!(
            series_mul(&s(&[1, 1, 1, 1, 1]), &s(&[1, -1, 0, 0, 0])).unwrap(),
            s(&[1, 0, 0, 0, 0])
        );
        let partitions = s(&[1, 1, 2, 3, 5, 7]);
        assert!(series_mul(&pentagonal_series(5), &partitions).unwrap().is_unit_series());
    }

    #[test]
    fn mul_rejects_mismatched_orders() {
        assert_eq!(
            series_mul(&s(&[1, 1]), &s(&[1, 1, 1])),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(series_inverse(&s(&[1, 1, 0, 0, 0])).unwrap(), s(&[1, -1, 1, -1, 1]));
        assert_eq!(
            series_inverse(&pentagonal_series(7)).unwrap(),
            s(&[1, 1, 2, 3, 5, 7, 11, 15])
        );
        let half = series_inverse(&s(&[2, 0, 0])).unwrap();
        assert_eq!(half.coeffs(), &[ratio(1, 2), rat(0), rat(0)]);
        assert_eq!(series_inverse(&s(&[0, 1])), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(gen_binomial(&rat(-1), 3), rat(-1));
        assert_eq!(gen_binomial(&ratio(1, 2), 2), ratio(-1, 8));
        assert_eq!(gen_binomial(&rat(5), 7), rat(0));
        assert_eq!(gen_binomial(&ratio(3, 7), 0), rat(1));
    }

    #[test]
    fn pow_examples_all_methods() {
        let e = TruncSeries::exp(3);
        let expected = TruncSeries::new(vec![rat(1), rat(-1), ratio(1, 2), ratio(-1, 6)]).unwrap();
        for m in PowMethod::ALL {
            assert_eq!(series_pow(&e, &rat(-1), m).unwrap(), expected, "{m:?}");
            assert_eq!(series_pow(&s(&[1, 1, 0]), &rat(2), m).unwrap(), s(&[1, 2, 1]), "{m:?}");
        }
        for m in [PowMethod::PartitionSum, PowMethod::CompositionSum, PowMethod::Determinant] {
            let root = series_pow(&s(&[1, 1, 0]), &ratio(1, 2), m).unwrap();
            assert_eq!(series_pow(&root, &rat(2), m).unwrap(), s(&[1, 1, 0]), "{m:?}");
        }
    }

    #[test]
    fn pow_errors() {
        assert_eq!(
            series_pow(&s(&[0, 1]), &rat(2), PowMethod::PartitionSum),
            Err(Error::ZeroConstantTerm)
        );
        assert!(matches!(
            series_pow(&s(&[1, 1]), &ratio(1, 2), PowMethod::RepeatedMulOracle),
            Err(Error::UnsupportedMethod(_))
        ));
        assert!(matches!(
            series_pow(&s(&[2, 1]), &ratio(1, 2), PowMethod::PartitionSum),
            Err(Error::NotRepresentable(_))
        ));
    }

    #[test]
    fn order_zero_series() {
        let c = s(&[4]);
        for m in [PowMethod::PartitionSum, PowMethod::CompositionSum, PowMethod::Determinant] {
            assert_eq!(series_pow(&c, &ratio(1, 2), m).unwrap(), s(&[2]));
        }
        assert_eq!(series_pow(&c, &rat(-1), PowMethod::RepeatedMulOracle).unwrap().coeffs(), &[ratio(1, 4)]);
    }

    #[test]
    fn product_powers_examples() {
        let f = s(&[1, 1, 0, 0]);
        let prod = series_product_powers(&[(f.clone(), rat(1)), (f, rat(-1))]).unwrap();
        assert!(prod.is_unit_series());

        // (q^2; q^2)_inf / (q)_inf counts partitions into distinct parts
        let order = 6;
        let scaled = pentagonal_series(order / 2).substitute_power(2, order).unwrap();
        let distinct = series_product_powers(&[
            (scaled, rat(1)),
            (pentagonal_series(order), rat(-1)),
        ])
        .unwrap();
        assert_eq!(distinct, s(&[1, 1, 1, 2, 2, 3, 4]));

        assert_eq!(series_product_powers(&[(s(&[1, 2, 1]), rat(1))]).unwrap(), s(&[1, 2, 1]));
    }

    #[test]
    fn root_of_square() {
        let a = s(&[4, 4, 1, 0, 0]);
        assert_eq!(series_root(&a, 2).unwrap(), s(&[2, 1, 0, 0, 0]));
        assert!(series_root(&s(&[-1, 0]), 2).is_err());
    }

    fn small_series(max_order: usize) -> impl Strategy<Value = TruncSeries> {
        (prop::sample::select(vec![1i64, -1, 2]), prop::collection::vec(-3i64..=3, 0..=max_order))
            .prop_map(|(a0, rest)| {
                let mut c = vec![a0];
                c.extend(rest);
                TruncSeries::from_ints(&c)
            })
    }

    fn unit_series(max_order: usize) -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec(-3i64..=3, 0..=max_order).prop_map(|rest| {
            let mut c = vec![1];
            c.extend(rest);
            TruncSeries::from_ints(&c)
        })
    }

    fn small_exponent(max_den: i64) -> impl Strategy<Value = ExactRat> {
        (-8i64..=8, 1..=max_den).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn three_routes_agree(a in unit_series(8), x in small_exponent(3)) {
            let by_part = series_pow(&a, &x, PowMethod::PartitionSum).unwrap();
            let by_comp = series_pow(&a, &x, PowMethod::CompositionSum).unwrap();
            let by_det = series_pow(&a, &x, PowMethod::Determinant).unwrap();
            prop_assert_eq!(&by_part, &by_comp);
            prop_assert_eq!(&by_part, &by_det);
            if x.is_integer() {
                prop_assert_eq!(&by_part, &series_pow(&a, &x, PowMethod::RepeatedMulOracle).unwrap());
            }
        }

        #[test]
        fn non_unit_constant_integer_powers(a in small_series(6), e in -4i64..=4) {
            let x = rat(e);
            let oracle = series_pow(&a, &x, PowMethod::RepeatedMulOracle).unwrap();
            for m in [PowMethod::PartitionSum, PowMethod::CompositionSum, PowMethod::Determinant] {
                prop_assert_eq!(&series_pow(&a, &x, m).unwrap(), &oracle);
            }
        }

        #[test]
        fn power_times_inverse_power(a in unit_series(12), n in -4i64..=4, d in 1i64..=2) {
            let x = ratio(n, d);
            let lhs = series_pow_exact(&a, &x).unwrap();
            let rhs = series_pow_exact(&a, &(-x)).unwrap();
            prop_assert!(series_mul(&lhs, &rhs).unwrap().is_unit_series());
        }

        #[test]
        fn inverse_is_involution(a in small_series(16)) {
            prop_assert_eq!(series_inverse(&series_inverse(&a).unwrap()).unwrap(), a);
        }

        #[test]
        fn exponents_add(a in unit_series(10), x in small_exponent(2), y in small_exponent(2)) {
            let lhs = series_pow_exact(&a, &(&x + &y)).unwrap();
            let rhs = series_mul(&series_pow_exact(&a, &x).unwrap(), &series_pow_exact(&a, &y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
