//! Exact scalar types and the handful of helpers the rest of the crate
//! shares: factorial tables, binomials, exact rational roots, and the
//! `num/den` text form used for output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type ExactRat = BigRational;

pub fn int(v: i64) -> ExactInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> ExactRat {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> ExactRat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_rat(v: &ExactInt) -> ExactRat {
    BigRational::from_integer(v.clone())
}

/// Returns the integer value of `r` if its denominator is one.
pub fn as_integer(r: &ExactRat) -> Option<ExactInt> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn factorial(n: usize) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `0!, 1!, ..., n!`.
pub fn factorials(n: usize) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for k in 1..=n {
        let next = &out[k - 1] * k;
        out.push(next);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> ExactInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(-1)^k` as a small integer.
pub fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Integer power with a possibly negative exponent.
pub fn rat_powi(base: &ExactRat, exp: i64) -> Result<ExactRat> {
    if exp < 0 && base.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut acc = ExactRat::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    Ok(acc)
}

fn exact_int_root(v: &BigInt, n: u32) -> Option<BigInt> {
    if v.is_negative() && n % 2 == 0 {
        return None;
    }
    let r = v.nth_root(n);
    (r.pow(n) == *v).then_some(r)
}

/// `base^exponent` when the result is an exact rational.
///
/// Fails with [`Error::NotRepresentable`] when the root does not exist in
/// the rationals (e.g. `2^(1/2)` or `(-1)^(1/2)`).
pub fn rat_pow(base: &ExactRat, exponent: &ExactRat) -> Result<ExactRat> {
    let den = exponent
        .denom()
        .to_u32()
        .ok_or_else(|| Error::NotRepresentable(format!("{base}^({exponent})")))?;
    let num = exponent
        .numer()
        .to_i64()
        .ok_or_else(|| Error::NotRepresentable(format!("{base}^({exponent})")))?;
    let root = if den == 1 {
        base.clone()
    } else {
        let n = exact_int_root(base.numer(), den);
        let d = exact_int_root(base.denom(), den);
        match (n, d) {
            (Some(n), Some(d)) => ExactRat::new(n, d),
            _ => return Err(Error::NotRepresentable(format!("{base}^({exponent})"))),
        }
    };
    rat_powi(&root, num)
}

/// Renders a rational as `num/den`, omitting the denominator when it is one.
pub fn format_rat(r: &ExactRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `num/den` or plain-integer form produced by [`format_rat`].
pub fn parse_rat(s: &str) -> Result<ExactRat> {
    let s = s.trim();
    let parse_int =
        |t: &str| t.parse::<BigInt>().map_err(|_| Error::Parse(s.to_string()));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(ExactRat::new(parse_int(n)?, d))
        }
        None => Ok(ExactRat::from_integer(parse_int(s)?)),
    }
}

/// Number of significant bits in the larger of numerator and denominator.
pub fn rat_bits(r: &ExactRat) -> u64 {
    r.numer().bits().max(r.denom().bits())
}
