//! Partial Bell polynomials, Stirling numbers of both kinds and
//! higher-order Bernoulli numbers.

use num_traits::Zero;

use crate::combinatorics::PartSet;
use crate::error::{Error, Result};
use crate::exact::{as_integer, binomial, factorial, rat, to_rat, ExactInt, ExactRat};
use crate::series::{pow_int, TruncSeries};

use super::det::{special_determinant, SpecialDet};
use super::{method_enum, weighted_partition_sum};

method_enum! {
    /// Route for `S(n, n-p)`.
    Stirling2Method, "Stirling (second kind)" {
        /// Partial Bell polynomial at all-ones arguments, summed over the
        /// partitions of `p`.
        BellSum => "bell_sum",
        /// `n!/(n-p)! det(I + A^{n-p} T)`.
        Det => "det",
        /// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
        Triangle => "triangle",
    }
}

method_enum! {
    /// Route for the signed `s(n, n-p)`.
    Stirling1Method, "Stirling (first kind)" {
        /// `C(n-1, p) B_p^{(n)}`.
        HigherBernoulli => "higher_bernoulli",
        /// Partition sum with `C(n+K-1, K)` weights.
        Sum => "sum",
        /// `(n-1)!/(n-p-1)! det(A^n + T)`.
        Det => "det",
        /// `s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)`.
        Triangle => "triangle",
    }
}

fn inv_fact(n: usize) -> ExactRat {
    ExactRat::new(1.into(), factorial(n))
}

/// `B_{n,k}(x_1, .., x_{n-k+1})`.
pub fn bell_partial(n: usize, k: usize, xs: &[ExactRat]) -> Result<ExactRat> {
    if k > n {
        return Err(Error::Range(format!("B(n, k) needs k <= n, got n = {n}, k = {k}")));
    }
    if xs.len() != n - k + 1 {
        return Err(Error::Arity { expected: n - k + 1, got: xs.len() });
    }
    if n == 0 {
        return Ok(rat(1));
    }
    if k == 0 {
        return Ok(ExactRat::zero());
    }
    let nf = factorial(n);
    Ok(weighted_partition_sum(
        n,
        &PartSet::range(1, n - k + 1),
        |m| &xs[m - 1] * inv_fact(m),
        |big_k| (big_k == k).then(|| to_rat(&nf) / to_rat(&factorial(big_k))),
    ))
}

fn check_s2(n: usize, p: usize) -> Result<()> {
    if p > n {
        return Err(Error::Range(format!("S(n, n-p) needs p <= n, got n = {n}, p = {p}")));
    }
    Ok(())
}

fn check_s1(n: usize, p: usize) -> Result<()> {
    if n == 0 || p >= n {
        return Err(Error::Range(format!("s(n, n-p) needs 0 <= p < n, got n = {n}, p = {p}")));
    }
    Ok(())
}

/// `S(n, n-p)`, the Stirling number of the second kind.
pub fn stirling2(n: usize, p: usize) -> Result<ExactInt> {
    stirling2_by(n, p, Stirling2Method::BellSum)
}

pub fn stirling2_by(n: usize, p: usize, method: Stirling2Method) -> Result<ExactInt> {
    check_s2(n, p)?;
    let v = match method {
        Stirling2Method::BellSum => {
            let k = n - p;
            let s = weighted_partition_sum(p, &PartSet::range(1, p), |m| inv_fact(m + 1), |big_k| {
                Some(to_rat(&binomial(k, big_k)))
            });
            to_rat(&factorial(n)) / to_rat(&factorial(k)) * s
        }
        Stirling2Method::Det => special_determinant(SpecialDet::Stirling2 { n, p })?,
        Stirling2Method::Triangle => return Ok(stirling2_triangle(n)[n - p].clone()),
    };
    Ok(as_integer(&v).expect("Stirling numbers are integers"))
}

/// Row `n` of the second-kind triangle, `S(n, 0..=n)`.
pub fn stirling2_triangle(n: usize) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::from(1)];
    for m in 1..=n {
        let mut next = vec![ExactInt::zero(); m + 1];
        for k in 1..=m {
            let keep = if k < m { &row[k] * ExactInt::from(k) } else { ExactInt::zero() };
            next[k] = keep + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Row `n` of the signed first-kind triangle, `s(n, 0..=n)`.
pub fn stirling1_triangle(n: usize) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::from(1)];
    for m in 1..=n {
        let mut next = vec![ExactInt::zero(); m + 1];
        for k in 1..=m {
            let shrink = if k < m { &row[k] * ExactInt::from(m - 1) } else { ExactInt::zero() };
            next[k] = &row[k - 1] - shrink;
        }
        row = next;
    }
    row
}

/// Signed `s(n, n-p)`, the Stirling number of the first kind.
pub fn stirling1(n: usize, p: usize) -> Result<ExactInt> {
    stirling1_by(n, p, Stirling1Method::HigherBernoulli)
}

pub fn stirling1_by(n: usize, p: usize, method: Stirling1Method) -> Result<ExactInt> {
    check_s1(n, p)?;
    let v = match method {
        Stirling1Method::HigherBernoulli => to_rat(&binomial(n - 1, p)) * higher_bernoulli(p, n),
        Stirling1Method::Sum => {
            let s = weighted_partition_sum(p, &PartSet::range(1, p), |m| -inv_fact(m + 1), |big_k| {
                Some(to_rat(&binomial(n + big_k - 1, big_k)))
            });
            to_rat(&factorial(n - 1)) / to_rat(&factorial(n - p - 1)) * s
        }
        Stirling1Method::Det => special_determinant(SpecialDet::Stirling1 { n, p })?,
        Stirling1Method::Triangle => return Ok(stirling1_triangle(n)[n - p].clone()),
    };
    Ok(as_integer(&v).expect("Stirling numbers are integers"))
}

/// `B_p^{(order)}`: `p!` times the `z^p` coefficient of `(z/(e^z - 1))^order`.
pub fn higher_bernoulli(p: usize, order: usize) -> ExactRat {
    let a = TruncSeries::from_fn(p, |m| inv_fact(m + 1));
    let powered = pow_int(&a, -(order as i64)).expect("constant term is 1");
    powered.coeffs()[p].clone() * to_rat(&factorial(p))
}
