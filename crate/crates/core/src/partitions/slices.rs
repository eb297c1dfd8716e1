//! Arithmetic progressions `p(Mk + a)` as tower determinants over powers of
//! the Euler function, and the quintic dissection they are built from.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{eta_power_series, fibonacci, gpn_sequence, jacobi_cube_series};
use crate::error::{Error, Result};
use crate::exact::{as_integer, rat, to_rat, ExactInt};
use crate::ltt::{tower_det, TowerMode, TowerSpec};
use crate::series::{pow_int, series_inverse, series_mul, TruncSeries};

fn mul(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
    series_mul(a, b).expect("equal orders")
}

fn add(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
    a.add(b).expect("equal orders")
}

fn pow(a: &TruncSeries, e: i64) -> TruncSeries {
    pow_int(a, e).expect("unit constant term")
}

fn scaled(a: &TruncSeries, c: i64) -> TruncSeries {
    a.scale(&rat(c))
}

/// `q^k a(q)` kept at the order of `a`.
fn times_q(a: &TruncSeries, k: usize) -> TruncSeries {
    a.shift(k)
}

/// The three predefined slices with closed-form towers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceKind {
    /// `p(5k+4)`
    M5R4,
    /// `p(7k+5)`
    M7R5,
    /// `p(25k+24)`
    M25R24,
}

impl SliceKind {
    pub fn modulus(self) -> usize {
        match self {
            SliceKind::M5R4 => 5,
            SliceKind::M7R5 => 7,
            SliceKind::M25R24 => 25,
        }
    }

    pub fn residue(self) -> usize {
        match self {
            SliceKind::M5R4 => 4,
            SliceKind::M7R5 => 5,
            SliceKind::M25R24 => 24,
        }
    }
}

/// `p(modulus * k + residue) = prefactor * det(base | tower)` with a
/// `(k+1) x (k+1)` tower determinant.
#[derive(Debug, Clone)]
pub struct SliceFamily {
    modulus: usize,
    residue: usize,
    prefactor: ExactInt,
    base: TruncSeries,
    tower: TruncSeries,
}

impl SliceFamily {
    /// Builds the family with series long enough for `k <= kmax`.
    ///
    /// Supported: modulus 5 with any residue, modulus 7 residue 5, and
    /// modulus 25 with residue 4, 9, 14, 19 or 24.
    pub fn new(modulus: usize, residue: usize, kmax: usize) -> Result<Self> {
        let (prefactor, base, tower) = match (modulus, residue) {
            (5, a) if a <= 4 => {
                let pre = if a == 4 { 5 } else { 1 };
                (pre, eta_power_series(6, 1, kmax), x_vector(a, kmax)?)
            }
            (7, 5) => (7, eta_power_series(8, 1, kmax), m7r5_tower(kmax)),
            (25, a) if a % 5 == 4 => (5, eta_power_series(31, 1, kmax), z_vector(a, kmax)?),
            _ => {
                return Err(Error::UnsupportedInput(format!(
                    "no tower known for p({modulus}k + {residue})"
                )))
            }
        };
        Ok(Self { modulus, residue, prefactor: BigInt::from(prefactor), base, tower })
    }

    pub fn from_kind(kind: SliceKind, kmax: usize) -> Self {
        Self::new(kind.modulus(), kind.residue(), kmax).expect("predefined slices are supported")
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residue(&self) -> usize {
        self.residue
    }

    pub fn prefactor(&self) -> &ExactInt {
        &self.prefactor
    }

    pub fn base(&self) -> &TruncSeries {
        &self.base
    }

    pub fn tower(&self) -> &TruncSeries {
        &self.tower
    }

    pub fn kmax(&self) -> usize {
        self.base.order()
    }

    pub fn spec(&self, k: usize) -> Result<TowerSpec> {
        if k > self.kmax() {
            return Err(Error::Range(format!("k = {k} exceeds the built order {}", self.kmax())));
        }
        TowerSpec::from_series(&self.base, &self.tower, k + 1)
    }

    pub fn value(&self, k: usize) -> Result<ExactInt> {
        self.value_with(k, TowerMode::FastConvolution)
    }

    pub fn value_with(&self, k: usize, mode: TowerMode) -> Result<ExactInt> {
        let det = tower_det(&self.spec(k)?, mode)?;
        let det = as_integer(&det).ok_or_else(|| Error::NotRepresentable("non-integral slice determinant".into()))?;
        Ok(det * &self.prefactor)
    }
}

/// `p(Mk + a)` for one of the closed-form slices.
///
/// These use the direct eta-quotient towers rather than the dissection
/// vectors, so they serve as an independent route for the same values.
pub fn ramanujan_slice(kind: SliceKind, k: usize) -> Result<ExactInt> {
    let (pre, base, tower) = match kind {
        SliceKind::M5R4 => {
            let cube = jacobi_cube_series(k);
            (5, mul(&cube, &cube), eta_power_series(5, 5, k))
        }
        SliceKind::M7R5 => (7, eta_power_series(8, 1, k), m7r5_tower(k)),
        SliceKind::M25R24 => (25, eta_power_series(31, 1, k), a5_tower(k)),
    };
    let det = tower_det(&TowerSpec::from_series(&base, &tower, k + 1)?, TowerMode::FastConvolution)?;
    Ok(as_integer(&det).expect("integral tower") * pre)
}

/// `(q^7)^3 (q)^4 + 7 q (q^7)^7`.
fn m7r5_tower(order: usize) -> TruncSeries {
    let first = mul(&eta_power_series(3, 7, order), &eta_power_series(4, 1, order));
    add(&first, &scaled(&times_q(&eta_power_series(7, 7, order), 1), 7))
}

/// The tower for `p(25k+24) / 25`:
/// `63 (q)^24 (q^5)^6 + 5^3 52 q (q)^18 (q^5)^12 + 5^5 63 q^2 (q)^12 (q^5)^18
///  + 5^8 6 q^3 (q)^6 (q^5)^24 + 5^10 q^4 (q^5)^30`.
pub fn a5_tower(order: usize) -> TruncSeries {
    let terms: [(i64, usize, i64, i64); 5] = [
        (63, 0, 24, 6),
        (125 * 52, 1, 18, 12),
        (3125 * 63, 2, 12, 18),
        (390625 * 6, 3, 6, 24),
        (9765625, 4, 0, 30),
    ];
    let mut acc = TruncSeries::zero(order);
    for (c, shift, e1, e5) in terms {
        let t = mul(&eta_power_series(e1, 1, order), &eta_power_series(e5, 5, order));
        acc = add(&acc, &scaled(&times_q(&t, shift), c));
    }
    acc
}

/// The two nontrivial components of the quintic dissection of the
/// pentagonal series.
///
/// Grouping `sum_m (-1)^m q^{gpn(m)}` by `gpn(m) mod 5` gives
/// `G1(q^5) + q R(q^5) + q^2 G2(q^5)` with `R = -(q^5)_inf`.
#[derive(Debug, Clone, PartialEq)]
pub struct G12Pair {
    pub g1: TruncSeries,
    pub g2: TruncSeries,
}

fn dissection(order: usize) -> [Vec<i64>; 3] {
    let mut out = [vec![0i64; order + 1], vec![0i64; order + 1], vec![0i64; order + 1]];
    for (m, g) in gpn_sequence() {
        let g = g as usize;
        if g > 5 * order + 2 {
            break;
        }
        let r = g % 5;
        let idx = (g - r) / 5;
        if idx <= order {
            out[r][idx] = if m % 2 == 0 { 1 } else { -1 };
        }
    }
    out
}

pub fn g1_g2_series(order: usize) -> G12Pair {
    let [g1, _, g2] = dissection(order);
    G12Pair { g1: TruncSeries::from_ints(&g1), g2: TruncSeries::from_ints(&g2) }
}

/// The residue-1 component `R` of the dissection.
pub fn g_residue_one(order: usize) -> TruncSeries {
    TruncSeries::from_ints(&dissection(order)[1])
}

/// Tower for `p(5k+a)` over the base `(q)^6`.
///
/// `X^(a) = F_{a+1} (q^5)^{a+1} G1^{4-a} + F_{4-a} q (q^5)^{4-a} G2^{a+1}`
/// with `F` the Fibonacci numbers. For `a = 4` this is `5 (q^5)^5`; the 5 is
/// divided out here and carried by the slice prefactor instead.
pub fn x_vector(a: usize, order: usize) -> Result<TruncSeries> {
    if a > 4 {
        return Err(Error::Range(format!("residue {a} is not in 0..=4")));
    }
    let g = g1_g2_series(order);
    let f1 = to_rat(&fibonacci(a + 1));
    let f2 = to_rat(&fibonacci(4 - a));
    let e5 = |e: usize| eta_power_series(e as i64, 5, order);
    let first = mul(&e5(a + 1), &pow(&g.g1, (4 - a) as i64)).scale(&f1);
    let second = times_q(&mul(&e5(4 - a), &pow(&g.g2, (a + 1) as i64)), 1).scale(&f2);
    let x = add(&first, &second);
    Ok(if a == 4 { x.scale(&crate::exact::ratio(1, 5)) } else { x })
}

/// `p(5k+a)`.
pub fn p_5k_a(a: usize, k: usize) -> Result<ExactInt> {
    SliceFamily::new(5, a, k)?.value(k)
}

/// Coefficients of the five polynomials `H_1..H_5` in `x`, lowest degree
/// first.
///
/// `H_n` is the coefficient of `u^{n-1}` once
/// `(1 - 3x + (1 + 2x) u + (2 - x) u^2 + (3 + x) u^3 + 5 u^4)^6` is reduced
/// with `u^5 = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolySet {
    pub h: [Vec<ExactInt>; 5],
}

impl HPolySet {
    pub fn poly(&self, n: usize) -> &[ExactInt] {
        &self.h[n - 1]
    }
}

type UPoly = [Vec<ExactInt>; 5];

fn upoly_mul(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out: UPoly = Default::default();
    for (r, pa) in a.iter().enumerate() {
        for (s, pb) in b.iter().enumerate() {
            if pa.is_empty() || pb.is_empty() {
                continue;
            }
            let (slot, shift) = if r + s >= 5 { (r + s - 5, 1) } else { (r + s, 0) };
            let len = pa.len() + pb.len() - 1 + shift;
            if out[slot].len() < len {
                out[slot].resize(len, BigInt::zero());
            }
            for (i, x) in pa.iter().enumerate() {
                for (j, y) in pb.iter().enumerate() {
                    out[slot][i + j + shift] += x * y;
                }
            }
        }
    }
    for p in &mut out {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }
    out
}

pub fn h_polynomials() -> HPolySet {
    let big = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
    let factor: UPoly = [big(&[1, -3]), big(&[1, 2]), big(&[2, -1]), big(&[3, 1]), big(&[5])];
    let mut acc: UPoly = [vec![BigInt::one()], vec![], vec![], vec![], vec![]];
    for _ in 0..6 {
        acc = upoly_mul(&acc, &factor);
    }
    HPolySet { h: acc }
}

/// Tower for `p(25k+a)`, `a = 4 + 5r`, over the base `(q)^31`:
/// `sum_j h_{r+1,j} q^j (q^5)^30 J1^{24-r-5j}` where `J1 = G1/(q^5)_inf` and
/// `J1^{-1} = -J2`.
pub fn z_vector(a: usize, order: usize) -> Result<TruncSeries> {
    if a % 5 != 4 || a > 24 {
        return Err(Error::Range(format!("residue {a} is not one of 4, 9, 14, 19, 24")));
    }
    let r = (a - 4) / 5;
    let h = h_polynomials();
    let g = g1_g2_series(order);
    let mut acc = TruncSeries::zero(order);
    for (j, c) in h.poly(r + 1).iter().enumerate() {
        if c.is_zero() || j > order {
            continue;
        }
        let e = 24 - r as i64 - 5 * j as i64;
        let term = if e >= 0 {
            mul(&pow(&g.g1, e), &eta_power_series(30 - e, 5, order))
        } else {
            let m = -e;
            let t = mul(&pow(&g.g2, m), &eta_power_series(30 - m, 5, order));
            if m % 2 == 1 {
                t.neg()
            } else {
                t
            }
        };
        acc = add(&acc, &times_q(&term, j).scale(&to_rat(c)));
    }
    Ok(acc)
}

/// `p(25k+a)` for `a` in 4, 9, 14, 19, 24.
pub fn p_25k_a(a: usize, k: usize) -> Result<ExactInt> {
    SliceFamily::new(25, a, k)?.value(k)
}

/// Outcome of one series identity, compared coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub pass: bool,
    /// Lowest power of `q` at which the two sides differ.
    pub first_failure: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn compare(name: &'static str, lhs: &TruncSeries, rhs: &TruncSeries) -> IdentityCheck {
    let first_failure = lhs.coeffs().iter().zip(rhs.coeffs()).position(|(a, b)| a != b);
    IdentityCheck { name, pass: first_failure.is_none(), first_failure }
}

/// Minimum order for [`ramanujan_j_identities`].
pub const J_IDENTITY_MIN_ORDER: usize = 8;

/// Checks the quintic identities for the dissection components through
/// `q^order`.
pub fn ramanujan_j_identities(order: usize) -> Result<IdentityReport> {
    check_j_identities(&g1_g2_series(order), order)
}

/// As [`ramanujan_j_identities`] for a caller-supplied pair, so corrupted
/// inputs can be fed through the same checks.
pub fn check_j_identities(g: &G12Pair, order: usize) -> Result<IdentityReport> {
    if order < J_IDENTITY_MIN_ORDER {
        return Err(Error::Range(format!("order must be at least {J_IDENTITY_MIN_ORDER}")));
    }
    let g1 = g.g1.truncate(order)?;
    let g2 = g.g2.truncate(order)?;
    let inv5 = series_inverse(&eta_power_series(1, 5, order))?;
    let j1 = mul(&g1, &inv5);
    let j2 = mul(&g2, &inv5);
    let q = TruncSeries::monomial(1, order);
    let x = mul(&eta_power_series(6, 1, order), &eta_power_series(-6, 5, order));
    let u = pow(&j1, 5);
    let v = times_q(&pow(&j2, 5), 2);

    // sum_i c_i q^i X^{n-i}
    let poly_in_x = |coeffs: &[i64]| {
        let n = coeffs.len() - 1;
        let mut acc = TruncSeries::zero(order);
        for (i, &c) in coeffs.iter().enumerate() {
            acc = add(&acc, &scaled(&times_q(&pow(&x, (n - i) as i64), i), c));
        }
        acc
    };
    let power_sum = |n: i64| add(&pow(&u, n), &pow(&v, n));

    let mut checks = Vec::new();
    checks.push(compare("j1^5 - 11q + q^2 j2^5 = (q)^6/(q^5)^6", &add(&u, &v).sub(&scaled(&q, 11))?, &x));
    checks.push(compare("j1 j2 = -1", &mul(&j1, &j2), &TruncSeries::one(order).neg()));
    checks.push(compare("u + v = X + 11q", &power_sum(1), &poly_in_x(&[1, 11])));
    checks.push(compare("u^2 + v^2", &power_sum(2), &poly_in_x(&[1, 22, 123])));
    checks.push(compare("u^3 + v^3", &power_sum(3), &poly_in_x(&[1, 33, 366, 1364])));
    checks.push(compare("u^4 + v^4", &power_sum(4), &poly_in_x(&[1, 44, 730, 5412, 15127])));
    checks.push(compare(
        "residue-one component = -(q^5)_inf",
        &g_residue_one(order),
        &eta_power_series(1, 5, order).neg(),
    ));
    checks.push(compare(
        "pentagonal series = G1(q^5) + q R(q^5) + q^2 G2(q^5)",
        &reassemble(&g1, &g_residue_one(order), &g2, order)?,
        &crate::combinatorics::pentagonal_series(5 * order),
    ));
    Ok(IdentityReport { order, checks })
}

fn reassemble(g1: &TruncSeries, r: &TruncSeries, g2: &TruncSeries, order: usize) -> Result<TruncSeries> {
    let full = 5 * order;
    let a = g1.substitute_power(5, full)?;
    let b = r.substitute_power(5, full)?.shift(1);
    let c = g2.substitute_power(5, full)?.shift(2);
    a.add(&b)?.add(&c)
}
