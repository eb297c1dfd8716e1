//! End-to-end acceptance run: each criterion is timed against its budget
//! and reported on its own line. Exits nonzero if any criterion fails.
//!
//! Reference values come from oracles written here, independently of the
//! library: coin-change partition counts, the Pascal recurrence for
//! Bernoulli numbers, Stirling triangles and brute-force compositions.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use seqkernel::combinatorics::corollary_identity;
use seqkernel::ltt::{ltt_inverse, tower_det, LttColumn, TowerMode, TowerSpec};
use seqkernel::partitions::{
    g1_g2_series, h_polynomials, partition_number, ramanujan_j_identities, ramanujan_slice,
    restricted_partition_number, x_vector, z_vector, PartitionMethod, SliceFamily, SliceKind,
};
use seqkernel::series::{series_pow, PowMethod, TruncSeries};
use seqkernel::special::{
    bernoulli, euler_number, stirling1_by, stirling2_by, BernoulliMethod, EulerMethod, Stirling1Method,
    Stirling2Method,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(big(n), big(d))
}

// p(0..=n) by counting partitions with parts 1, 2, .., n one part size at a time
fn partitions_oracle(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for part in 1..=n {
        for i in part..=n {
            let add = p[i - part].clone();
            p[i] += add;
        }
    }
    p
}

// same, but each part size used at most `cap` times
fn capped_partitions_oracle(n: usize, cap: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for part in 1..=n {
        let prev = p.clone();
        for (i, slot) in p.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for c in 0..=cap {
                if c * part > i {
                    break;
                }
                acc += &prev[i - c * part];
            }
            *slot = acc;
        }
    }
    p
}

fn pentagonal_offsets(limit: usize) -> Vec<(i64, usize)> {
    let mut out = vec![(0, 0)];
    for m in 1i64.. {
        let a = (m * (3 * m - 1) / 2) as usize;
        if a > limit {
            break;
        }
        out.push((m, a));
        let b = (m * (3 * m + 1) / 2) as usize;
        if b <= limit {
            out.push((-m, b));
        }
    }
    out
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * big((n - i) as i64) / big(i as i64 + 1);
    }
    r
}

// sum_{k=0}^{n} C(n+1, k) B_k = 0
fn bernoulli_oracle(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut s = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from(binom(m + 1, k)) * bk;
        }
        b.push(-s / BigRational::from(big(m as i64 + 1)));
    }
    b
}

fn stirling2_oracle(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    t[0][0] = BigInt::one();
    for i in 1..=n {
        for k in 1..=i {
            t[i][k] = big(k as i64) * &t[i - 1][k] + &t[i - 1][k - 1];
        }
    }
    t
}

fn stirling1_oracle(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    t[0][0] = BigInt::one();
    for i in 1..=n {
        for k in 1..=i {
            t[i][k] = &t[i - 1][k - 1] - big(i as i64 - 1) * &t[i - 1][k];
        }
    }
    t
}

fn ints(s: &TruncSeries, len: usize) -> Vec<i64> {
    s.coeffs()[..len]
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integer coefficient {c}");
            i64::try_from(c.to_integer()).unwrap()
        })
        .collect()
}

fn sparse(terms: &[(usize, i64)], len: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    for &(e, c) in terms {
        v[e] = c;
    }
    v
}

fn criterion_1() {
    let fam = SliceFamily::from_kind(SliceKind::M5R4, 4);
    assert_eq!(fam.spec(4).unwrap().size(), 5);
    assert_eq!(ramanujan_slice(SliceKind::M5R4, 4).unwrap(), big(1575));
    assert_eq!(SliceFamily::from_kind(SliceKind::M7R5, 5).spec(5).unwrap().size(), 6);
    assert_eq!(ramanujan_slice(SliceKind::M7R5, 5).unwrap(), big(37338));
    assert_eq!(SliceFamily::from_kind(SliceKind::M25R24, 7).spec(7).unwrap().size(), 8);
    assert_eq!(ramanujan_slice(SliceKind::M25R24, 7).unwrap(), big(3646072432125));
}

fn criterion_2() {
    for m in [
        EulerMethod::EvenPartition,
        EulerMethod::EvenComposition,
        EulerMethod::OddComposition,
        EulerMethod::OddPartition,
        EulerMethod::HalfDet,
    ] {
        assert_eq!(euler_number(10, m).unwrap(), big(-50521), "{m}");
    }
}

fn criterion_3() {
    let p = partitions_oracle(120);
    for (n, want) in p.iter().enumerate() {
        assert_eq!(&partition_number(n, PartitionMethod::Series), want, "series, n = {n}");
        assert_eq!(&partition_number(n, PartitionMethod::Recurrence), want, "recurrence, n = {n}");
        assert_eq!(&partition_number(n, PartitionMethod::Determinant), want, "determinant, n = {n}");
        if n <= 60 {
            assert_eq!(&partition_number(n, PartitionMethod::PentagonalSum), want, "pentagonal sum, n = {n}");
        }
    }
}

fn criterion_4() {
    let b = bernoulli_oracle(24);
    for (n, want) in b.iter().enumerate() {
        for &m in BernoulliMethod::ALL {
            let applicable = match m {
                BernoulliMethod::SinhPartition | BernoulliMethod::HalfDet => n % 2 == 0,
                BernoulliMethod::EvenComposition => n != 1,
                _ => true,
            };
            if applicable {
                assert_eq!(&bernoulli(n, m).unwrap(), want, "B_{n} by {m}");
            }
        }
    }
    assert_eq!(b[12], q(-691, 2730));
    let s2 = stirling2_oracle(12);
    let s1 = stirling1_oracle(12);
    for n in 0..=12 {
        for p in 0..=n {
            for &m in Stirling2Method::ALL {
                assert_eq!(stirling2_by(n, p, m).unwrap(), s2[n][n - p], "S({n}, {}) by {m}", n - p);
            }
            if p < n {
                for &m in Stirling1Method::ALL {
                    assert_eq!(stirling1_by(n, p, m).unwrap(), s1[n][n - p], "s({n}, {}) by {m}", n - p);
                }
            }
        }
    }
}

// G1 and G2 from their closed-form exponent patterns
fn g_oracle(len: usize) -> (Vec<i64>, Vec<i64>) {
    let mut g1 = vec![0i64; len];
    let mut g2 = vec![0i64; len];
    g1[0] -= 1;
    for k in 0..len {
        let base1 = 30 * k * k - k;
        let base2 = k * (30 * k + 7);
        if base1 >= len && base2 >= len {
            break;
        }
        let t1 = [(0, 1), (2 * k, 1), (12 * k + 1, 1), (20 * k + 3, -1), (30 * k + 7, -1), (32 * k + 8, -1), (42 * k + 14, -1), (50 * k + 20, 1)];
        for (off, c) in t1 {
            if base1 + off < len {
                g1[base1 + off] += c;
            }
        }
        let t2 = [(0, -1), (6 * k + 1, 1), (10 * k + 2, -1), (16 * k + 4, 1), (30 * k + 11, 1), (36 * k + 15, -1), (40 * k + 18, 1), (46 * k + 23, -1)];
        for (off, c) in t2 {
            if base2 + off < len {
                g2[base2 + off] += c;
            }
        }
    }
    (g1, g2)
}

fn criterion_5() {
    let xs: [[i64; 8]; 4] = [
        [1, 1, 9, -3, -11, -10, 10, -10],
        [1, 5, -1, 4, -10, -7, -5, 2],
        [2, 3, 5, -10, 3, -9, -11, -8],
        [3, 4, -4, 7, -16, 3, -17, -13],
    ];
    for (a, row) in xs.iter().enumerate() {
        assert_eq!(ints(&x_vector(a, 7).unwrap(), 8), row, "X({a})");
    }
    let zs: [(usize, [i64; 8]); 4] = [
        (4, [1, 882, 49362, 768246, 5380497, 20802996, 47413915, 46923084]),
        (9, [6, 2276, 92646, 1198566, 7354172, 25710039, 51224670, 39450895]),
        (14, [27, 5400, 166697, 1811682, 9871992, 30828786, 55015749, 20079168]),
        (19, [98, 11997, 287316, 2672825, 12906450, 36553962, 54917174, 2443563]),
    ];
    for (a, row) in zs {
        assert_eq!(ints(&z_vector(a, 7).unwrap(), 8), row, "Z({a})");
    }
    // highest degree first, as displayed
    let hs: [&[i64]; 5] = [
        &[-98, 9939, -107712, 167031, -27918, 127011, 160552, 32784, 858, 1],
        &[27, -4806, 78758, -171984, 98667, 78986, 176592, 52644, 2138, 6],
        &[-6, 2138, -52644, 176592, -78986, 98667, 171984, 78758, 4806, 27],
        &[1, -858, 32784, -160552, 127011, 27918, 167031, 107712, 9939, 98],
        &[315, -18640, 139305, -127020, 106425, 127020, 139305, 18640, 315],
    ];
    let h = h_polynomials();
    for (i, want) in hs.iter().enumerate() {
        let mut got: Vec<i64> = h.poly(i + 1).iter().map(|c| i64::try_from(c).unwrap()).collect();
        got.reverse();
        assert_eq!(got, *want, "H{}", i + 1);
    }
    let g = g1_g2_series(60);
    let g1_listing = sparse(
        &[(0, 1), (1, 1), (3, -1), (7, -1), (8, -1), (14, -1), (20, 1), (29, 1), (31, 1), (42, 1), (52, -1)],
        53,
    );
    let g2_listing = sparse(
        &[(0, -1), (1, 1), (2, -1), (4, 1), (11, 1), (15, -1), (18, 1), (23, -1), (37, -1), (44, 1), (49, -1), (57, 1)],
        58,
    );
    assert_eq!(ints(&g.g1, 53), g1_listing);
    assert_eq!(ints(&g.g2, 58), g2_listing);
    let (o1, o2) = g_oracle(61);
    assert_eq!(ints(&g.g1, 61), o1);
    assert_eq!(ints(&g.g2, 61), o2);
}

fn criterion_6() {
    let report = ramanujan_j_identities(30).unwrap();
    for c in &report.checks {
        assert!(c.pass, "{} fails at q^{:?}", c.name, c.first_failure);
    }
    assert!(report.checks.len() >= 6);
}

fn compositions_oracle(p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=p {
        for mut rest in compositions_oracle(p - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * big(i as i64))
}

fn small_column(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, len - 1).prop_map(|mut v| {
        v.insert(0, 1);
        v
    })
}

fn criterion_7() {
    // multinomial identity
    for p in 0..=12 {
        let mut s = BigInt::zero();
        for c in compositions_oracle(p) {
            let mult = c.iter().fold(factorial(p), |acc, &q| acc / factorial(q));
            if c.len() % 2 == 0 {
                s += mult;
            } else {
                s -= mult;
            }
        }
        let want = if p % 2 == 0 { big(1) } else { big(-1) };
        assert_eq!(s, want, "composition oracle, p = {p}");
        assert_eq!(corollary_identity(p), want, "p = {p}");
    }

    let config = Config { cases: 64, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    // truncation of inverses
    runner
        .run(&(1usize..=20).prop_flat_map(|k| (small_column(21), Just(k))), |(col, k)| {
            let full = ltt_inverse(&LttColumn::from_ints(&col)).unwrap();
            let short = ltt_inverse(&LttColumn::from_ints(&col[..k])).unwrap();
            prop_assert_eq!(full.prefix(k).unwrap(), short);
            Ok(())
        })
        .unwrap();
    // fast tower determinant against elimination
    runner
        .run(&(1usize..=12).prop_flat_map(|n| (small_column(n), prop::collection::vec(-6i64..=6, n))), |(base, tower)| {
            let tower: Vec<BigRational> = tower.into_iter().map(|t| BigRational::from(big(t))).collect();
            let spec = TowerSpec::new(LttColumn::from_ints(&base), tower).unwrap();
            prop_assert_eq!(
                tower_det(&spec, TowerMode::FastConvolution).unwrap(),
                tower_det(&spec, TowerMode::ExplicitBareiss).unwrap()
            );
            Ok(())
        })
        .unwrap();
    // series powers by three routes
    runner
        .run(
            &(1usize..=12).prop_flat_map(|l| (small_column(l + 1), -4i64..=4, 1i64..=3)),
            |(col, num, den)| {
                let a = TruncSeries::from_ints(&col);
                let x = q(num, den);
                let by_sum = series_pow(&a, &x, PowMethod::PartitionSum).unwrap();
                prop_assert_eq!(&series_pow(&a, &x, PowMethod::CompositionSum).unwrap(), &by_sum);
                prop_assert_eq!(&series_pow(&a, &x, PowMethod::Determinant).unwrap(), &by_sum);
                Ok(())
            },
        )
        .unwrap();

    // pentagonal recurrence and its restricted generalization
    let p = partitions_oracle(120);
    let offsets = pentagonal_offsets(120);
    for n in 1..=120 {
        let mut s = BigInt::zero();
        for &(m, off) in &offsets {
            if off <= n {
                if m % 2 == 0 {
                    s += &p[n - off];
                } else {
                    s -= &p[n - off];
                }
            }
        }
        assert!(s.is_zero(), "recurrence sum at n = {n} is {s}");
    }
    for d in 1..=3 {
        let capped = capped_partitions_oracle(80, d);
        for n in 0..=80 {
            let mut s = BigInt::zero();
            for &(m, off) in &offsets {
                let off = off * (d + 1);
                if off <= n {
                    if m % 2 == 0 {
                        s += &p[n - off];
                    } else {
                        s -= &p[n - off];
                    }
                }
            }
            assert_eq!(s, capped[n], "alternating sum, D = {d}, n = {n}");
            assert_eq!(restricted_partition_number(d, n).unwrap(), capped[n], "D = {d}, n = {n}");
        }
    }
}

fn criterion_8() {
    let p = partitions_oracle(25 * 8 + 24);
    for a in 0..5 {
        let fam = SliceFamily::new(5, a, 30).unwrap();
        for k in 0..=30 {
            let v = fam.value(k).unwrap();
            assert_eq!(v, p[5 * k + a], "p(5k + {a}), k = {k}");
            assert!((&v % fam.prefactor()).is_zero());
        }
    }
    for k in 0..=30 {
        let v = ramanujan_slice(SliceKind::M5R4, k).unwrap();
        assert_eq!(v, p[5 * k + 4]);
        assert!((&v % big(5)).is_zero());
        let v = ramanujan_slice(SliceKind::M7R5, k).unwrap();
        assert_eq!(v, p[7 * k + 5]);
        assert!((&v % big(7)).is_zero());
    }
    for a in [4, 9, 14, 19, 24] {
        let fam = SliceFamily::new(25, a, 8).unwrap();
        for k in 0..=8 {
            let v = fam.value(k).unwrap();
            assert_eq!(v, p[25 * k + a], "p(25k + {a}), k = {k}");
            assert!((&v % fam.prefactor()).is_zero());
        }
    }
    for k in 0..=8 {
        let v = ramanujan_slice(SliceKind::M25R24, k).unwrap();
        assert_eq!(v, p[25 * k + 24]);
        assert!((&v % big(25)).is_zero() && v.is_positive());
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn()); 8] = [
        ("1 sample slice determinants p(24), p(40), p(199)", 1, criterion_1),
        ("2 E_10 = -50521 by every Euler route", 1, criterion_2),
        ("3 partition method agreement for n <= 120", 30, criterion_3),
        ("4 Bernoulli n <= 24 and Stirling n <= 12 against oracles", 20, criterion_4),
        ("5 dissection vectors, H polynomials, G1/G2 listings", 10, criterion_5),
        ("6 quintic identities to order 30", 10, criterion_6),
        ("7 property suites", 60, criterion_7),
        ("8 slice totality and divisibility", 30, criterion_8),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = match &outcome {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => "FAIL (over time budget)".to_string(),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL ({msg})")
            }
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {name}: {verdict} [{:.3} s, limit {} s]", elapsed.as_secs_f64(), limit.as_secs());
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
