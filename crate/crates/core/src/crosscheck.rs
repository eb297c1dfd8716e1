//! Agreement matrix across every route the library offers, used by the
//! `crosscheck` command.

use std::fmt;

use num_traits::Zero;

use crate::combinatorics::pentagonal_series;
use crate::error::Result;
use crate::exact::{format_rat, rat, ratio, ExactInt};
use crate::ltt::{tower_det, TowerMode, TowerSpec};
use crate::partitions::{
    self, check_j_identities, g1_g2_series, partition_number, partition_table, ramanujan_slice,
    restricted_partition_number, restricted_partition_number_by_sum, weighted_partition_sum,
    PartitionMethod, SliceFamily, SliceKind, WeightedMode,
};
use crate::series::{series_inverse, series_pow, PowMethod, TruncSeries};
use crate::special::{
    bernoulli, bernoulli_recurrence, euler_number, euler_recurrence, stirling1_by, stirling2_by,
    BernoulliMethod, EulerMethod, Stirling1Method, Stirling2Method,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Quick,
    Full,
}

/// Deliberate corruption for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Negates the `q^5` coefficient of the pentagonal series wherever the
    /// checks build it.
    PentagonalCoefficient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_discrepancy: Option<String>,
}

impl CheckResult {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub checks: Vec<CheckResult>,
}

impl CrosscheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckResult::pass)
    }
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.pass() {
                writeln!(f, "PASS {} ({} cases)", c.name, c.cases)?;
            } else {
                write!(f, "FAIL {} ({} of {} cases failed", c.name, c.failures, c.cases)?;
                match &c.first_discrepancy {
                    Some(d) => writeln!(f, "; first: {d})")?,
                    None => writeln!(f, ")")?,
                }
            }
        }
        let failed = self.checks.iter().filter(|c| !c.pass()).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, failures: 0, first: None }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(detail());
            }
        }
    }

    /// Counts an `Err` as a failed case.
    fn check_eq<T: PartialEq + fmt::Display>(&mut self, label: impl fmt::Display, got: Result<T>, want: &T) {
        match got {
            Ok(v) => {
                let ok = &v == want;
                self.check(ok, || format!("{label}: got {v}, expected {want}"));
            }
            Err(e) => self.check(false, || format!("{label}: {e}")),
        }
    }

    fn done(self) -> CheckResult {
        CheckResult { name: self.name, cases: self.cases, failures: self.failures, first_discrepancy: self.first }
    }
}

fn pentagonal(order: usize, fault: Fault) -> TruncSeries {
    let s = pentagonal_series(order);
    match fault {
        Fault::PentagonalCoefficient if order >= 5 => {
            let mut c = s.into_coeffs();
            c[5] = -c[5].clone();
            TruncSeries::new(c).expect("nonempty")
        }
        _ => s,
    }
}

/// Runs every agreement check at the given scope.
pub fn run(scope: Scope, fault: Fault) -> CrosscheckReport {
    let full = scope == Scope::Full;
    let nmax = if full { 120 } else { 60 };
    let p = partition_table(25 * 8 + 24);
    let checks = vec![
        partition_methods(nmax, if full { 60 } else { 30 }, &p, fault),
        pentagonal_recurrence(nmax, &p, fault),
        restricted(if full { 80 } else { 40 }, &p),
        slices(if full { 30 } else { 12 }, if full { 8 } else { 4 }, &p),
        closed_form_slices(full, &p),
        dissection_identities(if full { 30 } else { 12 }, fault),
        bernoulli_methods(if full { 24 } else { 12 }),
        euler_methods(if full { 20 } else { 12 }),
        stirling_methods(if full { 12 } else { 8 }),
        weighted_sums(if full { 20 } else { 10 }),
        series_power_routes(if full { 12 } else { 8 }),
    ];
    CrosscheckReport { checks }
}

fn partition_methods(nmax: usize, sum_cap: usize, p: &[ExactInt], fault: Fault) -> CheckResult {
    let mut t = Tally::new("partition methods");
    let inverse = series_inverse(&pentagonal(nmax, fault)).expect("unit constant term");
    for (n, want) in p.iter().enumerate().take(nmax + 1) {
        let series = format_rat(&inverse.coeffs()[n]);
        t.check(series == want.to_string(), || format!("n = {n}: series gave {series}, recurrence {want}"));
        let mut tower = vec![rat(0); n + 1];
        tower[0] = rat(1);
        let mode = if n <= partitions::EXPLICIT_DET_CAP { TowerMode::ExplicitBareiss } else { TowerMode::FastConvolution };
        let det = TowerSpec::from_series(&pentagonal(n, fault), &TruncSeries::new(tower).expect("nonempty"), n + 1)
            .and_then(|spec| tower_det(&spec, mode))
            .map(|d| format_rat(&d));
        t.check_eq(format_args!("determinant, n = {n}"), det, &want.to_string());
        if n <= sum_cap {
            let v = partition_number(n, PartitionMethod::PentagonalSum);
            t.check(&v == want, || format!("n = {n}: pentagonal sum gave {v}, recurrence {want}"));
        }
    }
    t.done()
}

fn pentagonal_recurrence(nmax: usize, p: &[ExactInt], fault: Fault) -> CheckResult {
    let mut t = Tally::new("pentagonal recurrence");
    let d = pentagonal(nmax, fault);
    for n in 1..=nmax {
        let s: crate::exact::ExactRat =
            (0..=n).map(|q| &d.coeffs()[q] * crate::exact::to_rat(&p[n - q])).sum();
        t.check(s.is_zero(), || format!("n = {n}: sum is {s}"));
    }
    t.done()
}

fn restricted(nmax: usize, p: &[ExactInt]) -> CheckResult {
    let mut t = Tally::new("restricted partitions");
    for d in 1..=3 {
        for n in 0..=nmax {
            let want = restricted_partition_number_by_sum(d, n, p);
            t.check_eq(format_args!("D = {d}, n = {n}"), restricted_partition_number(d, n), &want);
        }
    }
    t.done()
}

fn slices(k5: usize, k25: usize, p: &[ExactInt]) -> CheckResult {
    let mut t = Tally::new("slice families");
    let mut run = |m: usize, a: usize, kmax: usize| match SliceFamily::new(m, a, kmax) {
        Ok(fam) => {
            for k in 0..=kmax {
                let want = &p[m * k + a];
                t.check_eq(format_args!("p({m}k + {a}), k = {k}"), fam.value(k), want);
                let divisible = (want % fam.prefactor()).is_zero();
                t.check(divisible, || format!("p({}) not divisible by {}", m * k + a, fam.prefactor()));
            }
        }
        Err(e) => t.check(false, || format!("p({m}k + {a}): {e}")),
    };
    for a in 0..5 {
        run(5, a, k5);
    }
    run(7, 5, k5);
    for a in [4, 9, 14, 19, 24] {
        run(25, a, k25);
    }
    t.done()
}

fn closed_form_slices(full: bool, p: &[ExactInt]) -> CheckResult {
    let mut t = Tally::new("closed-form slices");
    let k25 = if full { 8 } else { 3 };
    for k in 0..=12 {
        t.check_eq(format_args!("p(5k + 4), k = {k}"), ramanujan_slice(SliceKind::M5R4, k), &p[5 * k + 4]);
        t.check_eq(format_args!("p(7k + 5), k = {k}"), ramanujan_slice(SliceKind::M7R5, k), &p[7 * k + 5]);
    }
    for k in 0..=k25 {
        t.check_eq(format_args!("p(25k + 24), k = {k}"), ramanujan_slice(SliceKind::M25R24, k), &p[25 * k + 24]);
    }
    t.done()
}

fn dissection_identities(order: usize, fault: Fault) -> CheckResult {
    let mut t = Tally::new("quintic dissection identities");
    let mut g = g1_g2_series(order);
    if fault == Fault::PentagonalCoefficient {
        // the q^5 pentagonal term lands in the q^1 coefficient of G1
        let mut c = g.g1.into_coeffs();
        c[1] = -c[1].clone();
        g.g1 = TruncSeries::new(c).expect("nonempty");
    }
    match check_j_identities(&g, order) {
        Ok(report) => {
            for c in report.checks {
                t.check(c.pass, || format!("{} differs at q^{}", c.name, c.first_failure.unwrap_or(0)));
            }
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    t.done()
}

fn bernoulli_methods(nmax: usize) -> CheckResult {
    let mut t = Tally::new("Bernoulli methods");
    let oracle = bernoulli_recurrence(nmax);
    for (n, want) in oracle.iter().enumerate() {
        for &m in BernoulliMethod::ALL {
            let skip = match m {
                BernoulliMethod::SinhPartition | BernoulliMethod::HalfDet => n % 2 == 1,
                BernoulliMethod::EvenComposition => n == 1,
                _ => false,
            };
            if !skip {
                let got = bernoulli(n, m).map(|v| format_rat(&v));
                t.check_eq(format_args!("B_{n} by {m}"), got, &format_rat(want));
            }
        }
    }
    t.done()
}

fn euler_methods(nmax: usize) -> CheckResult {
    let mut t = Tally::new("Euler methods");
    let oracle = euler_recurrence(nmax);
    for (n, want) in oracle.iter().enumerate() {
        for &m in EulerMethod::ALL {
            let skip = match m {
                EulerMethod::EvenPartition | EulerMethod::HalfDet => n % 2 == 1,
                EulerMethod::OddComposition | EulerMethod::OddPartition => n < 2,
                _ => false,
            };
            if !skip {
                t.check_eq(format_args!("E_{n} by {m}"), euler_number(n, m), want);
            }
        }
    }
    t.done()
}

fn stirling_methods(nmax: usize) -> CheckResult {
    let mut t = Tally::new("Stirling methods");
    for n in 0..=nmax {
        for p in 0..=n {
            let want = stirling2_by(n, p, Stirling2Method::Triangle).expect("p <= n");
            for &m in Stirling2Method::ALL {
                t.check_eq(format_args!("S({n}, {}) by {m}", n - p), stirling2_by(n, p, m), &want);
            }
            if p < n {
                let want = stirling1_by(n, p, Stirling1Method::Triangle).expect("p < n");
                for &m in Stirling1Method::ALL {
                    t.check_eq(format_args!("s({n}, {}) by {m}", n - p), stirling1_by(n, p, m), &want);
                }
            }
        }
    }
    t.done()
}

fn weighted_sums(kmax: usize) -> CheckResult {
    let mut t = Tally::new("weighted partition sums");
    for x in [rat(1), rat(-1), rat(2), ratio(1, 2), ratio(-3, 7)] {
        for k in 0..=kmax {
            let want = weighted_partition_sum(&x, k, WeightedMode::Direct).map(|v| format_rat(&v));
            let Ok(want) = want else { continue };
            for mode in [WeightedMode::DetC1, WeightedMode::DetC2] {
                let got = weighted_partition_sum(&x, k, mode).map(|v| format_rat(&v));
                t.check_eq(format_args!("x = {x}, k = {k}, {mode}"), got, &want);
            }
        }
    }
    t.done()
}

fn series_power_routes(order: usize) -> CheckResult {
    let mut t = Tally::new("series power routes");
    let bases = [
        TruncSeries::from_fn(order, |i| ratio(1, i as i64 + 1)),
        pentagonal_series(order),
        TruncSeries::from_fn(order, |i| rat([1, 2, 0, -1][i % 4])),
    ];
    for (bi, a) in bases.iter().enumerate() {
        for x in [rat(-1), rat(3), ratio(1, 2), ratio(-2, 3)] {
            let want = series_pow(a, &x, PowMethod::PartitionSum);
            let Ok(want) = want else { continue };
            for m in [PowMethod::CompositionSum, PowMethod::Determinant] {
                let got = series_pow(a, &x, m);
                let ok = got.as_ref().is_ok_and(|g| g == &want);
                t.check(ok, || format!("base {bi}, X = {x}, {m:?}"));
            }
        }
    }
    t.done()
}
