//! Exact coefficient extraction for powers of formal power series, and the
//! partition, Bernoulli, Euler and Stirling computations built on it.
//!
//! Every value is exact: integers are [`ExactInt`] and everything else is
//! an [`ExactRat`] in lowest terms. Each sequence can be produced by
//! several independent routes so that they can be checked against one
//! another (see [`crosscheck`]).

pub mod combinatorics;
pub mod crosscheck;
pub mod error;
pub mod exact;
pub mod ltt;
pub mod partitions;
pub mod series;
pub mod special;

pub use combinatorics::{
    compositions, corollary_identity, enum_restricted_partitions, eta_power_series, fibonacci, gpn,
    jacobi_cube_series, multinomial, pentagonal_series, ExponentVector, PartSet,
};
pub use error::{Error, Result};
pub use exact::{format_rat, parse_rat, ExactInt, ExactRat};
pub use ltt::{
    bareiss_det, build_thm2_matrix, ltt_inverse, ltt_pow, tower_det, DenseMatrix, LttColumn,
    TowerMode, TowerSpec,
};
pub use partitions::{partition_number, PartitionMethod};
pub use series::{
    gen_binomial, series_inverse, series_mul, series_pow, series_pow_exact, series_product_powers,
    PowMethod, RationalExponent, TruncSeries,
};
pub use special::{bernoulli, euler_number, BernoulliMethod, EulerMethod};
