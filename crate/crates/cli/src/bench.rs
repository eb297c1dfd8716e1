//! Timing runs across the partition-number routes.

use std::fmt::Write as _;
use std::time::Instant;

use seqkernel::partitions::{partition_number_probe, partition_table, EXPLICIT_DET_CAP};
use seqkernel::PartitionMethod;

use crate::CliError;

/// Largest `--nmax` accepted.
pub const BENCH_NMAX_CAP: usize = 400;

/// Routes whose cost grows too quickly to time beyond this index.
pub const PENTAGONAL_SUM_CAP: usize = 60;

const COLUMNS: [PartitionMethod; 4] = [
    PartitionMethod::PentagonalSum,
    PartitionMethod::Series,
    PartitionMethod::Recurrence,
    PartitionMethod::Determinant,
];

fn cap(m: PartitionMethod) -> usize {
    match m {
        PartitionMethod::PentagonalSum => PENTAGONAL_SUM_CAP,
        PartitionMethod::Determinant => EXPLICIT_DET_CAP,
        _ => usize::MAX,
    }
}

/// One CSV row per `n`: wall time in microseconds and peak operand size in
/// bits for each route, then the value itself.
pub fn bench_partition(nmax: usize) -> Result<String, CliError> {
    if nmax > BENCH_NMAX_CAP {
        return Err(CliError::Usage(format!("--nmax is capped at {BENCH_NMAX_CAP}")));
    }
    let mut out = String::from("n");
    for m in COLUMNS {
        write!(out, ",{0}_us,{0}_bits", m.tag()).unwrap();
    }
    out.push_str(",value\n");
    let reference = partition_table(nmax);
    for (n, value) in reference.iter().enumerate() {
        write!(out, "{n}").unwrap();
        for m in COLUMNS {
            if n > cap(m) {
                out.push_str(",skipped,skipped");
                continue;
            }
            let mut bits = 0;
            let start = Instant::now();
            let v = partition_number_probe(n, m, &mut bits);
            let us = start.elapsed().as_micros();
            if &v != value {
                return Err(CliError::Compute(format!("{} disagrees at n = {n}: {v} vs {value}", m.tag())));
            }
            write!(out, ",{us},{bits}").unwrap();
        }
        writeln!(out, ",{value}").unwrap();
    }
    Ok(out)
}
