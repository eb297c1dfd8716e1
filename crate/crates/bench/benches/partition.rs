use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use seqkernel::{partition_number, PartitionMethod};

fn partition_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition_number");
    for n in [20usize, 40, 60, 120, 250] {
        for m in PartitionMethod::ALL {
            if m == PartitionMethod::PentagonalSum && n > 60 {
                continue;
            }
            group.bench_with_input(BenchmarkId::new(m.tag(), n), &n, |b, &n| {
                b.iter(|| partition_number(black_box(n), m))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, partition_routes);
criterion_main!(benches);
