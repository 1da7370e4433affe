use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hurwitz_core::oracle::{complex_census, count_real_tuples_with, SearchMode};
use hurwitz_core::par::Strategy;
use hurwitz_core::{Partition, SignSplitting};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn real_tuples(c: &mut Criterion) {
    let mut group = c.benchmark_group("real_tuples");
    group.sample_size(10);
    for (g, l, m, s) in [
        (0, "4,2", "3,3", "-"),
        (0, "3,3", "2,2,1,1", "+-"),
        (1, "3,1,1", "2,2,1", "+-+"),
    ] {
        let (l, m, s): (Partition, Partition, SignSplitting) = (p(l), p(m), s.parse().unwrap());
        let id = format!("{g}:{l}->{m}:{s}");
        for strategy in [Strategy::Sequential, Strategy::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{strategy:?}"), &id), &strategy, |b, &st| {
                b.iter(|| count_real_tuples_with(g, black_box(&l), &m, &s, SearchMode::Pruned, st).unwrap())
            });
        }
    }
    group.finish();
}

fn complex_tuples(c: &mut Criterion) {
    let mut group = c.benchmark_group("complex_census");
    group.sample_size(10);
    let l = p("3,2");
    for strategy in [Strategy::Sequential, Strategy::Parallel] {
        group.bench_with_input(
            BenchmarkId::new(format!("{strategy:?}"), "3,2 r=2"),
            &strategy,
            |b, &st| b.iter(|| complex_census(black_box(&l), 2, st).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, real_tuples, complex_tuples);
criterion_main!(benches);
