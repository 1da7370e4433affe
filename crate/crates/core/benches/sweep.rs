use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hurwitz_core::enhanced::enumerate_universal_with;
use hurwitz_core::par::Strategy;
use hurwitz_core::tropical::sweep::enumerate_enhanced_covers_with;
use hurwitz_core::{Partition, SignSplitting};

fn coloured(c: &mut Criterion) {
    let mut group = c.benchmark_group("enhanced_sweep");
    for (g, l, m, s) in [(0, "1,1,1,1,1,1", "1,1,1,1,1,1", "+-+-+"), (1, "3,2,1", "3,2,1", "+-+")] {
        let (l, m): (Partition, Partition) = (l.parse().unwrap(), m.parse().unwrap());
        let s: SignSplitting = s.parse().unwrap();
        let id = format!("{g}:{l}->{m}:{s}");
        for strategy in [Strategy::Sequential, Strategy::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{strategy:?}"), &id), &strategy, |b, &st| {
                b.iter(|| enumerate_enhanced_covers_with(g, black_box(&l), &m, &s, st).unwrap())
            });
        }
    }
    group.finish();
}

fn universal(c: &mut Criterion) {
    let mut group = c.benchmark_group("universal_sweep");
    group.sample_size(10);
    let ones = Partition::ones(7);
    for strategy in [Strategy::Sequential, Strategy::Parallel] {
        group.bench_with_input(BenchmarkId::new(format!("{strategy:?}"), "1^7"), &strategy, |b, &st| {
            b.iter(|| enumerate_universal_with(0, black_box(&ones), &ones, st).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, coloured, universal);
criterion_main!(benches);
