use std::hint::black_box;

use cfheight::{brute_force_h, cf_height, scan_points, ScanConfig, ScanMethod};
use cfheight_bench::golden_fraction;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn single_height(c: &mut Criterion) {
    let mut group = c.benchmark_group("height");
    for m in [1_000u64, 100_000, 10_000_000] {
        let f = golden_fraction(m);
        group.bench_with_input(BenchmarkId::new("cf", m), &f, |b, &f| {
            b.iter(|| cf_height(black_box(f)))
        });
        if m <= 100_000 {
            group.bench_with_input(BenchmarkId::new("brute", m), &f, |b, &f| {
                b.iter(|| brute_force_h(black_box(f)))
            });
        }
    }
    group.finish();
}

fn scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan-200");
    group.sample_size(10);
    for workers in [1usize, 4] {
        let cfg = ScanConfig {
            max_den: 200,
            method: ScanMethod::CfFormula,
            workers,
            ..ScanConfig::default()
        };
        group.bench_with_input(BenchmarkId::new("cf", workers), &cfg, |b, cfg| {
            b.iter(|| scan_points(cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, single_height, scan);
criterion_main!(benches);
