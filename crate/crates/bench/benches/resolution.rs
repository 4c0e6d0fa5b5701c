//! Timing of the two construction routes and of the full check suite.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gorlin::verify::{default_dmax, run_checks, Check};
use gorlin::{build_resolution, build_resolution_via_elementary, random_invsys};

const CASES: [(usize, usize); 4] = [(3, 2), (4, 2), (4, 3), (5, 3)];

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(20);
    for (d, n) in CASES {
        let phi = random_invsys(d, n, 1, 5).unwrap();
        let id = format!("d{d}_n{n}");
        group.bench_with_input(BenchmarkId::new("tables", &id), &phi, |b, phi| {
            b.iter(|| build_resolution(black_box(phi)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("elementary", &id), &phi, |b, phi| {
            b.iter(|| build_resolution_via_elementary(black_box(phi)).unwrap())
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (d, n) in [(3, 2), (4, 2), (4, 3)] {
        let res = build_resolution(&random_invsys(d, n, 1, 5).unwrap()).unwrap();
        group.bench_function(format!("d{d}_n{n}"), |b| {
            b.iter(|| run_checks(black_box(&res), &Check::ALL, default_dmax(d, n)))
        });
    }
    group.finish();
}

criterion_group!(benches, build, verify);
criterion_main!(benches);
