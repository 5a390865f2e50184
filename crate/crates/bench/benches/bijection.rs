use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use schroder::bijection::{phi, phi_inv};
use schroder::counting::{large_motzkin_numbers, verify_identities};
use schroder::enumerate::{gen_large, gen_ncl};

fn bench_phi(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi");
    for n in [6, 8] {
        let paths: Vec<_> = gen_large(n).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &paths, |b, paths| {
            b.iter(|| {
                for p in paths {
                    black_box(phi(p));
                }
            })
        });
    }
    group.finish();
}

fn bench_phi_inv(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_inv");
    for n in [7, 9] {
        let parts: Vec<_> = gen_ncl(n).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &parts, |b, parts| {
            b.iter(|| {
                for p in parts {
                    black_box(phi_inv(p).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_generators(c: &mut Criterion) {
    c.bench_function("gen_ncl 10", |b| b.iter(|| gen_ncl(black_box(10)).count()));
    c.bench_function("gen_large 9", |b| {
        b.iter(|| gen_large(black_box(9)).count())
    });
}

fn bench_counting(c: &mut Criterion) {
    c.bench_function("L table 500", |b| {
        b.iter(|| large_motzkin_numbers(black_box(500)))
    });
    c.bench_function("identities 1000", |b| {
        b.iter(|| verify_identities(black_box(1000)))
    });
}

criterion_group!(
    benches,
    bench_phi,
    bench_phi_inv,
    bench_generators,
    bench_counting
);
criterion_main!(benches);
