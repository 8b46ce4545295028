use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cevian_bench::{equal_arrangement, family1_divisors};
use cevian_core::{ceva, counting, oracle};

/// O(n^2) divisibility scan behind d(n).
fn equation_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_concurrencies");
    for n in [64u64, 256, 1024, 4096] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| ceva::count_concurrencies(black_box(n)).unwrap())
        });
    }
    group.finish();
}

/// Early-exit witness search on family members vs a barren prime.
fn witness_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_witness");
    for n in family1_divisors(31) {
        group.bench_with_input(BenchmarkId::new("family1", n), &n, |b, &n| {
            b.iter(|| ceva::find_witness(black_box(n)).unwrap())
        });
    }
    // full scan with no solution to find
    group.bench_with_input(BenchmarkId::new("prime", 997u64), &997, |b, &n| {
        b.iter(|| ceva::find_witness(black_box(n)).unwrap())
    });
    group.finish();
}

/// Exact-geometry concurrency detection (O(a*b*c) point-on-segment tests).
fn geometric_d(c: &mut Criterion) {
    let mut group = c.benchmark_group("concurrency_points");
    group.sample_size(20);
    for n in [6u64, 9, 12] {
        let arr = equal_arrangement(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &arr, |b, arr| {
            b.iter(|| black_box(arr).concurrency_points().len())
        });
    }
    group.finish();
}

/// Cubic triple enumeration over exact rational intersections.
fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_triangles");
    group.sample_size(20);
    for n in [3u64, 4, 5] {
        let arr = equal_arrangement(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &arr, |b, arr| {
            b.iter(|| oracle::enumerate_triangles(black_box(arr)).unwrap().triangle_count)
        });
    }
    group.finish();
}

/// Arbitrary-precision closed forms.
fn closed_forms(c: &mut Criterion) {
    c.bench_function("count_triangles(10^6 cevians)", |b| {
        b.iter(|| {
            counting::count_triangles(
                black_box(1_000_000),
                black_box(1_000_000),
                black_box(1_000_000),
                black_box(0),
            )
            .unwrap()
            .triangle_count
        })
    });
    c.bench_function("scan_family1(p<=13)", |b| {
        b.iter(|| {
            ceva::scan_family(
                ceva::ConjectureFamily::PTimesTwoPMinusOne,
                black_box(13),
                false,
            )
        })
    });
}

criterion_group!(
    benches,
    equation_count,
    witness_search,
    geometric_d,
    enumerate,
    closed_forms
);
criterion_main!(benches);
