//! Criterion benchmarks for the hot kernels: polynomial construction,
//! certified series evaluation, zeta values, and the witness scan.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use zetaquot_core::modular::witness_scan;
use zetaquot_core::numerics::{l_sequence, lstar_eval_int, zeta_int, zeta_quotient};
use zetaquot_core::poly::{build_p, build_q};

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_p");
    for n in [8usize, 20, 40, 60] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| build_p(n).unwrap());
        });
    }
    group.finish();

    let mut group = c.benchmark_group("build_q");
    for n in [10usize, 20, 40] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| build_q(n).unwrap());
        });
    }
    group.finish();
}

fn bench_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("lstar_eval_int");
    group.sample_size(20);
    for (n, prec) in [(4usize, 128u32), (8, 256), (12, 256)] {
        let p = build_p(n).unwrap();
        let id = format!("p_{n}_at_{prec}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &prec, |b, &prec| {
            b.iter(|| lstar_eval_int(&p, prec).unwrap());
        });
    }
    group.finish();

    let mut group = c.benchmark_group("l_sequence");
    group.sample_size(20);
    for (n_max, prec) in [(20usize, 96u32), (60, 96)] {
        let id = format!("n_{n_max}_at_{prec}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &n_max, |b, &n_max| {
            b.iter(|| l_sequence(n_max, prec).unwrap());
        });
    }
    group.finish();
}

fn bench_zeta(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta_int");
    group.sample_size(20);
    for (m, prec) in [(3usize, 128u32), (5, 256), (21, 256)] {
        let id = format!("m_{m}_at_{prec}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &m, |b, &m| {
            b.iter(|| zeta_int(m, prec).unwrap());
        });
    }
    group.finish();

    let mut group = c.benchmark_group("zeta_quotient");
    group.sample_size(10);
    for n in [4usize, 12, 20] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| zeta_quotient(n, 256).unwrap());
        });
    }
    group.finish();
}

fn bench_witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness_scan");
    for n in [4usize, 7, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| witness_scan(n, 500).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_build, bench_series, bench_zeta, bench_witness);
criterion_main!(benches);
