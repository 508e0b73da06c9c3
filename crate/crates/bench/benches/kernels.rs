//! Benchmarks for the kernels that dominate suite runtime: character series
//! and Wronskians, alternant expansion, the logical-shift build, the plasma
//! Monte Carlo loop, and the exact mode-algebra central charge.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use vq_core::characters::{character_series, wronskian};
use vq_core::laughlin::{plasma_norm_mc, vandermonde_power_expand};
use vq_core::multiboson::{build_x, FockSpace};
use vq_core::rational::rat;
use vq_core::realizations::{BosonModes, BosonParams};

fn bench_character_series(c: &mut Criterion) {
    c.bench_function("character_series k=2 i=2 order=100", |b| {
        b.iter(|| character_series(black_box(2), black_box(2), black_box(100)).unwrap())
    });
}

fn bench_wronskian(c: &mut Criterion) {
    c.bench_function("wronskian k=3 order=40", |b| {
        b.iter(|| wronskian(black_box(3), black_box(40)).unwrap())
    });
    c.bench_function("wronskian k=4 order=60", |b| {
        b.iter(|| wronskian(black_box(4), black_box(60)).unwrap())
    });
}

fn bench_alternant(c: &mut Criterion) {
    c.bench_function("vandermonde_power_expand N=4 p=5", |b| {
        b.iter(|| vandermonde_power_expand(black_box(4), black_box(5)).unwrap())
    });
}

fn bench_logical_shift(c: &mut Criterion) {
    let space = FockSpace::new(31 * 4, 8).unwrap();
    c.bench_function("build_x k=4 n_max=124", |b| {
        b.iter(|| build_x(black_box(space), black_box(4)).unwrap())
    });
}

fn bench_plasma_mc(c: &mut Criterion) {
    c.bench_function("plasma_norm_mc N=3 m=2 samples=100k", |b| {
        b.iter(|| plasma_norm_mc(black_box(3), black_box(2), black_box(100_000), black_box(42)).unwrap())
    });
}

fn bench_central_charge(c: &mut Criterion) {
    let modes = BosonModes::new(12).unwrap();
    let p = BosonParams { lambda: rat(1, 2), big_m: rat(3, 1) };
    c.bench_function("boson central charge m=3 window=12", |b| {
        b.iter(|| modes.central_charge(black_box(3), black_box(&p)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_character_series,
    bench_wronskian,
    bench_alternant,
    bench_logical_shift,
    bench_plasma_mc,
    bench_central_charge
);
criterion_main!(benches);
