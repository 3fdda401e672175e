use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use energylab_bench::cubic_fixture;
use energylab_core::constructors::{paley, random_regular, symplectic_graph};
use energylab_core::graph6::{graph6_decode, graph6_encode};
use energylab_core::transform::regularize;

fn bench_constructors(c: &mut Criterion) {
    c.bench_function("construct/paley_401", |b| {
        b.iter(|| paley(black_box(401)).unwrap())
    });
    c.bench_function("construct/symplectic_6_2", |b| {
        b.iter(|| symplectic_graph(black_box(2), black_box(3)).unwrap())
    });
    c.bench_function("construct/random_regular_1000_3", |b| {
        b.iter(|| random_regular(black_box(1000), 3, 7).unwrap())
    });
}

fn bench_codec(c: &mut Criterion) {
    let g = cubic_fixture(512);
    let enc = graph6_encode(&g);
    c.bench_function("graph6/encode_512", |b| b.iter(|| graph6_encode(black_box(&g))));
    c.bench_function("graph6/decode_512", |b| {
        b.iter(|| graph6_decode(black_box(&enc)).unwrap())
    });
}

fn bench_regularize(c: &mut Criterion) {
    let g = cubic_fixture(600).add_isolated(60);
    c.bench_function("regularize/cubic_600_plus_60", |b| {
        b.iter(|| regularize(black_box(&g)))
    });
}

criterion_group!(benches, bench_constructors, bench_codec, bench_regularize);
criterion_main!(benches);
