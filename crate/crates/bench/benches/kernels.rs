use std::hint::black_box;
use std::sync::Arc;

use cornerk_core::charclass::{parse_builtin_ring, todd_class, BundleData, RingElement};
use cornerk_core::complex::parse_builtin;
use cornerk_core::ktheory::e2_page;
use cornerk_core::linalg::invariant_factors;
use cornerk_core::toeplitz::toeplitz_index;
use cornerk_core::{IntegerMatrix, LaurentSymbol};
use criterion::{criterion_group, criterion_main, Criterion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn snf(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(1);
    for n in [8usize, 24] {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = IntegerMatrix::from_rows(&rows);
        c.bench_function(&format!("snf {n}x{n}"), |b| b.iter(|| invariant_factors(black_box(&m))));
    }
}

fn e2(c: &mut Criterion) {
    let cube = parse_builtin("cube:6").unwrap();
    c.bench_function("e2 cube:6", |b| b.iter(|| e2_page(black_box(&cube)).unwrap()));
}

fn toeplitz(c: &mut Criterion) {
    let s: LaurentSymbol = "-2:1,0:3/10,1:1/7,3:1,4:1/5".parse().unwrap();
    c.bench_function("toeplitz index", |b| b.iter(|| toeplitz_index(black_box(&s)).unwrap()));
}

fn todd(c: &mut Criterion) {
    let ring = Arc::new(parse_builtin_ring("product:cp:4,cp:4").unwrap());
    let chern = vec![
        RingElement::parse(&ring, "l.x:1,r.x:2").unwrap(),
        RingElement::parse(&ring, "l.x^2:1,l.x*r.x:-1").unwrap(),
    ];
    let e = BundleData::new(&ring, 3, chern).unwrap();
    c.bench_function("todd product:cp:4,cp:4", |b| b.iter(|| todd_class(black_box(&e))));
}

criterion_group!(benches, snf, e2, toeplitz, todd);
criterion_main!(benches);
