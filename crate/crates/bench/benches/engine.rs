//! Benchmarks for the hot paths of the engine: exact linear algebra,
//! intertwiner-space computation, module decomposition, and the
//! ambidexterity tests.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ambitrace::ambi::{ambi_direct, TraceFunctional};
use ambitrace::builders::{
    build_group_algebra, build_restricted_usl2, s3_natural_module, GroupTable,
};
use ambitrace::decomp::decompose;
use ambitrace::linalg::{invert, rank};
use ambitrace::modcat::{dual_module, hom_basis, regular_module, tensor_modules};
use ambitrace::modcat::Morphism;
use ambitrace::{Field, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

fn random_matrix(n: usize, field: &Field, rng: &mut ChaCha12Rng) -> Matrix {
    Matrix::from_fn(n, n, field, |_, _| {
        field.from_i64(rng.gen_range(0..7))
    })
}

fn bench_linear_algebra(c: &mut Criterion) {
    let f5 = Field::prime(5).unwrap();
    let mut rng = ChaCha12Rng::seed_from_u64(0);
    let m = random_matrix(64, &f5, &mut rng);
    c.bench_function("rank of a 64x64 matrix over F5", |b| {
        b.iter(|| rank(black_box(&m)))
    });
    // A Vandermonde-style matrix is guaranteed invertible.
    let nodes: Vec<i64> = (1..=4).collect();
    let v = Matrix::from_fn(4, 4, &f5, |i, j| {
        f5.from_i64(nodes[i].pow(j as u32))
    });
    c.bench_function("inverse of a 4x4 matrix over F5", |b| {
        b.iter(|| invert(black_box(&v)).unwrap())
    });
    let fq = Field::rational();
    let q = Matrix::from_fn(6, 6, &fq, |i, j| {
        fq.from_i64(if i == j { 3 } else { (i as i64) - (j as i64) })
    });
    c.bench_function("inverse of a 6x6 matrix over Q", |b| {
        b.iter(|| invert(black_box(&q)).unwrap())
    });
}

fn bench_hom_spaces(c: &mut Criterion) {
    let data = build_restricted_usl2(3).unwrap();
    let st = data.steinberg();
    let vv = tensor_modules(st, &dual_module(st)).unwrap();
    c.bench_function("End(St (x) St*) for restricted sl2, p=3", |b| {
        b.iter(|| hom_basis(black_box(&vv), black_box(&vv)).unwrap())
    });
}

fn bench_decompose(c: &mut Criterion) {
    let f2 = Field::prime(2).unwrap();
    let alg = build_group_algebra(&f2, &GroupTable::symmetric3()).unwrap();
    let reg = regular_module(&alg);
    c.bench_function("decompose regular module of kS3 over F2", |b| {
        b.iter(|| decompose(black_box(&reg), 0).unwrap())
    });
}

fn bench_ambi_and_trace(c: &mut Criterion) {
    let data = build_restricted_usl2(3).unwrap();
    let st = data.steinberg().clone();
    c.bench_function("direct ambidexterity test on St, p=3", |b| {
        b.iter(|| ambi_direct(black_box(&st)).unwrap())
    });
    let f2 = Field::prime(2).unwrap();
    let alg = build_group_algebra(&f2, &GroupTable::symmetric3()).unwrap();
    let nat = s3_natural_module(&alg, &GroupTable::symmetric3()).unwrap();
    c.bench_function("modified dimension of N through N, kS3", |b| {
        b.iter(|| {
            let t = TraceFunctional::new(black_box(&nat)).unwrap();
            t.trace(&nat, &Morphism::identity(&nat)).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_linear_algebra,
    bench_hom_spaces,
    bench_decompose,
    bench_ambi_and_trace
);
criterion_main!(benches);
