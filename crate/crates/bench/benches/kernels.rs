//! Benchmarks for the kernels that dominate report generation: symbolic
//! Pfaffians, integer polynomial factorization, Pell solving, and the full
//! verification pipeline.

use criterion::{criterion_group, criterion_main, Criterion};

use anosov_core::anosov::verify_anosov;
use anosov_core::construct::{catalog, hk_automorphism, nk_automorphism, scheuneman_dual};
use anosov_core::exact::{factor_over_z, pell_fundamental};
use anosov_core::forms::pfaffian_form;

fn bench_pfaffian_form(c: &mut Criterion) {
    let h2 = catalog("h_2").unwrap();
    c.bench_function("pfaffian_form h_2 (dim 8)", |b| {
        b.iter(|| pfaffian_form(&h2).unwrap())
    });
}

fn bench_factor_over_z(c: &mut Criterion) {
    let (_, m) = hk_automorphism(2, 3, 2, 4).unwrap();
    let p = m.charpoly().unwrap();
    let (_, q) = p.content_and_primitive();
    c.bench_function("factor_over_z degree-8 characteristic polynomial", |b| {
        b.iter(|| factor_over_z(&q).unwrap())
    });
}

fn bench_pell(c: &mut Criterion) {
    c.bench_function("pell_fundamental k=61", |b| {
        b.iter(|| pell_fundamental(61).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    let (l, a) = nk_automorphism(2).unwrap();
    c.bench_function("verify_anosov n_2 (dim 6)", |b| {
        b.iter(|| verify_anosov(&l, &a).unwrap())
    });
}

fn bench_dual(c: &mut Criterion) {
    let sum = catalog("h3+h3").unwrap();
    c.bench_function("scheuneman_dual h3+h3", |b| {
        b.iter(|| scheuneman_dual(&sum).unwrap())
    });
}

criterion_group!(
    benches,
    bench_pfaffian_form,
    bench_factor_over_z,
    bench_pell,
    bench_verify,
    bench_dual
);
criterion_main!(benches);
