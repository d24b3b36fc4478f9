use criterion::{criterion_group, criterion_main, Criterion};
use hopfcalc_core::charint::{char_ring, fourier, integrals, irr_characters};
use hopfcalc_core::double_rep::{a0_actions, commutant};
use hopfcalc_core::groups::catalog_hopf;
use hopfcalc_core::CycNumber;

fn bench_cyclotomic(c: &mut Criterion) {
    let a = CycNumber::zeta(12).unwrap();
    let b = &CycNumber::zeta(8).unwrap() + &CycNumber::rational(3, 7);
    c.bench_function("cyc_mul_mixed_conductor", |bch| {
        bch.iter(|| std::hint::black_box(&a) * std::hint::black_box(&b))
    });
    let prod = &a * &b;
    c.bench_function("cyc_inverse", |bch| {
        bch.iter(|| std::hint::black_box(&prod).inv().unwrap())
    });
}

fn bench_structure(c: &mut Criterion) {
    c.bench_function("build_and_verify_double_c3", |bch| {
        bch.iter(|| catalog_hopf("double:C3").unwrap())
    });
    let s3 = catalog_hopf("S3").unwrap();
    c.bench_function("characters_s3", |bch| {
        bch.iter(|| {
            let irr = irr_characters(&s3).unwrap();
            char_ring(&s3, &irr).unwrap()
        })
    });
    let ints = integrals(&s3).unwrap();
    c.bench_function("fourier_s3", |bch| bch.iter(|| fourier(&s3, &ints).unwrap()));
}

fn bench_module(c: &mut Criterion) {
    let s3 = catalog_hopf("S3").unwrap();
    let mut group = c.benchmark_group("induced_module");
    group.sample_size(10);
    group.bench_function("actions_with_straightening_s3", |bch| {
        bch.iter(|| a0_actions(&s3).unwrap())
    });
    let (on_dual, _) = a0_actions(&s3).unwrap();
    group.bench_function("commutant_on_dual_s3", |bch| {
        bch.iter(|| commutant(&on_dual).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_cyclotomic, bench_structure, bench_module);
criterion_main!(benches);
