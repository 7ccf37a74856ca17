use criterion::{black_box, criterion_group, criterion_main, Criterion};

use diaop_core::basis::BasisSpec;
use diaop_core::operator::{derive_diagonal, DiagonalSpec};
use diaop_core::sturm::{count_real_roots, square_free_part};
use diaop_core::transform::{binomial_transform, inverse_binomial_transform};
use diaop_core::{Polynomial, Rational};

fn derivation(c: &mut Criterion) {
    c.bench_function("derive hermite n=16", |b| {
        let spec = DiagonalSpec::new(BasisSpec::Hermite, "poly:0,1".parse().unwrap(), 16);
        b.iter(|| derive_diagonal(black_box(&spec)).unwrap())
    });
    c.bench_function("derive legendre n^2+n order 12", |b| {
        let spec = DiagonalSpec::new(BasisSpec::Legendre, "poly:0,1,1".parse().unwrap(), 12);
        b.iter(|| derive_diagonal(black_box(&spec)).unwrap())
    });
}

fn root_counting(c: &mut Criterion) {
    // product of 16 distinct rational linear factors
    let p = (1..=16)
        .map(|i| Rational::new(i - 8, 2))
        .fold(Polynomial::one(), |acc, r| {
            &acc * &Polynomial::linear_factor(&r)
        });
    c.bench_function("sturm count, degree 16 product", |b| {
        b.iter(|| {
            let sf = square_free_part(black_box(&p)).unwrap();
            count_real_roots(&sf).unwrap()
        })
    });
}

fn composition(c: &mut Criterion) {
    let w = derive_diagonal(&DiagonalSpec::new(
        BasisSpec::Hermite,
        "poly:0,1".parse().unwrap(),
        8,
    ))
    .unwrap();
    c.bench_function("compose order-8 with itself", |b| {
        b.iter(|| black_box(&w).compose(black_box(&w)))
    });
}

fn transforms(c: &mut Criterion) {
    let a: Vec<Rational> = (0..48).map(|n| Rational::new(n * n - 7, n + 1)).collect();
    c.bench_function("binomial transform round trip, length 48", |b| {
        b.iter(|| inverse_binomial_transform(&binomial_transform(black_box(&a))))
    });
}

criterion_group!(benches, derivation, root_counting, composition, transforms);
criterion_main!(benches);
