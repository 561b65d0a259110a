use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use poisson::numerics::{integrate_decaying, sum_alternating, sum_series};
use poisson::special;
use poisson::transforms::{abel_integral, abel_ladder, builtin, theorem1_sides, theorem2_sides, ABEL_LADDER};
use poisson::SumOptions;

fn series(c: &mut Criterion) {
    let opts = SumOptions::default();
    c.bench_function("sum_series k/sinh(pi k)", |b| {
        b.iter(|| sum_series(1, |k| k as f64 / (PI * k as f64).sinh(), black_box(&opts)))
    });
    c.bench_function("sum_alternating 1/k^2", |b| {
        b.iter(|| sum_alternating(1, |k| 1.0 / (k as f64).powi(2), black_box(&opts)))
    });
    c.bench_function("integrate_decaying cos(2t) sech(pi t)", |b| {
        b.iter(|| integrate_decaying(|t| (2.0 * t).cos() / (PI * t).cosh(), PI, black_box(&opts)))
    });
}

fn special_functions(c: &mut Criterion) {
    c.bench_function("elliptic_from_modulus", |b| b.iter(|| special::elliptic_from_modulus(black_box(FRAC_1_SQRT_2))));
    c.bench_function("modulus_from_ratio", |b| b.iter(|| special::modulus_from_ratio(black_box(2.0))));
    c.bench_function("li3(-0.5)", |b| b.iter(|| special::li3(black_box(-0.5))));
    c.bench_function("lerch_phi(-e^2, 2, 1/2)", |b| b.iter(|| special::lerch_phi(black_box(-(2f64).exp()), 2, 0.5)));
    c.bench_function("li_negative_order(9, -e^pi)", |b| {
        b.iter(|| special::li_negative_order(9, black_box(-PI.exp())))
    });
}

fn transforms(c: &mut Criterion) {
    let opts = SumOptions::default();
    let one = builtin("one").unwrap();
    let t5 = builtin("t5").unwrap();
    let small = builtin("cos:0.004").unwrap();
    c.bench_function("theorem1 one a=1", |b| b.iter(|| theorem1_sides(&one, black_box(1.0), &opts)));
    c.bench_function("theorem2 t5 a=1", |b| b.iter(|| theorem2_sides(&t5, black_box(1.0), &opts)));
    c.bench_function("abel ladder cos:0.004", |b| b.iter(|| abel_ladder(&small, black_box(&ABEL_LADDER))));
    c.bench_function("abel integral t5", |b| b.iter(|| abel_integral(black_box(&t5))));
}

criterion_group!(benches, series, special_functions, transforms);
criterion_main!(benches);
