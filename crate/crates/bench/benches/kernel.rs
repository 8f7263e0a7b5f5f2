use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stdbasis::buchberger::reduce_basis;
use stdbasis::{groebner, is_standard_basis, standard_basis, weak_normal_form};
use stdbasis_bench::{dense_row, example, pathology};

fn bench_closed_form_vs_mora(c: &mut Criterion) {
    let mut group = c.benchmark_group("standard_basis");
    for (p, n) in [(3, 6), (5, 4), (5, 5)] {
        let g = dense_row(p, n);
        let label = format!("p{p}_n{n}");
        group.bench_with_input(BenchmarkId::new("closed_form", &label), &g, |b, g| {
            b.iter(|| black_box(g.closed_form_basis()))
        });
        group.bench_with_input(BenchmarkId::new("mora", &label), &g, |b, g| {
            let gens = g.translated_generators();
            b.iter(|| standard_basis(black_box(&gens)).unwrap())
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let g = example();
    let closed = g.closed_form_basis();
    let gens = g.translated_generators();
    c.bench_function("is_standard_basis/example", |b| {
        b.iter(|| is_standard_basis(black_box(&closed), black_box(&gens)).unwrap())
    });
}

fn bench_weak_normal_form(c: &mut Criterion) {
    let (f, divs) = pathology();
    c.bench_function("weak_normal_form/pathology", |b| {
        b.iter(|| weak_normal_form(black_box(&f), black_box(&divs)).unwrap())
    });
    let g = dense_row(5, 5);
    let closed = g.closed_form_basis();
    let s = closed[0].s_polynomial(&closed[1]).unwrap();
    c.bench_function("weak_normal_form/dense_spoly", |b| {
        b.iter(|| weak_normal_form(black_box(&s), black_box(&closed)).unwrap())
    });
}

fn bench_groebner(c: &mut Criterion) {
    let g = example();
    let basis = g.lex_code_basis();
    c.bench_function("groebner/example_lex", |b| {
        b.iter(|| reduce_basis(&groebner(black_box(&basis)).unwrap()).unwrap())
    });
}

criterion_group!(
    kernel,
    bench_closed_form_vs_mora,
    bench_verify,
    bench_weak_normal_form,
    bench_groebner
);
criterion_main!(kernel);
