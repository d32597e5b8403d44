use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rspin_bench::{even_vector, germ, plane_pair, GERMS};
use rspin_core::assemblage::{build_standard_assemblage, certify, monodromy_report};
use rspin_core::braidcalc::{main_lemma_plan, psi};
use rspin_core::curveconf::CurveSystem;
use rspin_core::milnor::milnor_number;
use rspin_core::winding::enumerate_forms;

fn milnor(c: &mut Criterion) {
    let mut group = c.benchmark_group("milnor");
    for (name, src) in GERMS {
        let f = germ(src);
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| milnor_number(black_box(f)).unwrap())
        });
    }
    group.finish();
}

fn core_configuration(c: &mut Criterion) {
    let core = CurveSystem::standard_core();
    c.bench_function("core invariants", |b| {
        b.iter(|| black_box(&core).neighborhood_invariants().unwrap())
    });
    c.bench_function("core E-arboreal", |b| b.iter(|| black_box(&core).is_E_arboreal().unwrap()));
}

fn assemblage(c: &mut Criterion) {
    let mut group = c.benchmark_group("standard assemblage");
    for (gc, gd, d) in [(10, 0, 6), (28, 1, 27)] {
        let p = build_standard_assemblage(gc, gd, d).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{gc}-{gd}-{d}")),
            &p,
            |b, p| b.iter(|| certify(black_box(&p.assemblage), &p.initial).unwrap()),
        );
    }
    group.finish();

    let (cc, dd, ledger) = plane_pair(6, 1);
    c.bench_function("monodromy report P2 (6,1)", |b| {
        b.iter(|| monodromy_report(black_box(&cc), black_box(&dd), &ledger).unwrap())
    });
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("arf census");
    for g in 2..=5u32 {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| {
            b.iter(|| enumerate_forms(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn braids(c: &mut Criterion) {
    let k = even_vector(10);
    c.bench_function("main lemma plan d=10", |b| {
        b.iter(|| {
            let plan = main_lemma_plan(black_box(&k)).unwrap();
            psi(&plan.word(), k.len()).unwrap()
        })
    });
}

criterion_group!(benches, milnor, core_configuration, assemblage, census, braids);
criterion_main!(benches);
