use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use hopf_core::algebra::{Bialgebra, HopfAlgebra};
use hopf_core::frame::{beta_u, frame_series};
use hopf_core::morphisms::pi;
use hopf_core::parse::{parse_forest, parse_word};
use hopf_core::tree_hopf::CkHopf;
use hopf_core::trees::{unlabeled_trees, Forest};
use hopf_core::words::shuffle;

fn ck(c: &mut Criterion) {
    let h = CkHopf::cuts();
    let poset = CkHopf::poset();
    let trees: Vec<Forest> = unlabeled_trees(7).into_iter().map(Forest::single).collect();
    c.bench_function("ck coproduct, 7 vertices", |b| {
        b.iter(|| {
            trees
                .iter()
                .map(|u| h.coproduct_basis(black_box(u)).len())
                .sum::<usize>()
        })
    });
    c.bench_function("ck poset coproduct, 7 vertices", |b| {
        b.iter(|| {
            trees
                .iter()
                .map(|u| poset.coproduct_basis(black_box(u)).len())
                .sum::<usize>()
        })
    });
    let small: Vec<Forest> = unlabeled_trees(5).into_iter().map(Forest::single).collect();
    c.bench_function("ck antipode, 5 vertices", |b| {
        b.iter(|| {
            small
                .iter()
                .map(|u| h.antipode_basis(black_box(u)).len())
                .sum::<usize>()
        })
    });
}

fn words(c: &mut Criterion) {
    let x = parse_word("f1.f2.f3.f1").unwrap();
    let y = parse_word("f2.f2.f1.f3").unwrap();
    c.bench_function("shuffle 4x4", |b| b.iter(|| shuffle(black_box(&x), black_box(&y))));
    let u = parse_forest("f1[f2[f3],f1] f2[f1]").unwrap();
    c.bench_function("pi on a 6-vertex forest", |b| b.iter(|| pi(black_box(&u)).unwrap()));
}

fn frame(c: &mut Criterion) {
    c.bench_function("frame series, weight 6", |b| b.iter(|| frame_series(black_box(6))));
    c.bench_function("beta_u, weight 4", |b| b.iter(|| beta_u(black_box(4))));
}

criterion_group!(benches, ck, words, frame);
criterion_main!(benches);
