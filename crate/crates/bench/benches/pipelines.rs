//! Benchmarks of the three user-facing pipelines on fixture quivers:
//! classification, localization, and AR quiver generation.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use coserial_core::arquiver::build_ar_quiver;
use coserial_core::classify::classification_report;
use coserial_core::field::Rat;
use coserial_core::fixtures;
use coserial_core::injectives::injective_truncation_indexed;
use coserial_core::localize::{localize_quiver, VertexSubset};
use coserial_core::pointed::PointedQuiver;
use coserial_core::quiver::VertexId;

fn bench_classify(c: &mut Criterion) {
    let crown = fixtures::crown(12);
    let window = fixtures::window_biinfinite(12);
    c.bench_function("classify crown(12)", |b| {
        b.iter(|| classification_report(black_box(&crown), true).unwrap())
    });
    c.bench_function("classify window(12)", |b| {
        b.iter(|| classification_report(black_box(&window), false).unwrap())
    });
}

fn bench_localize(c: &mut Criterion) {
    let crown = fixtures::crown(10);
    let w = VertexSubset::new([VertexId::new("1"), VertexId::new("6")]);
    c.bench_function("localize crown(10) two antipodes", |b| {
        b.iter(|| localize_quiver(black_box(&crown), &w).unwrap())
    });
    let line = fixtures::line(10);
    let ends = VertexSubset::new([VertexId::new("1"), VertexId::new("10")]);
    c.bench_function("localize line(10) endpoints", |b| {
        b.iter(|| localize_quiver(black_box(&line), &ends).unwrap())
    });
}

fn bench_arq(c: &mut Criterion) {
    let line = fixtures::line(6);
    c.bench_function("arq line(6) depth 6", |b| {
        b.iter(|| build_ar_quiver(black_box(&line), 6).unwrap())
    });
    let crown = fixtures::crown(3);
    c.bench_function("arq crown(3) depth 8", |b| {
        b.iter(|| build_ar_quiver(black_box(&crown), 8).unwrap())
    });
    let pq = PointedQuiver::from_valued(&crown).unwrap();
    c.bench_function("truncation crown(3) depth 12", |b| {
        b.iter(|| injective_truncation_indexed::<Rat>(black_box(&pq), 0, 12))
    });
}

criterion_group!(benches, bench_classify, bench_localize, bench_arq);
criterion_main!(benches);
