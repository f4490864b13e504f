//! Throughput benchmarks for the hot kernels: BFS diameter, canonical
//! labeling, the graph6 codec, and small census cells.

use criterion::{criterion_group, criterion_main, Criterion};
use regdiam_core::canonical::canonical_form;
use regdiam_core::catalog;
use regdiam_core::codec::{decode_graph6, encode_graph6};
use regdiam_core::enumerate::{
    min_diameter_census, stochastic_low_diameter_search, CensusQuery, SearchQuery,
};
use std::hint::black_box;

fn bench_diameter(c: &mut Criterion) {
    let petersen = catalog::lookup(10, 3).unwrap().graph();
    let clebsch = catalog::lookup(16, 5).unwrap().graph();
    let big = catalog::lookup(20, 5).unwrap().graph();
    c.bench_function("diameter/petersen_n10", |b| {
        b.iter(|| black_box(&petersen).diameter())
    });
    c.bench_function("diameter/clebsch_n16", |b| b.iter(|| black_box(&clebsch).diameter()));
    c.bench_function("diameter/n20", |b| b.iter(|| black_box(&big).diameter()));
}

fn bench_canonical(c: &mut Criterion) {
    let petersen = catalog::lookup(10, 3).unwrap().graph();
    let heawood = catalog::lookup(14, 3).unwrap().graph();
    let clebsch = catalog::lookup(16, 5).unwrap().graph();
    c.bench_function("canonical/petersen_n10", |b| {
        b.iter(|| canonical_form(black_box(&petersen)))
    });
    c.bench_function("canonical/heawood_n14", |b| {
        b.iter(|| canonical_form(black_box(&heawood)))
    });
    c.bench_function("canonical/clebsch_n16", |b| {
        b.iter(|| canonical_form(black_box(&clebsch)))
    });
}

fn bench_codec(c: &mut Criterion) {
    let strings: Vec<&str> = catalog::entries().iter().map(|e| e.graph6).collect();
    c.bench_function("codec/decode_encode_26_entries", |b| {
        b.iter(|| {
            for s in &strings {
                let g = decode_graph6(black_box(s)).unwrap();
                black_box(encode_graph6(&g));
            }
        })
    });
}

fn bench_census(c: &mut Criterion) {
    c.bench_function("census/n8_k3", |b| {
        b.iter(|| min_diameter_census(&CensusQuery::new(8, 3)).unwrap())
    });
    let mut g = c.benchmark_group("census_slow");
    g.sample_size(10);
    g.bench_function("census/n10_k3", |b| {
        b.iter(|| min_diameter_census(&CensusQuery::new(10, 3)).unwrap())
    });
    g.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    g.bench_function("search/n16_k5_d2_100_attempts", |b| {
        b.iter(|| {
            stochastic_low_diameter_search(&SearchQuery {
                n: 16,
                k: 5,
                mode: None,
                target_d: 2,
                attempts: 100,
                distinct_goal: None,
                seed: 7,
            })
            .unwrap()
        })
    });
    g.finish();
}

criterion_group!(benches, bench_diameter, bench_canonical, bench_codec, bench_census, bench_search);
criterion_main!(benches);
