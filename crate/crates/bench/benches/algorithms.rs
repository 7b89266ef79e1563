use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use uchord_core::chromatic::{max_clique, optimal_coloring};
use uchord_core::compose::{random_c_graph, two_subdivision, BasicMix, GenConfig};
use uchord_core::decomp::{build_proper_tree, recognize};
use uchord_core::graph::named::complete;

fn recognition(c: &mut Criterion) {
    let mut group = c.benchmark_group("recognize");
    group.sample_size(10);
    for n in [500usize, 2_000, 8_000] {
        let g = random_c_graph(1, n, &GenConfig::default()).graph;
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| recognize(black_box(g))));
    }
    group.finish();
}

fn trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_proper_tree");
    group.sample_size(10);
    let config = GenConfig { basics: BasicMix::TRIANGLE_FREE, ..GenConfig::default() };
    for n in [100usize, 400] {
        let g = random_c_graph(2, n, &config).graph;
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| build_proper_tree(black_box(g))));
    }
    group.finish();
}

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("optimal_coloring");
    group.sample_size(10);
    let config = GenConfig { basics: BasicMix::TRIANGLE_FREE, ..GenConfig::default() };
    for n in [100usize, 400] {
        let g = random_c_graph(3, n, &config).graph;
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| optimal_coloring(black_box(g))));
    }
    group.finish();
}

fn clique(c: &mut Criterion) {
    let g = two_subdivision(&complete(150));
    c.bench_function("max_clique/2-subdivision of K150", |b| b.iter(|| max_clique(black_box(&g))));
}

criterion_group!(benches, recognition, trees, coloring, clique);
criterion_main!(benches);
