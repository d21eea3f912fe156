use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use splithp::gen::{generate, GenKind, GenSpec};
use splithp::sweep::{par_map, seq_map};
use splithp::{solve, Graph};

fn corpus() -> Vec<Graph> {
    (0..64u64)
        .filter_map(|seed| generate(&GenSpec::new(GenKind::K14FreeD3, 14, 10, seed)).ok())
        .map(|g| g.graph)
        .collect()
}

fn bench_sweep(c: &mut Criterion) {
    let graphs = corpus();
    let mut group = c.benchmark_group("solve_corpus");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("sequential", graphs.len()), |b| {
        b.iter(|| seq_map(&graphs, |g| solve(g).map(|c| c.is_yes()).ok()))
    });
    group.bench_function(BenchmarkId::new("parallel", graphs.len()), |b| {
        b.iter(|| par_map(&graphs, |g| solve(g).map(|c| c.is_yes()).ok()))
    });
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
