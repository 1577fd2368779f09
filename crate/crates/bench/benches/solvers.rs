use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rdclique::{solve, Algorithm, ColoringKind, OrderingKind, SolverConfig};
use rdclique_bench::solver_inputs;

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    for (name, g) in solver_inputs() {
        for algo in [Algorithm::Rdmc, Algorithm::Pbbmc] {
            for coloring in [ColoringKind::Greedy, ColoringKind::Recolor] {
                let cfg = SolverConfig::new(coloring, OrderingKind::McrInit);
                let id = BenchmarkId::new(format!("{algo}/{coloring}"), &name);
                group.bench_with_input(id, &g, |bench, g| bench.iter(|| solve(algo, g, &cfg).omega));
            }
        }
    }
    group.finish();
}

criterion_group!(benches, solvers);
criterion_main!(benches);
