use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rdclique::coloring::{greedy_coloring, max_partite_subgraph, RecolorRange};
use rdclique::BitSet;
use rdclique_bench::coloring_input;
use std::hint::black_box;

fn bitset_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("bitset");
    for n in [128usize, 1024, 8192] {
        let a = BitSet::from_elements(n, (0..n).filter(|v| v % 3 != 0));
        let b = BitSet::from_elements(n, (0..n).filter(|v| v % 5 != 0));
        group.bench_with_input(BenchmarkId::new("assign_inter", n), &n, |bench, _| {
            let mut out = BitSet::new(n);
            bench.iter(|| {
                out.assign_inter(black_box(&a), black_box(&b));
                black_box(&out);
            })
        });
        group.bench_with_input(BenchmarkId::new("cardinality", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).cardinality())
        });
        group.bench_with_input(BenchmarkId::new("fsb_scan", n), &n, |bench, _| {
            bench.iter(|| {
                let mut count = 0;
                let mut cur = a.first();
                while let Some(v) = cur {
                    count += 1;
                    cur = a.fsb(v + 1);
                }
                count
            })
        });
    }
    group.finish();
}

fn colorings(c: &mut Criterion) {
    let g = coloring_input();
    let all = g.vertices();
    let mut group = c.benchmark_group("coloring");
    for k in [10usize, 30] {
        group.bench_with_input(BenchmarkId::new("greedy", k), &k, |bench, &k| {
            bench.iter(|| {
                let mut pool = all.clone();
                greedy_coloring(&g, &mut pool, k).len()
            })
        });
        group.bench_with_input(BenchmarkId::new("partite_recolor", k), &k, |bench, &k| {
            bench.iter(|| {
                let mut s = all.clone();
                let mut r = BitSet::new(g.n());
                max_partite_subgraph(&g, &mut s, &mut r, k, Some(RecolorRange::Exclusive)).len()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bitset_ops, colorings);
criterion_main!(benches);
