//! Representative sweeps on a one-thread pool versus the default pool.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ptmpow::bm::{self, HPolyTable};
use ptmpow::tm;

type Sweep = (&'static str, fn());

const SWEEPS: &[Sweep] = &[
    ("t3-valuation-2^14", || {
        assert!(tm::check_v2_t3(1 << 14).unwrap().ok())
    }),
    ("t2-symmetry-10^5", || {
        assert!(tm::check_symmetry(100_000).ok())
    }),
    ("b1-churchhouse-2^16", || {
        assert!(bm::check_churchhouse(1 << 16).ok())
    }),
    ("b2-valuation-table-2^13", || {
        assert!(
            bm::check_b2_valuation_table(&mut HPolyTable::new(), 1 << 13)
                .unwrap()
                .ok()
        )
    }),
];

fn pools(c: &mut Criterion) {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let default = rayon::ThreadPoolBuilder::new().build().unwrap();
    let threads = default.current_num_threads();
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for &(name, sweep) in SWEEPS {
        group.bench_function(BenchmarkId::new(name, "1-thread"), |b| {
            b.iter(|| single.install(sweep))
        });
        group.bench_function(
            BenchmarkId::new(name, format!("default-pool-{threads}")),
            |b| b.iter(|| default.install(sweep)),
        );
    }
    group.finish();
}

criterion_group!(benches, pools);
criterion_main!(benches);
