use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tymod_bench::{case, CASES};
use tymod_core::abelian::{enumerate_subgroups, DEFAULT_BUDGET};
use tymod_core::{classify, ClassifyOptions};

fn subgroups(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_subgroups");
    for line in CASES {
        let ty = case(line);
        g.bench_with_input(BenchmarkId::from_parameter(ty.group()), &ty, |b, ty| {
            b.iter(|| enumerate_subgroups(black_box(ty.group()), DEFAULT_BUDGET).unwrap())
        });
    }
    g.finish();
}

fn classify_cases(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for line in CASES {
        let ty = case(line);
        for workers in [1, 0] {
            let opts = ClassifyOptions::default().with_workers(workers);
            let id = BenchmarkId::new(if workers == 1 { "1 worker" } else { "all cores" }, ty.group());
            g.bench_with_input(id, &ty, |b, ty| b.iter(|| classify(black_box(ty), &opts).unwrap()));
        }
    }
    g.finish();
}

criterion_group!(benches, subgroups, classify_cases);
criterion_main!(benches);
