use criterion::{criterion_group, criterion_main, Criterion};

use gchar::catalog::CORPUS;
use gchar::corpus::verify_corpus;
use gchar::par::Exec;

fn corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_corpus");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| verify_corpus(CORPUS, Exec::Sequential, 1, None))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| verify_corpus(CORPUS, Exec::Parallel { jobs: 0 }, 1, None))
    });
    group.finish();
}

criterion_group!(benches, corpus);
criterion_main!(benches);
