use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use corekit::{
    cd_series_eq2, cd_series_oracle, count_tt1_distinct, enumerate_simultaneous_cores,
    sequence_table,
};

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for t in [3u64, 5, 8] {
        group.bench_with_input(BenchmarkId::new("eq2", t), &t, |b, &t| {
            b.iter(|| cd_series_eq2(black_box(t), 200).unwrap())
        });
    }
    group.bench_function("oracle/5", |b| {
        b.iter(|| cd_series_oracle(black_box(5), 30).unwrap())
    });
    group.finish();
}

fn simultaneous(c: &mut Criterion) {
    let mut group = c.benchmark_group("simultaneous_cores");
    for (t1, t2) in [(5u64, 6u64), (7, 8), (8, 9)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{t1},{t2}")),
            &(t1, t2),
            |b, &(t1, t2)| {
                b.iter(|| enumerate_simultaneous_cores(black_box(t1), t2, false).unwrap())
            },
        );
    }
    group.finish();
}

fn tt1(c: &mut Criterion) {
    c.bench_function("tt1/count_20", |b| {
        b.iter(|| count_tt1_distinct(black_box(20)).unwrap())
    });
    c.bench_function("tt1/sequence_table_90", |b| {
        b.iter(|| sequence_table(black_box(90)).unwrap())
    });
}

criterion_group!(benches, series, simultaneous, tt1);
criterion_main!(benches);
