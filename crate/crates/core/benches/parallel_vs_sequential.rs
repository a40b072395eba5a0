use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dmc_capacity::ba::{ba_capacity_batch, capacity_oracle_grid_with};
use dmc_capacity::channel::make_wht_sparse_channel;
use dmc_capacity::distinguisher::estimate_error_rates_with;
use dmc_capacity::{Execution, SolverConfig};
use std::hint::black_box;

fn strategies() -> Vec<(&'static str, Execution)> {
    vec![
        ("sequential", Execution::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", Execution::Parallel),
    ]
}

fn bench_distinguisher(c: &mut Criterion) {
    let mut group = c.benchmark_group("distinguisher n=8 k=1 d=0.2");
    group.sample_size(10);
    let channel = make_wht_sparse_channel(8, 1, 0.2, None).unwrap();
    for (name, exec) in strategies() {
        group.bench_with_input(BenchmarkId::new(name, "500 samples x 500 trials"), &exec, |b, &exec| {
            b.iter(|| estimate_error_rates_with(black_box(&channel), 500, 500, 1, exec).unwrap())
        });
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("BA batch n=10 k=1,2,4");
    group.sample_size(10);
    let channels: Vec<_> = [1usize, 2, 4]
        .iter()
        .flat_map(|&k| (5..=20).map(move |i| make_wht_sparse_channel(10, k, i as f64 * 0.01, None).unwrap()))
        .collect();
    let config = SolverConfig::with_epsilon(1e-8);
    for (name, exec) in strategies() {
        group.bench_with_input(BenchmarkId::new(name, channels.len()), &exec, |b, &exec| {
            b.iter(|| ba_capacity_batch(black_box(&channels), &config, exec))
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("grid oracle M=256 step=1e-4");
    group.sample_size(10);
    let channel = make_wht_sparse_channel(8, 2, 0.3, None).unwrap();
    for (name, exec) in strategies() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| capacity_oracle_grid_with(black_box(&channel), 1e-4, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_distinguisher, bench_sweep, bench_oracle);
criterion_main!(benches);
