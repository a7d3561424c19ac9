//! Parallel vs sequential comparison for the element-wise field kernels and
//! the sweep-style batch executor.
//!
//! Run with: cargo bench -p fatiguefield

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fatiguefield::parallel::{map_indexed_par, map_indexed_seq};
use fatiguefield::sweep::{run_batch_par, run_batch_seq, RunSetup};
use fatiguefield::{
    initial_state, stable_dt, Grid1D, LoadProgram, LoadShape, MaterialParams, StepControls,
};

/// The power-density inner loop shape: damage factor times strain-rate power.
fn power_kernel(n: usize, parallel: bool) -> Vec<f64> {
    let phi: Vec<f64> = (0..n).map(|i| 0.5 + 0.4 * ((i as f64) * 0.01).sin()).collect();
    let ux: Vec<f64> = (0..n).map(|i| ((i as f64) * 0.003).cos()).collect();
    let vx: Vec<f64> = (0..n).map(|i| ((i as f64) * 0.007).sin()).collect();
    let f = |i: usize| (1.0 - phi[i].clamp(0.0, 1.0)) * 2.0 * ux[i] * vx[i];
    if parallel {
        map_indexed_par(n, f)
    } else {
        map_indexed_seq(n, f)
    }
}

fn bench_power_density(c: &mut Criterion) {
    let mut group = c.benchmark_group("power_density");
    for &n in &[1 << 14, 1 << 17, 1 << 20] {
        group.bench_with_input(BenchmarkId::new("seq", n), &n, |b, &n| {
            b.iter(|| power_kernel(n, false))
        });
        group.bench_with_input(BenchmarkId::new("par", n), &n, |b, &n| {
            b.iter(|| power_kernel(n, true))
        });
    }
    group.finish();
}

fn sweep_setups(count: usize) -> Vec<RunSetup> {
    (0..count)
        .map(|k| {
            let grid = Grid1D::new(1.0, 96).unwrap();
            let rho = 1.0 + k as f64;
            let params = MaterialParams::uniform(&grid, rho, 30.0, 0.5, 1.0);
            let n = grid.n_nodes();
            let initial =
                initial_state(&grid, vec![0.0; n], vec![0.0; n], vec![0.0; n], None).unwrap();
            let dt = stable_dt(&params, &grid) * 0.5;
            let mut controls = StepControls::new(dt, 2.0);
            controls.sample_every = 200;
            RunSetup {
                params,
                grid,
                load: LoadProgram::new(0.3, 5.0, LoadShape::HalfSine),
                controls,
                initial,
                thermal: false,
            }
        })
        .collect()
}

fn bench_sweep_batch(c: &mut Criterion) {
    let setups = sweep_setups(8);
    let mut group = c.benchmark_group("sweep_batch");
    group.sample_size(10);
    group.bench_function("seq", |b| b.iter(|| run_batch_seq(&setups)));
    group.bench_function("par", |b| b.iter(|| run_batch_par(&setups)));
    group.finish();
}

criterion_group!(benches, bench_power_density, bench_sweep_batch);
criterion_main!(benches);
