//! Sequential vs parallel throughput of the search and verification cores.
//! Both arms run the same code: "sequential" inside a one-thread rayon pool,
//! "parallel" inside a default pool sized from the machine.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::prelude::*;

use cyclogauss::cyclotomy::{decompose, gauss_periods};
use cyclogauss::families::index2_search;
use cyclogauss::field::FieldSpec;
use cyclogauss::search::{analyze_unit, corollary_search, SearchLimits};
use cyclogauss::structures::verify_scheme;

fn pools() -> (rayon::ThreadPool, rayon::ThreadPool) {
    let seq = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let par = rayon::ThreadPoolBuilder::new().build().unwrap();
    (seq, par)
}

/// The sweep core: analyze every (p, f) work unit of a small parameter box.
fn bench_sweep_units(c: &mut Criterion) {
    let limits = SearchLimits {
        p_max: 20,
        q_max: 1 << 16,
        n_min: 3,
        n_max: 1001,
        require_divisibility: true,
    };
    let mut units: Vec<(u64, u32)> = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19] {
        let mut q = p;
        let mut f = 1u32;
        while q < limits.q_max {
            units.push((p, f));
            f += 1;
            q *= p;
        }
    }
    let work = |units: &[(u64, u32)]| -> usize {
        units
            .par_iter()
            .map(|&(p, f)| analyze_unit(p, f, &limits, false).unwrap().len())
            .sum()
    };
    let (seq, par) = pools();
    let mut g = c.benchmark_group("sweep_units_q16");
    g.sample_size(10);
    g.bench_function("sequential", |b| b.iter(|| seq.install(|| work(black_box(&units)))));
    g.bench_function("parallel", |b| b.iter(|| par.install(|| work(black_box(&units)))));
    g.finish();
}

fn bench_corollary(c: &mut Criterion) {
    let (seq, par) = pools();
    let mut g = c.benchmark_group("corollary_search_1500");
    g.bench_function("sequential", |b| {
        b.iter(|| seq.install(|| corollary_search(black_box(1500))))
    });
    g.bench_function("parallel", |b| {
        b.iter(|| par.install(|| corollary_search(black_box(1500))))
    });
    g.finish();
}

fn bench_index2(c: &mut Criterion) {
    let (seq, par) = pools();
    let mut g = c.benchmark_group("index2_search_6000");
    g.bench_function("sequential", |b| {
        b.iter(|| seq.install(|| index2_search(black_box(6000))))
    });
    g.bench_function("parallel", |b| {
        b.iter(|| par.install(|| index2_search(black_box(6000))))
    });
    g.finish();
}

/// Brute-force scheme verification parallelizes over base points.
fn bench_scheme_brute(c: &mut Criterion) {
    let spec = FieldSpec::new(2, 18).unwrap();
    let dec = decompose(&gauss_periods(2, 18, 219).unwrap()).unwrap();
    let (seq, par) = pools();
    let mut g = c.benchmark_group("verify_scheme_2_18_219");
    g.sample_size(20);
    g.bench_function("sequential", |b| {
        b.iter(|| seq.install(|| verify_scheme(&spec, 219, black_box(&dec.index_sets))))
    });
    g.bench_function("parallel", |b| {
        b.iter(|| par.install(|| verify_scheme(&spec, 219, black_box(&dec.index_sets))))
    });
    g.finish();
}

criterion_group!(
    benches,
    bench_sweep_units,
    bench_corollary,
    bench_index2,
    bench_scheme_brute
);
criterion_main!(benches);
