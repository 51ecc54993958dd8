//! Sequential vs data-parallel timings for the three heavy code paths:
//! Cayley construction, the refinement-based automorphism search, and the
//! brute-force oracle. Run with `cargo bench -p cayley-aut`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cayley_aut::autsearch::{
    automorphism_generators_with, brute_force_automorphism_list_with, DEFAULT_ORACLE_BOUND,
    DEFAULT_SEARCH_BOUND,
};
use cayley_aut::cayley::{build_cayley_with, mbs_generators, DEFAULT_BUILD_BOUND};
use cayley_aut::exec::ExecMode;

const MODES: [(&str, ExecMode); 2] = [
    ("seq", ExecMode::Sequential),
    ("par", ExecMode::Parallel),
];

fn bench_build(c: &mut Criterion) {
    let set = mbs_generators(6).unwrap();
    let mut g = c.benchmark_group("cayley_build_n6");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| build_cayley_with(6, &set, DEFAULT_BUILD_BOUND, mode).unwrap());
        });
    }
    g.finish();
}

fn bench_build_large(c: &mut Criterion) {
    let set = mbs_generators(7).unwrap();
    let mut g = c.benchmark_group("cayley_build_n7");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| build_cayley_with(7, &set, DEFAULT_BUILD_BOUND, mode).unwrap());
        });
    }
    g.finish();
}

fn bench_aut_search(c: &mut Criterion) {
    for n in [5usize, 6] {
        let set = mbs_generators(n).unwrap();
        let x = build_cayley_with(n, &set, DEFAULT_BUILD_BOUND, ExecMode::Sequential).unwrap();
        let mut g = c.benchmark_group(format!("aut_search_mbs{n}"));
        g.sample_size(10);
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
                b.iter(|| {
                    automorphism_generators_with(x.graph(), DEFAULT_SEARCH_BOUND, mode).unwrap()
                });
            });
        }
        g.finish();
    }
}

fn bench_oracle(c: &mut Criterion) {
    let set = mbs_generators(4).unwrap();
    let x = build_cayley_with(4, &set, DEFAULT_BUILD_BOUND, ExecMode::Sequential).unwrap();
    let mut g = c.benchmark_group("brute_oracle_mbs4");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                brute_force_automorphism_list_with(x.graph(), DEFAULT_ORACLE_BOUND, mode).unwrap()
            });
        });
    }
    g.finish();
}

criterion_group!(benches, bench_build, bench_build_large, bench_aut_search, bench_oracle);
criterion_main!(benches);
