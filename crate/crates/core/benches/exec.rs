use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use g2rat_core::exec::Exec;
use g2rat_core::g2::{build_chevalley_algebra, build_weight_table, search_weyl_candidates};
use g2rat_core::quadform::{branch_two_instance, isotropic_vectors, search_branch_two_instance};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn jacobi(c: &mut Criterion) {
    let alg = build_chevalley_algebra(Exec::Sequential).unwrap();
    let mut g = c.benchmark_group("jacobi");
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(alg.jacobi_violation(exec))));
    }
    g.finish();
}

fn weyl_search(c: &mut Criterion) {
    let table = build_weight_table();
    let mut g = c.benchmark_group("weyl_search");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(search_weyl_candidates(&table, exec))));
    }
    g.finish();
}

fn isotropy(c: &mut Criterion) {
    let q = branch_two_instance().form();
    let mut g = c.benchmark_group("isotropic_vectors_h4");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(isotropic_vectors(&q, 4, exec))));
    }
    g.finish();
}

fn planted_search(c: &mut Criterion) {
    let inst = branch_two_instance();
    let mut g = c.benchmark_group("branch_two_search");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(search_branch_two_instance(&inst.diagonal, [-2, 0, 0, 1], 1, exec))));
    }
    g.finish();
}

criterion_group!(benches, jacobi, weyl_search, isotropy, planted_search);
criterion_main!(benches);
