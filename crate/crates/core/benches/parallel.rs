use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use lieob::cohomology::{ce_differential_with, LieModule};
use lieob::maps::derivation_space_with;
use lieob::registry;
use lieob::sampling::{AutomorphismSampler, Family};
use lieob::obstruction::split_check;
use lieob::{Execution, LieAlgebra};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn big_sum() -> LieAlgebra {
    let sl2 = registry::sl2();
    let h3 = registry::heisenberg3();
    let aff = registry::aff1();
    sl2.direct_sum(&h3).unwrap().direct_sum(&aff).unwrap().direct_sum(&sl2).unwrap()
}

fn jacobi(c: &mut Criterion) {
    let g = big_sum();
    let mut group = c.benchmark_group("verify_jacobi");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, g.dim()), |b| {
            b.iter(|| black_box(g.verify_jacobi_with(exec)))
        });
    }
    group.finish();
}

fn derivations(c: &mut Criterion) {
    let g = registry::sl2().direct_sum(&registry::heisenberg3()).unwrap();
    let mut group = c.benchmark_group("derivation_space");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, g.dim()), |b| {
            b.iter(|| black_box(derivation_space_with(&g, exec)))
        });
    }
    group.finish();
}

fn differential(c: &mut Criterion) {
    let g = registry::sl2().direct_sum(&registry::sl2()).unwrap();
    let module = LieModule::adjoint(g.clone());
    let mut group = c.benchmark_group("ce_differential_adjoint");
    for k in [1, 3] {
        for (name, exec) in MODES {
            group.bench_function(BenchmarkId::new(name, k), |b| {
                b.iter(|| black_box(ce_differential_with(&module, k, exec).unwrap()))
            });
        }
    }
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let g = registry::sum_center_sl2();
    let split = split_check(&g).unwrap().split().cloned();
    let sampler = AutomorphismSampler::new(g, split, Family::CenterSl2).unwrap();
    let mut group = c.benchmark_group("automorphism_samples");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 64), |b| {
            b.iter(|| black_box(sampler.samples(7, 64, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, jacobi, derivations, differential, sampling);
criterion_main!(benches);
