use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

use truncnorm::mvn_gibbs::{conditional_moments, ChainConfig, ConvexRegion, MvnSpec};
use truncnorm::parallel::{empirical_acceptance, run_chains, sample_univariate, Execution};
use truncnorm::univariate::{Sampler, SamplerMethod, UnivariateTruncationSpec};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn univariate(c: &mut Criterion) {
    let n = 200_000;
    let mut group = c.benchmark_group("univariate");
    group.throughput(Throughput::Elements(n as u64));
    group.sample_size(20);
    for (label, l, u) in [("tail-5", 5.0, f64::INFINITY), ("two-sided-1-1.5", 1.0, 1.5)] {
        let spec = UnivariateTruncationSpec::new(0.0, 1.0, l, u).unwrap();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(label, mode), &exec, |b, &exec| {
                b.iter(|| sample_univariate(&spec, &Sampler::default(), n, 1, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn methods(c: &mut Criterion) {
    let spec = UnivariateTruncationSpec::new(0.0, 1.0, 1.0, f64::INFINITY).unwrap();
    let mut group = c.benchmark_group("one-sided-a1");
    group.throughput(Throughput::Elements(100_000));
    group.sample_size(20);
    for method in [SamplerMethod::RepeatedNormal, SamplerMethod::Inversion, SamplerMethod::ExponentialAR] {
        group.bench_function(method.name(), |b| {
            b.iter(|| {
                sample_univariate(&spec, &Sampler::new(method), 100_000, 2, Execution::Sequential)
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn acceptance(c: &mut Criterion) {
    let mut group = c.benchmark_group("acceptance-1e6");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| {
            b.iter(|| {
                empirical_acceptance(1_000_000, 3, exec, |rng| {
                    Sampler::new(SamplerMethod::ExponentialAR).one_sided(black_box(0.5), rng)
                })
                .unwrap()
            })
        });
    }
    group.finish();
}

fn gibbs(c: &mut Criterion) {
    let spec = MvnSpec::bivariate(0.5).unwrap();
    let moments = conditional_moments(&spec).unwrap();
    let region = ConvexRegion::ball(vec![0.0, 0.0], 2.0).unwrap();
    let configs: Vec<_> = (0..8)
        .map(|k| ChainConfig::new(vec![0.0, 0.0], 20_000).seed(k))
        .collect();
    let mut group = c.benchmark_group("gibbs-8-chains");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| {
            b.iter(|| run_chains(&moments, &region, &configs, &Sampler::default(), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, univariate, methods, acceptance, gibbs);
criterion_main!(benches);
