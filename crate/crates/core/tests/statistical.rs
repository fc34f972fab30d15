//! Sampler output checked against closed-form oracles.

use truncnorm::diagnostics::{ks_test, sorted, truncated_cdf, truncated_moments, AcceptanceStats};
use truncnorm::numerics::{draw_standard_normal, RandomStream, SQRT_2PI};
use truncnorm::parallel::{empirical_acceptance, sample_univariate, Execution};
use truncnorm::univariate::{
    acceptance_for_spec, Sampler, SamplerMethod, UnivariateTruncationSpec,
};

const INF: f64 = f64::INFINITY;

fn spec(l: f64, u: f64) -> UnivariateTruncationSpec {
    UnivariateTruncationSpec::new(0.0, 1.0, l, u).unwrap()
}

fn values(spec: &UnivariateTruncationSpec, method: SamplerMethod, n: usize, seed: u64) -> Vec<f64> {
    sample_univariate(spec, &Sampler::new(method), n, seed, Execution::default())
        .unwrap()
        .into_iter()
        .map(|d| d.value)
        .collect()
}

fn ks_p(spec: &UnivariateTruncationSpec, xs: &[f64]) -> f64 {
    ks_test(&sorted(xs), |x| truncated_cdf(spec, x).unwrap().get())
        .unwrap()
        .p_value
        .get()
}

#[test]
fn every_method_matches_the_cdf() {
    use SamplerMethod::*;
    let cases: &[(f64, f64, &[SamplerMethod])] = &[
        (-1.0, INF, &[RepeatedNormal, Inversion, ExponentialAR, Auto]),
        (0.0, INF, &[RepeatedNormal, Inversion, ExponentialAR, Auto]),
        (2.0, INF, &[Inversion, ExponentialAR, Auto]),
        (5.0, INF, &[Inversion, ExponentialAR, Auto]),
        (-INF, -3.0, &[Inversion, ExponentialAR, Auto]),
        (1.0, 1.5, &[UniformAR, OneSidedThenReject, Inversion, Auto]),
        (-0.5, 0.5, &[RepeatedNormal, UniformAR, Inversion, Auto]),
        (0.0, 2.0, &[UniformAR, OneSidedThenReject, Auto]),
        (-3.0, -2.0, &[UniformAR, OneSidedThenReject, Inversion, Auto]),
        (4.0, 9.0, &[UniformAR, OneSidedThenReject, Inversion, Auto]),
    ];
    for (k, &(l, u, methods)) in cases.iter().enumerate() {
        let s = spec(l, u);
        for (m, &method) in methods.iter().enumerate() {
            let xs = values(&s, method, 100_000, 1_000 + (k * 10 + m) as u64);
            assert!(xs.iter().all(|&x| s.contains(x)), "{method} on [{l}, {u}]");
            let p = ks_p(&s, &xs);
            assert!(p > 0.001, "{method} on [{l}, {u}]: p = {p}");
        }
    }
}

#[test]
fn sample_means_match_moments() {
    for (mu, sigma, l, u) in [(1.0, 2.0, 3.0, INF), (0.0, 1.0, 1.0, 2.0), (-2.0, 0.5, -INF, -2.5)] {
        let s = UnivariateTruncationSpec::new(mu, sigma, l, u).unwrap();
        let (m, v) = truncated_moments(&s).unwrap();
        let xs = values(&s, SamplerMethod::Auto, 200_000, 5);
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
        assert!((mean - m).abs() < 5.0 * (v / n).sqrt(), "mean {mean} vs {m}");
        assert!((var / v - 1.0).abs() < 0.02, "var {var} vs {v}");
    }
}

fn rate(a: f64, b: f64, method: SamplerMethod, proposals: u64, seed: u64) -> AcceptanceStats {
    let s = spec(a, b);
    empirical_acceptance(proposals, seed, Execution::default(), |rng| {
        Sampler::new(method).truncated(&s, rng)
    })
    .unwrap()
}

#[test]
fn exponential_acceptance_at_zero() {
    let stats = rate(0.0, INF, SamplerMethod::ExponentialAR, 1_000_000, 11);
    assert!((stats.rate().get() - 0.760).abs() < 0.005);
}

#[test]
fn exponential_acceptance_at_one() {
    let stats = rate(1.0, INF, SamplerMethod::ExponentialAR, 1_000_000, 12);
    assert!((stats.rate().get() - 0.876).abs() <= 0.004);
}

#[test]
fn uniform_acceptance_on_symmetric_interval() {
    let stats = rate(-1.0, 1.0, SamplerMethod::UniformAR, 1_000_000, 13);
    let analytic = SQRT_2PI * (0.841_344_746_068_542_9 - 0.158_655_253_931_457_05) / 2.0;
    assert!((analytic - 0.8556).abs() < 1e-4);
    assert!((stats.rate().get() - analytic).abs() < 0.005);
}

#[test]
fn empirical_rates_track_analytic_rates() {
    use SamplerMethod::*;
    for (a, b, method) in [
        (0.5, 1.0, UniformAR),
        (0.0, 2.0, OneSidedThenReject),
        (1.5, 3.5, OneSidedThenReject),
        (-1.0, 2.0, RepeatedNormal),
        (2.0, INF, RepeatedNormal),
    ] {
        let stats = rate(a, b, method, 400_000, 14);
        let p = acceptance_for_spec(&spec(a, b), method).unwrap().unwrap().get();
        let se = (p * (1.0 - p) / stats.proposals as f64).sqrt();
        assert!(
            (stats.rate().get() - p).abs() < 4.0 * se,
            "{method} on [{a}, {b}]: {} vs {p}",
            stats.rate()
        );
    }
}

#[test]
fn ks_rejects_gross_mismatch() {
    let mut rng = RandomStream::new(3);
    let xs: Vec<f64> = (0..100_000).map(|_| draw_standard_normal(&mut rng)).collect();
    assert!(ks_p(&spec(1.0, 2.0), &xs) < 1e-6);
}

#[test]
fn ks_false_alarm_rate_is_small() {
    let s = spec(0.5, 2.5);
    let failures = (0..100)
        .filter(|&rep| ks_p(&s, &values(&s, SamplerMethod::Auto, 100_000, 50_000 + rep)) <= 0.001)
        .count();
    assert!(failures <= 1, "{failures} false alarms");
}

#[test]
fn ks_is_invariant_under_monotone_maps() {
    let s = spec(-1.0, 2.0);
    let xs = sorted(&values(&s, SamplerMethod::Auto, 5_000, 8));
    let base = ks_test(&xs, |x| truncated_cdf(&s, x).unwrap().get()).unwrap();
    let mapped: Vec<f64> = xs.iter().map(|x| x.exp()).collect();
    let r = ks_test(&mapped, |y| truncated_cdf(&s, y.ln()).unwrap().get()).unwrap();
    assert!((r.statistic - base.statistic).abs() < 1e-12);
}
