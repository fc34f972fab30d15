use nalgebra::{DMatrix, DVector};

use truncnorm::diagnostics::{ks_test, ks_two_sample, multi_chain_spread, sorted, truncated_cdf};
use truncnorm::mvn_gibbs::{
    conditional_moments, ergodic_average, mvn_rejection, run_chain, ChainConfig, ConvexRegion,
    MvnSpec,
};
use truncnorm::numerics::RandomStream;
use truncnorm::parallel::{rejection_draws, run_chains, Execution};
use truncnorm::univariate::{Sampler, UnivariateTruncationSpec};

fn ball(r: f64) -> ConvexRegion {
    ConvexRegion::ball(vec![0.0, 0.0], r).unwrap()
}

#[test]
fn ball_chain_stays_inside() {
    let spec = MvnSpec::bivariate(0.5).unwrap();
    let config = ChainConfig::new(vec![0.0, 0.0], 100_000).seed(1);
    let out = run_chain(&spec, &ball(2.0), &config).unwrap();
    assert_eq!(out.draws.len(), 100_000);
    assert!(out.draws.iter().all(|d| (d[0] * d[0] + d[1] * d[1]).sqrt() <= 2.0 + 1e-12));
}

#[test]
fn diagonal_box_chain_has_independent_marginals() {
    let sigma = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 4.0]));
    let spec = MvnSpec::new(vec![0.5, -1.0], sigma).unwrap();
    let region = ConvexRegion::boxed(vec![1.0, -10.0], vec![3.0, -2.0]).unwrap();
    let config = ChainConfig::new(vec![2.0, -3.0], 200_000).thin(5).seed(2);
    let out = run_chain(&spec, &region, &config).unwrap();
    let marginals = [
        UnivariateTruncationSpec::new(0.5, 1.0, 1.0, 3.0).unwrap(),
        UnivariateTruncationSpec::new(-1.0, 2.0, -10.0, -2.0).unwrap(),
    ];
    for (j, m) in marginals.iter().enumerate() {
        let r = ks_test(&sorted(&out.coordinate(j)), |x| truncated_cdf(m, x).unwrap().get()).unwrap();
        assert!(r.passes(0.001), "coordinate {j}: {r:?}");
    }
}

#[test]
fn gibbs_agrees_with_rejection() {
    let spec = MvnSpec::bivariate(0.5).unwrap();
    let region = ball(2.0);
    let config = ChainConfig::new(vec![0.0, 0.0], 10_000).thin(5).seed(3);
    let gibbs = run_chain(&spec, &region, &config).unwrap();
    let exact = rejection_draws(&spec, &region, 10_000, 4, 1_000, Execution::default()).unwrap();
    for j in 0..2 {
        let x = sorted(&gibbs.coordinate(j));
        let y = sorted(&exact.iter().map(|d| d.value[j]).collect::<Vec<_>>());
        let r = ks_two_sample(&x, &y).unwrap();
        assert!(r.passes(0.001), "coordinate {j}: {r:?}");
    }
}

#[test]
fn order_cone_chain_respects_ordering() {
    let sigma = DMatrix::from_fn(4, 4, |i, j| 0.3f64.powi((i as i32 - j as i32).abs()));
    let spec = MvnSpec::new(vec![1.0, 0.0, 0.5, -1.0], sigma).unwrap();
    let region = ConvexRegion::order_cone(Some(-3.0), Some(3.0)).unwrap();
    let config = ChainConfig::new(vec![-1.0, 0.0, 0.5, 1.0], 5_000).seed(5);
    let out = run_chain(&spec, &region, &config).unwrap();
    for d in &out.draws {
        assert!(d.windows(2).all(|w| w[0] <= w[1]));
        assert!(d[0] >= -3.0 && d[3] <= 3.0);
    }
}

#[test]
fn symmetric_ball_means_vanish() {
    let spec = MvnSpec::bivariate(0.0).unwrap();
    let config = ChainConfig::new(vec![0.0, 0.0], 1_000_000).seed(6);
    let out = run_chain(&spec, &ball(2.0), &config).unwrap();
    for j in 0..2 {
        assert!(ergodic_average(&out.draws, |t| t[j]).unwrap().abs() < 0.01);
    }
}

#[test]
fn rejection_acceptance_in_wide_ball() {
    let spec = MvnSpec::bivariate(0.0).unwrap();
    let mut rng = RandomStream::new(7);
    let mut trials = 0;
    let mut accepted = 0;
    while trials < 100_000 {
        trials += mvn_rejection(&spec, &ball(3.0), &mut rng, 1_000).unwrap().trials;
        accepted += 1;
    }
    let rate = accepted as f64 / trials as f64;
    // P(chi2_2 <= 9) = 1 - exp(-4.5)
    assert!((rate - (1.0 - (-4.5f64).exp())).abs() < 0.003);
}

#[test]
fn chains_from_different_starts_mix() {
    let spec = MvnSpec::bivariate(0.5).unwrap();
    let moments = conditional_moments(&spec).unwrap();
    let starts = [[1.9, 0.0], [-1.9, 0.0], [0.0, 1.9], [0.0, -1.9]];
    let configs: Vec<_> = starts
        .iter()
        .enumerate()
        .map(|(k, s)| ChainConfig::new(s.to_vec(), 10_000).seed(100 + k as u64))
        .collect();
    let region = ball(2.0);
    let seq = run_chains(&moments, &region, &configs, &Sampler::default(), Execution::Sequential)
        .unwrap();
    let par =
        run_chains(&moments, &region, &configs, &Sampler::default(), Execution::Parallel).unwrap();
    assert_eq!(seq, par);
    let series: Vec<Vec<f64>> = seq.iter().map(|c| c.coordinate(0)).collect();
    assert!(multi_chain_spread(&series).unwrap().ratio <= 0.05);
}
