use crate::error::{Error, Result};
use crate::numerics::{draw_standard_normal, RandomStream};
use crate::univariate::{Sampler, UnivariateTruncationSpec, MIN_WIDTH};

use super::moments::{conditional_moments, ConditionalMoments, MvnSpec};
use super::region::{ConvexRegion, Slice};

pub const DEFAULT_BURN_IN: usize = 1_000;

/// Run-length control for a Gibbs chain.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainConfig {
    pub initial: Vec<f64>,
    pub n_keep: usize,
    pub burn_in: usize,
    pub thin: usize,
    pub seed: u64,
    /// Stream under `seed`; distinct streams give independent chains.
    pub stream: u64,
}

impl ChainConfig {
    pub fn new(initial: Vec<f64>, n_keep: usize) -> Self {
        Self {
            initial,
            n_keep,
            burn_in: DEFAULT_BURN_IN,
            thin: 1,
            seed: 0,
            stream: 0,
        }
    }

    pub fn burn_in(mut self, burn_in: usize) -> Self {
        self.burn_in = burn_in;
        self
    }

    pub fn thin(mut self, thin: usize) -> Self {
        self.thin = thin;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn stream(mut self, stream: u64) -> Self {
        self.stream = stream;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n_keep == 0 {
            return Err(Error::domain("n_keep must be at least 1"));
        }
        if self.thin == 0 {
            return Err(Error::domain("thin must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainOutput {
    pub draws: Vec<Vec<f64>>,
    pub total_sweeps: u64,
    /// Accept-reject proposals spent by the coordinate updates.
    pub univariate_trials: u64,
}

impl ChainOutput {
    /// Series of coordinate `j` across kept draws.
    pub fn coordinate(&self, j: usize) -> Vec<f64> {
        self.draws.iter().map(|d| d[j]).collect()
    }
}

/// One systematic-scan sweep: coordinates `0..p` in ascending order, each drawn
/// from its full conditional truncated to the current slice.
///
/// Slices narrower than [`MIN_WIDTH`] (tangent points) leave the coordinate
/// unchanged. Returns the proposals spent.
pub fn gibbs_sweep(
    state: &mut [f64],
    moments: &ConditionalMoments,
    region: &ConvexRegion,
    sampler: &Sampler,
    rng: &mut RandomStream,
) -> Result<u64> {
    let mut trials = 0;
    for i in 0..state.len() {
        let (lower, upper) = match region.slice_at(state, i) {
            Slice::Empty => return Err(Error::InconsistentState { index: i }),
            Slice::Interval { lower, upper } => (lower, upper),
        };
        let sd = moments.cond_sd(i);
        let width = upper - lower;
        if width < MIN_WIDTH || width / sd < MIN_WIDTH {
            continue;
        }
        let mean = moments.conditional_mean(i, state);
        let r = if lower == f64::NEG_INFINITY && upper == f64::INFINITY {
            crate::univariate::DrawResult {
                value: mean + sd * draw_standard_normal(rng),
                trials: 1,
            }
        } else {
            let spec = UnivariateTruncationSpec::new(mean, sd, lower, upper)?;
            sampler.truncated(&spec, rng)?
        };
        state[i] = r.value;
        trials += r.trials;
    }
    Ok(trials)
}

fn check_start(p: usize, region: &ConvexRegion, initial: &[f64]) -> Result<()> {
    if initial.len() != p {
        return Err(Error::Dimension {
            expected: p,
            got: initial.len(),
        });
    }
    region.check_dimension(p)?;
    if !region.contains(initial) {
        return Err(Error::OutsideRegion);
    }
    Ok(())
}

/// Gibbs chain for `N(mu, Sigma)` restricted to `region`.
pub fn run_chain(spec: &MvnSpec, region: &ConvexRegion, config: &ChainConfig) -> Result<ChainOutput> {
    let moments = conditional_moments(spec)?;
    run_chain_with(&moments, region, config, &Sampler::default())
}

/// [`run_chain`] with precomputed moments and an explicit coordinate sampler.
pub fn run_chain_with(
    moments: &ConditionalMoments,
    region: &ConvexRegion,
    config: &ChainConfig,
    sampler: &Sampler,
) -> Result<ChainOutput> {
    config.validate()?;
    check_start(moments.dim(), region, &config.initial)?;

    let mut rng = RandomStream::derive(config.seed, config.stream);
    let mut state = config.initial.clone();
    let mut trials = 0;
    for _ in 0..config.burn_in {
        trials += gibbs_sweep(&mut state, moments, region, sampler, &mut rng)?;
    }
    let mut draws = Vec::with_capacity(config.n_keep);
    for _ in 0..config.n_keep {
        for _ in 0..config.thin {
            trials += gibbs_sweep(&mut state, moments, region, sampler, &mut rng)?;
        }
        if !region.contains(&state) {
            return Err(Error::OutsideRegion);
        }
        draws.push(state.clone());
    }
    Ok(ChainOutput {
        draws,
        total_sweeps: (config.burn_in + config.n_keep * config.thin) as u64,
        univariate_trials: trials,
    })
}

/// An exact draw from the truncated multivariate normal.
#[derive(Clone, Debug, PartialEq)]
pub struct MvnDraw {
    pub value: Vec<f64>,
    pub trials: u64,
}

/// Draws `N(mu, Sigma)` until the point falls in `region`; exact but slow when
/// the region carries little mass.
pub fn mvn_rejection(
    spec: &MvnSpec,
    region: &ConvexRegion,
    rng: &mut RandomStream,
    cap: u64,
) -> Result<MvnDraw> {
    let p = spec.dim();
    region.check_dimension(p)?;
    if cap == 0 {
        return Err(Error::domain("rejection cap must be at least 1"));
    }
    let l = spec.cholesky_factor();
    let mut z = vec![0.0; p];
    let mut x = vec![0.0; p];
    for trials in 1..=cap {
        z.iter_mut().for_each(|zi| *zi = draw_standard_normal(rng));
        for r in 0..p {
            let mut acc = spec.mean()[r];
            for c in 0..=r {
                acc += l[(r, c)] * z[c];
            }
            x[r] = acc;
        }
        if region.contains(&x) {
            return Ok(MvnDraw { value: x, trials });
        }
    }
    Err(Error::LowAcceptance { trials: cap })
}

/// Running mean of a scalar functional, exposing partial sums.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RunningAverage {
    sum: f64,
    count: u64,
}

impl RunningAverage {
    pub fn push(&mut self, x: f64) {
        self.sum += x;
        self.count += 1;
    }

    pub fn sum(&self) -> f64 {
        self.sum
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> Option<f64> {
        (self.count > 0).then(|| self.sum / self.count as f64)
    }
}

/// `(1/N) sum f(theta_n)` over the draws.
pub fn ergodic_average<F>(draws: &[Vec<f64>], f: F) -> Result<f64>
where
    F: Fn(&[f64]) -> f64,
{
    if draws.is_empty() {
        return Err(Error::domain("ergodic average of an empty chain"));
    }
    let mut avg = RunningAverage::default();
    draws.iter().for_each(|d| avg.push(f(d)));
    Ok(avg.sum() / avg.count() as f64)
}

/// Running means after each draw; the last entry equals [`ergodic_average`].
pub fn running_averages<F>(draws: &[Vec<f64>], f: F) -> Vec<f64>
where
    F: Fn(&[f64]) -> f64,
{
    let mut avg = RunningAverage::default();
    draws
        .iter()
        .map(|d| {
            avg.push(f(d));
            avg.sum() / avg.count() as f64
        })
        .collect()
}
