//! Batch sampling over independently seeded streams.
//!
//! Work is split into fixed-size chunks and chunk `k` always draws from
//! `RandomStream::derive(seed, k)`, so results are identical whether the chunks
//! run on the rayon pool or one after another.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::diagnostics::AcceptanceStats;
use crate::error::Result;
use crate::mvn_gibbs::{
    mvn_rejection, run_chain_with, ChainConfig, ChainOutput, ConditionalMoments, ConvexRegion,
    MvnDraw, MvnSpec,
};
use crate::numerics::RandomStream;
use crate::univariate::{DrawResult, Sampler, UnivariateTruncationSpec};

/// Draws per chunk for batch sampling.
pub const CHUNK_SIZE: usize = 8_192;
/// Proposal budget per chunk for acceptance estimation.
pub const PROPOSAL_CHUNK: u64 = 65_536;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon thread pool; same as `Sequential` without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `f(0), ..., f(n - 1)` in index order.
pub fn map_indexed<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

fn chunk_lengths(n: usize, chunk: usize) -> impl Fn(usize) -> usize {
    move |k| chunk.min(n - k * chunk)
}

/// `n` draws from `spec`.
pub fn sample_univariate(
    spec: &UnivariateTruncationSpec,
    sampler: &Sampler,
    n: usize,
    seed: u64,
    exec: Execution,
) -> Result<Vec<DrawResult>> {
    let chunks = n.div_ceil(CHUNK_SIZE);
    let len = chunk_lengths(n, CHUNK_SIZE);
    let parts = map_indexed(exec, chunks, |k| {
        let mut rng = RandomStream::derive(seed, k as u64);
        (0..len(k))
            .map(|_| sampler.truncated(spec, &mut rng))
            .collect::<Result<Vec<_>>>()
    });
    let mut out = Vec::with_capacity(n);
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

/// Accept/proposal counts of `draw` over at least `proposals` proposals.
///
/// Each chunk keeps drawing until it has spent its share of the budget, so the
/// total overshoots by at most one draw per chunk.
pub fn empirical_acceptance<F>(
    proposals: u64,
    seed: u64,
    exec: Execution,
    draw: F,
) -> Result<AcceptanceStats>
where
    F: Fn(&mut RandomStream) -> Result<DrawResult> + Sync + Send,
{
    let chunks = proposals.div_ceil(PROPOSAL_CHUNK) as usize;
    let parts = map_indexed(exec, chunks, |k| {
        let budget = PROPOSAL_CHUNK.min(proposals - k as u64 * PROPOSAL_CHUNK);
        let mut rng = RandomStream::derive(seed, k as u64);
        let mut stats = AcceptanceStats::default();
        while stats.proposals < budget {
            stats.record(&draw(&mut rng)?);
        }
        Ok(stats)
    });
    let mut total = AcceptanceStats::default();
    for part in parts {
        total.merge(&part?);
    }
    Ok(total)
}

/// Independent Gibbs chains sharing one set of conditional moments.
pub fn run_chains(
    moments: &ConditionalMoments,
    region: &ConvexRegion,
    configs: &[ChainConfig],
    sampler: &Sampler,
    exec: Execution,
) -> Result<Vec<ChainOutput>> {
    map_indexed(exec, configs.len(), |k| {
        run_chain_with(moments, region, &configs[k], sampler)
    })
    .into_iter()
    .collect()
}

/// `n` exact draws by multivariate rejection.
pub fn rejection_draws(
    spec: &MvnSpec,
    region: &ConvexRegion,
    n: usize,
    seed: u64,
    cap: u64,
    exec: Execution,
) -> Result<Vec<MvnDraw>> {
    let chunks = n.div_ceil(CHUNK_SIZE);
    let len = chunk_lengths(n, CHUNK_SIZE);
    let parts = map_indexed(exec, chunks, |k| {
        let mut rng = RandomStream::derive(seed, k as u64);
        (0..len(k))
            .map(|_| mvn_rejection(spec, region, &mut rng, cap))
            .collect::<Result<Vec<_>>>()
    });
    let mut out = Vec::with_capacity(n);
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}
