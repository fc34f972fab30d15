use crate::error::{Error, Result};
use crate::numerics::Probability;
use crate::univariate::DrawResult;

/// Empirical acceptance of an accept-reject sampler.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AcceptanceStats {
    pub proposals: u64,
    pub accepts: u64,
}

impl AcceptanceStats {
    pub fn new(proposals: u64, accepts: u64) -> Result<Self> {
        if accepts > proposals {
            return Err(Error::domain(format!(
                "{accepts} accepts exceed {proposals} proposals"
            )));
        }
        Ok(Self { proposals, accepts })
    }

    /// Each draw is one accept out of `trials` proposals.
    pub fn record(&mut self, draw: &DrawResult) {
        self.proposals += draw.trials;
        self.accepts += 1;
    }

    pub fn merge(&mut self, other: &AcceptanceStats) {
        self.proposals += other.proposals;
        self.accepts += other.accepts;
    }

    pub fn rate(&self) -> Probability {
        if self.proposals == 0 {
            return Probability::clamped(0.0);
        }
        Probability::clamped(self.accepts as f64 / self.proposals as f64)
    }

    /// Binomial standard error of [`AcceptanceStats::rate`].
    pub fn std_error(&self) -> f64 {
        if self.proposals == 0 {
            return f64::INFINITY;
        }
        let p = self.rate().get();
        (p * (1.0 - p) / self.proposals as f64).sqrt()
    }
}

impl<'a> FromIterator<&'a DrawResult> for AcceptanceStats {
    fn from_iter<I: IntoIterator<Item = &'a DrawResult>>(iter: I) -> Self {
        let mut stats = AcceptanceStats::default();
        iter.into_iter().for_each(|d| stats.record(d));
        stats
    }
}

/// Between-chain spread of a scalar functional.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiChainSpread {
    pub means: Vec<f64>,
    pub variances: Vec<f64>,
    /// Sample variance of the chain means.
    pub between: f64,
    /// Average within-chain variance.
    pub within: f64,
    /// `between / within`; `+inf` when the chains are constant but disagree.
    pub ratio: f64,
}

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

/// Ratio of the variance of chain means to the mean within-chain variance.
/// Values near 0 mean the chains agree.
pub fn multi_chain_spread(chains: &[Vec<f64>]) -> Result<MultiChainSpread> {
    if chains.len() < 2 {
        return Err(Error::domain(format!(
            "need at least 2 chains, got {}",
            chains.len()
        )));
    }
    let len = chains[0].len();
    if len < 100 {
        return Err(Error::domain(format!("chains need at least 100 draws, got {len}")));
    }
    if let Some(c) = chains.iter().find(|c| c.len() != len) {
        return Err(Error::Dimension {
            expected: len,
            got: c.len(),
        });
    }
    let (means, variances): (Vec<f64>, Vec<f64>) = chains.iter().map(|c| mean_var(c)).unzip();
    let (_, between) = mean_var(&means);
    let within = variances.iter().sum::<f64>() / variances.len() as f64;
    let ratio = if between == 0.0 {
        0.0
    } else if within == 0.0 {
        f64::INFINITY
    } else {
        between / within
    };
    Ok(MultiChainSpread {
        means,
        variances,
        between,
        within,
        ratio,
    })
}
