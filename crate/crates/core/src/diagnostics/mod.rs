//! Closed-form truncated normal oracles and goodness-of-fit checks for sampler
//! output.

mod ks;
mod oracle;
mod stats;

pub use ks::{kolmogorov_survival, ks_test, ks_two_sample, sorted, KsReport};
pub use oracle::{truncated_cdf, truncated_moments, MIN_MASS};
pub use stats::{multi_chain_spread, AcceptanceStats, MultiChainSpread};
