//! Gibbs sampling for a multivariate normal restricted to a convex region.
//!
//! Each sweep redraws the coordinates in ascending order from their full
//! conditionals, which are univariate normals truncated to the region's slice.
//! The conditional coefficients of all `p` coordinates come from one inversion
//! of the covariance: the inverse of `Sigma` with row and column `i` removed is
//! read off `V = Sigma^{-1}` (see [`submatrix_inverse`]).

mod chain;
mod linalg;
mod moments;
mod region;

pub use chain::{
    ergodic_average, gibbs_sweep, mvn_rejection, run_chain, run_chain_with, running_averages,
    ChainConfig, ChainOutput, MvnDraw, RunningAverage, DEFAULT_BURN_IN,
};
pub use linalg::{
    check_symmetric, condition_number, drop_index, invert_spd, submatrix_inverse, MAX_CONDITION,
    WARN_CONDITION,
};
pub use moments::{conditional_moments, ConditionalMoments, MvnSpec};
pub use region::{ConvexRegion, Slice, BOUNDARY_TOL};
