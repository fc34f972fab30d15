//! One-sided and two-sided truncated normal samplers.
//!
//! Every sampler works on the standardized scale `z = (x - mu) / sigma`.
//! The one-sided tail `[a, inf)` is sampled with a translated exponential
//! proposal at the optimal rate [`alpha_star`]; bounded intervals choose
//! between repeated normal draws, a uniform proposal and exponential draws
//! with rejection above `b` (see [`dispatch_two_sided`]).

mod one_sided;
mod sampler;
mod spec;
mod two_sided;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numerics::{sf, Probability, RandomStream};

pub use one_sided::{acceptance_one_sided, alpha_star, ExponentialProposal};
pub use sampler::{draw_one_sided, draw_right_truncated, draw_truncated, draw_two_sided, Sampler};
pub use spec::{standardize, StandardizedBounds, UnivariateTruncationSpec};
pub use two_sided::{
    acceptance_two_sided, choose_two_sided_method, dispatch_two_sided, one_sided_switch_bound,
    Dispatch, MIN_WIDTH,
};

pub(crate) use two_sided::normal_mass;

/// Proposals an accept-reject loop may consume before giving up.
pub const DEFAULT_MAX_PROPOSALS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SamplerMethod {
    /// Draw `N(0, 1)` until the value lands in the support.
    RepeatedNormal,
    /// Distribution-function inversion; one uniform per draw.
    Inversion,
    /// Translated exponential proposal at rate `alpha_star(a)`.
    ExponentialAR,
    /// Uniform proposal on a bounded interval.
    UniformAR,
    /// Exponential accept-reject from `a`, retried until the value is at most `b`.
    OneSidedThenReject,
    /// Pick the method with the best acceptance rate.
    Auto,
}

impl SamplerMethod {
    pub const ALL: [SamplerMethod; 6] = [
        SamplerMethod::RepeatedNormal,
        SamplerMethod::Inversion,
        SamplerMethod::ExponentialAR,
        SamplerMethod::UniformAR,
        SamplerMethod::OneSidedThenReject,
        SamplerMethod::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SamplerMethod::RepeatedNormal => "normal",
            SamplerMethod::Inversion => "inversion",
            SamplerMethod::ExponentialAR => "exp-ar",
            SamplerMethod::UniformAR => "uniform-ar",
            SamplerMethod::OneSidedThenReject => "exp-reject",
            SamplerMethod::Auto => "auto",
        }
    }
}

impl fmt::Display for SamplerMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SamplerMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SamplerMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown sampling method '{s}'")))
    }
}

/// An accepted value and the number of proposals it took.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DrawResult {
    pub value: f64,
    pub trials: u64,
}

/// Runs `propose` until it returns a value or `cap` proposals have been spent.
#[inline]
pub(crate) fn accept_reject<F>(cap: u64, rng: &mut RandomStream, mut propose: F) -> Result<DrawResult>
where
    F: FnMut(&mut RandomStream) -> Option<f64>,
{
    for trials in 1..=cap {
        if let Some(value) = propose(rng) {
            return Ok(DrawResult { value, trials });
        }
    }
    Err(Error::SamplingFailure { proposals: cap })
}

/// Expected acceptance of one proposal when sampling `[a, inf)` with `method`.
pub fn acceptance_one_sided_method(a: f64, method: SamplerMethod) -> Result<Probability> {
    match Sampler::new(method).resolve_one_sided(a)? {
        SamplerMethod::RepeatedNormal => Ok(Probability::clamped(sf(a))),
        SamplerMethod::Inversion => Ok(Probability::clamped(1.0)),
        _ => Ok(acceptance_one_sided(a, alpha_star(a))),
    }
}

/// Expected acceptance for a general spec, or `None` for an untruncated one.
pub fn acceptance_for_spec(
    spec: &UnivariateTruncationSpec,
    method: SamplerMethod,
) -> Result<Option<Probability>> {
    let s = spec.standardize();
    match (s.a.is_finite(), s.b.is_finite()) {
        (true, true) => acceptance_two_sided(s.a, s.b, method).map(Some),
        (true, false) => acceptance_one_sided_method(s.a, method).map(Some),
        (false, true) => acceptance_one_sided_method(-s.b, method).map(Some),
        (false, false) => Ok(None),
    }
}

/// Concrete method `method` resolves to for `spec`.
pub fn resolved_method(spec: &UnivariateTruncationSpec, method: SamplerMethod) -> Result<SamplerMethod> {
    let s = spec.standardize();
    let sampler = Sampler::new(method);
    match (s.a.is_finite(), s.b.is_finite()) {
        (true, true) => Ok(sampler.resolve_two_sided(s.a, s.b)),
        (true, false) => sampler.resolve_one_sided(s.a),
        (false, true) => sampler.resolve_one_sided(-s.b),
        (false, false) => Ok(if method == SamplerMethod::Inversion {
            SamplerMethod::Inversion
        } else {
            SamplerMethod::RepeatedNormal
        }),
    }
}
