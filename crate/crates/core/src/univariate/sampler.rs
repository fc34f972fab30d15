use crate::error::{Error, Result};
use crate::numerics::{draw_standard_normal, quantile_unchecked, RandomStream};

use super::spec::UnivariateTruncationSpec;
use super::{one_sided, two_sided, DrawResult, SamplerMethod, DEFAULT_MAX_PROPOSALS};

/// A sampling method together with its proposal cap.
///
/// All entry points work on the standardized scale except
/// [`Sampler::truncated`], which standardizes, samples and maps back.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampler {
    method: SamplerMethod,
    max_proposals: u64,
}

impl Default for Sampler {
    fn default() -> Self {
        Self::new(SamplerMethod::Auto)
    }
}

impl Sampler {
    pub fn new(method: SamplerMethod) -> Self {
        Self {
            method,
            max_proposals: DEFAULT_MAX_PROPOSALS,
        }
    }

    pub fn with_max_proposals(mut self, max_proposals: u64) -> Self {
        self.max_proposals = max_proposals.max(1);
        self
    }

    pub fn method(&self) -> SamplerMethod {
        self.method
    }

    pub fn max_proposals(&self) -> u64 {
        self.max_proposals
    }

    /// Concrete method used for the one-sided tail `[a, inf)`.
    pub fn resolve_one_sided(&self, a: f64) -> Result<SamplerMethod> {
        match self.method {
            SamplerMethod::Auto if a < 0.0 => Ok(SamplerMethod::RepeatedNormal),
            SamplerMethod::Auto => Ok(SamplerMethod::ExponentialAR),
            SamplerMethod::OneSidedThenReject => Ok(SamplerMethod::ExponentialAR),
            SamplerMethod::UniformAR => Err(Error::InvalidMethod {
                method: SamplerMethod::UniformAR.name(),
                target: "an unbounded interval",
            }),
            m => Ok(m),
        }
    }

    /// Concrete method used for `[a, b]`, before any mirroring.
    pub fn resolve_two_sided(&self, a: f64, b: f64) -> SamplerMethod {
        match self.method {
            SamplerMethod::Auto => two_sided::choose_two_sided_method(a, b),
            SamplerMethod::ExponentialAR => SamplerMethod::OneSidedThenReject,
            m => m,
        }
    }

    /// Standard normal truncated to `[a, inf)`.
    pub fn one_sided(&self, a: f64, rng: &mut RandomStream) -> Result<DrawResult> {
        if !a.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "one-sided truncation point must be finite, got {a}"
            )));
        }
        match self.resolve_one_sided(a)? {
            SamplerMethod::RepeatedNormal => one_sided::repeated_normal(a, self.max_proposals, rng),
            SamplerMethod::Inversion => one_sided::inversion(a, rng),
            _ => one_sided::ExponentialProposal::optimal(a)?.draw(self.max_proposals, rng),
        }
    }

    /// Standard normal truncated to `(-inf, b]`, by mirroring [`Sampler::one_sided`].
    pub fn right_truncated(&self, b: f64, rng: &mut RandomStream) -> Result<DrawResult> {
        let r = self.one_sided(-b, rng)?;
        Ok(DrawResult {
            value: -r.value,
            trials: r.trials,
        })
    }

    /// Standard normal truncated to the bounded interval `[a, b]`.
    pub fn two_sided(&self, a: f64, b: f64, rng: &mut RandomStream) -> Result<DrawResult> {
        two_sided::validate(a, b)?;
        if self.method == SamplerMethod::Auto {
            let d = two_sided::dispatch_two_sided(a, b);
            return if d.reflected {
                let r = self.two_sided_with(d.method, -b, -a, rng)?;
                Ok(DrawResult {
                    value: -r.value,
                    trials: r.trials,
                })
            } else {
                self.two_sided_with(d.method, a, b, rng)
            };
        }
        self.two_sided_with(self.resolve_two_sided(a, b), a, b, rng)
    }

    fn two_sided_with(
        &self,
        method: SamplerMethod,
        a: f64,
        b: f64,
        rng: &mut RandomStream,
    ) -> Result<DrawResult> {
        let cap = self.max_proposals;
        match method {
            SamplerMethod::RepeatedNormal => two_sided::repeated_normal(a, b, cap, rng),
            SamplerMethod::Inversion => two_sided::inversion(a, b, rng),
            SamplerMethod::UniformAR => two_sided::uniform_ar(a, b, cap, rng),
            SamplerMethod::OneSidedThenReject | SamplerMethod::ExponentialAR => {
                if b <= 0.0 {
                    let r = two_sided::one_sided_then_reject(-b, -a, cap, rng)?;
                    Ok(DrawResult {
                        value: -r.value,
                        trials: r.trials,
                    })
                } else {
                    two_sided::one_sided_then_reject(a, b, cap, rng)
                }
            }
            SamplerMethod::Auto => unreachable!("auto is resolved before sampling"),
        }
    }

    /// Draw from a general spec: standardize, sample, map back with `mu + sigma z`.
    pub fn truncated(
        &self,
        spec: &UnivariateTruncationSpec,
        rng: &mut RandomStream,
    ) -> Result<DrawResult> {
        let std = spec.standardize();
        let z = match (std.a.is_finite(), std.b.is_finite()) {
            (true, true) => self.two_sided(std.a, std.b, rng)?,
            (true, false) => self.one_sided(std.a, rng)?,
            (false, true) => self.right_truncated(std.b, rng)?,
            (false, false) => {
                let value = if self.method == SamplerMethod::Inversion {
                    quantile_unchecked(rng.next_uniform())
                } else {
                    draw_standard_normal(rng)
                };
                DrawResult { value, trials: 1 }
            }
        };
        Ok(DrawResult {
            value: spec.destandardize(z.value),
            trials: z.trials,
        })
    }
}

/// Standard normal truncated to `[a, inf)` with the default proposal cap.
pub fn draw_one_sided(a: f64, method: SamplerMethod, rng: &mut RandomStream) -> Result<DrawResult> {
    Sampler::new(method).one_sided(a, rng)
}

/// Standard normal truncated to `(-inf, b]`; the exact mirror of [`draw_one_sided`] at `-b`.
pub fn draw_right_truncated(
    b: f64,
    method: SamplerMethod,
    rng: &mut RandomStream,
) -> Result<DrawResult> {
    Sampler::new(method).right_truncated(b, rng)
}

pub fn draw_two_sided(
    a: f64,
    b: f64,
    method: SamplerMethod,
    rng: &mut RandomStream,
) -> Result<DrawResult> {
    Sampler::new(method).two_sided(a, b, rng)
}

pub fn draw_truncated(
    spec: &UnivariateTruncationSpec,
    method: SamplerMethod,
    rng: &mut RandomStream,
) -> Result<DrawResult> {
    Sampler::new(method).truncated(spec, rng)
}
