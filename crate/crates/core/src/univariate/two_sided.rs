//! Standard normal restricted to a bounded interval `[a, b]`.

use std::f64::consts::E;

use crate::error::{Error, Result};
use crate::numerics::{cdf, mills_ratio, quantile_unchecked, sf, Probability, RandomStream, SQRT_2PI};

use super::one_sided::{alpha_star, ExponentialProposal};
use super::{accept_reject, DrawResult, SamplerMethod};

/// Smallest standardized width accepted by the two-sided samplers.
pub const MIN_WIDTH: f64 = 1e-12;

/// Lower bound on `b` above which rejecting one-sided exponential draws beats
/// uniform accept-reject on `[a, b]`, for `a >= 0`.
///
/// Equals `a + 2 sqrt(e) / (a + sqrt(a^2 + 4)) * exp((a^2 - a sqrt(a^2 + 4)) / 4)`;
/// evaluated through `alpha_star(a)` as `a + sqrt(e)/alpha * exp(-a / (2 alpha))`.
pub fn one_sided_switch_bound(a: f64) -> Result<f64> {
    if !(a >= 0.0 && a.is_finite()) {
        return Err(Error::domain(format!(
            "switch bound is defined for finite a >= 0, got {a}"
        )));
    }
    let alpha = alpha_star(a);
    Ok(a + E.sqrt() / alpha * (-0.5 * a / alpha).exp())
}

/// Method chosen for an interval, and whether it is applied to the mirrored
/// interval `[-b, -a]` with the draw negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dispatch {
    pub method: SamplerMethod,
    pub reflected: bool,
}

/// Best-acceptance method for the standardized interval `[a, b]`.
///
/// Intervals at or below zero are mirrored. Intervals straddling zero use
/// repeated normal sampling once they are at least `sqrt(2 pi)` wide and
/// uniform accept-reject otherwise. For `a >= 0` the exponential sampler with
/// rejection wins beyond [`one_sided_switch_bound`].
pub fn dispatch_two_sided(a: f64, b: f64) -> Dispatch {
    if b <= 0.0 {
        let inner = dispatch_two_sided(-b, -a);
        return Dispatch {
            method: inner.method,
            reflected: true,
        };
    }
    let method = if a < 0.0 {
        if b - a >= SQRT_2PI {
            SamplerMethod::RepeatedNormal
        } else {
            SamplerMethod::UniformAR
        }
    } else {
        // `a` is finite here: b > 0 > -inf.
        match one_sided_switch_bound(a) {
            Ok(bound) if b > bound => SamplerMethod::OneSidedThenReject,
            _ => SamplerMethod::UniformAR,
        }
    };
    Dispatch {
        method,
        reflected: false,
    }
}

pub fn choose_two_sided_method(a: f64, b: f64) -> SamplerMethod {
    dispatch_two_sided(a, b).method
}

/// `sqrt(2 pi) e^d (Phi(b) - Phi(a))` with `d` = `a^2/2` for `a >= 0`,
/// `b^2/2` for `b <= 0`, else 0. Scaled this way it never underflows in
/// the tails.
fn scaled_mass(a: f64, b: f64) -> f64 {
    if a >= 0.0 {
        let tail = if b == f64::INFINITY {
            0.0
        } else {
            (0.5 * (a - b) * (a + b)).exp() * mills_ratio(b)
        };
        mills_ratio(a) - tail
    } else if b <= 0.0 {
        scaled_mass(-b, -a)
    } else {
        SQRT_2PI * (1.0 - cdf(a) - sf(b))
    }
}

/// `Phi(b) - Phi(a)` without cancellation in either tail.
pub(crate) fn normal_mass(a: f64, b: f64) -> f64 {
    if a >= 0.0 {
        sf(a) - sf(b)
    } else if b <= 0.0 {
        cdf(b) - cdf(a)
    } else {
        1.0 - cdf(a) - sf(b)
    }
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidSpec(format!(
            "two-sided bounds must be finite, got [{a}, {b}]"
        )));
    }
    if a >= b {
        return Err(Error::InvalidSpec(format!(
            "lower bound {a} must be strictly below upper bound {b}"
        )));
    }
    if b - a < MIN_WIDTH {
        return Err(Error::DegenerateInterval { width: b - a });
    }
    Ok(())
}

/// Expected acceptance of one proposal for the given method on `[a, b]`.
pub fn acceptance_two_sided(a: f64, b: f64, method: SamplerMethod) -> Result<Probability> {
    check_interval(a, b)?;
    let p = match method {
        SamplerMethod::Auto => {
            let d = dispatch_two_sided(a, b);
            return if d.reflected {
                acceptance_two_sided(-b, -a, d.method)
            } else {
                acceptance_two_sided(a, b, d.method)
            };
        }
        SamplerMethod::Inversion => 1.0,
        SamplerMethod::RepeatedNormal => normal_mass(a, b),
        SamplerMethod::UniformAR => scaled_mass(a, b) / (b - a),
        SamplerMethod::OneSidedThenReject | SamplerMethod::ExponentialAR => {
            if b <= 0.0 {
                return acceptance_two_sided(-b, -a, method);
            }
            let alpha = alpha_star(a);
            if a >= 0.0 {
                let gap = alpha - a;
                alpha * (-0.5 * gap * gap).exp() * scaled_mass(a, b)
            } else {
                alpha * (alpha * a - 0.5 * alpha * alpha).exp() * SQRT_2PI * normal_mass(a, b)
            }
        }
    };
    Ok(Probability::clamped(p))
}

/// Piecewise envelope ratio of the uniform proposal on `[a, b]`.
#[inline]
pub(crate) fn uniform_ratio(a: f64, b: f64, z: f64) -> f64 {
    if a > 0.0 {
        (0.5 * (a - z) * (a + z)).exp()
    } else if b < 0.0 {
        (0.5 * (b - z) * (b + z)).exp()
    } else {
        (-0.5 * z * z).exp()
    }
}

pub(crate) fn uniform_ar(a: f64, b: f64, cap: u64, rng: &mut RandomStream) -> Result<DrawResult> {
    let width = b - a;
    accept_reject(cap, rng, |rng| {
        let z = (a + width * rng.next_uniform()).min(b);
        let u = rng.next_uniform();
        (u <= uniform_ratio(a, b, z)).then_some(z)
    })
}

pub(crate) fn repeated_normal(a: f64, b: f64, cap: u64, rng: &mut RandomStream) -> Result<DrawResult> {
    accept_reject(cap, rng, |rng| {
        let z = crate::numerics::draw_standard_normal(rng);
        (a <= z && z <= b).then_some(z)
    })
}

/// Exponential accept-reject from `a`, discarding accepted values above `b`.
/// Requires `b > 0`; callers mirror intervals below zero.
pub(crate) fn one_sided_then_reject(
    a: f64,
    b: f64,
    cap: u64,
    rng: &mut RandomStream,
) -> Result<DrawResult> {
    debug_assert!(b > 0.0);
    let proposal = ExponentialProposal::optimal(a)?;
    accept_reject(cap, rng, |rng| proposal.propose(rng).filter(|&z| z <= b))
}

pub(crate) fn inversion_from_uniform(a: f64, b: f64, u: f64) -> Result<f64> {
    let mass = normal_mass(a, b);
    // Subnormal masses leave too few bits for the quantile to resolve.
    if mass < f64::MIN_POSITIVE {
        return Err(Error::ExtremeTruncation { mass });
    }
    let z = if a >= 0.0 {
        -quantile_unchecked(sf(a) - u * mass)
    } else {
        quantile_unchecked(cdf(a) + u * mass)
    };
    if z.is_nan() {
        return Err(Error::ExtremeTruncation { mass });
    }
    Ok(z.clamp(a, b))
}

pub(crate) fn inversion(a: f64, b: f64, rng: &mut RandomStream) -> Result<DrawResult> {
    let value = inversion_from_uniform(a, b, rng.next_uniform())?;
    Ok(DrawResult { value, trials: 1 })
}

pub(crate) fn validate(a: f64, b: f64) -> Result<()> {
    check_interval(a, b)
}
