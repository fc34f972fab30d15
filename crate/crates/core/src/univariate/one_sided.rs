//! Left-truncated standard normal `N(0, 1)` restricted to `[a, inf)`.

use crate::error::{Error, Result};
use crate::numerics::{mills_ratio, quantile_unchecked, sf, Probability, RandomStream, SQRT_2PI};

use super::{accept_reject, DrawResult};

/// Acceptance-maximizing rate of the translated exponential proposal,
/// `(a + sqrt(a^2 + 4)) / 2`. Always exceeds both `a` and 0, and satisfies
/// `alpha - 1/alpha = a`.
pub fn alpha_star(a: f64) -> f64 {
    let root = (a * a + 4.0).sqrt();
    if a >= 0.0 {
        0.5 * (a + root)
    } else {
        // Same value without the cancellation in `a + root`.
        2.0 / (root - a)
    }
}

/// Probability that one proposal from `Exp(alpha)` shifted to `a` is accepted
/// when targeting the standard normal tail beyond `a`.
pub fn acceptance_one_sided(a: f64, alpha: f64) -> Probability {
    let p = if a < alpha {
        if a >= 0.0 {
            // alpha e^{alpha a - alpha^2/2} sqrt(2 pi) Phi(-a), rescaled by phi(a).
            let gap = alpha - a;
            alpha * (-0.5 * gap * gap).exp() * mills_ratio(a)
        } else {
            alpha * (alpha * a - 0.5 * alpha * alpha).exp() * sf(a) * SQRT_2PI
        }
    } else {
        // alpha <= a: envelope maximum sits at z = a.
        alpha * mills_ratio(a)
    };
    Probability::clamped(p)
}

/// Translated exponential proposal `Exp(alpha)` on `[shift, inf)` together with
/// its envelope constant `M`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentialProposal {
    alpha: f64,
    shift: f64,
    bound_constant: f64,
}

impl ExponentialProposal {
    pub fn new(alpha: f64, shift: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain(format!(
                "exponential rate must be positive and finite, got {alpha}"
            )));
        }
        if !shift.is_finite() {
            return Err(Error::domain(format!("shift must be finite, got {shift}")));
        }
        let acceptance = acceptance_one_sided(shift, alpha).get();
        Ok(Self {
            alpha,
            shift,
            // Expected acceptance of accept-reject is exactly 1/M.
            bound_constant: 1.0 / acceptance,
        })
    }

    /// Proposal with the optimal rate [`alpha_star`].
    pub fn optimal(shift: f64) -> Result<Self> {
        Self::new(alpha_star(shift), shift)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn bound_constant(&self) -> f64 {
        self.bound_constant
    }

    pub fn acceptance(&self) -> Probability {
        acceptance_one_sided(self.shift, self.alpha)
    }

    /// `h(z) / (M g(z))` for a proposal `z >= shift`.
    #[inline]
    pub fn acceptance_ratio(&self, z: f64) -> f64 {
        let d = z - self.alpha;
        if self.shift < self.alpha {
            (-0.5 * d * d).exp()
        } else {
            let e = self.shift - self.alpha;
            (0.5 * (e - d) * (e + d)).exp()
        }
    }

    #[inline]
    pub(crate) fn propose(&self, rng: &mut RandomStream) -> Option<f64> {
        let z = self.shift - rng.next_uniform().ln() / self.alpha;
        let u = rng.next_uniform();
        (u <= self.acceptance_ratio(z)).then_some(z)
    }

    /// One accepted draw from the tail beyond `shift`.
    pub fn draw(&self, max_proposals: u64, rng: &mut RandomStream) -> Result<DrawResult> {
        accept_reject(max_proposals, rng, |rng| self.propose(rng))
    }
}

pub(crate) fn repeated_normal(a: f64, cap: u64, rng: &mut RandomStream) -> Result<DrawResult> {
    accept_reject(cap, rng, |rng| {
        let z = crate::numerics::draw_standard_normal(rng);
        (z >= a).then_some(z)
    })
}

/// Tail quantile `-Phi^{-1}((1 - u) Phi(-a))`, equivalent to the textbook
/// `Phi^{-1}(Phi(a) + u (1 - Phi(a)))` but stable for large `a`.
pub(crate) fn inversion_from_uniform(a: f64, u: f64) -> Result<f64> {
    let tail = sf(a);
    if tail < f64::MIN_POSITIVE {
        return Err(Error::ExtremeTruncation { mass: tail });
    }
    let z = if a >= 0.0 {
        -quantile_unchecked((1.0 - u) * tail)
    } else {
        let head = 1.0 - tail;
        quantile_unchecked(head + u * tail)
    };
    if z.is_nan() {
        return Err(Error::ExtremeTruncation { mass: tail });
    }
    Ok(z.max(a))
}

pub(crate) fn inversion(a: f64, rng: &mut RandomStream) -> Result<DrawResult> {
    let value = inversion_from_uniform(a, rng.next_uniform())?;
    Ok(DrawResult { value, trials: 1 })
}
