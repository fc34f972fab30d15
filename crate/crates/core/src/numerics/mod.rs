//! Normal distribution function and quantile, the seeded uniform stream and
//! the base generators every sampler builds on.

mod normal;
mod stream;

use std::fmt;

use crate::error::{Error, Result};

pub use normal::{mills_ratio, normal_cdf, normal_pdf, normal_quantile, SQRT_2PI};
pub use stream::{
    draw_shifted_exponential, draw_standard_normal, shifted_exponential_from_uniform,
    RandomStream,
};

pub(crate) use normal::{cdf, quantile_unchecked, sf};

/// A real number in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::domain(format!("{value} is not a probability")))
        }
    }

    /// Clamps into `[0, 1]`; NaN maps to 0.
    pub fn clamped(value: f64) -> Self {
        if value.is_nan() {
            Self(0.0)
        } else {
            Self(value.clamp(0.0, 1.0))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
