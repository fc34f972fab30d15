use crate::error::{Error, Result};

/// Location, scale and bounds of a univariate truncated normal.
///
/// Bounds may be infinite. A spec with both bounds infinite is a plain normal
/// and must be requested explicitly through [`UnivariateTruncationSpec::untruncated`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnivariateTruncationSpec {
    mu: f64,
    sigma: f64,
    lower: f64,
    upper: f64,
}

impl UnivariateTruncationSpec {
    pub fn new(mu: f64, sigma: f64, lower: f64, upper: f64) -> Result<Self> {
        if lower == f64::NEG_INFINITY && upper == f64::INFINITY {
            return Err(Error::InvalidSpec(
                "both bounds are infinite; use an untruncated spec for a plain normal".into(),
            ));
        }
        Self::checked(mu, sigma, lower, upper)
    }

    /// Plain `N(mu, sigma^2)` with no truncation.
    pub fn untruncated(mu: f64, sigma: f64) -> Result<Self> {
        Self::checked(mu, sigma, f64::NEG_INFINITY, f64::INFINITY)
    }

    fn checked(mu: f64, sigma: f64, lower: f64, upper: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidSpec(format!("location must be finite, got {mu}")));
        }
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::InvalidSpec(format!(
                "scale must be positive and finite, got {sigma}"
            )));
        }
        if lower.is_nan() || upper.is_nan() {
            return Err(Error::InvalidSpec("bounds must not be NaN".into()));
        }
        if lower == f64::INFINITY || upper == f64::NEG_INFINITY {
            return Err(Error::InvalidSpec(format!(
                "bounds [{lower}, {upper}] leave no support"
            )));
        }
        if lower >= upper {
            return Err(Error::InvalidSpec(format!(
                "lower bound {lower} must be strictly below upper bound {upper}"
            )));
        }
        Ok(Self {
            mu,
            sigma,
            lower,
            upper,
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn is_untruncated(&self) -> bool {
        self.lower == f64::NEG_INFINITY && self.upper == f64::INFINITY
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    pub fn standardize(&self) -> StandardizedBounds {
        standardize(self)
    }

    /// Maps a standardized value back: `mu + sigma * z`, clamped into the bounds
    /// so rounding can never push a draw outside the support.
    #[inline]
    pub fn destandardize(&self, z: f64) -> f64 {
        (self.mu + self.sigma * z).clamp(self.lower, self.upper)
    }
}

/// Bounds of the truncation after the location-scale map `z = (x - mu) / sigma`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StandardizedBounds {
    pub a: f64,
    pub b: f64,
}

impl StandardizedBounds {
    pub fn width(&self) -> f64 {
        self.b - self.a
    }
}

pub fn standardize(spec: &UnivariateTruncationSpec) -> StandardizedBounds {
    StandardizedBounds {
        a: (spec.lower - spec.mu) / spec.sigma,
        b: (spec.upper - spec.mu) / spec.sigma,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: f64 = f64::INFINITY;

    #[test]
    fn standardize_examples() {
        let s = UnivariateTruncationSpec::new(0.0, 1.0, 1.0, 2.0).unwrap();
        assert_eq!(s.standardize(), StandardizedBounds { a: 1.0, b: 2.0 });
        let s = UnivariateTruncationSpec::new(2.0, 2.0, 2.0, 6.0).unwrap();
        assert_eq!(s.standardize(), StandardizedBounds { a: 0.0, b: 2.0 });
        let s = UnivariateTruncationSpec::new(-1.0, 0.5, -1.0, INF).unwrap();
        assert_eq!(s.standardize(), StandardizedBounds { a: 0.0, b: INF });
    }

    #[test]
    fn rejects_invalid_specs() {
        assert!(UnivariateTruncationSpec::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(UnivariateTruncationSpec::new(0.0, -1.0, 0.0, 1.0).is_err());
        assert!(UnivariateTruncationSpec::new(0.0, 1.0, 2.0, 1.0).is_err());
        assert!(UnivariateTruncationSpec::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(UnivariateTruncationSpec::new(0.0, 1.0, INF, INF).is_err());
        assert!(UnivariateTruncationSpec::new(0.0, 1.0, -INF, -INF).is_err());
        assert!(UnivariateTruncationSpec::new(0.0, 1.0, f64::NAN, 1.0).is_err());
        assert!(UnivariateTruncationSpec::new(f64::NAN, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn plain_normal_needs_explicit_constructor() {
        assert!(UnivariateTruncationSpec::new(0.0, 1.0, -INF, INF).is_err());
        let s = UnivariateTruncationSpec::untruncated(0.0, 1.0).unwrap();
        assert!(s.is_untruncated());
    }

    #[test]
    fn destandardize_clamps() {
        let s = UnivariateTruncationSpec::new(0.1, 3.0, 0.7, 1.3).unwrap();
        assert_eq!(s.destandardize(100.0), 1.3);
        assert_eq!(s.destandardize(-100.0), 0.7);
    }
}
