use crate::error::{Error, Result};
use crate::numerics::{cdf, mills_ratio, normal_pdf, sf, Probability};
use crate::univariate::{normal_mass, UnivariateTruncationSpec};

/// Normalizing masses below this are treated as underflow.
pub const MIN_MASS: f64 = 1e-300;

fn check_mass(a: f64, b: f64) -> Result<f64> {
    let mass = normal_mass(a, b);
    if mass.is_nan() || mass < MIN_MASS {
        return Err(Error::ExtremeTruncation { mass });
    }
    Ok(mass)
}

/// Distribution function of the truncated normal at `x`.
pub fn truncated_cdf(spec: &UnivariateTruncationSpec, x: f64) -> Result<Probability> {
    let s = spec.standardize();
    let mass = check_mass(s.a, s.b)?;
    if x <= spec.lower() {
        return Ok(Probability::clamped(0.0));
    }
    if x >= spec.upper() {
        return Ok(Probability::clamped(1.0));
    }
    let z = ((x - spec.mu()) / spec.sigma()).clamp(s.a, s.b);
    let p = if s.a >= 0.0 {
        (sf(s.a) - sf(z)) / mass
    } else {
        (cdf(z) - cdf(s.a)) / mass
    };
    Ok(Probability::clamped(p))
}

/// Mean and variance of the truncated normal.
pub fn truncated_moments(spec: &UnivariateTruncationSpec) -> Result<(f64, f64)> {
    let s = spec.standardize();
    check_mass(s.a, s.b)?;
    let (m, v) = standard_moments(s.a, s.b);
    Ok((spec.mu() + spec.sigma() * m, spec.sigma() * spec.sigma() * v))
}

/// Mean and variance of `N(0, 1)` restricted to `[a, b]`.
fn standard_moments(a: f64, b: f64) -> (f64, f64) {
    if b <= 0.0 {
        let (m, v) = standard_moments(-b, -a);
        return (-m, v);
    }
    if a >= 0.0 {
        // Everything scaled by 1/phi(a) through Mills ratios, so far tails
        // neither underflow nor cancel.
        let (e, be, tail) = if b == f64::INFINITY {
            (0.0, 0.0, 0.0)
        } else {
            let e = (0.5 * (a - b) * (a + b)).exp();
            (e, b * e, e * mills_ratio(b))
        };
        let d = mills_ratio(a) - tail;
        let mean = (1.0 - e) / d;
        let second = 1.0 + (a - be) / d;
        return (mean, second - mean * mean);
    }
    let mass = 1.0 - cdf(a) - sf(b);
    let (pa, pb) = (normal_pdf(a), normal_pdf(b));
    let apa = if a.is_finite() { a * pa } else { 0.0 };
    let bpb = if b.is_finite() { b * pb } else { 0.0 };
    let mean = (pa - pb) / mass;
    (mean, 1.0 + (apa - bpb) / mass - mean * mean)
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: f64 = f64::INFINITY;

    fn spec(mu: f64, sigma: f64, l: f64, u: f64) -> UnivariateTruncationSpec {
        UnivariateTruncationSpec::new(mu, sigma, l, u).unwrap()
    }

    #[test]
    fn cdf_boundaries_and_symmetry() {
        let s = spec(0.0, 1.0, -1.0, 1.0);
        assert_eq!(truncated_cdf(&s, -1.0).unwrap().get(), 0.0);
        assert_eq!(truncated_cdf(&s, 1.0).unwrap().get(), 1.0);
        assert_eq!(truncated_cdf(&s, -7.0).unwrap().get(), 0.0);
        assert!((truncated_cdf(&s, 0.0).unwrap().get() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn cdf_interior_value() {
        let s = spec(0.0, 1.0, 1.0, 2.0);
        let p = truncated_cdf(&s, 1.5).unwrap().get();
        assert!((p - 0.675_824_805_733_960_7).abs() < 1e-14);
    }

    #[test]
    fn far_tail_cdf_is_well_defined() {
        let s = spec(0.0, 1.0, 20.0, INF);
        let p = truncated_cdf(&s, 20.05).unwrap().get();
        // Tail of the exponential approximation: 1 - exp(-20 * 0.05) to leading order.
        assert!((p - (1.0 - (-1.0f64).exp())).abs() < 0.01);
        assert!(matches!(
            truncated_cdf(&spec(0.0, 1.0, 40.0, INF), 41.0),
            Err(Error::ExtremeTruncation { .. })
        ));
    }

    #[test]
    fn moment_examples() {
        let (m, _) = truncated_moments(&spec(0.0, 1.0, 0.0, INF)).unwrap();
        assert!((m - 0.797_884_560_802_865_4).abs() < 1e-15);
        for c in [0.1, 1.0, 3.0] {
            let (m, _) = truncated_moments(&spec(0.0, 1.0, -c, c)).unwrap();
            assert!(m.abs() < 1e-15);
        }
        let (m, v) = truncated_moments(&spec(0.0, 1.0, 1.0, 2.0)).unwrap();
        assert!((m - 1.383_169_046_631_552_8).abs() < 1e-13);
        assert!((v - 0.072_742_886_100_601_29).abs() < 1e-13);
    }

    #[test]
    fn moments_scale_and_reflect() {
        let (m, v) = truncated_moments(&spec(3.0, 2.0, 5.0, 7.0)).unwrap();
        let (m0, v0) = truncated_moments(&spec(0.0, 1.0, 1.0, 2.0)).unwrap();
        assert!((m - (3.0 + 2.0 * m0)).abs() < 1e-13);
        assert!((v - 4.0 * v0).abs() < 1e-13);
        let (mr, vr) = truncated_moments(&spec(0.0, 1.0, -2.0, -1.0)).unwrap();
        assert_eq!((mr, vr), (-m0, v0));
    }

    #[test]
    fn untruncated_moments() {
        let s = UnivariateTruncationSpec::untruncated(1.0, 2.0).unwrap();
        assert_eq!(truncated_moments(&s).unwrap(), (1.0, 4.0));
    }
}
