use crate::error::{Error, Result};
use crate::numerics::Probability;

/// Outcome of a Kolmogorov-Smirnov test.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KsReport {
    /// Supremum distance `D_n`.
    pub statistic: f64,
    pub n: usize,
    /// Asymptotic p-value.
    pub p_value: Probability,
}

impl KsReport {
    pub fn passes(&self, significance: f64) -> bool {
        self.p_value.get() > significance
    }
}

/// Kolmogorov survival function `Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2)`,
/// truncated at 100 terms.
pub fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let k = k as f64;
        let term = (-2.0 * k * k * lambda * lambda).exp();
        sum += sign * term;
        if term < 1e-18 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

fn check_sorted(samples: &[f64]) -> Result<()> {
    if samples.iter().any(|x| x.is_nan()) || samples.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Unsorted);
    }
    Ok(())
}

/// One-sample test of sorted `samples` against a continuous distribution function.
pub fn ks_test<F>(samples: &[f64], cdf: F) -> Result<KsReport>
where
    F: Fn(f64) -> f64,
{
    let n = samples.len();
    if n < 10 {
        return Err(Error::domain(format!("KS test needs at least 10 samples, got {n}")));
    }
    check_sorted(samples)?;
    let nf = n as f64;
    let statistic = samples
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            let above = (i + 1) as f64 / nf - f;
            let below = f - i as f64 / nf;
            above.abs().max(below.abs())
        })
        .fold(0.0, f64::max)
        .min(1.0);
    Ok(KsReport {
        statistic,
        n,
        p_value: Probability::clamped(kolmogorov_survival(nf.sqrt() * statistic)),
    })
}

/// Two-sample test on sorted samples; `n` in the report is the effective size
/// `n m / (n + m)`, rounded down.
pub fn ks_two_sample(x: &[f64], y: &[f64]) -> Result<KsReport> {
    if x.len() < 10 || y.len() < 10 {
        return Err(Error::domain("KS test needs at least 10 samples per side"));
    }
    check_sorted(x)?;
    check_sorted(y)?;
    let (n, m) = (x.len(), y.len());
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        let t = x[i].min(y[j]);
        while i < n && x[i] <= t {
            i += 1;
        }
        while j < m && y[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let effective = (n as f64 * m as f64) / (n + m) as f64;
    Ok(KsReport {
        statistic: d,
        n: effective as usize,
        p_value: Probability::clamped(kolmogorov_survival(effective.sqrt() * d)),
    })
}

/// Sorted copy of `samples`.
pub fn sorted(samples: &[f64]) -> Vec<f64> {
    let mut v = samples.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn survival_reference_points() {
        assert_eq!(kolmogorov_survival(0.0), 1.0);
        // Classical critical values: Q(1.3581) = 0.05, Q(1.9495) = 0.001.
        assert!((kolmogorov_survival(1.358_1) - 0.05).abs() < 1e-4);
        assert!((kolmogorov_survival(1.949_5) - 0.001).abs() < 1e-5);
        assert!(kolmogorov_survival(0.1) > 0.999_999);
    }

    #[test]
    fn point_mass_against_continuous() {
        // Ten copies of the median of U(0, 1).
        let samples = vec![0.5; 10];
        let r = ks_test(&samples, |x| x.clamp(0.0, 1.0)).unwrap();
        assert!((r.statistic - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            ks_test(&[3.0, 2.0, 1.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0], |x| x),
            Err(Error::Unsorted)
        );
        assert!(ks_test(&[1.0, 2.0], |x| x).is_err());
    }

    #[test]
    fn two_sample_identical_and_disjoint() {
        let x: Vec<f64> = (0..100).map(|i| i as f64).collect();
        let r = ks_two_sample(&x, &x).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.p_value.get(), 1.0);
        let y: Vec<f64> = (0..100).map(|i| 1000.0 + i as f64).collect();
        let r = ks_two_sample(&x, &y).unwrap();
        assert_eq!(r.statistic, 1.0);
        assert!(r.p_value.get() < 1e-10);
    }

    #[test]
    fn two_sample_handles_ties() {
        let x = vec![1.0; 20];
        let mut y = vec![1.0; 10];
        y.extend(vec![2.0; 10]);
        let r = ks_two_sample(&x, &y).unwrap();
        assert!((r.statistic - 0.5).abs() < 1e-15);
    }
}
