use log::warn;
use nalgebra::{DMatrix, DVector};

use super::linalg::{
    check_symmetric, condition_number, invert_spd, submatrix_inverse, WARN_CONDITION,
};
use crate::error::{Error, Result};

/// Mean and covariance of a `p`-variate normal.
#[derive(Clone, Debug, PartialEq)]
pub struct MvnSpec {
    mean: DVector<f64>,
    covariance: DMatrix<f64>,
    cholesky: DMatrix<f64>,
}

impl MvnSpec {
    pub fn new(mean: Vec<f64>, covariance: DMatrix<f64>) -> Result<Self> {
        let p = mean.len();
        if p == 0 {
            return Err(Error::domain("dimension must be at least 1"));
        }
        if mean.iter().any(|m| !m.is_finite()) {
            return Err(Error::domain("mean must be finite"));
        }
        if covariance.nrows() != p {
            return Err(Error::Dimension {
                expected: p,
                got: covariance.nrows(),
            });
        }
        check_symmetric(&covariance)?;
        let cholesky = covariance
            .clone()
            .cholesky()
            .ok_or(Error::NotPositiveDefinite)?
            .unpack();
        Ok(Self {
            mean: DVector::from_vec(mean),
            covariance,
            cholesky,
        })
    }

    /// Standard bivariate normal with correlation `rho`.
    pub fn bivariate(rho: f64) -> Result<Self> {
        Self::new(
            vec![0.0, 0.0],
            DMatrix::from_row_slice(2, 2, &[1.0, rho, rho, 1.0]),
        )
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn covariance(&self) -> &DMatrix<f64> {
        &self.covariance
    }

    /// Lower Cholesky factor `L` with `L L^T = Sigma`.
    pub fn cholesky_factor(&self) -> &DMatrix<f64> {
        &self.cholesky
    }
}

/// Coefficients and variances of every full conditional `theta_i | theta_{-i}`,
/// derived from a single inversion of `Sigma`.
///
/// `E[theta_i | theta_{-i}] = mu_i + coeff_i . (theta_{-i} - mu_{-i})` where
/// `coeff_i = Sigma_{i,-i} Sigma_{-i,-i}^{-1}` and the conditional variance is
/// `Sigma_ii - coeff_i . Sigma_{-i,i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionalMoments {
    mean: Vec<f64>,
    coeffs: Vec<Vec<f64>>,
    cond_var: Vec<f64>,
    cond_sd: Vec<f64>,
    precision: DMatrix<f64>,
}

impl ConditionalMoments {
    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    /// `coeff_i`, ordered over the other coordinates in ascending index.
    pub fn coeff(&self, i: usize) -> &[f64] {
        &self.coeffs[i]
    }

    pub fn cond_var(&self, i: usize) -> f64 {
        self.cond_var[i]
    }

    pub fn cond_sd(&self, i: usize) -> f64 {
        self.cond_sd[i]
    }

    /// `V = Sigma^{-1}`.
    pub fn precision(&self) -> &DMatrix<f64> {
        &self.precision
    }

    /// Untruncated conditional mean of coordinate `i` given the rest of `state`.
    #[inline]
    pub fn conditional_mean(&self, i: usize, state: &[f64]) -> f64 {
        let mut m = self.mean[i];
        let coeff = &self.coeffs[i];
        for (k, j) in (0..self.mean.len()).filter(|&j| j != i).enumerate() {
            m += coeff[k] * (state[j] - self.mean[j]);
        }
        m
    }
}

pub fn conditional_moments(spec: &MvnSpec) -> Result<ConditionalMoments> {
    let p = spec.dim();
    let sigma = spec.covariance();
    let precision = invert_spd(sigma)?;
    let well_conditioned = condition_number(sigma, &precision) <= WARN_CONDITION;

    let mut coeffs = Vec::with_capacity(p);
    let mut cond_var = Vec::with_capacity(p);
    for i in 0..p {
        let (coeff, var) = if p == 1 {
            (Vec::new(), sigma[(0, 0)])
        } else {
            let sub_inv = submatrix_inverse(&precision, i)?;
            let cross = drop_index_column(sigma, i);
            let coeff = sub_inv * &cross;
            let var = sigma[(i, i)] - coeff.dot(&cross);
            (coeff.iter().copied().collect(), var)
        };
        let deviation = (var * precision[(i, i)] - 1.0).abs();
        if var.is_nan() || var <= 0.0 {
            return Err(Error::InconsistentMoments {
                index: i,
                deviation,
            });
        }
        if deviation > 1e-10 {
            if well_conditioned {
                return Err(Error::InconsistentMoments {
                    index: i,
                    deviation,
                });
            }
            warn!("conditional variance {i} deviates from 1/V_ii by {deviation:.3e}");
        }
        coeffs.push(coeff);
        cond_var.push(var);
    }
    Ok(ConditionalMoments {
        mean: spec.mean().iter().copied().collect(),
        cond_sd: cond_var.iter().map(|v| v.sqrt()).collect(),
        coeffs,
        cond_var,
        precision,
    })
}

/// Column `i` of `m` with entry `i` removed.
fn drop_index_column(m: &DMatrix<f64>, i: usize) -> DVector<f64> {
    let col = m.column(i).into_owned();
    col.remove_row(i)
}
