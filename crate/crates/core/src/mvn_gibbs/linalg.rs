use log::warn;
use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Condition number above which [`invert_spd`] logs a warning.
pub const WARN_CONDITION: f64 = 1e6;
/// Condition number above which [`invert_spd`] refuses to invert.
pub const MAX_CONDITION: f64 = 1e12;

/// Checks squareness and symmetry to 1e-12 relative tolerance.
pub fn check_symmetric(m: &DMatrix<f64>) -> Result<()> {
    let p = m.nrows();
    if m.ncols() != p {
        return Err(Error::Dimension {
            expected: p,
            got: m.ncols(),
        });
    }
    for i in 0..p {
        for j in (i + 1)..p {
            let (x, y) = (m[(i, j)], m[(j, i)]);
            let scale = x.abs().max(y.abs()).max(f64::MIN_POSITIVE);
            if !x.is_finite() || !y.is_finite() || (x - y).abs() > 1e-12 * scale {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// 1-norm condition number estimate `||A||_1 ||A^{-1}||_1`.
pub fn condition_number(m: &DMatrix<f64>, inverse: &DMatrix<f64>) -> f64 {
    fn norm1(m: &DMatrix<f64>) -> f64 {
        m.column_iter()
            .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
    norm1(m) * norm1(inverse)
}

/// Inverse of a symmetric positive definite matrix via Cholesky.
pub fn invert_spd(covariance: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    check_symmetric(covariance)?;
    let chol = covariance
        .clone()
        .cholesky()
        .ok_or(Error::NotPositiveDefinite)?;
    let inverse = chol.inverse();
    let condition = condition_number(covariance, &inverse);
    if !condition.is_finite() || condition > MAX_CONDITION {
        return Err(Error::IllConditioned { condition });
    }
    if condition > WARN_CONDITION {
        warn!("covariance condition number {condition:.3e} exceeds {WARN_CONDITION:e}");
    }
    // Symmetrize away the rounding asymmetry of the triangular solves.
    Ok((&inverse + inverse.transpose()) * 0.5)
}

/// Removes row and column `i`.
pub fn drop_index(m: &DMatrix<f64>, i: usize) -> DMatrix<f64> {
    m.clone().remove_row(i).remove_column(i)
}

/// Inverse of `Sigma` with row and column `i` removed, obtained from the full
/// inverse `V` alone: `V_{-i,-i} - V_{-i,i} V_{-i,i}^T / V_ii`.
pub fn submatrix_inverse(precision: &DMatrix<f64>, i: usize) -> Result<DMatrix<f64>> {
    let p = precision.nrows();
    if precision.ncols() != p {
        return Err(Error::Dimension {
            expected: p,
            got: precision.ncols(),
        });
    }
    if i >= p {
        return Err(Error::domain(format!("index {i} out of range for dimension {p}")));
    }
    let vii = precision[(i, i)];
    if !(vii > 0.0 && vii.is_finite()) {
        return Err(Error::InvalidPrecision {
            index: i,
            value: vii,
        });
    }
    let rest: Vec<usize> = (0..p).filter(|&j| j != i).collect();
    Ok(DMatrix::from_fn(p - 1, p - 1, |r, c| {
        let (jr, jc) = (rest[r], rest[c]);
        precision[(jr, jc)] - precision[(jr, i)] * precision[(jc, i)] / vii
    }))
}
