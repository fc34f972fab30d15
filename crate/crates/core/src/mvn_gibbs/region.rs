use crate::error::{Error, Result};

/// Relative tolerance for boundary arithmetic in membership and slice tests.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// One-dimensional section of a region along a coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Slice {
    Interval { lower: f64, upper: f64 },
    Empty,
}

impl Slice {
    pub fn width(&self) -> Option<f64> {
        match *self {
            Slice::Interval { lower, upper } => Some(upper - lower),
            Slice::Empty => None,
        }
    }
}

/// Convex truncation region with closed-form coordinate slices.
///
/// Coordinates are 0-based.
#[derive(Clone, Debug, PartialEq)]
pub enum ConvexRegion {
    /// Euclidean ball `||theta - center|| <= radius`.
    Ball { center: Vec<f64>, radius: f64 },
    /// Axis-aligned box; bounds may be infinite.
    Box { lower: Vec<f64>, upper: Vec<f64> },
    /// Ordered coordinates `cap_lo <= theta_0 <= theta_1 <= ... <= cap_hi`.
    OrderCone {
        lower_cap: Option<f64>,
        upper_cap: Option<f64>,
    },
}

#[inline]
fn tol(scale: f64) -> f64 {
    BOUNDARY_TOL * scale.abs().max(1.0)
}

impl ConvexRegion {
    pub fn ball(center: Vec<f64>, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::domain(format!("ball radius must be positive, got {radius}")));
        }
        if center.is_empty() || center.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("ball center must be a non-empty finite vector"));
        }
        Ok(ConvexRegion::Ball { center, radius })
    }

    pub fn boxed(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::Dimension {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        if lower.is_empty() {
            return Err(Error::domain("box must have at least one coordinate"));
        }
        for (j, (l, u)) in lower.iter().zip(&upper).enumerate() {
            if l.is_nan() || u.is_nan() || l >= u {
                return Err(Error::domain(format!(
                    "box coordinate {j}: lower {l} must be below upper {u}"
                )));
            }
        }
        Ok(ConvexRegion::Box { lower, upper })
    }

    pub fn order_cone(lower_cap: Option<f64>, upper_cap: Option<f64>) -> Result<Self> {
        if lower_cap.is_some_and(f64::is_nan) || upper_cap.is_some_and(f64::is_nan) {
            return Err(Error::domain("order caps must not be NaN"));
        }
        if let (Some(l), Some(u)) = (lower_cap, upper_cap) {
            if l >= u {
                return Err(Error::domain(format!("order caps: {l} must be below {u}")));
            }
        }
        Ok(ConvexRegion::OrderCone {
            lower_cap,
            upper_cap,
        })
    }

    /// Dimension fixed by the region, if any.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            ConvexRegion::Ball { center, .. } => Some(center.len()),
            ConvexRegion::Box { lower, .. } => Some(lower.len()),
            ConvexRegion::OrderCone { .. } => None,
        }
    }

    pub fn check_dimension(&self, p: usize) -> Result<()> {
        match self.dimension() {
            Some(d) if d != p => Err(Error::Dimension {
                expected: p,
                got: d,
            }),
            _ => Ok(()),
        }
    }

    /// Membership, with [`BOUNDARY_TOL`] slack on the boundary.
    pub fn contains(&self, theta: &[f64]) -> bool {
        if theta.iter().any(|x| x.is_nan()) {
            return false;
        }
        match self {
            ConvexRegion::Ball { center, radius } => {
                center.len() == theta.len()
                    && squared_distance(theta, center, None).sqrt() <= radius + tol(*radius)
            }
            ConvexRegion::Box { lower, upper } => {
                lower.len() == theta.len()
                    && theta
                        .iter()
                        .zip(lower.iter().zip(upper))
                        .all(|(&x, (&l, &u))| x >= l - tol(l) && x <= u + tol(u))
            }
            ConvexRegion::OrderCone {
                lower_cap,
                upper_cap,
            } => {
                let ordered = theta.windows(2).all(|w| w[0] <= w[1] + tol(w[1]));
                let above = match (lower_cap, theta.first()) {
                    (Some(l), Some(&x)) => x >= l - tol(*l),
                    _ => true,
                };
                let below = match (upper_cap, theta.last()) {
                    (Some(u), Some(&x)) => x <= u + tol(*u),
                    _ => true,
                };
                ordered && above && below
            }
        }
    }

    /// Slice through coordinate `i` with the other coordinates taken from
    /// `state`; `state[i]` is ignored.
    pub fn slice_at(&self, state: &[f64], i: usize) -> Slice {
        match self {
            ConvexRegion::Ball { center, radius } => {
                let s = squared_distance(state, center, Some(i));
                if s.sqrt() > radius + tol(*radius) {
                    return Slice::Empty;
                }
                let half = (radius * radius - s).max(0.0).sqrt();
                Slice::Interval {
                    lower: center[i] - half,
                    upper: center[i] + half,
                }
            }
            ConvexRegion::Box { lower, upper } => Slice::Interval {
                lower: lower[i],
                upper: upper[i],
            },
            ConvexRegion::OrderCone {
                lower_cap,
                upper_cap,
            } => {
                let lo = if i == 0 {
                    lower_cap.unwrap_or(f64::NEG_INFINITY)
                } else {
                    state[i - 1]
                };
                let hi = if i + 1 == state.len() {
                    upper_cap.unwrap_or(f64::INFINITY)
                } else {
                    state[i + 1]
                };
                if lo > hi + tol(hi) {
                    Slice::Empty
                } else {
                    Slice::Interval {
                        lower: lo,
                        upper: hi.max(lo),
                    }
                }
            }
        }
    }

    /// Slice through coordinate `i` given the remaining `p - 1` coordinates in order.
    pub fn slice_bounds(&self, i: usize, theta_rest: &[f64]) -> Result<Slice> {
        let p = theta_rest.len() + 1;
        self.check_dimension(p)?;
        if i >= p {
            return Err(Error::domain(format!("index {i} out of range for dimension {p}")));
        }
        let mut state = Vec::with_capacity(p);
        state.extend_from_slice(&theta_rest[..i]);
        state.push(f64::NAN);
        state.extend_from_slice(&theta_rest[i..]);
        Ok(self.slice_at(&state, i))
    }
}

fn squared_distance(theta: &[f64], center: &[f64], skip: Option<usize>) -> f64 {
    theta
        .iter()
        .zip(center)
        .enumerate()
        .filter(|(j, _)| Some(*j) != skip)
        .map(|(_, (x, c))| (x - c) * (x - c))
        .sum()
}
