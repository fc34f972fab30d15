//! Truncated normal random variates.
//!
//! * [`univariate`]: one-sided and two-sided truncated normal samplers built on
//!   optimal exponential and uniform accept-reject, with automatic method choice.
//! * [`mvn_gibbs`]: Gibbs sampler for a multivariate normal restricted to a
//!   convex region, driven by the univariate samplers.
//! * [`diagnostics`]: closed-form truncated normal oracles, Kolmogorov-Smirnov
//!   tests and simple chain diagnostics.
//! * [`parallel`]: batch sampling over independently seeded streams, run with
//!   rayon when the `parallel` feature is on and sequentially otherwise.
//!
//! ```
//! use truncnorm::numerics::RandomStream;
//! use truncnorm::univariate::{draw_truncated, SamplerMethod, UnivariateTruncationSpec};
//!
//! let spec = UnivariateTruncationSpec::new(0.0, 1.0, 2.0, f64::INFINITY).unwrap();
//! let mut rng = RandomStream::new(7);
//! let draw = draw_truncated(&spec, SamplerMethod::Auto, &mut rng).unwrap();
//! assert!(draw.value >= 2.0);
//! ```

pub mod diagnostics;
pub mod error;
pub mod mvn_gibbs;
pub mod numerics;
pub mod parallel;
pub mod univariate;

pub use error::{Error, Result};
