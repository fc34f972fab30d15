use anyhow::Result;
use serde_json::json;

use truncnorm::univariate::one_sided_switch_bound;

use crate::args::BoundCurve;
use crate::output::{csv_bytes, num, Rendered};

/// Evenly spaced `(a, bound, bound - a)` over `[a_min, a_max]`.
pub fn points(args: &BoundCurve) -> Result<Vec<(f64, f64, f64)>> {
    if args.a_min.is_nan() || args.a_min < 0.0 {
        return Err(crate::invalid("--a-min must be non-negative"));
    }
    if !(args.a_max.is_finite() && args.a_max > args.a_min) {
        return Err(crate::invalid("--a-max must be finite and greater than --a-min"));
    }
    if args.steps < 2 {
        return Err(crate::invalid("--steps must be at least 2"));
    }
    let h = (args.a_max - args.a_min) / (args.steps - 1) as f64;
    (0..args.steps)
        .map(|k| {
            let a = if k + 1 == args.steps { args.a_max } else { args.a_min + k as f64 * h };
            let bound = one_sided_switch_bound(a)?;
            Ok((a, bound, bound - a))
        })
        .collect()
}

pub fn run(args: &BoundCurve) -> Result<Rendered> {
    let pts = points(args)?;
    let monotone = pts.windows(2).all(|w| w[1].2 < w[0].2);
    let summary = json!({ "points": pts.len(), "gap_decreasing": monotone });
    let bytes = csv_bytes(
        &["a", "bound", "gap"],
        pts.iter().map(|&(a, b, g)| vec![num(a), num(b), num(g)]),
    )?;
    Ok(Rendered {
        bytes,
        summary,
        echo_summary: false,
    })
}
