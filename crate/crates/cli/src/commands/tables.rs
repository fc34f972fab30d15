use anyhow::Result;
use serde_json::json;

use truncnorm::diagnostics::AcceptanceStats;
use truncnorm::parallel::{empirical_acceptance, Execution};
use truncnorm::univariate::{
    acceptance_one_sided, acceptance_two_sided, alpha_star, dispatch_two_sided, Sampler,
    SamplerMethod,
};

use crate::args::{TableId, Tables};
use crate::output::{csv_bytes, num, Rendered};

pub const ONE_SIDED_POINTS: [f64; 7] = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0];
pub const TWO_SIDED_POINTS: [f64; 5] = [0.0, 0.5, 1.0, 1.5, 2.0];
pub const TWO_SIDED_RANGES: [f64; 4] = [2.0, 1.0, 0.5, 0.1];

/// Seed for cell `k`, spread so neighbouring cells share no streams.
fn cell_seed(seed: u64, k: usize) -> u64 {
    seed ^ (k as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn simulate(args: &Tables, k: usize, method: SamplerMethod, a: f64, b: f64) -> Result<AcceptanceStats> {
    let sampler = Sampler::new(method);
    Ok(empirical_acceptance(args.n, cell_seed(args.seed, k), Execution::default(), |rng| {
        if b.is_finite() {
            sampler.two_sided(a, b, rng)
        } else {
            sampler.one_sided(a, rng)
        }
    })?)
}

fn empirical_cells(stats: &AcceptanceStats) -> [String; 3] {
    [
        num(stats.rate().get()),
        num(stats.std_error()),
        stats.proposals.to_string(),
    ]
}

pub fn run(args: &Tables) -> Result<Rendered> {
    if args.empirical && args.n == 0 {
        return Err(crate::invalid("--n must be at least 1 in empirical mode"));
    }
    let mut header = match args.which {
        TableId::OneSided => vec!["a", "alpha_star", "method", "analytic", "rounded"],
        TableId::TwoSided => vec!["a", "range", "b", "method", "analytic", "rounded"],
    };
    if args.empirical {
        header.extend(["empirical", "std_error", "proposals"]);
    }

    let mut rows = Vec::new();
    match args.which {
        TableId::OneSided => {
            for (k, &a) in ONE_SIDED_POINTS.iter().enumerate() {
                let p = acceptance_one_sided(a, alpha_star(a)).get();
                let method = SamplerMethod::ExponentialAR;
                let mut row = vec![num(a), num(alpha_star(a)), method.to_string(), num(p), format!("{p:.3}")];
                if args.empirical {
                    row.extend(empirical_cells(&simulate(args, k, method, a, f64::INFINITY)?));
                }
                rows.push(row);
            }
        }
        TableId::TwoSided => {
            let mut k = 0;
            for &range in &TWO_SIDED_RANGES {
                for &a in &TWO_SIDED_POINTS {
                    let b = a + range;
                    let method = dispatch_two_sided(a, b).method;
                    let p = acceptance_two_sided(a, b, SamplerMethod::Auto)?.get();
                    let mut row = vec![
                        num(a),
                        num(range),
                        num(b),
                        method.to_string(),
                        num(p),
                        format!("{p:.3}"),
                    ];
                    if args.empirical {
                        row.extend(empirical_cells(&simulate(args, k, SamplerMethod::Auto, a, b)?));
                    }
                    rows.push(row);
                    k += 1;
                }
            }
        }
    }
    let summary = json!({ "rows": rows.len(), "empirical": args.empirical });
    Ok(Rendered {
        bytes: csv_bytes(&header, rows)?,
        summary,
        echo_summary: false,
    })
}
