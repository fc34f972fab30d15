use anyhow::Result;
use serde_json::{json, Value};

use truncnorm::diagnostics::{truncated_moments, AcceptanceStats};
use truncnorm::parallel::{sample_univariate, Execution};
use truncnorm::univariate::{
    acceptance_for_spec, resolved_method, Sampler, SamplerMethod, UnivariateTruncationSpec,
};

use crate::args::{Command, Format, SampleUni};
use crate::output::{csv_bytes, json_bytes, num, Rendered};

fn build_spec(args: &SampleUni) -> Result<UnivariateTruncationSpec> {
    let (l, u) = (args.lower.0, args.upper.0);
    if l == f64::NEG_INFINITY && u == f64::INFINITY {
        if !args.allow_untruncated {
            return Err(crate::invalid(
                "both bounds are infinite; pass --allow-untruncated for plain normal draws",
            ));
        }
        return Ok(UnivariateTruncationSpec::untruncated(args.mu, args.sigma)?);
    }
    Ok(UnivariateTruncationSpec::new(args.mu, args.sigma, l, u)?)
}

pub fn run(cmd: &Command, args: &SampleUni) -> Result<Rendered> {
    if args.n == 0 {
        return Err(crate::invalid("--n must be at least 1"));
    }
    let spec = build_spec(args)?;
    let method: SamplerMethod = args.method.parse()?;
    let sampler = Sampler::new(method).with_max_proposals(args.max_proposals);
    let resolved = resolved_method(&spec, method)?;
    let draws = sample_univariate(&spec, &sampler, args.n, args.seed, Execution::default())?;

    let stats: AcceptanceStats = draws.iter().collect();
    let n = draws.len() as f64;
    let mean = draws.iter().map(|d| d.value).sum::<f64>() / n;
    let var = draws.iter().map(|d| (d.value - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let analytic = acceptance_for_spec(&spec, resolved)?.map(|p| p.get());
    let moments = truncated_moments(&spec).ok();
    let summary = json!({
        "n": draws.len(),
        "method": resolved.name(),
        "mean": finite(mean),
        "variance": finite(var),
        "proposals": stats.proposals,
        "acceptance_rate": finite(stats.rate().get()),
        "acceptance_std_error": finite(stats.std_error()),
        "analytic_acceptance": analytic,
        "analytic_mean": moments.map(|m| m.0),
        "analytic_variance": moments.map(|m| m.1),
    });

    let bytes = match args.output.format {
        Format::Csv => csv_bytes(
            &["index", "value", "trials"],
            draws
                .iter()
                .enumerate()
                .map(|(i, d)| vec![i.to_string(), num(d.value), d.trials.to_string()]),
        )?,
        Format::Json => {
            let rows = (!args.output.summary_only)
                .then(|| Value::from(draws.iter().map(|d| vec![d.value]).collect::<Vec<_>>()));
            json_bytes(cmd, &summary, rows)?
        }
    };
    Ok(Rendered {
        bytes,
        summary,
        echo_summary: args.output.format == Format::Csv,
    })
}

pub(crate) fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}
