use std::fs;

use anyhow::{Context, Result};
use nalgebra::DMatrix;
use serde_json::{json, Value};

use truncnorm::diagnostics::multi_chain_spread;
use truncnorm::mvn_gibbs::{
    conditional_moments, ergodic_average, ChainConfig, ConvexRegion, MvnSpec,
};
use truncnorm::parallel::{rejection_draws, run_chains, Execution};
use truncnorm::univariate::Sampler;

use crate::args::{Command, Engine, Format, RegionKind, SampleMvn};
use crate::commands::uni::finite;
use crate::output::{csv_bytes, json_bytes, num, Rendered};

/// Inline `[[..],[..]]` or a headerless CSV file.
pub fn parse_covariance(text: &str) -> Result<Vec<Vec<f64>>> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed)
            .map_err(|e| crate::invalid(format!("covariance is not a nested list of numbers: {e}")));
    }
    let raw = fs::read_to_string(trimmed).with_context(|| format!("reading covariance file {trimmed}"))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(raw.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| crate::invalid(format!("covariance CSV: {e}")))?;
        let row = record
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| crate::invalid(format!("covariance CSV: {e}")))?;
        rows.push(row);
    }
    Ok(rows)
}

fn covariance_matrix(rows: &[Vec<f64>], p: usize) -> Result<DMatrix<f64>> {
    if rows.len() != p || rows.iter().any(|r| r.len() != p) {
        return Err(crate::invalid(format!(
            "covariance must be {p} x {p} to match --mean, got {} rows",
            rows.len()
        )));
    }
    if rows.iter().flatten().any(|x| !x.is_finite()) {
        return Err(crate::invalid("covariance entries must be finite"));
    }
    Ok(DMatrix::from_fn(p, p, |i, j| rows[i][j]))
}

fn build_region(args: &SampleMvn, p: usize) -> Result<ConvexRegion> {
    let region = match args.region {
        RegionKind::Ball => {
            let center = args.center.clone().unwrap_or_else(|| vec![0.0; p]);
            ConvexRegion::ball(center, args.radius)?
        }
        RegionKind::Box => {
            let lower = args.box_lower.as_ref().map(|v| v.iter().map(|l| l.0).collect());
            let upper = args.box_upper.as_ref().map(|v| v.iter().map(|l| l.0).collect());
            ConvexRegion::boxed(
                lower.unwrap_or_else(|| vec![f64::NEG_INFINITY; p]),
                upper.unwrap_or_else(|| vec![f64::INFINITY; p]),
            )?
        }
        RegionKind::Order => ConvexRegion::order_cone(args.order_lower, args.order_upper)?,
    };
    region.check_dimension(p)?;
    Ok(region)
}

/// A point of the region close to the mean.
fn default_initial(region: &ConvexRegion, mean: &[f64]) -> Vec<f64> {
    match region {
        ConvexRegion::Ball { center, .. } => center.clone(),
        ConvexRegion::Box { lower, upper } => mean
            .iter()
            .zip(lower.iter().zip(upper))
            .map(|(&m, (&l, &u))| m.clamp(l, u))
            .collect(),
        ConvexRegion::OrderCone { lower_cap, upper_cap } => {
            let mut v = mean.to_vec();
            v.sort_by(f64::total_cmp);
            let lo = lower_cap.unwrap_or(f64::NEG_INFINITY);
            let hi = upper_cap.unwrap_or(f64::INFINITY);
            v.iter().map(|x| x.clamp(lo, hi)).collect()
        }
    }
}

/// `x<j> <op> <c>` with `op` one of `<`, `<=`, `>`, `>=`.
#[derive(Debug, Clone, PartialEq)]
pub struct Indicator {
    pub text: String,
    index: usize,
    op: &'static str,
    threshold: f64,
}

impl Indicator {
    pub fn parse(text: &str, p: usize) -> Result<Self> {
        let bad = || crate::invalid(format!("indicator '{text}' is not of the form x<j><op><value>"));
        let body = text.trim().strip_prefix('x').ok_or_else(bad)?;
        let digits = body.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
        let index: usize = body[..digits].parse().map_err(|_| bad())?;
        let rest = &body[digits..];
        let op = ["<=", ">=", "<", ">"]
            .into_iter()
            .find(|op| rest.starts_with(op))
            .ok_or_else(bad)?;
        let threshold: f64 = rest[op.len()..].trim().parse().map_err(|_| bad())?;
        if index >= p {
            return Err(crate::invalid(format!("indicator '{text}' refers to x{index} but p = {p}")));
        }
        Ok(Self { text: text.trim().to_owned(), index, op, threshold })
    }

    pub fn eval(&self, theta: &[f64]) -> f64 {
        let x = theta[self.index];
        let hit = match self.op {
            "<=" => x <= self.threshold,
            ">=" => x >= self.threshold,
            "<" => x < self.threshold,
            _ => x > self.threshold,
        };
        if hit { 1.0 } else { 0.0 }
    }
}

struct Batch {
    chain: usize,
    draws: Vec<Vec<f64>>,
}

pub fn run(cmd: &Command, args: &SampleMvn) -> Result<Rendered> {
    let p = args.mean.len();
    if p == 0 {
        return Err(crate::invalid("--mean must list at least one value"));
    }
    if args.n == 0 || args.chains == 0 || args.thin == 0 {
        return Err(crate::invalid("--n, --chains and --thin must be at least 1"));
    }
    let sigma = covariance_matrix(&parse_covariance(&args.cov)?, p)?;
    let spec = MvnSpec::new(args.mean.clone(), sigma)?;
    let region = build_region(args, p)?;
    let indicators = args
        .indicator
        .iter()
        .map(|t| Indicator::parse(t, p))
        .collect::<Result<Vec<_>>>()?;

    let mut engine_summary = serde_json::Map::new();
    let batches = match args.engine {
        Engine::Gibbs => {
            let initial = args.initial.clone().unwrap_or_else(|| default_initial(&region, &args.mean));
            let moments = conditional_moments(&spec)?;
            let configs: Vec<_> = (0..args.chains)
                .map(|k| {
                    ChainConfig::new(initial.clone(), args.n)
                        .burn_in(args.burnin)
                        .thin(args.thin)
                        .seed(args.seed)
                        .stream(k as u64)
                })
                .collect();
            let outs = run_chains(&moments, &region, &configs, &Sampler::default(), Execution::default())?;
            let trials: u64 = outs.iter().map(|o| o.univariate_trials).sum();
            let sweeps: u64 = outs.iter().map(|o| o.total_sweeps).sum();
            engine_summary.insert("sweeps".into(), json!(sweeps));
            engine_summary.insert("univariate_proposals".into(), json!(trials));
            outs.into_iter()
                .enumerate()
                .map(|(chain, o)| Batch { chain, draws: o.draws })
                .collect::<Vec<_>>()
        }
        Engine::Rejection => {
            if args.initial.is_some() {
                return Err(crate::invalid("--initial only applies to the gibbs engine"));
            }
            let mut proposals = 0;
            let mut batches = Vec::with_capacity(args.chains);
            for chain in 0..args.chains {
                let seed = args.seed ^ (chain as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
                let draws = rejection_draws(&spec, &region, args.n, seed, args.rejection_cap, Execution::default())?;
                proposals += draws.iter().map(|d| d.trials).sum::<u64>();
                batches.push(Batch { chain, draws: draws.into_iter().map(|d| d.value).collect() });
            }
            engine_summary.insert("proposals".into(), json!(proposals));
            batches
        }
    };

    let all: Vec<Vec<f64>> = batches.iter().flat_map(|b| b.draws.iter().cloned()).collect();
    if let Some(proposals) = engine_summary.get("proposals").and_then(Value::as_u64) {
        engine_summary.insert("acceptance_rate".into(), json!(all.len() as f64 / proposals as f64));
    }
    let means = (0..p)
        .map(|j| ergodic_average(&all, |t| t[j]).map(finite))
        .collect::<truncnorm::Result<Vec<_>>>()?;
    let indicator_means = indicators
        .iter()
        .map(|ind| Ok(json!({ "functional": ind.text, "mean": ergodic_average(&all, |t| ind.eval(t))? })))
        .collect::<truncnorm::Result<Vec<_>>>()?;
    let mut summary = json!({
        "engine": args.engine,
        "dimension": p,
        "chains": args.chains,
        "draws": all.len(),
        "ergodic_means": means,
        "indicators": indicator_means,
        "engine_stats": engine_summary,
    });
    if batches.len() > 1 && args.n >= 100 {
        let spread = (0..p)
            .map(|j| {
                let series: Vec<Vec<f64>> =
                    batches.iter().map(|b| b.draws.iter().map(|d| d[j]).collect()).collect();
                multi_chain_spread(&series).map(|s| finite(s.ratio))
            })
            .collect::<truncnorm::Result<Vec<_>>>()?;
        summary["between_within_ratio"] = json!(spread);
    }
    if batches.len() > 1 {
        summary["chain_lengths"] = json!(batches.iter().map(|b| b.draws.len()).collect::<Vec<_>>());
    }

    let bytes = match args.output.format {
        Format::Csv => {
            let mut header = vec!["chain".to_owned(), "index".to_owned()];
            header.extend((0..p).map(|j| format!("x{j}")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_bytes(
                &header,
                batches.iter().flat_map(|b| {
                    b.draws.iter().enumerate().map(move |(i, d)| {
                        let mut row = vec![b.chain.to_string(), i.to_string()];
                        row.extend(d.iter().map(|&x| num(x)));
                        row
                    })
                }),
            )?
        }
        Format::Json => {
            let draws = (!args.output.summary_only).then(|| {
                Value::from(
                    batches
                        .iter()
                        .flat_map(|b| b.draws.iter().cloned())
                        .collect::<Vec<_>>(),
                )
            });
            json_bytes(cmd, &summary, draws)?
        }
    };
    Ok(Rendered {
        bytes,
        summary,
        echo_summary: args.output.format == Format::Csv,
    })
}
