use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Parser, Debug)]
#[command(name = "truncnorm", version, about = "Truncated normal sampling and diagnostics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Draw from a univariate truncated normal.
    SampleUni(SampleUni),
    /// Acceptance-rate tables for the one-sided and two-sided samplers.
    Tables(Tables),
    /// Range threshold above which the two-sided sampler switches to the exponential proposal.
    BoundCurve(BoundCurve),
    /// Draw from a multivariate normal restricted to a ball, box or order cone.
    SampleMvn(SampleMvn),
    /// Re-run the command recorded in a manifest and compare checksums.
    Replay(Replay),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::SampleUni(_) => "sample-uni",
            Command::Tables(_) => "tables",
            Command::BoundCurve(_) => "bound-curve",
            Command::SampleMvn(_) => "sample-mvn",
            Command::Replay(_) => "replay",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Command::SampleUni(c) => Some(c.seed),
            Command::Tables(c) => Some(c.seed),
            Command::SampleMvn(c) => Some(c.seed),
            Command::BoundCurve(_) | Command::Replay(_) => None,
        }
    }

    pub fn out(&self) -> Option<&PathBuf> {
        match self {
            Command::SampleUni(c) => c.output.out.as_ref(),
            Command::Tables(c) => c.out.as_ref(),
            Command::BoundCurve(c) => c.out.as_ref(),
            Command::SampleMvn(c) => c.output.out.as_ref(),
            Command::Replay(_) => None,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// A real number or an infinity, written `inf` / `-inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Limit(pub f64);

impl FromStr for Limit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" => Ok(Limit(f64::INFINITY)),
            "-inf" | "-infinity" => Ok(Limit(f64::NEG_INFINITY)),
            t => match t.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(Limit(x)),
                _ => Err(format!("'{s}' is not a number or +/-inf")),
            },
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            x if x == f64::INFINITY => f.write_str("inf"),
            x if x == f64::NEG_INFINITY => f.write_str("-inf"),
            x => write!(f, "{x}"),
        }
    }
}

impl Serialize for Limit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Limit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Output {
    /// Output file; stdout when omitted. A `<out>.manifest.json` sidecar is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Omit individual draws from JSON output.
    #[arg(long)]
    pub summary_only: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleUni {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub sigma: f64,
    #[arg(long, allow_hyphen_values = true, default_value = "-inf")]
    pub lower: Limit,
    #[arg(long, allow_hyphen_values = true, default_value = "inf")]
    pub upper: Limit,
    /// Permit both bounds infinite (plain normal draws).
    #[arg(long)]
    pub allow_untruncated: bool,
    #[arg(long, default_value_t = 1_000)]
    pub n: usize,
    #[arg(long, env = "TRUNCNORM_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "auto",
          value_parser = ["auto", "normal", "inversion", "exp-ar", "uniform-ar", "exp-reject"])]
    pub method: String,
    /// Proposals allowed per draw before giving up.
    #[arg(long, default_value_t = truncnorm::univariate::DEFAULT_MAX_PROPOSALS)]
    pub max_proposals: u64,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: Output,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableId {
    /// One-sided acceptance by truncation point.
    #[value(name = "2.1")]
    #[serde(rename = "2.1")]
    OneSided,
    /// Two-sided acceptance by truncation point and range.
    #[value(name = "2.2")]
    #[serde(rename = "2.2")]
    TwoSided,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tables {
    #[arg(long, value_enum)]
    pub which: TableId,
    /// Closed-form acceptance only (the default).
    #[arg(long, conflicts_with = "empirical")]
    pub analytic: bool,
    /// Add simulated acceptance and its standard error per cell.
    #[arg(long)]
    pub empirical: bool,
    /// Proposals per cell in empirical mode.
    #[arg(long, default_value_t = 1_000_000)]
    pub n: u64,
    #[arg(long, env = "TRUNCNORM_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCurve {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a_min: f64,
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    pub a_max: f64,
    #[arg(long, default_value_t = 500)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionKind {
    Ball,
    Box,
    Order,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Gibbs,
    Rejection,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleMvn {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0")]
    pub mean: Vec<f64>,
    /// Covariance as `[[1,0.5],[0.5,1]]` or a path to a headerless CSV file.
    #[arg(long, default_value = "[[1,0],[0,1]]")]
    pub cov: String,
    #[arg(long, value_enum, default_value = "ball")]
    pub region: RegionKind,
    /// Ball center; the origin when omitted.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub center: Option<Vec<f64>>,
    #[arg(long, default_value_t = 2.0)]
    pub radius: f64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub box_lower: Option<Vec<Limit>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub box_upper: Option<Vec<Limit>>,
    /// Optional floor under the smallest coordinate of an order cone.
    #[arg(long, allow_hyphen_values = true)]
    pub order_lower: Option<f64>,
    /// Optional ceiling over the largest coordinate of an order cone.
    #[arg(long, allow_hyphen_values = true)]
    pub order_upper: Option<f64>,
    /// Starting point; defaults to a point of the region near the mean.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub initial: Option<Vec<f64>>,
    /// Kept draws per chain.
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    #[arg(long, default_value_t = truncnorm::mvn_gibbs::DEFAULT_BURN_IN)]
    pub burnin: usize,
    #[arg(long, default_value_t = 1)]
    pub thin: usize,
    /// Independent chains, each on its own stream under the seed.
    #[arg(long, default_value_t = 1)]
    pub chains: usize,
    #[arg(long, env = "TRUNCNORM_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "gibbs")]
    pub engine: Engine,
    /// Proposals per draw for the rejection engine.
    #[arg(long, default_value_t = 1_000_000)]
    pub rejection_cap: u64,
    /// Indicator functional such as `x0>0.5` or `x1<=-1`; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub indicator: Vec<String>,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: Output,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Replay {
    /// A `.manifest.json` sidecar.
    pub manifest: PathBuf,
}
