pub mod curve;
pub mod mvn;
pub mod replay;
pub mod tables;
pub mod uni;

use anyhow::Result;

use crate::args::Command;
use crate::output::Rendered;

/// Output bytes and summary of `cmd`; nothing is written.
pub fn render(cmd: &Command) -> Result<Rendered> {
    match cmd {
        Command::SampleUni(a) => uni::run(cmd, a),
        Command::Tables(a) => tables::run(a),
        Command::BoundCurve(a) => curve::run(a),
        Command::SampleMvn(a) => mvn::run(cmd, a),
        Command::Replay(_) => Err(crate::invalid("a replay cannot be rendered")),
    }
}
