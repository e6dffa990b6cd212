//! Command implementations behind the chebmax binary: argument surface,
//! counting plumbing, and report rendering. The binary itself is a thin shim
//! over [`run`] so every behaviour stays testable as a library.

pub mod args;
pub mod cmds;
pub mod engine;
pub mod render;

use std::time::Instant;

use chebmax_core::{Error, Result};

pub use args::{Cli, Cmd, Format, Method, SurveyKind};
pub use render::RunReport;

/// Execute a parsed command line and assemble its report.
pub fn run(cli: &Cli) -> Result<RunReport> {
    let start = Instant::now();
    let (budget, threads) = (cli.budget, cli.threads);
    let (inputs, payload, cost_estimate) = match &cli.cmd {
        Cmd::Cheb { d, r#mod, ascending } => cmds::cmd_cheb(*d, *r#mod, *ascending)?,
        Cmd::Count { d, p, n } => cmds::cmd_count(*d, *p, *n, budget, threads)?,
        Cmd::Lpoly { d, p } => cmds::cmd_lpoly(*d, *p, budget, threads)?,
        Cmd::Slopes { ell, p } => cmds::cmd_slopes(*ell, *p)?,
        Cmd::Slopes2 { d, p } => cmds::cmd_slopes2(*d, *p)?,
        Cmd::Maximal { d, p, n, method } => {
            cmds::cmd_maximal(*d, *p, *n, *method, budget, threads)?
        }
        Cmd::Classify { d, p } => cmds::cmd_classify(*d, *p)?,
        Cmd::Descent { ell, p } => cmds::cmd_descent(*ell, *p)?,
        Cmd::Survey { mode, max } => cmds::cmd_survey(*mode, *max)?,
        Cmd::CheckPairs { ell, ell2 } => cmds::cmd_check_pairs(*ell, *ell2)?,
    };
    Ok(RunReport {
        inputs,
        payload,
        cost_estimate,
        budget: cli.budget,
        wall: start.elapsed(),
    })
}

/// Process exit code for a failed run: 2 for refused workloads, 1 otherwise.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Infeasible { .. } | Error::LimitExceeded { .. } => 2,
        _ => 1,
    }
}

// ---- tests ----
