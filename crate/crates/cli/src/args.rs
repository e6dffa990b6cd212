//! Argument surface of the chebmax binary.

use clap::{Parser, Subcommand, ValueEnum};

/// Maximality toolkit for the hyperelliptic curves y² = φ_d(x) over finite fields.
#[derive(Debug, Parser)]
#[command(name = "chebmax", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Element-visit budget for counting work.
    #[arg(long, global = true, default_value_t = chebmax_core::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Worker threads for counting; 0 picks the available parallelism.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Count,
    Lpoly,
    Classify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurveyKind {
    PrimeSweep,
    PairSweep,
    PrimePowerSweep,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Print the degree-d polynomial of the family, optionally reduced mod p.
    Cheb {
        #[arg(long)]
        d: u32,
        /// Reduce the coefficients modulo this odd prime.
        #[arg(long, value_name = "P")]
        r#mod: Option<u64>,
        /// Print lowest-degree terms first.
        #[arg(long)]
        ascending: bool,
    },
    /// Count the points of the curve of degree d over F_{p^n}.
    Count {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Reconstruct the L-polynomial of the curve over F_p from point counts.
    Lpoly {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        p: u64,
    },
    /// CM slopes of the Jacobian for prime degree ell in characteristic p.
    Slopes {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        p: u64,
    },
    /// CM slopes of the new part of the Jacobian for odd degree d.
    Slopes2 {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        p: u64,
    },
    /// Decide whether the curve of degree d is maximal over F_{p^n}.
    Maximal {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Deciding engine: direct count, L-polynomial, or classification rules.
        #[arg(long, value_enum, default_value_t = Method::Count)]
        method: Method,
    },
    /// Run the classification rules for degree d in characteristic p.
    Classify {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        p: u64,
    },
    /// Quadratic-descent certificate for prime degree ell in characteristic p.
    Descent {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        p: u64,
    },
    /// Slope surveys over all residue classes up to a degree bound.
    Survey {
        #[arg(long, value_enum)]
        mode: SurveyKind,
        #[arg(long, default_value_t = 101)]
        max: u64,
    },
    /// Search a pair of prime degrees for simultaneous-maximality classes.
    CheckPairs {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        ell2: u64,
    },
}
