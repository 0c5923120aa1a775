use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "powid", version, about = "Identity testing from power oracles over F_{q^n}")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Options,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print the field: modulus, size, and factorization of the group order.
    Field,
    /// Run the naive and subspace testers against power oracles for f and g.
    Etest,
    /// Tabulate the subgroup generated by r(V_m) for each m.
    Ers,
    /// Tabulate product-set growth of r(V_m) over a grid of (m, ν).
    Pset,
    /// Divisor counts for F_q(T), with τ, degree, and pole-bound cross-checks.
    Divlab,
    /// Smallest m for which V_m holds an input telling the oracles apart.
    Witness,
    /// Run the acceptance checks.
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Field => "field",
            Command::Etest => "etest",
            Command::Ers => "ers",
            Command::Pset => "pset",
            Command::Divlab => "divlab",
            Command::Witness => "witness",
            Command::Verify => "verify",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, Args)]
pub struct Options {
    /// Base field characteristic (a prime <= 2^16).
    #[arg(long, global = true)]
    pub q: Option<u32>,

    /// Extension degree.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Modulus override: comma-separated residues, constant term first.
    #[arg(long, global = true)]
    pub psi: Option<String>,

    /// Oracle exponent, a divisor of q^n - 1.
    #[arg(long, global = true)]
    pub e: Option<u128>,

    /// Degree of randomly drawn f and g.
    #[arg(long, global = true)]
    pub d: Option<usize>,

    /// Constant in the choice of ν, in (0, 1].
    #[arg(long, global = true)]
    pub c: Option<f64>,

    #[arg(long, global = true)]
    pub nu: Option<u32>,

    #[arg(long, global = true)]
    pub m: Option<usize>,

    /// Hidden polynomial: comma-separated element encodings, constant first.
    #[arg(long, global = true)]
    pub f: Option<String>,

    #[arg(long, global = true)]
    pub g: Option<String>,

    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Number of random instances.
    #[arg(long, global = true)]
    pub trials: Option<usize>,

    /// Largest divisor degree tabulated by `divlab`.
    #[arg(long, global = true)]
    pub r: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Sweeps may enumerate at most 2^guard-bits elements.
    #[arg(long, global = true, default_value_t = 24)]
    pub guard_bits: u32,
}
