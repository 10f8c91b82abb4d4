//! `regdist`: command-line front end.

mod commands;
mod selftest;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "regdist",
    version,
    about = "Bijections between s-regular/t-distinct and t-regular/s-distinct partitions"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct MapArgs {
    #[arg(long)]
    pub s: u64,
    #[arg(long)]
    pub t: u64,
    /// Comma-separated processing order of the primes shared by s and t.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = VariantArg::Prime)]
    pub variant: VariantArg,
    /// Partition such as "10^4,5^7,3^5,1^2".
    #[arg(allow_hyphen_values = true)]
    pub partition: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantArg {
    Prime,
    Primepower,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Map an s-regular t-distinct partition to a t-regular s-distinct one.
    Map(MapArgs),
    /// Inverse of `map` with the same flags.
    Invert(MapArgs),
    /// Iterate φ_s∘φ_t from a partition and classify the orbit.
    Orbit {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_iter: usize,
        partition: String,
    },
    /// Orbit statistics over all s-regular t-distinct partitions of n.
    Census {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_iter: usize,
        /// Disable the thread pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Count partitions of n satisfying every given restriction.
    Count {
        #[arg(long)]
        n: u64,
        /// Require M-regular (repeatable).
        #[arg(long = "regular", value_name = "M")]
        regular: Vec<u64>,
        /// Require M-distinct (repeatable).
        #[arg(long = "distinct", value_name = "M")]
        distinct: Vec<u64>,
    },
    /// Expand a generating function: "regular-distinct S T", "regular-regular S T" or "theorem9 S T".
    Gf {
        #[arg(long)]
        spec: String,
        /// Truncation degree.
        #[arg(long = "N", visible_alias = "degree", default_value_t = regdist::qseries::DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Re-check the reference examples; exit status 0 iff all pass.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}
