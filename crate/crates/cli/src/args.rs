use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coverdepth_core::{Budget, Method};

#[derive(Debug, Parser)]
#[command(name = "coverdepth", version, about = "Depth of powers of cover ideals of path graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Limit on (t+1)^n for the exponent oracle.
    #[arg(long, global = true)]
    pub budget_exp: Option<u128>,

    /// Limit on 2^(n-1) for the subset oracle.
    #[arg(long, global = true)]
    pub budget_subset: Option<u128>,

    /// Global budget override for both oracles.
    #[arg(long, env = "COVERDEPTH_BUDGET", hide_env_values = true, global = true)]
    pub budget: Option<u128>,

    /// Worker threads for sweeps.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
}

impl GlobalOpts {
    pub fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(all) = self.budget {
            b.exponent_evals = all;
            b.subsets = all;
        }
        if let Some(e) = self.budget_exp {
            b.exponent_evals = e;
        }
        if let Some(s) = self.budget_subset {
            b.subsets = s;
        }
        b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Unified,
    Dp,
    BruteExp,
    BruteSubset,
    All,
}

impl MethodArg {
    pub fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Closed => vec![Method::Closed],
            MethodArg::Unified => vec![Method::Unified],
            MethodArg::Dp => vec![Method::Dp],
            MethodArg::BruteExp => vec![Method::BruteExp],
            MethodArg::BruteSubset => vec![Method::BruteSubset],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AssradVariant {
    /// The three-prime mixed example.
    Example,
    /// The principal prime (x1).
    Principal,
    /// J(P_3).
    CoverP3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Depth of R/J(P_n)^t for one (n, t).
    Depth {
        #[arg(long, value_parser = parse_n)]
        n: usize,
        #[arg(long, value_parser = parse_t)]
        t: u32,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
    },
    /// One row per (n, t) over the given ranges.
    Table {
        #[arg(long, value_parser = parse_n_range)]
        n_range: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_t_range)]
        t_range: RangeInclusive<u32>,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
    },
    /// Cross-verify every method and invariant over a grid.
    Verify {
        #[arg(long, value_parser = parse_n_range, default_value = "2..12")]
        n_range: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_t_range, default_value = "1..4")]
        t_range: RangeInclusive<u32>,
        /// Largest n for the stability-index scan.
        #[arg(long, value_parser = parse_n, default_value_t = 40)]
        dstab_n_max: usize,
        /// Random samples for the radical-of-colon check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Replace the closed form by a deliberately wrong one.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Exponent witnesses realizing the maximal induced matching.
    Witness {
        #[arg(long, value_parser = parse_n)]
        n: usize,
        #[arg(long, value_parser = parse_t)]
        t: u32,
    },
    /// Depth stability index by closed form and by scan.
    Dstab {
        #[arg(long, value_parser = parse_n, conflicts_with = "n_range", required_unless_present = "n_range")]
        n: Option<usize>,
        #[arg(long, value_parser = parse_n_range)]
        n_range: Option<RangeInclusive<usize>>,
    },
    /// Enumerate associated radicals of a small demonstration ideal.
    AssradDemo {
        #[arg(long, value_enum, default_value = "example")]
        variant: AssradVariant,
    },
}

fn parse_uint<T: std::str::FromStr>(s: &str) -> Result<T, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a base-10 integer"));
    }
    s.parse().map_err(|_| format!("{s:?} is out of range"))
}

fn parse_n(s: &str) -> Result<usize, String> {
    let n = parse_uint(s)?;
    if n < 2 {
        return Err("n must be at least 2".into());
    }
    Ok(n)
}

fn parse_t(s: &str) -> Result<u32, String> {
    let t = parse_uint(s)?;
    if t < 1 {
        return Err("t must be at least 1".into());
    }
    Ok(t)
}

fn parse_range<T>(s: &str, parse: fn(&str) -> Result<T, String>) -> Result<RangeInclusive<T>, String>
where
    T: PartialOrd + Copy,
{
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("{s:?} is not a range A..B"))?;
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(format!("range {s:?} is empty"));
    }
    Ok(lo..=hi)
}

fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    parse_range(s, parse_n)
}

fn parse_t_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    parse_range(s, parse_t)
}
