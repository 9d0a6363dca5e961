use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ptmpow::harness::Family;

#[derive(Parser, Debug)]
#[command(
    name = "ptmpow",
    version,
    about = "Exact coefficients of powers of the Thue-Morse generating function"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory of cached sequence prefixes (read, and refreshed when too short).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for the sweeps (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqFamily {
    /// t_m(n)
    T,
    /// b_m(n)
    B,
    /// f_n(t) evaluated at t = m
    #[value(name = "f-eval")]
    FEval,
}

/// Inclusive index range written `a..b`, `a..=b` or `n`.
#[derive(Clone, Copy, Debug)]
pub struct IndexRange {
    pub start: u64,
    pub end: u64,
}

fn parse_range(s: &str) -> Result<IndexRange, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("bad index {t:?}"))
    };
    let (start, end) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if start > end {
        return Err(format!("empty range {s}"));
    }
    Ok(IndexRange { start, end })
}

fn parse_setting(s: &str) -> Result<(String, u64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v = v
        .parse::<u64>()
        .map_err(|_| format!("bad value in {s:?}"))?;
    Ok((k.to_string(), v))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print sequence values.
    Seq {
        #[arg(value_enum)]
        family: SeqFamily,
        m: u64,
        #[arg(value_parser = parse_range)]
        range: IndexRange,
    },
    /// Print 2-adic valuations of sequence values (`inf` for zero).
    Val {
        #[arg(value_enum)]
        family: SeqFamily,
        m: u64,
        #[arg(value_parser = parse_range)]
        range: IndexRange,
    },
    /// Print one polynomial.
    Poly {
        #[command(subcommand)]
        kind: PolyKind,
    },
    /// Run verification campaigns.
    Verify {
        /// Campaign names, or `all`, `theorems`, `conjectures`.
        campaigns: Vec<String>,
        /// List campaigns with their default bounds and exit.
        #[arg(long)]
        list: bool,
        /// Index bound `n` for every selected campaign that has one.
        #[arg(long)]
        bound: Option<u64>,
        /// Override any other bound, e.g. `--set m=6`.
        #[arg(long, value_parser = parse_setting)]
        set: Vec<(String, u64)>,
        /// Also write the full reports, with timings, as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Rerun each counterexample with bounds cut down to its witness.
        #[arg(long)]
        replay: bool,
    },
    /// Solve for indices.
    Search {
        #[command(subcommand)]
        what: SearchCmd,
    },
    /// Write or read a cached sequence prefix.
    Cache {
        #[command(subcommand)]
        action: CacheCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolyKind {
    /// f_n(t), the coefficient of x^n in F(x)^t.
    F { n: u64 },
    /// g_n(t) = n! f_n(t).
    G { n: u64 },
    /// h_{i,k,m}(x).
    H { i: u64, k: u32, m: u64 },
    /// W_k(n).
    #[command(name = "W", alias = "w")]
    W { k: u64 },
}

#[derive(Subcommand, Debug)]
pub enum SearchCmd {
    /// Least n with t_2(n) = target, for each target.
    T2 {
        #[arg(required = true, allow_negative_numbers = true)]
        targets: Vec<i64>,
    },
    /// The first zeros of t_3.
    T3Zeros { count: usize },
}

#[derive(Subcommand, Debug)]
pub enum CacheCmd {
    /// Compute `count` values and write them to `path`.
    Store {
        family: Family,
        m: u64,
        count: u64,
        path: PathBuf,
    },
    /// Read and validate a cache file.
    Load { path: PathBuf },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        let r = parse_range("0..8").unwrap();
        assert_eq!((r.start, r.end), (0, 8));
        let r = parse_range("3..=5").unwrap();
        assert_eq!((r.start, r.end), (3, 5));
        assert_eq!(parse_range("7").unwrap().end, 7);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn settings() {
        assert_eq!(parse_setting("m=6").unwrap(), ("m".to_string(), 6));
        assert!(parse_setting("m").is_err());
    }
}
