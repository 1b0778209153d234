//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for usage or precondition errors (bad
//! flags, p not an odd prime, p not dividing n, malformed factor lists),
//! 3 when a verification fails (the two dimension routes disagree, or
//! `--oracle` finds a mismatch).

use std::process::ExitCode;

use clap::Parser;

use farrell::cli::{self, Format, NSpec, RunConfig};
use farrell::splitting::PrimeFactor;
use farrell::Error;

/// Compute the p-primary Farrell cohomology data of Sp(p-1, Z[1/n]).
#[derive(Parser)]
#[command(name = "farrell", version)]
struct Args {
    /// Odd prime p; the group is Sp(p-1, Z[1/n]) and p must divide n.
    #[arg(long)]
    p: u64,

    /// The integer n, factorized by trial division (sign is ignored).
    #[arg(
        long,
        allow_negative_numbers = true,
        required_unless_present = "factors",
        conflicts_with = "factors"
    )]
    n: Option<i128>,

    /// Prime factorization of n as "q1:e1,q2:e2,..."; a bare "q" means
    /// multiplicity 1. Alternative to --n for large n.
    #[arg(long)]
    factors: Option<String>,

    /// Restrict the factor tables to one odd divisor j of (p-1) / 2^r.
    #[arg(long)]
    j: Option<u64>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Re-derive every displayed dimension table by brute force on wedge
    /// powers, at every primitive j-th root of unity mod p.
    #[arg(long)]
    oracle: bool,

    /// Skip the oracle for factors whose permutation dimension exceeds
    /// this bound (the run continues formula-only).
    #[arg(long, default_value_t = farrell::oracle::DEFAULT_GUARD)]
    max_oracle_dim: usize,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn parse_factors(list: &str) -> Result<Vec<PrimeFactor>, String> {
    let mut out = Vec::new();
    for piece in list.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(format!("empty entry in factor list {list:?}"));
        }
        let (q, e) = piece.split_once(':').unwrap_or((piece, "1"));
        let q: u64 = q
            .trim()
            .parse()
            .map_err(|_| format!("invalid prime {:?} in factor list", q.trim()))?;
        let e: u32 = e
            .trim()
            .parse()
            .map_err(|_| format!("invalid multiplicity {:?} in factor list", e.trim()))?;
        out.push(PrimeFactor { q, e });
    }
    Ok(out)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let n = match (args.n, &args.factors) {
        (Some(v), None) => NSpec::Value(v),
        (None, Some(s)) => match parse_factors(s) {
            Ok(f) => NSpec::Factors(f),
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        _ => unreachable!("clap enforces exactly one of --n / --factors"),
    };
    let config = RunConfig {
        p: args.p,
        n,
        j_filter: args.j,
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        oracle: args.oracle,
        max_oracle_dim: args.max_oracle_dim,
    };
    match cli::run(&config) {
        Ok(out) => {
            print!("{}", out.stdout);
            for d in &out.diagnostics {
                eprintln!("{d}");
            }
            if out.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: oracle verification failed");
                ExitCode::from(3)
            }
        }
        Err(err @ Error::RouteMismatch { .. }) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
