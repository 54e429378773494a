//! Command-line front-end for `refinemask`.
//!
//! Exit codes: 0 success, 1 the inputs violate a precondition (or a
//! check came out negative), 2 unparsable arguments, 3 I/O failure.

mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use refinemask::algebra::{parse_rational, pow2};
use refinemask::{
    cascade, equivalence_witness, mask_from_poly, mask_from_poly_at_nodes, poly_from_mask,
    reduce_mod_difference, refine_apply, Mask, Polynomial, Rational,
};
use thiserror::Error;

pub use render::{format_significant, render_csv, CsvOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "refinemask",
    version,
    about = "Exact conversions between refinement masks and refined polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the monic polynomial refined by a mask.
    PolyFromMask {
        #[arg(value_parser = parse_mask, allow_hyphen_values = true)]
        mask: Mask,
    },
    /// Print the mask supported in {0..n} (or on --nodes) refining a polynomial.
    MaskFromPoly {
        #[arg(value_parser = parse_poly, allow_hyphen_values = true)]
        poly: Polynomial,
        /// Comma-separated distinct integer nodes, one more than the degree.
        #[arg(long, value_parser = parse_nodes, allow_hyphen_values = true)]
        nodes: Option<Nodes>,
    },
    /// Check that a mask refines a polynomial.
    Verify {
        #[arg(value_parser = parse_mask, allow_hyphen_values = true)]
        mask: Mask,
        #[arg(value_parser = parse_poly, allow_hyphen_values = true)]
        poly: Polynomial,
    },
    /// Check whether two masks refine the same polynomial.
    Equiv {
        #[arg(value_parser = parse_mask, allow_hyphen_values = true)]
        first: Mask,
        #[arg(value_parser = parse_mask, allow_hyphen_values = true)]
        second: Mask,
    },
    /// Print the equivalent mask supported in {0..n}.
    Reduce {
        #[arg(value_parser = parse_mask, allow_hyphen_values = true)]
        mask: Mask,
    },
    /// Approximate the refined polynomial by the cascade iteration.
    Cascade {
        #[arg(value_parser = parse_mask, allow_hyphen_values = true)]
        mask: Mask,
        #[arg(long, default_value_t = 200)]
        max_iter: usize,
        /// Stop once one step changes no coefficient by this much (default 2^-40).
        #[arg(long, value_parser = parse_rational_arg, default_value = "1/1099511627776")]
        tol: Rational,
        /// Starting polynomial; defaults to t^n.
        #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
        p0: Option<Polynomial>,
    },
    /// Sample the refined polynomial and its weighted parts as CSV.
    RenderCsv {
        #[arg(value_parser = parse_mask, allow_hyphen_values = true)]
        mask: Mask,
        #[arg(long, value_parser = parse_rational_arg, default_value = "0", allow_hyphen_values = true)]
        t_min: Rational,
        #[arg(long, value_parser = parse_rational_arg, default_value = "3", allow_hyphen_values = true)]
        t_max: Rational,
        #[arg(long, default_value_t = 301, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_mask(s: &str) -> Result<Mask, String> {
    s.parse().map_err(|e: refinemask::Error| e.to_string())
}

fn parse_poly(s: &str) -> Result<Polynomial, String> {
    s.parse().map_err(|e: refinemask::Error| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Integer node set for `mask-from-poly --nodes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nodes(pub Vec<i64>);

fn parse_nodes(s: &str) -> Result<Nodes, String> {
    s.split(',')
        .map(|x| x.parse::<i64>().map_err(|_| format!("invalid node `{x}`")))
        .collect::<Result<_, _>>()
        .map(Nodes)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] refinemask::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(refinemask::Error::Parse(_)) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Io(_) | CliError::Csv(_) => EXIT_IO,
        }
    }
}

/// Runs one command, writing its report to `out`. Returns the exit code for
/// completed commands whose answer is negative (failed verification,
/// inequivalent masks, unconverged cascade).
pub fn run(command: Command, out: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::PolyFromMask { mask } => {
            writeln!(out, "{}", poly_from_mask(&mask)?)?;
            Ok(EXIT_OK)
        }
        Command::MaskFromPoly { poly, nodes } => {
            let mask = match nodes {
                Some(Nodes(nodes)) => mask_from_poly_at_nodes(&poly, &nodes)?,
                None => mask_from_poly(&poly)?,
            };
            writeln!(out, "{mask}")?;
            Ok(EXIT_OK)
        }
        Command::Verify { mask, poly } => {
            let residual = &refine_apply(&mask, &poly) - &poly;
            if residual.is_zero() {
                writeln!(out, "OK")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "residual: {residual}")?;
                Ok(EXIT_DOMAIN)
            }
        }
        Command::Equiv { first, second } => match equivalence_witness(&first, &second) {
            Some(witness) => {
                writeln!(out, "equivalent")?;
                writeln!(out, "witness: {witness}")?;
                Ok(EXIT_OK)
            }
            None => {
                writeln!(out, "not equivalent")?;
                Ok(EXIT_DOMAIN)
            }
        },
        Command::Reduce { mask } => {
            let n = mask.degree_from_sum()?;
            writeln!(out, "{}", reduce_mod_difference(&mask, n).0)?;
            Ok(EXIT_OK)
        }
        Command::Cascade {
            mask,
            max_iter,
            tol,
            p0,
        } => {
            let start = match p0 {
                Some(p) => p,
                None => Polynomial::monomial(mask.degree_from_sum()?),
            };
            let report = cascade(&mask, &start, max_iter, &tol)?;
            let approx: Vec<String> = report
                .result
                .coeffs()
                .iter()
                .map(|c| format_significant(num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)))
                .collect();
            writeln!(out, "converged: {}", report.converged)?;
            writeln!(out, "iterations: {}", report.iterations)?;
            writeln!(out, "final_delta: {}", report.final_delta)?;
            writeln!(out, "result: {}", report.result)?;
            writeln!(out, "approx: {}", approx.join(","))?;
            Ok(if report.converged {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            })
        }
        Command::RenderCsv {
            mask,
            t_min,
            t_max,
            samples,
            out: path,
        } => {
            let options = CsvOptions {
                t_min,
                t_max,
                samples: samples as usize,
            };
            match path {
                Some(path) => {
                    let file = std::fs::File::create(&path)?;
                    render_csv(&mask, &options, file)?;
                }
                None => render_csv(&mask, &options, out)?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Default cascade tolerance, `2^-40`.
pub fn default_tolerance() -> Rational {
    pow2(-40)
}
