//! `cornerk` command-line front end.

mod commands;
mod errors;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{run, Rendered};
pub use errors::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ManifoldArg {
    /// Builtin spec (`cube:3`, `simplex:2`, `product:cube:1,cube:2`) or a JSON file.
    #[arg(long)]
    pub manifold: String,
}

#[derive(Parser, Debug)]
#[command(name = "cornerk", version, about = "K-theory of b-operator algebras on manifolds with corners")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Face lattice with orientations and incidence numbers.
    Faces {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[command(flatten)]
        output: Output,
    },
    /// Check the face lattice axioms; exits 1 on violations.
    Validate {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[command(flatten)]
        output: Output,
    },
    /// E¹ page of the composition-series spectral sequence.
    E1 {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[command(flatten)]
        output: Output,
    },
    /// d₁ differentials; all of them unless `--l` and `--i` pick one.
    D1 {
        #[command(flatten)]
        manifold: ManifoldArg,
        /// Target face dimension.
        #[arg(long, requires = "i")]
        l: Option<usize>,
        /// Target K-theory degree.
        #[arg(long, requires = "l", allow_hyphen_values = true)]
        i: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// E² page.
    E2 {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[command(flatten)]
        output: Output,
    },
    /// Six-term exact sequence completion.
    Sixterm {
        /// JSON file, or `wiener-hopf[:INDEX]` (index defaults to -1).
        #[arg(long, default_value = "wiener-hopf")]
        problem: String,
        #[command(flatten)]
        output: Output,
    },
    /// K₁(Q_M) for a manifold with boundary.
    #[command(name = "boundary-k1")]
    BoundaryK1 {
        /// K₁ of the b-cosphere bundle, e.g. `Z^2 + Z/2` or `rank=1,torsion=2`.
        #[arg(long = "k1-sstar")]
        k1_sstar: String,
        #[command(flatten)]
        output: Output,
    },
    /// Fredholm index of a Toeplitz operator.
    Toeplitz {
        /// Comma-separated `exp:re[,im]` terms, e.g. `1:1` for z.
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        /// Fixed sample count for the argument integration.
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Equivariant index pairing (−1)^n ⟨Ch(a)·Td, [Y]⟩.
    Pairing {
        /// Builtin ring (`torus:2`, `product:sphere:2,cp:1`, ...) or a JSON file.
        #[arg(long)]
        ring: String,
        /// Ch(a) as `label:coef` pairs, e.g. `1:1,t1*t2:1`.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Pulled-back Todd class, same syntax.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        todd: String,
        /// Dimension n of the fibre F.
        #[arg(long = "dim-f")]
        dim_f: usize,
        #[command(flatten)]
        output: Output,
    },
    /// E¹, d₁ and E² in one document.
    Report {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[command(flatten)]
        output: Output,
    },
}

impl Command {
    pub fn output(&self) -> &Output {
        match self {
            Command::Faces { output, .. }
            | Command::Validate { output, .. }
            | Command::E1 { output, .. }
            | Command::D1 { output, .. }
            | Command::E2 { output, .. }
            | Command::Sixterm { output, .. }
            | Command::BoundaryK1 { output, .. }
            | Command::Toeplitz { output, .. }
            | Command::Pairing { output, .. }
            | Command::Report { output, .. } => output,
        }
    }
}

/// Level filter from `CORNERK_LOG` (`quiet`, `info`, `debug`; unset means warnings only).
pub fn log_level(value: Option<&str>) -> Result<log::LevelFilter, CliError> {
    match value {
        None | Some("") => Ok(log::LevelFilter::Warn),
        Some("quiet") => Ok(log::LevelFilter::Off),
        Some("info") => Ok(log::LevelFilter::Info),
        Some("debug") => Ok(log::LevelFilter::Debug),
        Some(other) => Err(CliError::parse(
            "cli",
            "env",
            format!("CORNERK_LOG must be quiet, info or debug, got {other:?}"),
        )),
    }
}
