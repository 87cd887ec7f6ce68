use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use netgame_core::equilibrium::SignalParams;
use netgame_core::graph::{self, Family};
use netgame_core::regions::RegionKind;
use netgame_core::Network;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "netgame",
    version,
    about = "Equilibrium and welfare of networked beauty-contest games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the network assumptions and bound the spectral radius.
    Validate {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Katz-Bonacich centrality and its sensitivity.
    Centrality {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Equilibrium slopes under an information structure.
    Equilibrium {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        variant: VariantArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Expected payoffs and second moments of actions.
    Payoffs {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        variant: VariantArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Payoff and welfare change from adding the public signal.
    Welfare {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        sig: SigArgs,
        /// Coordination intensities, one value or one per agent.
        #[arg(long, value_delimiter = ',')]
        r: Option<Vec<f64>>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Derivative of welfare in the public precision.
    Marginal {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Whether a signal holder shares, and whether society agrees.
    Share {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        sig: SigArgs,
        /// Zero-based index of the agent holding the signal.
        #[arg(long)]
        holder: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Membership grid of a harmful-information region.
    Region {
        #[arg(long, value_parser = parse_kind)]
        kind: RegionKind,
        #[arg(long)]
        gamma: f64,
        /// Core size, required for H and J.
        #[arg(long)]
        l: Option<usize>,
        /// Periphery size, required for H and J.
        #[arg(long)]
        m: Option<usize>,
        /// Write gnuplot blocks instead of CSV.
        #[arg(long)]
        tsv: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Search for a network pair where more links flip welfare.
    Reversal {
        /// Number of agents.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Monte Carlo estimate of payoffs and moments.
    Simulate {
        #[command(flatten)]
        net: NetArgs,
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        variant: VariantArgs,
        #[arg(long, default_value_t = 100_000)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the best-response and slope-sum audits.
        #[arg(long)]
        audit: bool,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct NetArgs {
    /// Network file, JSON or `.csv` edge list.
    #[arg(long)]
    net: Option<PathBuf>,
    /// `empty:n`, `regular:n,d`, `abc:a,b` or `cp:l,m,a,b`.
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
}

impl NetArgs {
    pub fn load(&self) -> Result<Network, CliError> {
        match (&self.net, &self.family) {
            (Some(path), None) => Ok(graph::load(path)?),
            (None, Some(f)) => Ok(f.build()?),
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

#[derive(Debug, Args)]
pub struct SigArgs {
    /// Weight on the common signal; sets tau_x = 1.
    #[arg(long, required_unless_present_all = ["tau_x", "tau_y"], conflicts_with_all = ["tau_x", "tau_y"])]
    gamma: Option<f64>,
    #[arg(long, requires = "tau_y")]
    tau_x: Option<f64>,
    #[arg(long, requires = "tau_x")]
    tau_y: Option<f64>,
}

impl SigArgs {
    pub fn params(&self) -> Result<SignalParams, CliError> {
        Ok(match (self.gamma, self.tau_x, self.tau_y) {
            (Some(g), None, None) => SignalParams::from_gamma(g, 1.0)?,
            (None, Some(x), Some(y)) => SignalParams::new(x, y)?,
            _ => unreachable!("clap enforces gamma xor precisions"),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantName {
    Baseline,
    IPrime,
    IDagger,
    Alt,
    Efficient,
    NoPublic,
}

#[derive(Debug, Args)]
pub struct VariantArgs {
    #[arg(long, value_enum, default_value_t = VariantName::Baseline)]
    pub variant: VariantName,
    /// Signal holder for `i-dagger`.
    #[arg(long)]
    pub holder: Option<usize>,
    /// Coordination intensities for `alt`, one value or one per agent.
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Report path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Defaults to csv for `region` and json elsewhere.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: netgame_core::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<RegionKind, String> {
    s.parse().map_err(|e: netgame_core::Error| e.to_string())
}
