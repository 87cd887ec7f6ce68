//! Linear equilibria of beauty-contest games played on weighted networks,
//! and the welfare value of a public signal in them.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod centrality;
pub mod equilibrium;
pub mod error;
pub mod format;
pub mod graph;
pub mod montecarlo;
pub mod payoff;
pub mod regions;
pub mod welfare;

pub use centrality::{katz_bonacich, spectral_bound, CentralityProfile, SpectralBound};
pub use equilibrium::{EquilibriumProfile, SignalParams, SignalSource, Variant};
pub use error::{Error, Result};
pub use graph::{Family, IntensityProfile, Network};
