//! Interaction networks.
//!
//! A [`Network`] is a dense `n x n` matrix of nonnegative coordination
//! weights. Entry `(i, j)` is agent `i`'s weight on matching agent `j`'s
//! action. Construction only checks shape and finiteness; the model
//! assumptions (zero diagonal, nonnegative weights, out-degree strictly
//! below one) are checked separately by [`validate`] so that a file with a
//! bad row sum can still be loaded and diagnosed.

mod family;
mod io;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use family::{CorePeripheryParams, Family, PeripheryAllocation};
pub use io::{load, save, to_json_string, NetworkFile};

/// Slack used when a row is allowed to sum to exactly one.
pub const STOCHASTIC_SLACK: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Network {
    n: usize,
    weights: Vec<f64>,
}

impl Network {
    /// The network with no links.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            weights: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let mut weights = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: row.len(),
                });
            }
            weights.extend(row);
        }
        Self::from_dense(n, weights)
    }

    /// Row-major construction.
    pub fn from_dense(n: usize, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: weights.len(),
            });
        }
        if let Some(pos) = weights.iter().position(|w| !w.is_finite()) {
            return Err(Error::InvalidNetwork(format!(
                "non-finite weight at ({}, {})",
                pos / n,
                pos % n
            )));
        }
        Ok(Self { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, w: f64) {
        self.weights[i * self.n + j] = w;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.weights[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// `d_i^out`, the sum of `i`'s weights on others.
    pub fn out_degree(&self, i: usize) -> f64 {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| w)
            .sum()
    }

    /// `d_i^in`, the total weight others place on `i`.
    pub fn in_degree(&self, i: usize) -> f64 {
        (0..self.n)
            .filter(|&j| j != i)
            .map(|j| self.weight(j, i))
            .sum()
    }

    pub fn out_degrees(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.out_degree(i)).collect()
    }

    pub fn in_degrees(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.in_degree(i)).collect()
    }

    pub fn max_out_degree(&self) -> f64 {
        self.out_degrees().into_iter().fold(0.0, f64::max)
    }

    /// Iterator over the positive off-diagonal entries as `(i, j, w)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n).filter(move |&j| j != i).filter_map(move |j| {
                let w = self.weight(i, j);
                (w != 0.0).then_some((i, j, w))
            })
        })
    }

    /// Entrywise `self <= other`.
    pub fn is_dominated_by(&self, other: &Network) -> bool {
        self.n == other.n && self.weights.iter().zip(&other.weights).all(|(a, b)| a <= b)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| (self.weight(i, j) - self.weight(j, i)).abs() <= tol))
    }

    pub(crate) fn check_square(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    TooFewAgents,
    SelfWeight,
    NegativeWeight,
    RowSum,
}

/// One broken network assumption.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub agent: usize,
    pub rule: Rule,
    /// The offending value: the weight, the row sum, or the agent count.
    pub value: f64,
    /// Target agent for per-entry rules.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rule {
            Rule::TooFewAgents => write!(f, "network has {} agents, need at least 2", self.value),
            Rule::SelfWeight => write!(
                f,
                "nonzero self weight {} at agent {}",
                self.value, self.agent
            ),
            Rule::NegativeWeight => write!(
                f,
                "negative weight {} from agent {} to agent {}",
                self.value,
                self.agent,
                self.target.unwrap_or(self.agent)
            ),
            Rule::RowSum => write!(f, "row sum {} >= 1 at agent {}", self.value, self.agent),
        }
    }
}

/// How strictly to read the out-degree assumption.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowSumBound {
    /// `d_i^out < 1`, the baseline model.
    Strict,
    /// `d_i^out <= 1`, admitted by the intensity-weighted payoff model where
    /// the normalized network is substochastic whenever every `r_i < 1`.
    Stochastic,
}

/// Checks the baseline model assumptions. Empty result means valid.
pub fn validate(net: &Network) -> Vec<Violation> {
    validate_with(net, RowSumBound::Strict)
}

pub fn validate_with(net: &Network, bound: RowSumBound) -> Vec<Violation> {
    let mut out = Vec::new();
    if net.n() < 2 {
        out.push(Violation {
            agent: 0,
            rule: Rule::TooFewAgents,
            value: net.n() as f64,
            target: None,
        });
    }
    for i in 0..net.n() {
        let self_w = net.weight(i, i);
        if self_w != 0.0 {
            out.push(Violation {
                agent: i,
                rule: Rule::SelfWeight,
                value: self_w,
                target: None,
            });
        }
        for j in (0..net.n()).filter(|&j| j != i) {
            let w = net.weight(i, j);
            if w < 0.0 {
                out.push(Violation {
                    agent: i,
                    rule: Rule::NegativeWeight,
                    value: w,
                    target: Some(j),
                });
            }
        }
        let d = net.out_degree(i);
        let broken = match bound {
            RowSumBound::Strict => d >= 1.0,
            RowSumBound::Stochastic => d > 1.0 + STOCHASTIC_SLACK,
        };
        if broken {
            out.push(Violation {
                agent: i,
                rule: Rule::RowSum,
                value: d,
                target: None,
            });
        }
    }
    out
}

pub(crate) fn require_valid(net: &Network, bound: RowSumBound) -> Result<()> {
    let violations = validate_with(net, bound);
    if violations.is_empty() {
        return Ok(());
    }
    let msg = violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ");
    Err(Error::InvalidNetwork(msg))
}

/// Per-agent coordination intensities `r_i`, each strictly inside (0, 1).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct IntensityProfile(Vec<f64>);

impl IntensityProfile {
    pub fn new(r: Vec<f64>) -> Result<Self> {
        if let Some((i, v)) = r
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v > 0.0 && **v < 1.0))
        {
            return Err(Error::param(
                format!("r[{i}]"),
                format!("{v} is not in (0, 1)"),
            ));
        }
        Ok(Self(r))
    }

    pub fn uniform(n: usize, r: f64) -> Result<Self> {
        Self::new(vec![r; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for IntensityProfile {
    type Error = Error;

    fn try_from(r: Vec<f64>) -> Result<Self> {
        Self::new(r)
    }
}

impl From<IntensityProfile> for Vec<f64> {
    fn from(r: IntensityProfile) -> Self {
        r.0
    }
}

/// Total payoff weight `K_i = 1 - r_i + r_i d_i^out` under the
/// intensity-weighted payoff.
pub fn total_payoff_weights(net: &Network, r: &IntensityProfile) -> Result<Vec<f64>> {
    net.check_square(r.len())?;
    Ok(r.as_slice()
        .iter()
        .enumerate()
        .map(|(i, &ri)| 1.0 - ri + ri * net.out_degree(i))
        .collect())
}

/// `g~_ij = r_i g_ij / (1 - r_i + r_i d_i^out)`.
///
/// Accepts row-stochastic `net` (out-degree exactly one) since the result is
/// strictly substochastic for every admissible `r`.
pub fn normalized_network(net: &Network, r: &IntensityProfile) -> Result<Network> {
    require_valid(net, RowSumBound::Stochastic)?;
    let k = total_payoff_weights(net, r)?;
    let n = net.n();
    let mut out = Network::empty(n);
    for i in 0..n {
        let scale = r.as_slice()[i] / k[i];
        for j in (0..n).filter(|&j| j != i) {
            out.set(i, j, scale * net.weight(i, j));
        }
    }
    Ok(out)
}

/// The planner's network `g^F_ij = (g_ij + g_ji) / (1 + d_i^in)`.
pub fn fictitious_network(net: &Network) -> Result<Network> {
    require_valid(net, RowSumBound::Strict)?;
    let n = net.n();
    let d_in = net.in_degrees();
    let mut out = Network::empty(n);
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            out.set(
                i,
                j,
                (net.weight(i, j) + net.weight(j, i)) / (1.0 + d_in[i]),
            );
        }
    }
    Ok(out)
}
