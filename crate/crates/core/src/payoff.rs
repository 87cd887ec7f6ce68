//! Quadratic payoffs and the moment expansion for arbitrary linear profiles.
//!
//! Every payoff in this crate has the form
//!
//! ```text
//! u_i(a, theta) = -w0_i (a_i - theta)^2 - sum_j w_ij (a_i - a_j)^2
//! ```
//!
//! with `w0_i = 1 - d_i^out, w_ij = g_ij` in the baseline game and
//! `w0_i = 1 - r_i, w_ij = r_i g_ij` under intensity weighting. For a
//! profile whose slopes sum to one, `X_i = a_i - theta` is a linear
//! combination of noise terms, so expected payoffs follow from the second
//! moments `E[X_i X_j]` alone. This path works for any slopes; the closed
//! forms in [`crate::equilibrium`] hold only at equilibrium.

use serde::{Deserialize, Serialize};

use crate::equilibrium::{EquilibriumProfile, SignalParams, SignalSource};
use crate::error::{Error, Result};
use crate::graph::{IntensityProfile, Network};

/// Tolerance on `signal + private = 1` per agent.
pub const SLOPE_SUM_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct PayoffWeights {
    n: usize,
    adapt: Vec<f64>,
    coord: Vec<f64>,
}

impl PayoffWeights {
    pub fn baseline(net: &Network) -> Self {
        let n = net.n();
        let mut coord = net.as_slice().to_vec();
        for i in 0..n {
            coord[i * n + i] = 0.0;
        }
        Self {
            n,
            adapt: net.out_degrees().iter().map(|d| 1.0 - d).collect(),
            coord,
        }
    }

    pub fn intensity(net: &Network, r: &IntensityProfile) -> Result<Self> {
        net.check_square(r.len())?;
        let n = net.n();
        let r = r.as_slice();
        let mut coord = vec![0.0; n * n];
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                coord[i * n + j] = r[i] * net.weight(i, j);
            }
        }
        Ok(Self {
            n,
            adapt: r.iter().map(|ri| 1.0 - ri).collect(),
            coord,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adapt(&self, i: usize) -> f64 {
        self.adapt[i]
    }

    #[inline]
    pub fn coord(&self, i: usize, j: usize) -> f64 {
        self.coord[i * self.n + j]
    }

    pub fn coord_row(&self, i: usize) -> &[f64] {
        &self.coord[i * self.n..(i + 1) * self.n]
    }

    /// `w0_i + sum_j w_ij`; one in the baseline game, `K_i` under intensity weighting.
    pub fn total(&self, i: usize) -> f64 {
        self.adapt[i] + self.coord_row(i).iter().sum::<f64>()
    }

    /// Realized payoff of agent `i`.
    #[inline]
    pub fn realized(&self, i: usize, theta: f64, actions: &[f64]) -> f64 {
        let own = actions[i];
        let coord: f64 = self
            .coord_row(i)
            .iter()
            .zip(actions)
            .map(|(w, a)| w * (own - a) * (own - a))
            .sum();
        -self.adapt[i] * (own - theta) * (own - theta) - coord
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PayoffReport {
    pub per_agent: Vec<f64>,
    pub aggregate: f64,
    /// `E[X_i X_j]` with `X_i = a_i - theta`.
    pub moments: Vec<Vec<f64>>,
}

impl PayoffReport {
    pub fn new(per_agent: Vec<f64>, moments: Vec<Vec<f64>>) -> Self {
        let aggregate = per_agent.iter().sum();
        Self {
            per_agent,
            aggregate,
            moments,
        }
    }
}

fn signal_variance(source: SignalSource, sig: &SignalParams, slope: f64) -> Result<f64> {
    match source {
        SignalSource::Absent if slope != 0.0 => Err(Error::param(
            "profile",
            "nonzero slope on a signal the agent does not observe",
        )),
        SignalSource::Absent => Ok(0.0),
        _ if slope == 0.0 => Ok(0.0),
        _ if sig.tau_y() > 0.0 => Ok(1.0 / sig.tau_y()),
        _ => Err(Error::Config(
            "a profile that uses the second signal needs tau_y > 0".into(),
        )),
    }
}

/// `E[X_i X_j]` for a profile with slope sums equal to one.
pub fn profile_moments(profile: &EquilibriumProfile, sig: &SignalParams) -> Result<Vec<Vec<f64>>> {
    profile.check_slope_sums(SLOPE_SUM_TOL)?;
    let n = profile.n();
    let var_x = 1.0 / sig.tau_x();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        let s_i = profile.slopes_public[i];
        let p_i = profile.slopes_private[i];
        let var_s = signal_variance(profile.sources[i], sig, s_i)?;
        m[i][i] = p_i * p_i * var_x + s_i * s_i * var_s;
        for j in 0..i {
            let shared = profile.sources[i] == SignalSource::Public
                && profile.sources[j] == SignalSource::Public;
            if shared {
                let v = s_i * profile.slopes_public[j] / sig.tau_y();
                m[i][j] = v;
                m[j][i] = v;
            }
        }
    }
    Ok(m)
}

/// `U_i = -w0_i E[X_i^2] - sum_j w_ij E[(X_i - X_j)^2]`.
pub fn payoffs_from_moments(weights: &PayoffWeights, moments: &[Vec<f64>]) -> Vec<f64> {
    (0..weights.n())
        .map(|i| {
            let coord: f64 = (0..weights.n())
                .map(|j| {
                    weights.coord(i, j) * (moments[i][i] - 2.0 * moments[i][j] + moments[j][j])
                })
                .sum();
            -weights.adapt(i) * moments[i][i] - coord
        })
        .collect()
}

/// Expected payoffs of an arbitrary slope-sum-one profile.
pub fn profile_payoffs(
    weights: &PayoffWeights,
    profile: &EquilibriumProfile,
    sig: &SignalParams,
) -> Result<PayoffReport> {
    if weights.n() != profile.n() {
        return Err(Error::Dimension {
            expected: weights.n(),
            found: profile.n(),
        });
    }
    let moments = profile_moments(profile, sig)?;
    let per_agent = payoffs_from_moments(weights, &moments);
    Ok(PayoffReport::new(per_agent, moments))
}
