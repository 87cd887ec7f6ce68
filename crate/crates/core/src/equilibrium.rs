//! Linear equilibria and their payoffs.
//!
//! Each agent plays `a_i = s_i * (second signal) + p_i * x_i` with
//! `s_i + p_i = 1`. In the baseline structure the second signal is the
//! public `y`, and `s_i = (1 - gamma) c_i(gamma, G)`.

use serde::{Deserialize, Serialize};

use crate::centrality::{check_gamma, katz_bonacich, CentralityProfile};
use crate::error::{Error, Result};
use crate::graph::{
    fictitious_network, normalized_network, require_valid, IntensityProfile, Network, RowSumBound,
};
use crate::payoff::{payoffs_from_moments, profile_moments, PayoffReport, PayoffWeights};

/// Max FOC residual accepted from the solvers.
pub const FOC_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SignalParams {
    tau_x: f64,
    tau_y: f64,
    gamma: f64,
}

impl SignalParams {
    /// `tau_y = 0` is the no-public benchmark, where `gamma = 1`.
    pub fn new(tau_x: f64, tau_y: f64) -> Result<Self> {
        if !(tau_x > 0.0 && tau_x.is_finite()) {
            return Err(Error::param(
                "tau_x",
                format!("{tau_x} is not a positive finite number"),
            ));
        }
        if !(tau_y >= 0.0 && tau_y.is_finite()) {
            return Err(Error::param(
                "tau_y",
                format!("{tau_y} is not a nonnegative finite number"),
            ));
        }
        Ok(Self {
            tau_x,
            tau_y,
            gamma: tau_x / (tau_x + tau_y),
        })
    }

    /// Keeps `gamma` exactly and derives `tau_y = tau_x (1 - gamma) / gamma`.
    pub fn from_gamma(gamma: f64, tau_x: f64) -> Result<Self> {
        check_gamma(gamma)?;
        let mut s = Self::new(tau_x, tau_x * (1.0 - gamma) / gamma)?;
        s.gamma = gamma;
        Ok(s)
    }

    pub fn tau_x(&self) -> f64 {
        self.tau_x
    }

    pub fn tau_y(&self) -> f64 {
        self.tau_y
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn has_public(&self) -> bool {
        self.tau_y > 0.0
    }

    /// `gamma`, or an error in the no-public benchmark.
    pub fn require_public(&self) -> Result<f64> {
        if self.has_public() {
            Ok(self.gamma)
        } else {
            Err(Error::param(
                "tau_y",
                "must be positive for this computation",
            ))
        }
    }

    /// Same private precision, public signal removed.
    pub fn without_public(&self) -> Self {
        Self {
            tau_x: self.tau_x,
            tau_y: 0.0,
            gamma: 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Variant {
    Baseline,
    /// Carol swaps `y` for an independent signal `z` of equal precision.
    IPrime,
    /// Only `holder` observes `y`.
    IDagger {
        holder: usize,
    },
    AltPayoff {
        r: IntensityProfile,
    },
    Efficient,
    NoPublic,
}

/// What the first slope of an agent multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignalSource {
    /// The common signal `y`.
    Public,
    /// A signal with the precision of `y` but independent noise.
    Independent,
    Absent,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumProfile {
    pub variant: Variant,
    pub sources: Vec<SignalSource>,
    /// Weight on the second signal (`y`, or `z` where the source is independent).
    pub slopes_public: Vec<f64>,
    pub slopes_private: Vec<f64>,
}

impl EquilibriumProfile {
    fn from_public_slopes(variant: Variant, slopes_public: Vec<f64>) -> Self {
        let n = slopes_public.len();
        Self {
            variant,
            sources: vec![SignalSource::Public; n],
            slopes_private: slopes_public.iter().map(|b| 1.0 - b).collect(),
            slopes_public,
        }
    }

    /// Everybody plays their private signal.
    pub fn no_public(n: usize) -> Self {
        Self {
            variant: Variant::NoPublic,
            sources: vec![SignalSource::Absent; n],
            slopes_public: vec![0.0; n],
            slopes_private: vec![1.0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.slopes_public.len()
    }

    /// `max_i |s_i + p_i - 1|`.
    pub fn slope_sum_error(&self) -> f64 {
        self.slopes_public
            .iter()
            .zip(&self.slopes_private)
            .map(|(s, p)| (s + p - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn check_slope_sums(&self, tol: f64) -> Result<()> {
        let n = self.n();
        if self.sources.len() != n || self.slopes_private.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: self.sources.len().min(self.slopes_private.len()),
            });
        }
        let err = self.slope_sum_error();
        if err > tol {
            return Err(Error::param(
                "profile",
                format!("slopes must sum to one per agent (off by {err:e})"),
            ));
        }
        Ok(())
    }

    /// Moves agent `i` to second-signal slope `s`, keeping the sum at one.
    pub fn with_public_slope(&self, i: usize, s: f64) -> Self {
        let mut p = self.clone();
        p.slopes_public[i] = s;
        p.slopes_private[i] = 1.0 - s;
        p
    }
}

/// `max_i |b_i - gamma sum_j g_ij b_j - (1 - gamma)|`.
pub fn foc_residual(net: &Network, gamma: f64, slopes_public: &[f64]) -> f64 {
    (0..net.n())
        .map(|i| {
            let walk: f64 = (0..net.n())
                .filter(|&j| j != i)
                .map(|j| net.weight(i, j) * slopes_public[j])
                .sum();
            (slopes_public[i] - gamma * walk - (1.0 - gamma)).abs()
        })
        .fold(0.0, f64::max)
}

fn centrality_profile(variant: Variant, net: &Network, gamma: f64) -> Result<EquilibriumProfile> {
    let c = katz_bonacich(net, gamma)?.c;
    let b: Vec<f64> = c.iter().map(|ci| (1.0 - gamma) * ci).collect();
    let r = foc_residual(net, gamma, &b);
    if !(r <= FOC_TOL) {
        return Err(Error::Numerical {
            residual: r,
            tolerance: FOC_TOL,
        });
    }
    Ok(EquilibriumProfile::from_public_slopes(variant, b))
}

pub fn solve_equilibrium(net: &Network, sig: &SignalParams) -> Result<EquilibriumProfile> {
    let gamma = sig.require_public()?;
    require_valid(net, RowSumBound::Strict)?;
    centrality_profile(Variant::Baseline, net, gamma)
}

/// Equilibrium second moments of `X_i = a_i - theta` in closed form.
pub fn moments(net: &Network, sig: &SignalParams) -> Result<Vec<Vec<f64>>> {
    let gamma = sig.require_public()?;
    require_valid(net, RowSumBound::Strict)?;
    let c = katz_bonacich(net, gamma)?.c;
    Ok(closed_form_moments(&c, sig))
}

fn closed_form_moments(c: &[f64], sig: &SignalParams) -> Vec<Vec<f64>> {
    let (g, vx, vy) = (sig.gamma(), 1.0 / sig.tau_x(), 1.0 / sig.tau_y());
    let n = c.len();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = if i == j {
                vx * (1.0 - g) * c[i] * (c[i] - 2.0) + vx
            } else {
                vy * (1.0 - g) * (1.0 - g) * c[i] * c[j]
            };
        }
    }
    m
}

/// `max_i |sum_j g_ij E[X_i X_j] - tau_x^{-1} (1 - gamma) c_i (c_i - 1)|`.
pub fn covariance_identity_residual(
    net: &Network,
    sig: &SignalParams,
    centrality: &CentralityProfile,
    moments: &[Vec<f64>],
) -> f64 {
    let (g, vx) = (sig.gamma(), 1.0 / sig.tau_x());
    let c = &centrality.c;
    (0..net.n())
        .map(|i| {
            let lhs: f64 = (0..net.n())
                .filter(|&j| j != i)
                .map(|j| net.weight(i, j) * moments[i][j])
                .sum();
            (lhs - vx * (1.0 - g) * c[i] * (c[i] - 1.0)).abs()
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PayoffVariant {
    Baseline,
    NoPublic,
}

/// `-tau_x^{-1} (1 + d_i^out)`.
pub fn no_public_payoffs(net: &Network, tau_x: f64) -> Vec<f64> {
    net.out_degrees()
        .iter()
        .map(|d| -(1.0 + d) / tau_x)
        .collect()
}

/// Closed-form expected payoffs at the baseline equilibrium or with no public signal.
pub fn payoffs(net: &Network, sig: &SignalParams, variant: PayoffVariant) -> Result<PayoffReport> {
    require_valid(net, RowSumBound::Strict)?;
    let n = net.n();
    let vx = 1.0 / sig.tau_x();
    match variant {
        PayoffVariant::NoPublic => {
            let mut m = vec![vec![0.0; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = vx;
            }
            Ok(PayoffReport::new(no_public_payoffs(net, sig.tau_x()), m))
        }
        PayoffVariant::Baseline => {
            let gamma = sig.require_public()?;
            let c = katz_bonacich(net, gamma)?.c;
            let base = no_public_payoffs(net, sig.tau_x());
            let per_agent = (0..n)
                .map(|i| vx * (1.0 - gamma) * gain_statistic(net, &c, i) + base[i])
                .collect();
            Ok(PayoffReport::new(per_agent, closed_form_moments(&c, sig)))
        }
    }
}

/// `c_i^2 - sum_j g_ij c_j (c_j - 2)`.
pub(crate) fn gain_statistic(net: &Network, c: &[f64], i: usize) -> f64 {
    let walk: f64 = (0..net.n())
        .filter(|&j| j != i)
        .map(|j| net.weight(i, j) * c[j] * (c[j] - 2.0))
        .sum();
    c[i] * c[i] - walk
}

/// `(alpha, beta)` if `net` is exactly an Ann/Bob/Carol network.
pub fn abc_parameters(net: &Network) -> Option<(f64, f64)> {
    if net.n() != 3 {
        return None;
    }
    let (alpha, beta) = (net.weight(0, 1), net.weight(1, 2));
    let others = [(0, 2), (1, 0), (2, 0)];
    let pattern = net.weight(2, 1) == beta && others.iter().all(|&(i, j)| net.weight(i, j) == 0.0);
    pattern.then_some((alpha, beta))
}

fn check_unit(name: &str, v: f64) -> Result<()> {
    if (0.0..1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::param(name, format!("{v} is not in [0, 1)")))
    }
}

/// Equilibrium when Carol observes an independent signal instead of `y`.
pub fn solve_i_prime(alpha: f64, beta: f64, gamma: f64) -> Result<EquilibriumProfile> {
    check_unit("alpha", alpha)?;
    check_unit("beta", beta)?;
    check_gamma(gamma)?;
    let ann = (1.0 - gamma) * (1.0 + gamma * alpha);
    Ok(EquilibriumProfile {
        variant: Variant::IPrime,
        sources: vec![
            SignalSource::Public,
            SignalSource::Public,
            SignalSource::Independent,
        ],
        slopes_public: vec![ann, 1.0 - gamma, 1.0 - gamma],
        slopes_private: vec![gamma * (1.0 - alpha + gamma * alpha), gamma, gamma],
    })
}

/// [`solve_i_prime`] for a network given as a matrix; only the three-agent
/// Ann/Bob/Carol topology is supported.
pub fn solve_i_prime_on(net: &Network, gamma: f64) -> Result<EquilibriumProfile> {
    let (alpha, beta) = abc_parameters(net).ok_or_else(|| {
        Error::Unsupported(
            "the independent-signal counterfactual is defined only on the abc network".into(),
        )
    })?;
    solve_i_prime(alpha, beta, gamma)
}

/// `U'_A - U_A = tau_x^{-1} (1 - gamma) ((1 + gamma alpha)^2 + alpha - f / (1 - gamma beta)^2)`.
pub fn i_prime_ann_gain(alpha: f64, beta: f64, gamma: f64, tau_x: f64) -> f64 {
    let f = crate::regions::f(alpha, beta, gamma);
    let k = 1.0 - gamma * beta;
    (1.0 - gamma) / tau_x * ((1.0 + gamma * alpha).powi(2) + alpha - f / (k * k))
}

/// Ann strictly prefers the independent-signal structure.
pub fn ann_prefers_i_prime(alpha: f64, beta: f64, gamma: f64) -> bool {
    let k = 1.0 - gamma * beta;
    crate::regions::f(alpha, beta, gamma) < k * k * ((1.0 + gamma * alpha).powi(2) + alpha)
}

fn check_holder(net: &Network, holder: usize) -> Result<()> {
    if holder < net.n() {
        Ok(())
    } else {
        Err(Error::param(
            "holder",
            format!("agent {holder} does not exist in a network of {}", net.n()),
        ))
    }
}

/// Equilibrium when only `holder` observes `y`.
pub fn solve_i_dagger(
    net: &Network,
    sig: &SignalParams,
    holder: usize,
) -> Result<EquilibriumProfile> {
    let gamma = sig.require_public()?;
    require_valid(net, RowSumBound::Strict)?;
    check_holder(net, holder)?;
    let mut p = EquilibriumProfile::no_public(net.n());
    p.variant = Variant::IDagger { holder };
    p.sources[holder] = SignalSource::Public;
    p.slopes_public[holder] = 1.0 - gamma;
    p.slopes_private[holder] = gamma;
    Ok(p)
}

/// Closed-form payoffs when only `holder` observes `y`.
pub fn payoffs_i_dagger(net: &Network, sig: &SignalParams, holder: usize) -> Result<PayoffReport> {
    let profile = solve_i_dagger(net, sig, holder)?;
    let gain = (1.0 - sig.gamma()) / sig.tau_x();
    let per_agent = no_public_payoffs(net, sig.tau_x())
        .into_iter()
        .enumerate()
        .map(|(i, u)| {
            let share = if i == holder {
                1.0
            } else {
                net.weight(i, holder)
            };
            u + gain * share
        })
        .collect();
    Ok(PayoffReport::new(
        per_agent,
        profile_moments(&profile, sig)?,
    ))
}

/// Equilibrium under intensity-weighted payoffs: baseline slopes on the normalized network.
pub fn solve_alt_payoff(
    net: &Network,
    r: &IntensityProfile,
    sig: &SignalParams,
) -> Result<EquilibriumProfile> {
    let gamma = sig.require_public()?;
    let tilde = normalized_network(net, r)?;
    centrality_profile(Variant::AltPayoff { r: r.clone() }, &tilde, gamma)
}

/// The planner's linear profile: baseline slopes on the fictitious network.
pub fn solve_efficient(net: &Network, sig: &SignalParams) -> Result<EquilibriumProfile> {
    let gamma = sig.require_public()?;
    let planner = fictitious_network(net)?;
    centrality_profile(Variant::Efficient, &planner, gamma)
}

/// Expected baseline payoffs of an arbitrary profile on `net`.
pub fn baseline_payoffs_of(
    net: &Network,
    profile: &EquilibriumProfile,
    sig: &SignalParams,
) -> Result<PayoffReport> {
    let weights = PayoffWeights::baseline(net);
    let m = profile_moments(profile, sig)?;
    Ok(PayoffReport::new(payoffs_from_moments(&weights, &m), m))
}
