//! Welfare effects of the public signal.
//!
//! With `c = c(gamma, G)`:
//!
//! ```text
//! dU_i = tau_x^{-1} (1 - gamma) (c_i^2 - sum_j g_ij c_j (c_j - 2))
//! dW   = tau_x^{-1} (1 - gamma) S,   S = sum_i c_i ((1 - d_i^in) c_i + 2 d_i^in)
//! ```
//!
//! measured against the same game without a public signal.

use serde::{Deserialize, Serialize};

use crate::centrality::{check_gamma, katz_bonacich, CentralityProfile};
use crate::equilibrium::{gain_statistic, SignalParams};
use crate::error::{Error, Result};
use crate::graph::{
    normalized_network, require_valid, total_payoff_weights, CorePeripheryParams, Family,
    IntensityProfile, Network, RowSumBound,
};

/// Statistics within this distance of zero are reported as [`Sign::Boundary`].
pub const SIGN_DEAD_BAND: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Negative,
    Boundary,
    Positive,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < -SIGN_DEAD_BAND {
            Sign::Negative
        } else if x > SIGN_DEAD_BAND {
            Sign::Positive
        } else {
            Sign::Boundary
        }
    }
}

/// An agent meeting the necessary condition for contributing negatively to
/// welfare: `d_i^in > 1` and `c_i > 2 d_i^in / (d_i^in - 1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NegativeContributor {
    pub agent: usize,
    pub in_degree: f64,
    pub centrality: f64,
    pub cutoff: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WelfareReport {
    pub gamma: f64,
    pub delta_u: Vec<f64>,
    pub delta_w: f64,
    pub statistic_s: f64,
    pub statistic_s_prime: f64,
    /// Sign of `dW / dtau_y`, i.e. of `S - (1 - gamma) S'`.
    pub marginal_sign: Sign,
    pub harmed: Vec<usize>,
    pub negative_contributors: Vec<NegativeContributor>,
}

fn baseline_centrality(net: &Network, sig: &SignalParams) -> Result<(f64, CentralityProfile)> {
    let gamma = sig.require_public()?;
    require_valid(net, RowSumBound::Strict)?;
    Ok((gamma, katz_bonacich(net, gamma)?))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaPayoffs {
    pub delta_u: Vec<f64>,
    pub harmed: Vec<usize>,
}

/// `i` is harmed iff `c_i^2 < sum_j g_ij c_j (c_j - 2)`.
pub fn harmed_by_inequality(net: &Network, c: &[f64]) -> Vec<usize> {
    (0..net.n())
        .filter(|&i| {
            let rhs: f64 = (0..net.n())
                .filter(|&j| j != i)
                .map(|j| net.weight(i, j) * c[j] * (c[j] - 2.0))
                .sum();
            c[i] * c[i] < rhs
        })
        .collect()
}

fn delta_u_from(net: &Network, c: &[f64], gamma: f64, tau_x: f64) -> Vec<f64> {
    (0..net.n())
        .map(|i| (1.0 - gamma) / tau_x * gain_statistic(net, c, i))
        .collect()
}

pub fn delta_payoffs(net: &Network, sig: &SignalParams) -> Result<DeltaPayoffs> {
    let (gamma, cent) = baseline_centrality(net, sig)?;
    Ok(DeltaPayoffs {
        delta_u: delta_u_from(net, &cent.c, gamma, sig.tau_x()),
        harmed: harmed_by_inequality(net, &cent.c),
    })
}

fn s_from(net: &Network, c: &[f64]) -> f64 {
    net.in_degrees()
        .iter()
        .zip(c)
        .map(|(d, c)| c * ((1.0 - d) * c + 2.0 * d))
        .sum()
}

fn s_prime_from(net: &Network, cent: &CentralityProfile) -> f64 {
    let sum: f64 = net
        .in_degrees()
        .iter()
        .enumerate()
        .map(|(i, d)| (cent.sensitivity[i] - cent.c[i]) * ((1.0 - d) * cent.c[i] + d))
        .sum();
    2.0 / cent.gamma * sum
}

/// `S(gamma) = sum_i c_i ((1 - d_i^in) c_i + 2 d_i^in)`.
pub fn statistic_s(net: &Network, gamma: f64) -> Result<f64> {
    require_valid(net, RowSumBound::Strict)?;
    Ok(s_from(net, &katz_bonacich(net, gamma)?.c))
}

/// `S'(gamma) = 2 gamma^{-1} sum_i (c^c_i - c_i) ((1 - d_i^in) c_i + d_i^in)`.
pub fn statistic_s_prime(net: &Network, gamma: f64) -> Result<f64> {
    require_valid(net, RowSumBound::Strict)?;
    Ok(s_prime_from(net, &katz_bonacich(net, gamma)?))
}

pub fn delta_welfare(net: &Network, sig: &SignalParams) -> Result<WelfareReport> {
    let (gamma, cent) = baseline_centrality(net, sig)?;
    let delta_u = delta_u_from(net, &cent.c, gamma, sig.tau_x());
    let s = s_from(net, &cent.c);
    let s_prime = s_prime_from(net, &cent);
    let negative_contributors = net
        .in_degrees()
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| d > 1.0)
        .map(|(i, d)| NegativeContributor {
            agent: i,
            in_degree: d,
            centrality: cent.c[i],
            cutoff: 2.0 * d / (d - 1.0),
        })
        .filter(|nc| nc.centrality > nc.cutoff)
        .collect();
    Ok(WelfareReport {
        gamma,
        delta_w: (1.0 - gamma) / sig.tau_x() * s,
        harmed: harmed_by_inequality(net, &cent.c),
        delta_u,
        statistic_s: s,
        statistic_s_prime: s_prime,
        marginal_sign: Sign::of(s - (1.0 - gamma) * s_prime),
        negative_contributors,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginalReport {
    pub gamma: f64,
    pub statistic_s: f64,
    pub statistic_s_prime: f64,
    /// Central difference of `S` in `gamma`.
    pub statistic_s_prime_fd: f64,
    /// `(1 - gamma) S'`.
    pub sensitivity_term: f64,
    /// `dW / dtau_y = gamma^2 tau_x^{-2} (S - (1 - gamma) S')`.
    pub derivative: f64,
    pub discrete_sign: Sign,
    pub marginal_sign: Sign,
}

/// Step for the finite-difference check of `S'`, kept inside `(0, 1)`.
pub fn fd_step(gamma: f64) -> f64 {
    1e-6f64.min(gamma / 2.0).min((1.0 - gamma) / 2.0)
}

pub fn marginal_value(net: &Network, sig: &SignalParams) -> Result<MarginalReport> {
    let (gamma, cent) = baseline_centrality(net, sig)?;
    let s = s_from(net, &cent.c);
    let s_prime = s_prime_from(net, &cent);
    let h = fd_step(gamma);
    let fd = (statistic_s(net, gamma + h)? - statistic_s(net, gamma - h)?) / (2.0 * h);
    let gap = s - (1.0 - gamma) * s_prime;
    Ok(MarginalReport {
        gamma,
        statistic_s: s,
        statistic_s_prime: s_prime,
        statistic_s_prime_fd: fd,
        sensitivity_term: (1.0 - gamma) * s_prime,
        derivative: gamma * gamma / (sig.tau_x() * sig.tau_x()) * gap,
        discrete_sign: Sign::of(s),
        marginal_sign: Sign::of(gap),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AltWelfareReport {
    pub gamma: f64,
    /// `K_i = 1 - r_i + r_i d_i^out`.
    pub total_weights: Vec<f64>,
    /// `d_i^{in,r} = sum_j r_j g_ji`.
    pub weighted_in_degrees: Vec<f64>,
    /// `Omega_i = c~_i ((K_i - d_i^{in,r}) c~_i + 2 d_i^{in,r})`.
    pub contributions: Vec<f64>,
    pub statistic: f64,
    pub delta_u: Vec<f64>,
    pub delta_w: f64,
    pub sign: Sign,
}

/// Welfare effect under intensity-weighted payoffs, via centralities on the
/// normalized network.
pub fn alt_delta_welfare(
    net: &Network,
    r: &IntensityProfile,
    sig: &SignalParams,
) -> Result<AltWelfareReport> {
    let gamma = sig.require_public()?;
    let tilde = normalized_network(net, r)?;
    let c = katz_bonacich(&tilde, gamma)?.c;
    let k = total_payoff_weights(net, r)?;
    let rs = r.as_slice();
    let n = net.n();
    let d_in_r: Vec<f64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i)
                .map(|j| rs[j] * net.weight(j, i))
                .sum()
        })
        .collect();
    let contributions: Vec<f64> = (0..n)
        .map(|i| c[i] * ((k[i] - d_in_r[i]) * c[i] + 2.0 * d_in_r[i]))
        .collect();
    let scale = (1.0 - gamma) / sig.tau_x();
    let delta_u: Vec<f64> = (0..n)
        .map(|i| {
            let walk: f64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| rs[i] * net.weight(i, j) * c[j] * (c[j] - 2.0))
                .sum();
            scale * (k[i] * c[i] * c[i] - walk)
        })
        .collect();
    let statistic: f64 = contributions.iter().sum();
    Ok(AltWelfareReport {
        gamma,
        total_weights: k,
        weighted_in_degrees: d_in_r,
        contributions,
        delta_w: scale * statistic,
        sign: Sign::of(statistic),
        statistic,
        delta_u,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SharingReport {
    pub holder: usize,
    /// `c_1^2 - sum_j g_1j c_j (c_j - 2)`; the holder prefers privacy when this is below one.
    pub holder_statistic: f64,
    pub holder_prefers_private: bool,
    /// `S` against `1 + d_1^in`; society prefers disclosure when `S` is larger.
    pub statistic_s: f64,
    pub disclosure_cutoff: f64,
    pub society_prefers_public: bool,
    pub inefficient: bool,
}

pub fn sharing_inefficiency(
    net: &Network,
    sig: &SignalParams,
    holder: usize,
) -> Result<SharingReport> {
    let (_, cent) = baseline_centrality(net, sig)?;
    if holder >= net.n() {
        return Err(Error::param(
            "holder",
            format!("agent {holder} does not exist in a network of {}", net.n()),
        ));
    }
    let stat = gain_statistic(net, &cent.c, holder);
    let s = s_from(net, &cent.c);
    let cutoff = 1.0 + net.in_degree(holder);
    let private = stat < 1.0;
    let public = cutoff < s;
    Ok(SharingReport {
        holder,
        holder_statistic: stat,
        holder_prefers_private: private,
        statistic_s: s,
        disclosure_cutoff: cutoff,
        society_prefers_public: public,
        inefficient: private && public,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReversalWitness {
    pub gamma: f64,
    pub params: CorePeripheryParams,
    /// The empty network.
    pub sparse: Network,
    pub dense: Network,
    pub statistic_sparse: f64,
    pub statistic_dense: f64,
}

/// Grid searched by [`connectivity_reversal`]: `0.05, 0.10, ..., 0.95`.
pub fn reversal_grid() -> Vec<f64> {
    (1..=19).map(|k| k as f64 / 20.0).collect()
}

/// An empty network and a denser core-periphery network (`l = 2`,
/// `m = n - 2`) on which the public signal raises and lowers welfare
/// respectively. Scans `alpha` then `beta` in ascending order and returns
/// the first hit.
pub fn connectivity_reversal(n: usize, gamma: f64) -> Result<ReversalWitness> {
    check_gamma(gamma)?;
    if n < 3 {
        return Err(Error::param("n", format!("{n} agents, need at least 3")));
    }
    let sparse = Family::Empty { n }.build()?;
    let statistic_sparse = statistic_s(&sparse, gamma)?;
    for &alpha in &reversal_grid() {
        for &beta in &reversal_grid() {
            let params = CorePeripheryParams::new(2, n - 2, alpha, beta)?;
            let dense = Family::CorePeriphery(params).build()?;
            let statistic_dense = statistic_s(&dense, gamma)?;
            if Sign::of(statistic_dense) == Sign::Negative {
                return Ok(ReversalWitness {
                    gamma,
                    params,
                    sparse,
                    dense,
                    statistic_sparse,
                    statistic_dense,
                });
            }
        }
    }
    Err(Error::NoWitness { n, gamma })
}

#[cfg(test)]
mod tests {
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    use super::*;
    use crate::equilibrium::{payoffs, solve_alt_payoff, PayoffVariant};
    use crate::graph::tests::arb_network;
    use crate::payoff::{profile_payoffs, PayoffWeights};
    use crate::regions;

    fn sig(gamma: f64) -> SignalParams {
        SignalParams::from_gamma(gamma, 1.0).unwrap()
    }

    fn cp(l: usize, m: usize, a: f64, b: f64) -> Network {
        Family::CorePeriphery(CorePeripheryParams::new(l, m, a, b).unwrap())
            .build()
            .unwrap()
    }

    fn abc(a: f64, b: f64) -> Network {
        Family::Abc { alpha: a, beta: b }.build().unwrap()
    }

    #[test]
    fn sign_dead_band() {
        assert_eq!(Sign::of(-1e-13), Sign::Boundary);
        assert_eq!(Sign::of(2e-12), Sign::Positive);
        assert_eq!(Sign::of(-2e-12), Sign::Negative);
    }

    #[test]
    fn ann_harmed_only_above_threshold() {
        let d = delta_payoffs(&abc(0.2, 0.95), &sig(0.95)).unwrap();
        assert_eq!(d.harmed, vec![0]);
        assert!(d.delta_u[0] < 0.0);
        for &(a, b) in &[(0.2, 0.95), (0.5, 0.99), (0.9, 0.5)] {
            assert!(delta_payoffs(&abc(a, b), &sig(0.5))
                .unwrap()
                .harmed
                .is_empty());
        }
    }

    #[test]
    fn regular_statistic_closed_form() {
        for &g in &[0.5, 0.8, 0.95] {
            let mut prev = 0.0;
            for k in 0..20 {
                let d = k as f64 * 0.05;
                let net = Family::Regular { n: 6, d }.build().unwrap();
                let s = statistic_s(&net, g).unwrap();
                let closed = 6.0 * (1.0 + d - 2.0 * g * d * d) / (1.0 - g * d).powi(2);
                assert_relative_eq!(s, closed, max_relative = 1e-12);
                assert!(s > prev);
                prev = s;
                assert!(delta_payoffs(&net, &sig(g)).unwrap().harmed.is_empty());
            }
        }
    }

    #[test]
    fn core_periphery_welfare_loss() {
        let (g, l, m) = (0.95, 2, 20);
        let r = delta_welfare(&cp(l, m, 0.2, 0.95), &sig(g)).unwrap();
        assert!(r.delta_w < 0.0);
        assert_relative_eq!(
            r.delta_w,
            r.delta_u.iter().sum::<f64>(),
            max_relative = 1e-10
        );
        assert!(regions::in_h(0.2, 0.95, g, l, m));
        let k = (1.0f64 - g * 0.95).powi(2);
        let closed =
            (m as f64 * regions::f(0.2, 0.95, g) + l as f64 * regions::core_term(0.95, g)) / k;
        assert_relative_eq!(r.statistic_s, closed, max_relative = 1e-10);
        assert!(!r.negative_contributors.is_empty());
    }

    #[test]
    fn marginal_examples() {
        let m = marginal_value(&Network::empty(4), &sig(0.7)).unwrap();
        assert_eq!(m.statistic_s_prime, 0.0);
        assert_eq!(m.marginal_sign, Sign::Positive);
        let net = cp(2, 20, 0.2, 0.95);
        let m = marginal_value(&net, &sig(0.95)).unwrap();
        assert_eq!(m.discrete_sign, Sign::Negative);
        assert_relative_eq!(
            m.statistic_s_prime,
            m.statistic_s_prime_fd,
            max_relative = 1e-4
        );
        // the sensitivity term vanishes like (1 - gamma)
        let ratio = |g: f64| {
            let m = marginal_value(&net, &sig(g)).unwrap();
            (m.sensitivity_term / m.statistic_s).abs()
        };
        assert!(ratio(0.9999) < 0.01);
        assert!(ratio(0.9999) < ratio(0.999) && ratio(0.999) < ratio(0.99));
        let m = marginal_value(&net, &sig(0.999)).unwrap();
        assert_eq!(m.discrete_sign, Sign::Negative);
        assert_eq!(m.marginal_sign, Sign::Negative);
    }

    #[test]
    fn sharing_examples() {
        let s = sig(0.95);
        let r = sharing_inefficiency(&cp(22, 44, 0.2, 0.95), &s, 0).unwrap();
        assert!(r.inefficient);
        let r = sharing_inefficiency(&cp(2, 20, 0.2, 0.95), &s, 0).unwrap();
        assert!(r.holder_prefers_private && !r.society_prefers_public && !r.inefficient);
        let r = sharing_inefficiency(&Network::empty(3), &s, 1).unwrap();
        assert!(!r.holder_prefers_private);
        assert!(sharing_inefficiency(&Network::empty(3), &s, 3).is_err());
    }

    #[test]
    fn reversal_witness() {
        let w = connectivity_reversal(22, 0.95).unwrap();
        assert!(w.sparse.is_dominated_by(&w.dense));
        assert!(w.statistic_sparse > 0.0 && w.statistic_dense < 0.0);
        assert_eq!(w, connectivity_reversal(22, 0.95).unwrap());
        assert!(matches!(
            connectivity_reversal(22, 0.5),
            Err(Error::NoWitness { .. })
        ));
        assert!(connectivity_reversal(2, 0.95).is_err());
    }

    #[test]
    fn allocation_does_not_change_aggregates() {
        use crate::graph::PeripheryAllocation;
        let s = sig(0.93);
        let p = CorePeripheryParams::new(3, 7, 0.4, 0.9).unwrap();
        let rr = Family::CorePeriphery(p).build().unwrap();
        let un = Family::CorePeriphery(p.with_allocation(PeripheryAllocation::Uniform))
            .build()
            .unwrap();
        let (a, b) = (
            katz_bonacich(&rr, 0.93).unwrap(),
            katz_bonacich(&un, 0.93).unwrap(),
        );
        for i in 0..p.n() {
            assert_relative_eq!(a.c[i], b.c[i], max_relative = 1e-12);
        }
        let (wa, wb) = (
            delta_welfare(&rr, &s).unwrap(),
            delta_welfare(&un, &s).unwrap(),
        );
        assert_relative_eq!(wa.statistic_s, wb.statistic_s, max_relative = 1e-12);
        for k in p.periphery() {
            let (x, y) = (
                sharing_inefficiency(&rr, &s, k).unwrap(),
                sharing_inefficiency(&un, &s, k).unwrap(),
            );
            assert_eq!(x.inefficient, y.inefficient);
        }
    }

    #[test]
    fn alt_uniform_case() {
        let n = 4;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 0.0 } else { 1.0 / 3.0 })
                    .collect()
            })
            .collect();
        let net = Network::from_rows(rows).unwrap();
        let r = IntensityProfile::uniform(n, 0.6).unwrap();
        let g = 0.9;
        let rep = alt_delta_welfare(&net, &r, &sig(g)).unwrap();
        let c = 1.0 / (1.0 - g * 0.6);
        let closed = n as f64 * c * c * 0.4 + 2.0 * c * 0.6 * n as f64;
        assert_relative_eq!(rep.statistic, closed, max_relative = 1e-10);
        assert_eq!(rep.sign, Sign::Positive);
    }

    proptest! {
        #[test]
        fn aggregate_and_sign_equivalences(net in arb_network(8), g in 0.05f64..0.99, tx in 0.2f64..5.0) {
            let s = SignalParams::from_gamma(g, tx).unwrap();
            let r = delta_welfare(&net, &s).unwrap();
            let sum: f64 = r.delta_u.iter().sum();
            prop_assert!((sum - r.delta_w).abs() <= 1e-10 * r.delta_w.abs().max(1.0));
            prop_assert_eq!(Sign::of(r.delta_w) == Sign::Negative, Sign::of(r.statistic_s) == Sign::Negative);
            for i in 0..net.n() {
                if r.delta_u[i].abs() > 1e-9 {
                    prop_assert_eq!(r.delta_u[i] < 0.0, r.harmed.contains(&i));
                }
            }
            // against the closed-form payoffs
            let with = payoffs(&net, &s, PayoffVariant::Baseline).unwrap();
            let without = payoffs(&net, &s, PayoffVariant::NoPublic).unwrap();
            for i in 0..net.n() {
                let d = with.per_agent[i] - without.per_agent[i];
                prop_assert!((d - r.delta_u[i]).abs() <= 1e-9 * d.abs().max(1.0));
            }
        }

        #[test]
        fn undirected_networks_gain(net in arb_network(7), g in 0.05f64..0.99) {
            let n = net.n();
            let mut sym = Network::empty(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        sym.set(i, j, 0.5 * (net.weight(i, j) + net.weight(j, i)));
                    }
                }
            }
            let scale = sym.max_out_degree().max(0.98) / 0.98;
            for i in 0..n {
                for j in 0..n {
                    sym.set(i, j, sym.weight(i, j) / scale);
                }
            }
            prop_assert!(statistic_s(&sym, g).unwrap() > 0.0);
        }

        #[test]
        fn s_prime_matches_finite_difference(net in arb_network(7), g in 0.05f64..0.98) {
            let m = marginal_value(&net, &sig(g)).unwrap();
            let tol = 1e-4 * m.statistic_s_prime.abs().max(1e-3);
            prop_assert!((m.statistic_s_prime - m.statistic_s_prime_fd).abs() <= tol);
            let gap = m.statistic_s - m.sensitivity_term;
            if gap.abs() > 1e-9 {
                prop_assert_eq!(m.derivative < 0.0, m.marginal_sign == Sign::Negative);
            }
        }

        #[test]
        fn alt_delta_u_matches_expansion(net in arb_network(6), g in 0.05f64..0.98, rs in prop::collection::vec(0.01f64..0.99, 6)) {
            let r = IntensityProfile::new(rs[..net.n()].to_vec()).unwrap();
            let s = sig(g);
            let rep = alt_delta_welfare(&net, &r, &s).unwrap();
            let w = PayoffWeights::intensity(&net, &r).unwrap();
            let with = profile_payoffs(&w, &solve_alt_payoff(&net, &r, &s).unwrap(), &s).unwrap();
            let none = crate::equilibrium::EquilibriumProfile::no_public(net.n());
            let without = profile_payoffs(&w, &none, &s).unwrap();
            for i in 0..net.n() {
                let d = with.per_agent[i] - without.per_agent[i];
                prop_assert!((d - rep.delta_u[i]).abs() <= 1e-9 * d.abs().max(1.0));
                let k = rep.total_weights[i];
                let closed_none = -(k + rs[i] * net.out_degree(i));
                prop_assert!((without.per_agent[i] - closed_none).abs() <= 1e-12);
            }
            let sum: f64 = rep.delta_u.iter().sum();
            prop_assert!((sum - rep.delta_w).abs() <= 1e-9 * rep.delta_w.abs().max(1.0));
        }

        #[test]
        fn sharing_matches_compound_inequality(a in 0.0f64..0.99, b in 0.0f64..0.99, g in 0.5f64..0.99, l in 2usize..25, m in 1usize..50) {
            let net = cp(l, m, a, b);
            let rep = sharing_inefficiency(&net, &sig(g), 0).unwrap();
            let k2 = (1.0 - b * g).powi(2);
            let fv = regions::f(a, b, g);
            let margin = (fv - k2).abs().min((m as f64 * fv + l as f64 * regions::core_term(b, g) - k2).abs());
            prop_assume!(margin > 1e-9);
            prop_assert_eq!(rep.inefficient, regions::in_j(a, b, g, l, m));
        }
    }
}
