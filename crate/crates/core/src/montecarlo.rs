//! Monte Carlo oracle for payoffs, moments and best responses.
//!
//! Draws are split into fixed batches of [`BATCH_SIZE`]. Every (batch,
//! noise source) pair gets its own ChaCha8 stream: the generator is seeded
//! from `seed` and `set_stream((batch << 32) | source)` selects the stream,
//! with sources numbered
//!
//! ```text
//! 0            public noise eps_y
//! 1 + i        private noise eps_i
//! 1 + n + i    independent second-signal noise of agent i
//! 1 + 2n       theta (slope-sum audit only)
//! ```
//!
//! Batches run in parallel and are merged in batch order, so results do not
//! depend on the number of worker threads.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::equilibrium::{EquilibriumProfile, SignalParams, SignalSource, Variant};
use crate::error::{Error, Result};
use crate::format::significant;
use crate::graph::Network;
use crate::payoff::{PayoffWeights, SLOPE_SUM_TOL};

pub const BATCH_SIZE: usize = 65_536;

/// Prior standard deviation of `theta` in [`slope_sum_audit`].
pub const DIFFUSE_PRIOR_SD: f64 = 1e4;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimConfig {
    pub n_draws: usize,
    pub seed: u64,
    pub sig: SignalParams,
}

impl SimConfig {
    pub fn new(n_draws: usize, seed: u64, sig: SignalParams) -> Result<Self> {
        if n_draws == 0 {
            return Err(Error::Config("n_draws must be at least 1".into()));
        }
        Ok(Self { n_draws, seed, sig })
    }

    fn batches(&self) -> Vec<(usize, usize)> {
        let nb = self.n_draws.div_ceil(BATCH_SIZE);
        (0..nb)
            .map(|b| (b, BATCH_SIZE.min(self.n_draws - b * BATCH_SIZE)))
            .collect()
    }
}

/// Running mean and sum of squared deviations per coordinate.
#[derive(Clone, Debug)]
struct Stats {
    count: f64,
    mean: Vec<f64>,
    m2: Vec<f64>,
}

impl Stats {
    fn new(k: usize) -> Self {
        Self {
            count: 0.0,
            mean: vec![0.0; k],
            m2: vec![0.0; k],
        }
    }

    fn push(&mut self, values: &[f64]) {
        self.count += 1.0;
        for ((m, s), &v) in self.mean.iter_mut().zip(&mut self.m2).zip(values) {
            let d = v - *m;
            *m += d / self.count;
            *s += d * (v - *m);
        }
    }

    fn merge(&mut self, other: &Stats) {
        if other.count == 0.0 {
            return;
        }
        let total = self.count + other.count;
        for k in 0..self.mean.len() {
            let d = other.mean[k] - self.mean[k];
            self.mean[k] += d * other.count / total;
            self.m2[k] += other.m2[k] + d * d * self.count * other.count / total;
        }
        self.count = total;
    }

    /// Standard error of the mean; zero with fewer than two observations.
    fn se(&self) -> Vec<f64> {
        if self.count < 2.0 {
            return vec![0.0; self.mean.len()];
        }
        self.m2
            .iter()
            .map(|s| (s / (self.count - 1.0) / self.count).sqrt())
            .collect()
    }
}

fn merged(parts: &[Stats], k: usize) -> Stats {
    let mut total = Stats::new(k);
    for p in parts {
        total.merge(p);
    }
    total
}

fn stream(seed: u64, batch: usize, source: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((batch as u64) << 32) | source as u64);
    rng
}

fn normals(seed: u64, batch: usize, source: usize, len: usize, sd: f64) -> Vec<f64> {
    let mut rng = stream(seed, batch, source);
    (0..len)
        .map(|_| sd * rng.sample::<f64, _>(StandardNormal))
        .collect()
}

/// One batch of noise, already shifted by `theta`.
struct Batch {
    theta: Vec<f64>,
    y: Vec<f64>,
    x: Vec<Vec<f64>>,
    z: Vec<Vec<f64>>,
}

#[derive(Clone, Copy)]
struct Needs {
    y: bool,
    z: bool,
    theta_sd: Option<f64>,
}

impl Needs {
    fn of(profiles: &[&EquilibriumProfile]) -> Self {
        let any = |s: SignalSource| profiles.iter().any(|p| p.sources.contains(&s));
        Self {
            y: any(SignalSource::Public),
            z: any(SignalSource::Independent),
            theta_sd: None,
        }
    }
}

fn draw_batch(cfg: &SimConfig, n: usize, batch: usize, len: usize, needs: Needs) -> Batch {
    let (seed, sig) = (cfg.seed, cfg.sig);
    let theta = match needs.theta_sd {
        Some(sd) => normals(seed, batch, 1 + 2 * n, len, sd),
        None => vec![0.0; len],
    };
    let shift = |mut v: Vec<f64>| {
        for (e, t) in v.iter_mut().zip(&theta) {
            *e += t;
        }
        v
    };
    let sd_x = sig.tau_x().powf(-0.5);
    let sd_y = if sig.has_public() {
        sig.tau_y().powf(-0.5)
    } else {
        0.0
    };
    let y = if needs.y {
        shift(normals(seed, batch, 0, len, sd_y))
    } else {
        Vec::new()
    };
    let x = (0..n)
        .map(|i| shift(normals(seed, batch, 1 + i, len, sd_x)))
        .collect();
    let z = if needs.z {
        (0..n)
            .map(|i| shift(normals(seed, batch, 1 + n + i, len, sd_y)))
            .collect()
    } else {
        Vec::new()
    };
    Batch { theta, y, x, z }
}

impl Batch {
    fn second_signal(&self, source: SignalSource, i: usize, k: usize) -> f64 {
        match source {
            SignalSource::Public => self.y[k],
            SignalSource::Independent => self.z[i][k],
            SignalSource::Absent => self.x[i][k],
        }
    }

    fn actions(&self, p: &EquilibriumProfile, k: usize, out: &mut [f64]) {
        for (i, a) in out.iter_mut().enumerate() {
            let s = self.second_signal(p.sources[i], i, k);
            *a = p.slopes_public[i] * s + p.slopes_private[i] * self.x[i][k];
        }
    }
}

fn check_profile(n: usize, profile: &EquilibriumProfile, sig: &SignalParams) -> Result<()> {
    if profile.n() != n {
        return Err(Error::Dimension {
            expected: n,
            found: profile.n(),
        });
    }
    profile.check_slope_sums(SLOPE_SUM_TOL)?;
    let uses_second = profile.sources.iter().any(|s| *s != SignalSource::Absent);
    if uses_second && !sig.has_public() {
        return Err(Error::Config(format!(
            "profile {:?} uses the second signal but tau_y = 0",
            profile.variant
        )));
    }
    Ok(())
}

/// Payoff weights implied by the profile's variant.
pub fn weights_for(net: &Network, profile: &EquilibriumProfile) -> Result<PayoffWeights> {
    match &profile.variant {
        Variant::AltPayoff { r } => PayoffWeights::intensity(net, r),
        _ => Ok(PayoffWeights::baseline(net)),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub n_draws: usize,
    pub seed: u64,
    pub payoff_mean: Vec<f64>,
    pub payoff_se: Vec<f64>,
    /// Estimates of `E[X_i X_j]`.
    pub moment_estimates: Vec<Vec<f64>>,
    pub moment_se: Vec<Vec<f64>>,
    /// Per-batch payoff means, in batch order.
    pub batch_means: Vec<Vec<f64>>,
}

impl SimResult {
    /// `batch,draws,u_0,...,u_{n-1}` with one row per batch.
    pub fn write_batch_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let n = self.payoff_mean.len();
        let head: Vec<String> = (0..n).map(|i| format!("u_{i}")).collect();
        writeln!(out, "batch,draws,{}", head.join(","))?;
        for (b, means) in self.batch_means.iter().enumerate() {
            let draws = BATCH_SIZE.min(self.n_draws - b * BATCH_SIZE);
            let cells: Vec<String> = means.iter().map(|&v| significant(v)).collect();
            writeln!(out, "{b},{draws},{}", cells.join(","))?;
        }
        Ok(())
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

/// Realized payoffs and second moments of `profile`, with `theta = 0`.
pub fn simulate(net: &Network, profile: &EquilibriumProfile, cfg: &SimConfig) -> Result<SimResult> {
    let weights = weights_for(net, profile)?;
    simulate_with(&weights, profile, cfg)
}

pub fn simulate_with(
    weights: &PayoffWeights,
    profile: &EquilibriumProfile,
    cfg: &SimConfig,
) -> Result<SimResult> {
    let n = weights.n();
    check_profile(n, profile, &cfg.sig)?;
    let needs = Needs::of(&[profile]);
    let pairs = n * (n + 1) / 2;
    let parts: Vec<(Stats, Stats)> = cfg
        .batches()
        .into_par_iter()
        .map(|(b, len)| {
            let batch = draw_batch(cfg, n, b, len, needs);
            let (mut pay, mut mom) = (Stats::new(n), Stats::new(pairs));
            let (mut a, mut u, mut xx) = (vec![0.0; n], vec![0.0; n], vec![0.0; pairs]);
            for k in 0..len {
                batch.actions(profile, k, &mut a);
                for i in 0..n {
                    u[i] = weights.realized(i, batch.theta[k], &a);
                    for j in i..n {
                        xx[pair_index(n, i, j)] = a[i] * a[j];
                    }
                }
                pay.push(&u);
                mom.push(&xx);
            }
            (pay, mom)
        })
        .collect();
    let batch_means = parts.iter().map(|(p, _)| p.mean.clone()).collect();
    let pay = merged(&parts.iter().map(|p| p.0.clone()).collect::<Vec<_>>(), n);
    let mom = merged(
        &parts.iter().map(|p| p.1.clone()).collect::<Vec<_>>(),
        pairs,
    );
    let mom_se = mom.se();
    let square = |v: &[f64]| {
        (0..n)
            .map(|i| (0..n).map(|j| v[pair_index(n, i, j)]).collect())
            .collect()
    };
    Ok(SimResult {
        n_draws: cfg.n_draws,
        seed: cfg.seed,
        payoff_se: pay.se(),
        payoff_mean: pay.mean,
        moment_estimates: square(&mom.mean),
        moment_se: square(&mom_se),
        batch_means,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    /// Mean of `u_i(first) - u_i(second)` on common draws.
    pub diff_mean: Vec<f64>,
    pub diff_se: Vec<f64>,
}

/// Paired payoff difference between two profiles evaluated on the same draws.
pub fn compare(
    weights: &PayoffWeights,
    first: &EquilibriumProfile,
    second: &EquilibriumProfile,
    cfg: &SimConfig,
) -> Result<Comparison> {
    let n = weights.n();
    check_profile(n, first, &cfg.sig)?;
    check_profile(n, second, &cfg.sig)?;
    let needs = Needs::of(&[first, second]);
    let parts: Vec<Stats> = cfg
        .batches()
        .into_par_iter()
        .map(|(b, len)| {
            let batch = draw_batch(cfg, n, b, len, needs);
            let mut st = Stats::new(n);
            let (mut a1, mut a2, mut d) = (vec![0.0; n], vec![0.0; n], vec![0.0; n]);
            for k in 0..len {
                batch.actions(first, k, &mut a1);
                batch.actions(second, k, &mut a2);
                for i in 0..n {
                    d[i] = weights.realized(i, 0.0, &a1) - weights.realized(i, 0.0, &a2);
                }
                st.push(&d);
            }
            st
        })
        .collect();
    let st = merged(&parts, n);
    Ok(Comparison {
        diff_se: st.se(),
        diff_mean: st.mean,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub agent: usize,
    pub current_slope: f64,
    /// Least-squares optimal second-signal slope on all draws.
    pub optimal_slope: f64,
    pub optimal_slope_se: f64,
    /// Payoff gain from the slope fitted on even draws, evaluated on odd draws.
    pub gain: f64,
    pub gain_se: f64,
}

/// Per-agent gain from the best slope-sum-one linear deviation.
///
/// Agent `i`'s payoff is `-W_i (a_i - T_i)^2` up to terms it cannot affect,
/// where `W_i = w0_i + sum_j w_ij` and `T_i = sum_j w_ij a_j / W_i` (theta is
/// zero). Writing `a_i = x_i + s D_i` with `D_i = S_i - x_i` and
/// `R_i = x_i - T_i`, the sample-optimal slope is `-sum R D / sum D^2`.
/// Agents without a second signal have nothing to deviate on and are skipped.
pub fn best_response_audit(
    net: &Network,
    profile: &EquilibriumProfile,
    cfg: &SimConfig,
) -> Result<Vec<AuditEntry>> {
    let weights = weights_for(net, profile)?;
    let n = weights.n();
    check_profile(n, profile, &cfg.sig)?;
    let needs = Needs::of(&[profile]);
    let audited: Vec<usize> = (0..n)
        .filter(|&i| profile.sources[i] != SignalSource::Absent)
        .collect();
    let totals: Vec<f64> = (0..n).map(|i| weights.total(i)).collect();
    let residuals = |batch: &Batch, k: usize, a: &mut [f64], i: usize| {
        batch.actions(profile, k, a);
        let t: f64 = weights
            .coord_row(i)
            .iter()
            .zip(a.iter())
            .map(|(w, aj)| w * aj)
            .sum::<f64>()
            / totals[i];
        let x = batch.x[i][k];
        (x - t, batch.second_signal(profile.sources[i], i, k) - x)
    };

    // pass 1: [RD, DD, RR] over even draws and over all draws
    let sums: Vec<Vec<[f64; 6]>> = cfg
        .batches()
        .into_par_iter()
        .map(|(b, len)| {
            let batch = draw_batch(cfg, n, b, len, needs);
            let mut a = vec![0.0; n];
            audited
                .iter()
                .map(|&i| {
                    let mut s = [0.0; 6];
                    for k in 0..len {
                        let (r, d) = residuals(&batch, k, &mut a, i);
                        let v = [r * d, d * d, r * r];
                        for q in 0..3 {
                            s[3 + q] += v[q];
                            if k % 2 == 0 {
                                s[q] += v[q];
                            }
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    let mut tot = vec![[0.0; 6]; audited.len()];
    for part in &sums {
        for (t, p) in tot.iter_mut().zip(part) {
            for q in 0..6 {
                t[q] += p[q];
            }
        }
    }
    let fitted: Vec<f64> = tot.iter().map(|t| -t[0] / t[1]).collect();

    // pass 2: gains of the fitted slopes on odd draws
    let parts: Vec<Stats> = cfg
        .batches()
        .into_par_iter()
        .map(|(b, len)| {
            let batch = draw_batch(cfg, n, b, len, needs);
            let mut a = vec![0.0; n];
            let mut st = Stats::new(audited.len());
            let mut g = vec![0.0; audited.len()];
            for k in (1..len).step_by(2) {
                for (q, &i) in audited.iter().enumerate() {
                    let (r, d) = residuals(&batch, k, &mut a, i);
                    let cur = r + profile.slopes_public[i] * d;
                    let dev = r + fitted[q] * d;
                    g[q] = -totals[i] * (dev * dev - cur * cur);
                }
                st.push(&g);
            }
            st
        })
        .collect();
    let gains = merged(&parts, audited.len());
    let gain_se = gains.se();
    let count = cfg.n_draws as f64;
    Ok(audited
        .iter()
        .enumerate()
        .map(|(q, &i)| {
            let t = &tot[q];
            let slope = -t[3] / t[4];
            let resid = ((t[5] - t[3] * t[3] / t[4]) / (count - 1.0).max(1.0)).max(0.0);
            AuditEntry {
                agent: i,
                current_slope: profile.slopes_public[i],
                optimal_slope: slope,
                optimal_slope_se: (resid / t[4]).sqrt(),
                gain: gains.mean[q],
                gain_se: gain_se[q],
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeSumEstimate {
    pub agent: usize,
    /// Sum of the unrestricted least-squares slopes on `x_i` and the second signal.
    pub slope_sum: f64,
    pub se: f64,
}

/// Unrestricted linear best response under a diffuse prior on `theta`.
///
/// Draws `theta ~ N(0, DIFFUSE_PRIOR_SD^2)` and regresses each agent's
/// target `T_i` on `(x_i, S_i - x_i)` without intercept, so the coefficient
/// on `x_i` is the slope sum. To keep the fit well conditioned the
/// regression is run on `T_i - x_i`, whose `x_i` coefficient is `sum - 1`.
pub fn slope_sum_audit(
    net: &Network,
    profile: &EquilibriumProfile,
    cfg: &SimConfig,
) -> Result<Vec<SlopeSumEstimate>> {
    let weights = weights_for(net, profile)?;
    let n = weights.n();
    check_profile(n, profile, &cfg.sig)?;
    let mut needs = Needs::of(&[profile]);
    needs.theta_sd = Some(DIFFUSE_PRIOR_SD);
    let totals: Vec<f64> = (0..n).map(|i| weights.total(i)).collect();
    // per agent: xx, xd, dd, xt, dt, tt
    let parts: Vec<Vec<[f64; 6]>> = cfg
        .batches()
        .into_par_iter()
        .map(|(b, len)| {
            let batch = draw_batch(cfg, n, b, len, needs);
            let mut a = vec![0.0; n];
            let mut s = vec![[0.0; 6]; n];
            for k in 0..len {
                batch.actions(profile, k, &mut a);
                let theta = batch.theta[k];
                for i in 0..n {
                    let w = weights.coord_row(i);
                    let t = (weights.adapt(i) * theta
                        + w.iter().zip(&a).map(|(w, aj)| w * aj).sum::<f64>())
                        / totals[i];
                    let x = batch.x[i][k];
                    let d = batch.second_signal(profile.sources[i], i, k) - x;
                    let e = t - x;
                    let v = [x * x, x * d, d * d, x * e, d * e, e * e];
                    for q in 0..6 {
                        s[i][q] += v[q];
                    }
                }
            }
            s
        })
        .collect();
    let mut tot = vec![[0.0; 6]; n];
    for part in &parts {
        for (t, p) in tot.iter_mut().zip(part) {
            for q in 0..6 {
                t[q] += p[q];
            }
        }
    }
    let count = cfg.n_draws as f64;
    Ok((0..n)
        .map(|i| {
            let [xx, xd, dd, xe, de, ee] = tot[i];
            let (coef, var) = if profile.sources[i] == SignalSource::Absent {
                let c = xe / xx;
                let rss = ee - c * xe;
                (c, rss / (count - 1.0).max(1.0) / xx)
            } else {
                let det = xx * dd - xd * xd;
                let c = (dd * xe - xd * de) / det;
                let c2 = (xx * de - xd * xe) / det;
                let rss = ee - c * xe - c2 * de;
                (c, rss / (count - 2.0).max(1.0) * dd / det)
            };
            SlopeSumEstimate {
                agent: i,
                slope_sum: 1.0 + coef,
                se: var.max(0.0).sqrt(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::{payoffs, solve_equilibrium, PayoffVariant};
    use crate::graph::Family;

    fn sig(gamma: f64) -> SignalParams {
        SignalParams::from_gamma(gamma, 1.0).unwrap()
    }

    #[test]
    fn stats_merge_matches_single_pass() {
        let xs: Vec<f64> = (0..100).map(|k| ((k * 37) % 11) as f64 * 0.3).collect();
        let mut one = Stats::new(1);
        for x in &xs {
            one.push(&[*x]);
        }
        let mut a = Stats::new(1);
        let mut b = Stats::new(1);
        for x in &xs[..37] {
            a.push(&[*x]);
        }
        for x in &xs[37..] {
            b.push(&[*x]);
        }
        a.merge(&b);
        assert!((a.mean[0] - one.mean[0]).abs() < 1e-13);
        assert!((a.m2[0] - one.m2[0]).abs() < 1e-10);
    }

    #[test]
    fn pair_index_is_dense() {
        let n = 5;
        let mut seen = vec![false; n * (n + 1) / 2];
        for i in 0..n {
            for j in i..n {
                seen[pair_index(n, i, j)] = true;
                assert_eq!(pair_index(n, i, j), pair_index(n, j, i));
            }
        }
        assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn reproducible_and_seed_sensitive() {
        let net = Family::Abc {
            alpha: 0.3,
            beta: 0.7,
        }
        .build()
        .unwrap();
        let s = sig(0.8);
        let p = solve_equilibrium(&net, &s).unwrap();
        let cfg = SimConfig::new(70_000, 7, s).unwrap();
        let a = simulate(&net, &p, &cfg).unwrap();
        let b = simulate(&net, &p, &cfg).unwrap();
        assert_eq!(a, b);
        let c = simulate(&net, &p, &SimConfig::new(70_000, 8, s).unwrap()).unwrap();
        assert_ne!(a.payoff_mean, c.payoff_mean);
        assert_eq!(a.batch_means.len(), 2);
        assert!(a.payoff_se.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn empty_network_payoff() {
        let net = Network::empty(3);
        let s = sig(0.8);
        let p = solve_equilibrium(&net, &s).unwrap();
        let r = simulate(&net, &p, &SimConfig::new(200_000, 1, s).unwrap()).unwrap();
        for i in 0..3 {
            assert!((r.payoff_mean[i] + 0.8).abs() <= 3.0 * r.payoff_se[i]);
        }
    }

    #[test]
    fn missing_public_signal_is_a_config_error() {
        let net = Network::empty(2);
        let p = solve_equilibrium(&net, &sig(0.5)).unwrap();
        let cfg = SimConfig::new(10, 1, SignalParams::new(1.0, 0.0).unwrap()).unwrap();
        assert!(matches!(simulate(&net, &p, &cfg), Err(Error::Config(_))));
        assert!(SimConfig::new(0, 1, sig(0.5)).is_err());
        let none = EquilibriumProfile::no_public(2);
        assert!(simulate(&net, &none, &cfg).is_ok());
    }

    #[test]
    fn moments_and_slope_sums_on_small_net() {
        let net = Family::Abc {
            alpha: 0.4,
            beta: 0.6,
        }
        .build()
        .unwrap();
        let s = sig(0.7);
        let p = solve_equilibrium(&net, &s).unwrap();
        let cfg = SimConfig::new(150_000, 11, s).unwrap();
        let r = simulate(&net, &p, &cfg).unwrap();
        let closed = payoffs(&net, &s, PayoffVariant::Baseline).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let d = (r.moment_estimates[i][j] - closed.moments[i][j]).abs();
                assert!(d <= 4.0 * r.moment_se[i][j], "({i},{j}) off by {d}");
            }
        }
        for e in slope_sum_audit(&net, &p, &cfg).unwrap() {
            assert!((e.slope_sum - 1.0).abs() <= 3.0 * e.se, "{e:?}");
            assert!(e.se < 1e-3);
        }
    }

    #[test]
    fn audit_detects_perturbation() {
        let net = Family::Abc {
            alpha: 0.2,
            beta: 0.95,
        }
        .build()
        .unwrap();
        let s = sig(0.95);
        let p = solve_equilibrium(&net, &s).unwrap();
        let cfg = SimConfig::new(200_000, 3, s).unwrap();
        for e in best_response_audit(&net, &p, &cfg).unwrap() {
            assert!(e.gain <= 3.0 * e.gain_se, "{e:?}");
            assert!((e.optimal_slope - e.current_slope).abs() <= 4.0 * e.optimal_slope_se);
        }
        let bumped = p.with_public_slope(1, p.slopes_public[1] + 0.1);
        let audit = best_response_audit(&net, &bumped, &cfg).unwrap();
        assert!(audit[1].gain > 3.0 * audit[1].gain_se);
    }
}
