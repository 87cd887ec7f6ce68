//! Katz–Bonacich centrality and its sensitivity to the discount.
//!
//! Both vectors come from one LU factorization of `I - gamma G`:
//! `c` solves `(I - gamma G) c = 1` and the sensitivity vector solves
//! `(I - gamma G) c^c = c`. The derivative of `c` in `gamma` is
//! `(c^c - c) / gamma`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{require_valid, Network, RowSumBound};

/// Max-norm residual allowed on `(I - gamma G) c = 1`.
pub const RESIDUAL_TOL: f64 = 1e-10;

pub const POWER_MAX_ITERS: usize = 10_000;
pub const POWER_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralityProfile {
    pub gamma: f64,
    pub c: Vec<f64>,
    /// `c^c = (I - gamma G)^{-1} c`.
    pub sensitivity: Vec<f64>,
}

impl CentralityProfile {
    /// `dc/dgamma = (c^c - c) / gamma`.
    pub fn derivative(&self) -> Vec<f64> {
        self.sensitivity
            .iter()
            .zip(&self.c)
            .map(|(cc, c)| (cc - c) / self.gamma)
            .collect()
    }
}

pub(crate) fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > 0.0 && gamma < 1.0 {
        Ok(())
    } else {
        Err(Error::param("gamma", format!("{gamma} is not in (0, 1)")))
    }
}

fn shifted(net: &Network, gamma: f64) -> DMatrix<f64> {
    let n = net.n();
    DMatrix::from_fn(n, n, |i, j| {
        let g = if i == j { 0.0 } else { net.weight(i, j) };
        f64::from(u8::from(i == j)) - gamma * g
    })
}

fn residual(a: &DMatrix<f64>, x: &DVector<f64>, rhs: &DVector<f64>) -> f64 {
    (a * x - rhs).amax()
}

/// Solves for centrality and sensitivity on a (weakly) substochastic network.
pub fn katz_bonacich(net: &Network, gamma: f64) -> Result<CentralityProfile> {
    check_gamma(gamma)?;
    require_valid(net, RowSumBound::Stochastic)?;
    let n = net.n();
    let a = shifted(net, gamma);
    let lu = a.clone().lu();
    let ones = DVector::from_element(n, 1.0);
    let c = lu.solve(&ones).ok_or(Error::Numerical {
        residual: f64::INFINITY,
        tolerance: RESIDUAL_TOL,
    })?;
    let r = residual(&a, &c, &ones);
    if !(r <= RESIDUAL_TOL) {
        return Err(Error::Numerical {
            residual: r,
            tolerance: RESIDUAL_TOL,
        });
    }
    let cc = lu.solve(&c).ok_or(Error::Numerical {
        residual: f64::INFINITY,
        tolerance: RESIDUAL_TOL,
    })?;
    // the sensitivity right-hand side is c itself, so scale the tolerance
    let tol = RESIDUAL_TOL * c.amax().max(1.0);
    let r = residual(&a, &cc, &c);
    if !(r <= tol) {
        return Err(Error::Numerical {
            residual: r,
            tolerance: tol,
        });
    }
    Ok(CentralityProfile {
        gamma,
        c: c.iter().copied().collect(),
        sensitivity: cc.iter().copied().collect(),
    })
}

/// `max_i |c_i - 1 - gamma sum_j g_ij c_j|`.
pub fn self_reference_residual(net: &Network, gamma: f64, c: &[f64]) -> f64 {
    (0..net.n())
        .map(|i| {
            let walk: f64 = (0..net.n())
                .filter(|&j| j != i)
                .map(|j| net.weight(i, j) * c[j])
                .sum();
            (c[i] - 1.0 - gamma * walk).abs()
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralBound {
    /// `max_i d_i^out`, an upper bound on the spectral radius.
    pub max_row_sum: f64,
    /// Power-iteration estimate of the spectral radius.
    pub rho_estimate: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Row-sum bound plus a power-iteration estimate of `rho(G)`.
///
/// Iterates `x <- (I + G) x` from the all-ones vector. The identity shift
/// removes the oscillation that periodic networks (a two-cycle, say) would
/// otherwise cause, and keeps `x` strictly positive. The estimate is the
/// Collatz–Wielandt upper ratio `max_i (G x)_i / x_i`, which starts at the
/// max row sum and never increases, so it cannot exceed the bound.
pub fn spectral_bound(net: &Network) -> SpectralBound {
    let n = net.n();
    let max_row_sum = net.max_out_degree();
    let mut x = vec![1.0; n];
    let mut gx = vec![0.0; n];
    let mut prev = f64::INFINITY;
    let mut estimate = max_row_sum;
    let mut converged = false;
    let mut iterations = 0;
    for k in 1..=POWER_MAX_ITERS {
        iterations = k;
        for i in 0..n {
            gx[i] = (0..n)
                .filter(|&j| j != i)
                .map(|j| net.weight(i, j) * x[j])
                .sum();
        }
        estimate = (0..n).map(|i| gx[i] / x[i]).fold(0.0, f64::max);
        if (estimate - prev).abs() < POWER_TOL {
            converged = true;
            break;
        }
        prev = estimate;
        let scale = (0..n).map(|i| x[i] + gx[i]).fold(0.0, f64::max);
        for i in 0..n {
            x[i] = (x[i] + gx[i]) / scale;
        }
    }
    SpectralBound {
        max_row_sum,
        rho_estimate: estimate,
        iterations,
        converged,
    }
}
