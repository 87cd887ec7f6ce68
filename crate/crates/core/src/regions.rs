//! Closed-form region functions on the Ann/Bob/Carol and core-periphery
//! families, and grid scans over `(alpha, beta)`.
//!
//! All set predicates are strict; equality is non-membership.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::centrality::check_gamma;
use crate::error::{Error, Result};
use crate::format::significant;

/// `(1 + gamma (alpha - beta))^2 - alpha (2 gamma beta - 1)`.
pub fn f(alpha: f64, beta: f64, gamma: f64) -> f64 {
    (1.0 + gamma * (alpha - beta)).powi(2) - alpha * (2.0 * gamma * beta - 1.0)
}

/// `inf_beta f(alpha, beta, gamma) = gamma^2 alpha^2 + (1 - 2 gamma^2) alpha + (1 - gamma)^2`.
pub fn h(alpha: f64, gamma: f64) -> f64 {
    let g2 = gamma * gamma;
    g2 * alpha * alpha + (1.0 - 2.0 * g2) * alpha + (1.0 - gamma).powi(2)
}

/// `(1 + sqrt 5) / 4`; `min_alpha h < 0` exactly above this discount.
pub fn threshold() -> f64 {
    (1.0 + 5f64.sqrt()) / 4.0
}

/// Minimizer of `h(., gamma)` over the real line, `(2 gamma^2 - 1) / (2 gamma^2)`.
pub fn h_vertex(gamma: f64) -> f64 {
    let g2 = gamma * gamma;
    (2.0 * g2 - 1.0) / (2.0 * g2)
}

/// `min_{alpha in [0, 1]} h(alpha, gamma)`.
pub fn h_min(gamma: f64) -> f64 {
    let v = h_vertex(gamma).clamp(0.0, 1.0);
    h(v, gamma).min(h(0.0, gamma)).min(h(1.0, gamma))
}

/// `1 - beta (2 gamma beta - 1)`, the per-core-agent term in the welfare statistic.
pub fn core_term(beta: f64, gamma: f64) -> f64 {
    1.0 - beta * (2.0 * gamma * beta - 1.0)
}

pub fn in_g(alpha: f64, beta: f64, gamma: f64) -> bool {
    f(alpha, beta, gamma) < 0.0
}

pub fn in_h(alpha: f64, beta: f64, gamma: f64, l: usize, m: usize) -> bool {
    f(alpha, beta, gamma) < -(l as f64 / m as f64) * core_term(beta, gamma)
}

pub fn in_j(alpha: f64, beta: f64, gamma: f64, l: usize, m: usize) -> bool {
    let fv = f(alpha, beta, gamma);
    let k2 = (1.0 - beta * gamma).powi(2);
    fv < k2 && k2 < m as f64 * fv + l as f64 * core_term(beta, gamma)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionKind {
    G,
    H,
    J,
}

impl RegionKind {
    fn needs_sizes(self) -> bool {
        !matches!(self, RegionKind::G)
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegionKind::G => "G",
            RegionKind::H => "H",
            RegionKind::J => "J",
        })
    }
}

impl FromStr for RegionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "G" | "g" => Ok(RegionKind::G),
            "H" | "h" => Ok(RegionKind::H),
            "J" | "j" => Ok(RegionKind::J),
            _ => Err(Error::param("kind", format!("`{s}` is not one of G, H, J"))),
        }
    }
}

/// `start + k * step` for `k in 0..count`, computed without accumulation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if !(step > 0.0 && start.is_finite() && step.is_finite()) || count == 0 {
            return Err(Error::param(
                "grid",
                "axis needs a finite start, a positive step and count >= 1",
            ));
        }
        Ok(Self { start, step, count })
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count)
            .map(|k| self.start + k as f64 * self.step)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub alpha: Axis,
    pub beta: Axis,
}

impl GridSpec {
    /// `alpha` in `[0, 1)` step 0.01 always; `beta` in `[0.8, 1)` step
    /// 0.0005 for G and H, `[0, 1)` step 0.01 for J.
    pub fn default_for(kind: RegionKind) -> Self {
        let alpha = Axis {
            start: 0.0,
            step: 0.01,
            count: 100,
        };
        let beta = match kind {
            RegionKind::G | RegionKind::H => Axis {
                start: 0.8,
                step: 0.0005,
                count: 400,
            },
            RegionKind::J => Axis {
                start: 0.0,
                step: 0.01,
                count: 100,
            },
        };
        Self { alpha, beta }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionGrid {
    pub kind: RegionKind,
    pub gamma: f64,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub alpha_axis: Vec<f64>,
    pub beta_axis: Vec<f64>,
    /// `membership[p][q]` is the predicate at `(alpha_axis[p], beta_axis[q])`.
    pub membership: Vec<Vec<bool>>,
}

pub fn scan(
    kind: RegionKind,
    gamma: f64,
    l: Option<usize>,
    m: Option<usize>,
    grid: &GridSpec,
) -> Result<RegionGrid> {
    check_gamma(gamma)?;
    let sizes = if kind.needs_sizes() {
        let l = l.ok_or_else(|| Error::param("l", format!("required for region {kind}")))?;
        let m = m.ok_or_else(|| Error::param("m", format!("required for region {kind}")))?;
        if l < 2 {
            return Err(Error::param("l", format!("core size {l} < 2")));
        }
        if m < 1 {
            return Err(Error::param("m", "periphery must be nonempty"));
        }
        Some((l, m))
    } else {
        None
    };
    let alpha_axis = grid.alpha.values();
    let beta_axis = grid.beta.values();
    let membership = alpha_axis
        .par_iter()
        .map(|&a| {
            beta_axis
                .iter()
                .map(|&b| match (kind, sizes) {
                    (RegionKind::H, Some((l, m))) => in_h(a, b, gamma, l, m),
                    (RegionKind::J, Some((l, m))) => in_j(a, b, gamma, l, m),
                    _ => in_g(a, b, gamma),
                })
                .collect()
        })
        .collect();
    Ok(RegionGrid {
        kind,
        gamma,
        l: sizes.map(|s| s.0),
        m: sizes.map(|s| s.1),
        alpha_axis,
        beta_axis,
        membership,
    })
}

impl RegionGrid {
    pub fn count(&self) -> usize {
        self.membership.iter().flatten().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.count() == 0
    }

    pub fn members(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.membership
            .iter()
            .enumerate()
            .flat_map(move |(p, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(move |(q, _)| (self.alpha_axis[p], self.beta_axis[q]))
            })
    }

    /// Points in `self` but not in `other`; errors unless the axes agree.
    pub fn subset_violations(&self, other: &RegionGrid) -> Result<usize> {
        if self.alpha_axis != other.alpha_axis || self.beta_axis != other.beta_axis {
            return Err(Error::param("grid", "region grids are on different axes"));
        }
        Ok(self
            .membership
            .iter()
            .flatten()
            .zip(other.membership.iter().flatten())
            .filter(|(&a, &b)| a && !b)
            .count())
    }

    fn header_values(&self) -> [String; 4] {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        [
            self.kind.to_string(),
            significant(self.gamma),
            opt(self.l),
            opt(self.m),
        ]
    }

    /// `kind,gamma,l,m` and its values, then `alpha,beta,member` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(["kind", "gamma", "l", "m"])
            .map_err(csv_err)?;
        w.write_record(self.header_values()).map_err(csv_err)?;
        w.write_record(["alpha", "beta", "member"])
            .map_err(csv_err)?;
        for (p, row) in self.membership.iter().enumerate() {
            for (q, &b) in row.iter().enumerate() {
                w.write_record([
                    significant(self.alpha_axis[p]),
                    significant(self.beta_axis[q]),
                    u8::from(b).to_string(),
                ])
                .map_err(csv_err)?;
            }
        }
        w.flush()?;
        Ok(())
    }

    /// Whitespace-separated blocks, one per `alpha`, for gnuplot's `splot`.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        let [kind, gamma, l, m] = self.header_values();
        writeln!(out, "# kind={kind} gamma={gamma} l={l} m={m}")?;
        writeln!(out, "# alpha\tbeta\tmember")?;
        for (p, row) in self.membership.iter().enumerate() {
            for (q, &b) in row.iter().enumerate() {
                writeln!(
                    out,
                    "{}\t{}\t{}",
                    significant(self.alpha_axis[p]),
                    significant(self.beta_axis[q]),
                    u8::from(b)
                )?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}
