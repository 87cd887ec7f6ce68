//! Named network families.
//!
//! Grammar accepted by [`Family::from_str`]:
//!
//! ```text
//! empty:n  regular:n,d  abc:a,b  cp:l,m,a,b
//! ```
//!
//! Core-periphery networks put the `m` peripheral agents first (indices
//! `0..m`) and the `l` core agents after them, so that `cp:2,1,a,b` is the
//! Ann/Bob/Carol network `abc:a,b` entry for entry.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Network;
use crate::error::{Error, Result};

/// How a peripheral agent spreads its out-degree over the core.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeripheryAllocation {
    /// Peripheral agent `k` puts all of `alpha` on core agent `k mod l`.
    #[default]
    RoundRobin,
    /// Every peripheral agent puts `alpha / l` on each core agent.
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorePeripheryParams {
    pub l: usize,
    pub m: usize,
    pub alpha: f64,
    pub beta: f64,
    #[serde(default)]
    pub allocation: PeripheryAllocation,
}

impl CorePeripheryParams {
    pub fn new(l: usize, m: usize, alpha: f64, beta: f64) -> Result<Self> {
        let p = Self {
            l,
            m,
            alpha,
            beta,
            allocation: PeripheryAllocation::default(),
        };
        p.check()?;
        Ok(p)
    }

    pub fn with_allocation(mut self, allocation: PeripheryAllocation) -> Self {
        self.allocation = allocation;
        self
    }

    pub fn n(&self) -> usize {
        self.l + self.m
    }

    pub fn periphery(&self) -> std::ops::Range<usize> {
        0..self.m
    }

    pub fn core(&self) -> std::ops::Range<usize> {
        self.m..self.m + self.l
    }

    fn check(&self) -> Result<()> {
        if self.l < 2 {
            return Err(Error::param("l", format!("core size {} < 2", self.l)));
        }
        if self.m < 1 {
            return Err(Error::param("m", "periphery must be nonempty"));
        }
        unit_interval("alpha", self.alpha)?;
        unit_interval("beta", self.beta)
    }

    fn build(&self) -> Result<Network> {
        self.check()?;
        let mut net = Network::empty(self.n());
        let core0 = self.m;
        for k in self.periphery() {
            match self.allocation {
                PeripheryAllocation::RoundRobin => net.set(k, core0 + k % self.l, self.alpha),
                PeripheryAllocation::Uniform => {
                    for c in self.core() {
                        net.set(k, c, self.alpha / self.l as f64);
                    }
                }
            }
        }
        let spread = self.beta / (self.l - 1) as f64;
        for i in self.core() {
            for j in self.core().filter(|&j| j != i) {
                net.set(i, j, spread);
            }
        }
        Ok(net)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Empty {
        n: usize,
    },
    /// Complete graph, weight `d / (n - 1)` on every off-diagonal entry.
    Regular {
        n: usize,
        d: f64,
    },
    /// Ann (0) follows Bob (1); Bob and Carol (2) follow each other.
    Abc {
        alpha: f64,
        beta: f64,
    },
    CorePeriphery(CorePeripheryParams),
}

fn unit_interval(name: &str, v: f64) -> Result<()> {
    if (0.0..1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::param(name, format!("{v} is not in [0, 1)")))
    }
}

fn agent_count(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::param("n", format!("{n} agents, need at least 2")));
    }
    Ok(())
}

impl Family {
    pub fn build(&self) -> Result<Network> {
        match *self {
            Family::Empty { n } => {
                agent_count(n)?;
                Ok(Network::empty(n))
            }
            Family::Regular { n, d } => {
                agent_count(n)?;
                unit_interval("d", d)?;
                let w = d / (n - 1) as f64;
                let mut net = Network::empty(n);
                for i in 0..n {
                    for j in (0..n).filter(|&j| j != i) {
                        net.set(i, j, w);
                    }
                }
                Ok(net)
            }
            Family::Abc { alpha, beta } => {
                unit_interval("alpha", alpha)?;
                unit_interval("beta", beta)?;
                let mut net = Network::empty(3);
                net.set(0, 1, alpha);
                net.set(1, 2, beta);
                net.set(2, 1, beta);
                Ok(net)
            }
            Family::CorePeriphery(p) => p.build(),
        }
    }
}

fn parse_args<'a>(spec: &str, body: &'a str, arity: usize) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != arity {
        return Err(Error::param(
            "family",
            format!(
                "`{spec}` needs {arity} comma-separated values, found {}",
                parts.len()
            ),
        ));
    }
    Ok(parts)
}

fn num<T: FromStr>(spec: &str, field: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| {
        Error::param(
            "family",
            format!("`{spec}`: cannot parse {field} from `{s}`"),
        )
    })
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let (kind, body) = spec
            .split_once(':')
            .ok_or_else(|| Error::param("family", format!("`{spec}` has no `kind:` prefix")))?;
        let family = match kind {
            "empty" => {
                let a = parse_args(spec, body, 1)?;
                Family::Empty {
                    n: num(spec, "n", a[0])?,
                }
            }
            "regular" => {
                let a = parse_args(spec, body, 2)?;
                Family::Regular {
                    n: num(spec, "n", a[0])?,
                    d: num(spec, "d", a[1])?,
                }
            }
            "abc" => {
                let a = parse_args(spec, body, 2)?;
                Family::Abc {
                    alpha: num(spec, "alpha", a[0])?,
                    beta: num(spec, "beta", a[1])?,
                }
            }
            "cp" => {
                let a = parse_args(spec, body, 4)?;
                Family::CorePeriphery(CorePeripheryParams {
                    l: num(spec, "l", a[0])?,
                    m: num(spec, "m", a[1])?,
                    alpha: num(spec, "alpha", a[2])?,
                    beta: num(spec, "beta", a[3])?,
                    allocation: PeripheryAllocation::default(),
                })
            }
            other => {
                return Err(Error::param(
                    "family",
                    format!("unknown family `{other}` (expected empty, regular, abc or cp)"),
                ))
            }
        };
        // range checks happen here so that a parsed family always builds
        family.build()?;
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Empty { n } => write!(f, "empty:{n}"),
            Family::Regular { n, d } => write!(f, "regular:{n},{d}"),
            Family::Abc { alpha, beta } => write!(f, "abc:{alpha},{beta}"),
            Family::CorePeriphery(p) => write!(f, "cp:{},{},{},{}", p.l, p.m, p.alpha, p.beta),
        }
    }
}
