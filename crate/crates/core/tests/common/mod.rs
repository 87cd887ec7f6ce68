#![allow(dead_code)]

use netgame_core::Network;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sparse network with `2 <= n <= max_n` and row sums drawn from `[0, 0.98)`.
pub fn random_network(rng: &mut ChaCha8Rng, max_n: usize) -> Network {
    let n = rng.random_range(2..=max_n);
    let mut w = vec![0.0; n * n];
    for i in 0..n {
        let degree = rng.random_range(0.0..0.98);
        let raw: Vec<f64> = (0..n)
            .map(|j| {
                if j != i && rng.random_bool(0.6) {
                    rng.random_range(0.0..1.0)
                } else {
                    0.0
                }
            })
            .collect();
        let total: f64 = raw.iter().sum();
        if total > 0.0 {
            for j in 0..n {
                w[i * n + j] = degree * raw[j] / total;
            }
        }
    }
    Network::from_dense(n, w).unwrap()
}

/// Network whose every row sums to one (up to rounding).
pub fn row_stochastic(rng: &mut ChaCha8Rng, n: usize) -> Network {
    let mut w = vec![0.0; n * n];
    for i in 0..n {
        let raw: Vec<f64> = (0..n)
            .map(|j| {
                if j == i {
                    0.0
                } else {
                    rng.random_range(0.01..1.0)
                }
            })
            .collect();
        let total: f64 = raw.iter().sum();
        for j in 0..n {
            w[i * n + j] = raw[j] / total;
        }
    }
    Network::from_dense(n, w).unwrap()
}

/// Every agent puts `1 / (n - 1)` on every other agent.
pub fn uniform_complete(n: usize) -> Network {
    let w = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                0.0
            } else {
                1.0 / (n - 1) as f64
            }
        })
        .collect();
    Network::from_dense(n, w).unwrap()
}
