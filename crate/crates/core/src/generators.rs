//! Synthetic graph generators used by tests, benchmarks and the demo.
//!
//! All random generators are seeded and reproducible.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn build(n: usize, directed: bool, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, directed, edges).expect("generator produced an out-of-range node")
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, false, (1..=leaves).map(|i| (0, i)).collect())
}

pub fn path(n: usize) -> Graph {
    build(n, false, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Graph {
    build(n, false, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, false, edges)
}

/// Ring where each node links to its `k / 2` nearest neighbors on each side;
/// `k`-regular for even `k < n`.
pub fn ring_lattice(n: usize, k: usize) -> Graph {
    let half = k / 2;
    let edges = (0..n)
        .flat_map(|u| (1..=half).map(move |d| (u, (u + d) % n)))
        .collect();
    build(n, false, edges)
}

/// G(n, p): every pair (every ordered pair when directed) independently.
pub fn erdos_renyi(n: usize, p: f64, directed: bool, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        let start = if directed { 0 } else { u + 1 };
        for v in start..n {
            if u != v && rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    build(n, directed, edges)
}

/// G(n, m): `m` distinct edges drawn uniformly. Suited to sparse graphs.
pub fn gnm(n: usize, m: usize, directed: bool, seed: u64) -> Graph {
    assert!(n >= 2 || m == 0, "need two nodes for an edge");
    let pairs = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
    assert!(m <= pairs, "m = {m} exceeds the {pairs} possible edges");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let key = if directed || u < v { (u, v) } else { (v, u) };
        if seen.insert(key) {
            edges.push(key);
        }
    }
    build(n, directed, edges)
}

fn preferential_edges(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    assert!(m >= 1 && n > m, "need n > m >= 1");
    let core = m + 1;
    let mut edges = Vec::with_capacity(core * m / 2 + (n - core) * m);
    // endpoint multiset: sampling from it is sampling proportional to degree
    let mut endpoints = Vec::with_capacity(2 * edges.capacity());
    for u in 0..core {
        for v in u + 1..core {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for new in core..n {
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((new, t));
            endpoints.push(new);
            endpoints.push(t);
        }
    }
    edges
}

/// Barabási–Albert preferential attachment grown from a clique of `m + 1`
/// nodes; every later node attaches to `m` distinct existing nodes.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = preferential_edges(n, m, &mut rng);
    build(n, false, edges)
}

/// Preferential-attachment topology with each edge given a random direction.
pub fn barabasi_albert_directed(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = preferential_edges(n, m, &mut rng)
        .into_iter()
        .map(|(u, v)| if rng.random::<bool>() { (u, v) } else { (v, u) })
        .collect();
    build(n, true, edges)
}
