//! Brute-force reference implementations shared by the integration tests.
//! None of these reuse the library's incremental or iterative code paths.

#![allow(dead_code)]

use std::collections::HashMap;

use voterank::select::{decrements, initial_abilities};
use voterank::{Graph, VoteRankParams};

/// VoteRank recomputing every score from scratch each turn, on raw
/// fixed-point integers. Returns the winners and their scores.
pub fn naive_voterank(g: &Graph, params: &VoteRankParams) -> (Vec<usize>, Vec<i64>) {
    let n = g.node_count();
    let mut ability: Vec<i64> = initial_abilities(g, params.alpha).iter().map(|v| v.raw()).collect();
    let decrement: Vec<i64> = decrements(g, params).iter().map(|v| v.raw()).collect();
    let mut elected = vec![false; n];
    let mut blocked = vec![false; n];
    let (mut winners, mut scores) = (Vec::new(), Vec::new());
    while winners.len() < params.r {
        let mut best: Option<(usize, i64)> = None;
        for u in 0..n {
            if elected[u] || blocked[u] {
                continue;
            }
            // voters of u: neighbors, or out-neighbors on directed graphs
            let s: i64 = g.out_neighbors(u).iter().map(|&v| ability[v]).sum();
            if best.map_or(true, |(_, b)| s > b) {
                best = Some((u, s));
            }
        }
        let Some((w, s)) = best.filter(|&(_, s)| s > 0) else { break };
        winners.push(w);
        scores.push(s);
        elected[w] = true;
        ability[w] = 0;
        for &v in g.out_neighbors(w) {
            ability[v] = (ability[v] - decrement[v]).max(0);
        }
        if params.non_adjacent {
            for v in 0..n {
                if g.out_neighbors(w).contains(&v) || g.out_neighbors(v).contains(&w) {
                    blocked[v] = true;
                }
            }
        }
    }
    (winners, scores)
}

/// Ten nodes and twelve edges (<k> = 2.4): node 0 links 1..5, node 7 links
/// 5, 6 and 8. Node 0 wins the first vote with 5; node 7 the second.
pub fn toy_network() -> Graph {
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (3, 4), (5, 7), (6, 7), (7, 8), (8, 9), (6, 9)];
    Graph::from_edges(10, false, edges).unwrap()
}

/// Full score vector recomputed from abilities.
pub fn recompute_scores(g: &Graph, ability: &[i64], elected: &[bool]) -> Vec<i64> {
    (0..g.node_count())
        .map(|u| {
            if elected[u] {
                0
            } else {
                g.out_neighbors(u).iter().map(|&v| ability[v]).sum()
            }
        })
        .collect()
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.out_neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d.into_iter()
        .map(|row| row.into_iter().map(|x| (x < inf).then_some(x)).collect())
        .collect()
}

/// Gaussian elimination with partial pivoting.
pub fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    x
}

/// Stationary distribution of a row-stochastic matrix.
pub fn stationary(p: &[Vec<f64>]) -> Vec<f64> {
    let n = p.len();
    // pi (P - I) = 0 transposed, last equation replaced by sum(pi) = 1
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[j][i] = p[i][j] - if i == j { 1.0 } else { 0.0 };
        }
    }
    a[n - 1] = vec![1.0; n];
    let mut b = vec![0.0; n];
    b[n - 1] = 1.0;
    solve_dense(a, b)
}

/// PageRank as the stationary distribution of the Google matrix.
pub fn dense_pagerank(g: &Graph, damping: f64) -> Vec<f64> {
    let n = g.node_count();
    let nf = n as f64;
    let mut p = vec![vec![(1.0 - damping) / nf; n]; n];
    for u in 0..n {
        let out = g.out_neighbors(u);
        if out.is_empty() {
            p[u].iter_mut().for_each(|x| *x += damping / nf);
        } else {
            for &v in out {
                p[u][v] += damping / out.len() as f64;
            }
        }
    }
    stationary(&p)
}

/// LeaderRank from the stationary distribution of the ground-augmented walk.
pub fn dense_leaderrank(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut p = vec![vec![0.0; n + 1]; n + 1];
    for u in 0..n {
        let k = g.out_degree(u) as f64 + 1.0;
        for &v in g.out_neighbors(u) {
            p[u][v] = 1.0 / k;
        }
        p[u][n] = 1.0 / k;
        p[n][u] = 1.0 / n as f64;
    }
    let pi = stationary(&p);
    (0..n).map(|i| pi[i] + pi[n] / n as f64).collect()
}

/// Core numbers by repeatedly deleting every node of degree <= k.
pub fn peel_core_numbers(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut alive = vec![true; n];
    let mut core = vec![0; n];
    let mut remaining = n;
    let mut k = 0;
    while remaining > 0 {
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&u| alive[u] && g.neighbors(u).iter().filter(|&&v| alive[v]).count() <= k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for u in doomed {
                alive[u] = false;
                core[u] = k;
                remaining -= 1;
            }
        }
        k += 1;
    }
    core
}

pub fn h_index_by_definition(g: &Graph, u: usize) -> usize {
    (0..=g.degree(u))
        .rev()
        .find(|&h| g.neighbors(u).iter().filter(|&&v| g.degree(v) >= h).count() >= h)
        .unwrap_or(0)
}

pub fn ci_by_distances(g: &Graph, dist: &[Vec<Option<usize>>], u: usize, radius: usize) -> f64 {
    let frontier: i64 = (0..g.node_count())
        .filter(|&j| dist[u][j] == Some(radius))
        .map(|j| g.degree(j) as i64 - 1)
        .sum();
    ((g.degree(u) as i64 - 1) * frontier) as f64
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Compartment {
    S,
    I,
    R,
}

/// Exact expected final recovered fraction of synchronous SIR on a small
/// graph, by recursion over the Markov chain of compartment vectors.
/// `full_contact` selects the contact-everyone variant.
pub fn exact_sir_final_scale(g: &Graph, seeds: &[usize], mu: f64, beta: f64, full_contact: bool) -> f64 {
    let n = g.node_count();
    let mut start = vec![Compartment::S; n];
    for &s in seeds {
        start[s] = Compartment::I;
    }
    let mut memo = HashMap::new();
    expected_recovered(g, &start, mu, beta, full_contact, &mut memo) / n as f64
}

fn expected_recovered(
    g: &Graph,
    state: &[Compartment],
    mu: f64,
    beta: f64,
    full: bool,
    memo: &mut HashMap<Vec<Compartment>, f64>,
) -> f64 {
    let infected: Vec<usize> = (0..state.len()).filter(|&u| state[u] == Compartment::I).collect();
    if infected.is_empty() {
        return state.iter().filter(|&&c| c == Compartment::R).count() as f64;
    }
    if let Some(&v) = memo.get(state) {
        return v;
    }
    // distribution over the set of newly infected nodes
    let mut infections: HashMap<Vec<usize>, f64> = HashMap::from([(Vec::new(), 1.0)]);
    for &u in &infected {
        let mut options: Vec<(Option<usize>, f64)> = Vec::new();
        let out = g.out_neighbors(u);
        if full {
            // independent coin per susceptible neighbor: expand as a product
            let targets: Vec<usize> = out.iter().copied().filter(|&v| state[v] == Compartment::S).collect();
            let mut next = HashMap::new();
            for (set, p) in &infections {
                for mask in 0..(1u32 << targets.len()) {
                    let mut prob = *p;
                    let mut grown = set.clone();
                    for (bit, &v) in targets.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            prob *= mu;
                            grown.push(v);
                        } else {
                            prob *= 1.0 - mu;
                        }
                    }
                    grown.sort_unstable();
                    grown.dedup();
                    *next.entry(grown).or_insert(0.0) += prob;
                }
            }
            infections = next;
            continue;
        }
        if out.is_empty() {
            continue;
        }
        let k = out.len() as f64;
        for &v in out {
            if state[v] == Compartment::S {
                options.push((Some(v), mu / k));
                options.push((None, (1.0 - mu) / k));
            } else {
                options.push((None, 1.0 / k));
            }
        }
        let mut next = HashMap::new();
        for (set, p) in &infections {
            for &(hit, q) in &options {
                let mut grown = set.clone();
                if let Some(v) = hit {
                    grown.push(v);
                    grown.sort_unstable();
                    grown.dedup();
                }
                *next.entry(grown).or_insert(0.0) += p * q;
            }
        }
        infections = next;
    }
    // recovery: independent coin per node infected at step start
    let mut total = 0.0;
    let mut stay = 0.0;
    for (newly, p) in infections {
        for mask in 0..(1u32 << infected.len()) {
            let mut prob = p;
            let mut next = state.to_vec();
            for (bit, &u) in infected.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    prob *= beta;
                    next[u] = Compartment::R;
                } else {
                    prob *= 1.0 - beta;
                }
            }
            for &v in &newly {
                next[v] = Compartment::I;
            }
            if prob == 0.0 {
                continue;
            }
            if next == state {
                stay += prob;
            } else {
                total += prob * expected_recovered(g, &next, mu, beta, full, memo);
            }
        }
    }
    let value = total / (1.0 - stay);
    memo.insert(state.to_vec(), value);
    value
}
