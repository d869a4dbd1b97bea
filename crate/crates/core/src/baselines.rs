//! Classical node rankings used as comparison baselines.
//!
//! Every ranking is a total order over all nodes. Unless stated otherwise
//! nodes are sorted by descending score with ties going to the smaller id.

use crate::graph::{local_clustering, Graph};
use crate::par;
use crate::select::SpreaderSet;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RankedList {
    pub method: String,
    /// Node ids, best first.
    pub order: Vec<usize>,
    /// Score of every node, indexed by node id.
    pub scores: Vec<f64>,
    /// Set by iterative methods that stopped at their iteration cap.
    pub converged: bool,
}

impl RankedList {
    /// Orders nodes by descending score, ties by ascending id.
    pub fn from_scores(method: impl Into<String>, scores: Vec<f64>) -> Self {
        let mut order: Vec<usize> = (0..scores.len()).collect();
        order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
        RankedList {
            method: method.into(),
            order,
            scores,
            converged: true,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

fn require_undirected(g: &Graph, method: &str) -> Result<()> {
    if g.is_directed() {
        Err(Error::Unsupported {
            method: method.to_string(),
            reason: "directed graphs".to_string(),
        })
    } else {
        Ok(())
    }
}

/// Degree on undirected graphs, in-degree on directed ones.
pub fn degree_rank(g: &Graph) -> RankedList {
    let scores = (0..g.node_count()).map(|u| g.in_degree(u) as f64).collect();
    RankedList::from_scores("degree", scores)
}

pub fn out_degree_rank(g: &Graph) -> RankedList {
    let scores = (0..g.node_count()).map(|u| g.out_degree(u) as f64).collect();
    RankedList::from_scores("outdegree", scores)
}

/// Core number of every node by bucket peeling, `O(n + m)`.
pub fn core_numbers(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    // nodes sorted by current degree, with bucket starts
    let mut bin = vec![0usize; max_degree + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut vert = vec![0usize; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for u in 0..n {
            pos[u] = next[degree[u]];
            vert[pos[u]] = u;
            next[degree[u]] += 1;
        }
    }
    for i in 0..n {
        let u = vert[i];
        for &w in g.neighbors(u) {
            if degree[w] > degree[u] {
                // move w to the front of its bucket, then shrink the bucket
                let dw = degree[w];
                let pw = pos[w];
                let front = bin[dw];
                let x = vert[front];
                if x != w {
                    vert.swap(front, pw);
                    pos[w] = front;
                    pos[x] = pw;
                }
                bin[dw] += 1;
                degree[w] -= 1;
            }
        }
    }
    degree
}

/// Nodes by k-shell index, then degree, then id.
pub fn kshell_rank(g: &Graph) -> Result<RankedList> {
    require_undirected(g, "kshell")?;
    let shells = core_numbers(g);
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| {
        shells[b]
            .cmp(&shells[a])
            .then(g.degree(b).cmp(&g.degree(a)))
            .then(a.cmp(&b))
    });
    Ok(RankedList {
        method: "kshell".to_string(),
        order,
        scores: shells.into_iter().map(|s| s as f64).collect(),
        converged: true,
    })
}

/// Walks a ranking and keeps nodes not adjacent to any node kept so far.
pub fn non_adjacent_prefix(g: &Graph, ranked: &RankedList, r: usize, method: &str) -> Result<SpreaderSet> {
    if r > g.node_count() {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds node count {}", g.node_count())));
    }
    let mut set = SpreaderSet::new(method, format!("r={r}"));
    let mut blocked = vec![false; g.node_count()];
    for &u in &ranked.order {
        if set.len() == r {
            break;
        }
        if blocked[u] {
            continue;
        }
        set.push(u, ranked.scores[u]);
        blocked[u] = true;
        for &v in g.out_neighbors(u).iter().chain(g.in_neighbors(u)) {
            blocked[v] = true;
        }
    }
    set.exhausted = set.len() < r;
    if set.exhausted {
        log::warn!("{method}: only {} non-adjacent spreaders available out of {r}", set.len());
    }
    Ok(set)
}

pub fn kshell_rank_non(g: &Graph, r: usize) -> Result<SpreaderSet> {
    let ranked = kshell_rank(g)?;
    non_adjacent_prefix(g, &ranked, r, "kshell-non")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankParams {
    pub damping: f64,
    pub epsilon: f64,
    pub max_iters: usize,
}

impl Default for PageRankParams {
    fn default() -> Self {
        PageRankParams {
            damping: 0.85,
            epsilon: 1e-10,
            max_iters: 200,
        }
    }
}

/// Power-iteration PageRank with uniform teleportation; dangling nodes
/// spread their mass uniformly. Undirected graphs are walked along both
/// directions of every edge.
pub fn pagerank(g: &Graph, params: PageRankParams) -> RankedList {
    let n = g.node_count();
    if n == 0 {
        return RankedList::from_scores("pagerank", Vec::new());
    }
    let nf = n as f64;
    let d = params.damping;
    let mut x = vec![1.0 / nf; n];
    let mut next = vec![0.0; n];
    let mut converged = false;
    for _ in 0..params.max_iters {
        let dangling: f64 = (0..n).filter(|&u| g.out_degree(u) == 0).map(|u| x[u]).sum();
        let share: Vec<f64> = (0..n)
            .map(|u| match g.out_degree(u) {
                0 => 0.0,
                k => x[u] / k as f64,
            })
            .collect();
        let base = (1.0 - d) / nf + d * dangling / nf;
        for v in 0..n {
            let inflow: f64 = g.in_neighbors(v).iter().map(|&u| share[u]).sum();
            next[v] = base + d * inflow;
        }
        // renormalise against rounding drift
        let total: f64 = next.iter().sum();
        next.iter_mut().for_each(|s| *s /= total);
        let change: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if change < params.epsilon {
            converged = true;
            break;
        }
    }
    if !converged {
        log::warn!("pagerank did not converge within {} iterations", params.max_iters);
    }
    let mut ranked = RankedList::from_scores("pagerank", x);
    ranked.converged = converged;
    ranked
}

/// LeaderRank: a ground node linked both ways to every node makes the
/// walk parameter free; its stationary mass is shared equally among the
/// real nodes at the end. Scores are normalised to sum to one.
pub fn leaderrank(g: &Graph, epsilon: f64, max_iters: usize) -> RankedList {
    let n = g.node_count();
    if n == 0 {
        return RankedList::from_scores("leaderrank", Vec::new());
    }
    let nf = n as f64;
    let mut s = vec![1.0 / nf; n];
    let mut ground = 0.0;
    let mut next = vec![0.0; n];
    let redistributed = |s: &[f64], ground: f64| -> Vec<f64> { s.iter().map(|x| x + ground / nf).collect() };
    let mut current = redistributed(&s, ground);
    let mut converged = false;
    for _ in 0..max_iters {
        let share: Vec<f64> = (0..n).map(|u| s[u] / (g.out_degree(u) + 1) as f64).collect();
        let ground_share = ground / nf;
        for v in 0..n {
            next[v] = ground_share + g.in_neighbors(v).iter().map(|&u| share[u]).sum::<f64>();
        }
        let next_ground: f64 = share.iter().sum();
        std::mem::swap(&mut s, &mut next);
        ground = next_ground;
        let candidate = redistributed(&s, ground);
        let change: f64 = current.iter().zip(&candidate).map(|(a, b)| (a - b).abs()).sum();
        current = candidate;
        if change < epsilon {
            converged = true;
            break;
        }
    }
    if !converged {
        log::warn!("leaderrank did not converge within {max_iters} iterations");
    }
    let total: f64 = current.iter().sum();
    current.iter_mut().for_each(|x| *x /= total);
    let mut ranked = RankedList::from_scores("leaderrank", current);
    ranked.converged = converged;
    ranked
}

/// Directed clustering of each node over its out-neighborhood: the share of
/// ordered out-neighbor pairs `(j, k)` joined by an arc `j -> k`.
fn out_clustering(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    par::map_indices_with(
        n,
        || vec![false; n],
        |mark, u| {
            let out = g.out_neighbors(u);
            let k = out.len();
            if k < 2 {
                return 0.0;
            }
            out.iter().for_each(|&v| mark[v] = true);
            let links: usize = out
                .iter()
                .map(|&j| g.out_neighbors(j).iter().filter(|&&w| mark[w]).count())
                .sum();
            out.iter().for_each(|&v| mark[v] = false);
            links as f64 / (k * (k - 1)) as f64
        },
    )
}

/// ClusterRank: `10^(-c_i) * sum over out-neighbors j of (k_j^out + 1)`.
pub fn clusterrank(g: &Graph) -> RankedList {
    let clustering = if g.is_directed() { out_clustering(g) } else { local_clustering(g) };
    let scores = (0..g.node_count())
        .map(|u| {
            let spread: usize = g.out_neighbors(u).iter().map(|&j| g.out_degree(j) + 1).sum();
            10f64.powf(-clustering[u]) * spread as f64
        })
        .collect();
    RankedList::from_scores("clusterrank", scores)
}

/// Largest `h` such that at least `h` values are `>= h`.
pub fn h_index_of(values: &mut [usize]) -> usize {
    values.sort_unstable_by(|a, b| b.cmp(a));
    values
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| v > i)
        .count()
}

pub fn h_index_rank(g: &Graph) -> Result<RankedList> {
    require_undirected(g, "hindex")?;
    let scores = par::map_indices(g.node_count(), |u| {
        let mut degrees: Vec<usize> = g.neighbors(u).iter().map(|&v| g.degree(v)).collect();
        h_index_of(&mut degrees) as f64
    });
    Ok(RankedList::from_scores("hindex", scores))
}

/// Collective influence `CI_l(i) = (k_i - 1) * sum over the nodes j exactly
/// l hops from i of (k_j - 1)`.
pub fn collective_influence(g: &Graph, radius: usize) -> Result<RankedList> {
    require_undirected(g, "ci")?;
    if radius == 0 {
        return Err(Error::InvalidArgument("collective influence radius must be at least 1".into()));
    }
    let n = g.node_count();
    let scores = par::map_indices_with(
        n,
        || (vec![u32::MAX; n], Vec::new(), Vec::new(), 0u32),
        |(seen, frontier, next, stamp), u| {
            *stamp += 1;
            let stamp = *stamp;
            seen[u] = stamp;
            frontier.clear();
            frontier.push(u);
            for _ in 0..radius {
                next.clear();
                for &x in frontier.iter() {
                    for &y in g.neighbors(x) {
                        if seen[y] != stamp {
                            seen[y] = stamp;
                            next.push(y);
                        }
                    }
                }
                std::mem::swap(frontier, next);
            }
            let ball: i64 = frontier.iter().map(|&j| g.degree(j) as i64 - 1).sum();
            ((g.degree(u) as i64 - 1) * ball) as f64
        },
    );
    Ok(RankedList::from_scores(format!("ci{radius}"), scores))
}

/// First `r` entries of a ranking.
pub fn top_r(ranked: &RankedList, r: usize) -> Result<SpreaderSet> {
    if r > ranked.len() {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds node count {}", ranked.len())));
    }
    let mut set = SpreaderSet::new(ranked.method.clone(), format!("r={r}"));
    for &u in &ranked.order[..r] {
        set.push(u, ranked.scores[u]);
    }
    Ok(set)
}
