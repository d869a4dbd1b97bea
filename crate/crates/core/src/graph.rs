//! Immutable simple graphs in compressed adjacency form.
//!
//! Node ids are dense integers `0..n` assigned in order of first appearance.
//! The original labels are kept so results can be reported in the caller's
//! vocabulary. Self-loops and parallel edges are dropped during construction.

use std::collections::{HashMap, VecDeque};
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected two whitespace-separated node labels, found {found:?}")]
    Parse { line: usize, found: String },
    #[error("input contains no nodes")]
    Empty,
    #[error("node id {0} is out of range")]
    InvalidNode(usize),
}

/// Compressed sparse rows: the neighbors of `u` are `targets[offsets[u]..offsets[u + 1]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    /// Builds sorted, deduplicated rows from an arc list.
    fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut degree = vec![0usize; n + 1];
        for &(u, _) in arcs {
            degree[u + 1] += 1;
        }
        for i in 0..n {
            degree[i + 1] += degree[i];
        }
        let mut cursor = degree.clone();
        let mut targets = vec![0usize; arcs.len()];
        for &(u, v) in arcs {
            targets[cursor[u]] = v;
            cursor[u] += 1;
        }
        // sort + dedup each row, compacting in place
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut write = 0;
        for u in 0..n {
            let row = &mut targets[degree[u]..degree[u + 1]];
            row.sort_unstable();
            let mut last = None;
            for i in degree[u]..degree[u + 1] {
                let v = targets[i];
                if last != Some(v) {
                    targets[write] = v;
                    write += 1;
                    last = Some(v);
                }
            }
            offsets.push(write);
        }
        targets.truncate(write);
        targets.shrink_to_fit();
        Csr { offsets, targets }
    }

    #[inline]
    fn row(&self, u: usize) -> &[usize] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }
}

/// A simple directed or undirected graph.
///
/// For undirected graphs every edge appears in the rows of both endpoints and
/// `in_neighbors` is the same as `out_neighbors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    edge_count: usize,
    out: Csr,
    inc: Option<Csr>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph over nodes `0..n` labelled by their ids.
    ///
    /// Self-loops and duplicate edges are discarded; on undirected graphs
    /// `(u, v)` and `(v, u)` are the same edge.
    pub fn from_edges<I>(n: usize, directed: bool, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_labelled_edges(labels, directed, edges)
    }

    pub fn from_labelled_edges<I>(
        labels: Vec<String>,
        directed: bool,
        edges: I,
    ) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut arcs = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidNode(u));
            }
            if v >= n {
                return Err(GraphError::InvalidNode(v));
            }
            if u == v {
                continue;
            }
            arcs.push((u, v));
            if !directed {
                arcs.push((v, u));
            }
        }
        let out = Csr::from_arcs(n, &arcs);
        let inc = if directed {
            let reversed: Vec<_> = arcs.iter().map(|&(u, v)| (v, u)).collect();
            Some(Csr::from_arcs(n, &reversed))
        } else {
            None
        };
        let entries = out.targets.len();
        let edge_count = if directed { entries } else { entries / 2 };
        Ok(Graph {
            directed,
            edge_count,
            out,
            inc,
            labels,
        })
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        self.out.row(u)
    }

    #[inline]
    pub fn in_neighbors(&self, u: usize) -> &[usize] {
        match &self.inc {
            Some(inc) => inc.row(u),
            None => self.out.row(u),
        }
    }

    /// Neighbors of `u` on undirected graphs (out-neighbors on directed ones).
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        self.out.row(u)
    }

    #[inline]
    pub fn out_degree(&self, u: usize) -> usize {
        self.out.offsets[u + 1] - self.out.offsets[u]
    }

    #[inline]
    pub fn in_degree(&self, u: usize) -> usize {
        self.in_neighbors(u).len()
    }

    /// Degree on undirected graphs, out-degree on directed graphs.
    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.out_degree(u)
    }

    /// True if an edge joins `u` and `v` in either direction.
    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.out.row(u).binary_search(&v).is_ok() || self.in_neighbors(u).binary_search(&v).is_ok()
    }

    /// Sorted union of in- and out-neighbors.
    pub fn undirected_neighbors(&self, u: usize) -> Vec<usize> {
        if !self.directed {
            return self.out.row(u).to_vec();
        }
        let (a, b) = (self.out.row(u), self.in_neighbors(u));
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) if x == y => {
                    i += 1;
                    j += 1;
                    x
                }
                (Some(&x), Some(&y)) if x < y => {
                    i += 1;
                    x
                }
                (Some(_), Some(&y)) => {
                    j += 1;
                    y
                }
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            merged.push(next);
        }
        merged
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Linear scan; build a map with [`Graph::label_index`] for repeated lookups.
    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    pub fn check_node(&self, u: usize) -> Result<(), GraphError> {
        if u < self.node_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidNode(u))
        }
    }

    /// Hop distances from `source` following edge direction; `None` marks unreachable nodes.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_node(source)?;
        let mut dist = vec![None; self.node_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in self.out_neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Length of the shortest `u -> v` path in hops, or `None` when `v` is unreachable.
    pub fn shortest_path_length(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Ok(Some(0));
        }
        let mut dist = vec![usize::MAX; self.node_count()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in self.out_neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Ok(Some(dist[y]));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }
}

/// Reads a whitespace-separated edge list. Lines starting with `#` and blank
/// lines are skipped.
pub fn parse_edge_list<R: Read>(reader: R, directed: bool) -> Result<Graph, GraphError> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |token: &str| -> usize {
        if let Some(&id) = ids.get(token) {
            return id;
        }
        let id = labels.len();
        labels.push(token.to_string());
        ids.insert(token.to_string(), id);
        id
    };
    for (index, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => {
                let u = intern(a);
                let v = intern(b);
                edges.push((u, v));
            }
            _ => {
                return Err(GraphError::Parse {
                    line: index + 1,
                    found: line.clone(),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(GraphError::Empty);
    }
    Graph::from_labelled_edges(labels, directed, edges)
}

pub fn load_edge_list<P: AsRef<Path>>(path: P, directed: bool) -> Result<Graph, GraphError> {
    parse_edge_list(File::open(path)?, directed)
}

/// Summary statistics of the kind reported for benchmark networks.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
    /// Mean degree (mean out-degree on directed graphs).
    pub mean_degree: f64,
    pub max_degree: usize,
    pub mean_clustering: f64,
    /// `<k^2> / <k>^2`; `None` when the mean degree is zero.
    pub heterogeneity: Option<f64>,
}

/// Raw degree moments `(<k>, <k^2>)` over degrees (out-degrees when directed).
pub fn degree_moments(g: &Graph) -> (f64, f64) {
    let n = g.node_count() as f64;
    let (mut s1, mut s2) = (0.0, 0.0);
    for u in 0..g.node_count() {
        let k = g.degree(u) as f64;
        s1 += k;
        s2 += k * k;
    }
    (s1 / n, s2 / n)
}

pub fn compute_stats(g: &Graph) -> GraphStats {
    let (k1, k2) = degree_moments(g);
    let max_degree = (0..g.node_count()).map(|u| g.degree(u)).max().unwrap_or(0);
    let clustering = local_clustering(g);
    let mean_clustering = if clustering.is_empty() {
        0.0
    } else {
        clustering.iter().sum::<f64>() / clustering.len() as f64
    };
    GraphStats {
        nodes: g.node_count(),
        edges: g.edge_count(),
        mean_degree: k1,
        max_degree,
        mean_clustering,
        heterogeneity: (k1 > 0.0).then(|| k2 / (k1 * k1)),
    }
}

/// Local clustering coefficient of every node, with directed edges treated
/// as undirected. Nodes of degree below two get 0.
///
/// Triangles are enumerated once each by orienting edges from lower to
/// higher (degree, id) rank, which keeps hub-heavy graphs tractable.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.undirected_neighbors(u)).collect();
    let rank_less = |a: usize, b: usize| (adj[a].len(), a) < (adj[b].len(), b);
    let forward: Vec<Vec<usize>> = (0..n)
        .map(|u| adj[u].iter().copied().filter(|&v| rank_less(u, v)).collect())
        .collect();
    let mut triangles = vec![0u64; n];
    let mut mark = vec![usize::MAX; n];
    for u in 0..n {
        for &v in &forward[u] {
            mark[v] = u;
        }
        for &v in &forward[u] {
            for &w in &forward[v] {
                if mark[w] == u {
                    triangles[u] += 1;
                    triangles[v] += 1;
                    triangles[w] += 1;
                }
            }
        }
    }
    (0..n)
        .map(|u| {
            let k = adj[u].len() as f64;
            if k < 2.0 {
                0.0
            } else {
                2.0 * triangles[u] as f64 / (k * (k - 1.0))
            }
        })
        .collect()
}
