//! Selection of influential spreader sets by iterative voting, classical
//! centrality baselines, and Monte Carlo epidemic evaluation.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: edge-list ingestion, adjacency, summary statistics, BFS.
//! - [`select`]: the VoteRank election and its non-adjacent variant.
//! - [`baselines`]: degree, k-shell, PageRank, LeaderRank, ClusterRank,
//!   H-index and collective influence rankings.
//! - [`epidemic`]: limited-contact SIR, full-contact SIR and SI processes.
//! - [`metrics`]: infected scale, final affected scale, spreader dispersion.
//! - [`methods`]: a name-based registry over all selection methods.

pub mod baselines;
pub mod epidemic;
pub mod generators;
pub mod graph;
pub mod heap;
pub mod methods;
pub mod metrics;
mod par;
pub mod report;
pub mod select;

pub use baselines::RankedList;
pub use epidemic::{Aggregate, Model, SimParams, SimTrace};
pub use graph::{compute_stats, load_edge_list, parse_edge_list, Graph, GraphError, GraphStats};
pub use methods::{Method, MethodOptions};
pub use metrics::{MetricReport, SpreaderDistance};
pub use select::{Decrement, SpreaderSet, TieBreak, VoteRankParams, VoteState, Votes};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{method} does not support {reason}")]
    Unsupported { method: String, reason: String },
    #[error("node {0} has already been elected")]
    AlreadyElected(usize),
    #[error("trace has not terminated: {0} nodes still infected")]
    NotTerminated(usize),
    #[error("epidemic threshold undefined: <k^2> = {second} <= <k> = {first}")]
    UndefinedThreshold { first: f64, second: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Number of spreaders for a seed fraction `p`: nearest integer, at least one.
pub fn spreaders_for_fraction(p: f64, n: usize) -> usize {
    ((p * n as f64).round() as usize).max(1)
}

#[cfg(test)]
mod tests {
    #[test]
    fn spreader_count_rounding() {
        assert_eq!(super::spreaders_for_fraction(0.002, 23133), 46);
        assert_eq!(super::spreaders_for_fraction(0.003, 23133), 69);
        assert_eq!(super::spreaders_for_fraction(0.0001, 100), 1);
        assert_eq!(super::spreaders_for_fraction(0.5, 5), 3);
    }
}
