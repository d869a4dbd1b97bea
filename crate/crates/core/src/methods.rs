//! Name-based dispatch over every spreader selection method.

use std::fmt;
use std::str::FromStr;

use crate::baselines::{self, PageRankParams, RankedList};
use crate::graph::Graph;
use crate::select::{self, Decrement, SpreaderSet, TieBreak, VoteRankParams};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    VoteRank,
    VoteRankNon,
    /// Degree, or in-degree on directed graphs.
    Degree,
    OutDegree,
    KShell,
    KShellNon,
    PageRank,
    LeaderRank,
    ClusterRank,
    HIndex,
    /// Collective influence with the given ball radius.
    CollectiveInfluence(usize),
}

impl Method {
    pub const ALL: [Method; 11] = [
        Method::VoteRank,
        Method::VoteRankNon,
        Method::Degree,
        Method::OutDegree,
        Method::KShell,
        Method::KShellNon,
        Method::PageRank,
        Method::LeaderRank,
        Method::ClusterRank,
        Method::HIndex,
        Method::CollectiveInfluence(2),
    ];

    pub fn is_voterank(self) -> bool {
        matches!(self, Method::VoteRank | Method::VoteRankNon)
    }

    /// Picks `r` spreaders.
    pub fn select(self, g: &Graph, r: usize, opts: &MethodOptions) -> Result<SpreaderSet> {
        if r > g.node_count() {
            return Err(Error::InvalidArgument(format!("r = {r} exceeds node count {}", g.node_count())));
        }
        match self {
            Method::VoteRank | Method::VoteRankNon => {
                let params = VoteRankParams::new(r)
                    .alpha(opts.alpha)
                    .decrement(opts.decrement)
                    .tie_break(opts.tie_break)
                    .pad(opts.pad)
                    .non_adjacent(self == Method::VoteRankNon);
                select::voterank(g, &params)
            }
            Method::KShellNon => baselines::kshell_rank_non(g, r),
            _ => {
                let ranked = self.ranking(g, opts).expect("ranking method")?;
                baselines::top_r(&ranked, r)
            }
        }
    }

    /// The full node ranking for score-based methods; `None` for the
    /// iterative selections that only produce a spreader sequence.
    pub fn ranking(self, g: &Graph, opts: &MethodOptions) -> Option<Result<RankedList>> {
        Some(match self {
            Method::VoteRank | Method::VoteRankNon | Method::KShellNon => return None,
            Method::Degree => Ok(baselines::degree_rank(g)),
            Method::OutDegree => Ok(baselines::out_degree_rank(g)),
            Method::KShell => baselines::kshell_rank(g),
            Method::PageRank => Ok(baselines::pagerank(g, opts.pagerank)),
            Method::LeaderRank => Ok(baselines::leaderrank(g, opts.pagerank.epsilon, opts.pagerank.max_iters)),
            Method::ClusterRank => Ok(baselines::clusterrank(g)),
            Method::HIndex => baselines::h_index_rank(g),
            Method::CollectiveInfluence(radius) => baselines::collective_influence(g, radius),
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::VoteRank => f.write_str("voterank"),
            Method::VoteRankNon => f.write_str("voterank-non"),
            Method::Degree => f.write_str("degree"),
            Method::OutDegree => f.write_str("outdegree"),
            Method::KShell => f.write_str("kshell"),
            Method::KShellNon => f.write_str("kshell-non"),
            Method::PageRank => f.write_str("pagerank"),
            Method::LeaderRank => f.write_str("leaderrank"),
            Method::ClusterRank => f.write_str("clusterrank"),
            Method::HIndex => f.write_str("hindex"),
            Method::CollectiveInfluence(radius) => write!(f, "ci{radius}"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let name = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match name.as_str() {
            "voterank" => Method::VoteRank,
            "voterank-non" => Method::VoteRankNon,
            "degree" | "indegree" => Method::Degree,
            "outdegree" => Method::OutDegree,
            "kshell" | "k-shell" => Method::KShell,
            "kshell-non" | "k-shell-non" => Method::KShellNon,
            "pagerank" => Method::PageRank,
            "leaderrank" => Method::LeaderRank,
            "clusterrank" => Method::ClusterRank,
            "hindex" | "h-index" => Method::HIndex,
            other => match other.strip_prefix("ci").map(str::parse::<usize>) {
                Some(Ok(radius)) if radius >= 1 => Method::CollectiveInfluence(radius),
                _ => return Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
            },
        })
    }
}

/// Tunables shared by all methods; each method reads what it needs.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodOptions {
    pub alpha: f64,
    pub decrement: Decrement,
    pub tie_break: TieBreak,
    pub pad: bool,
    pub pagerank: PageRankParams,
}

impl Default for MethodOptions {
    fn default() -> Self {
        MethodOptions {
            alpha: 0.0,
            decrement: Decrement::DegreeScaled,
            tie_break: TieBreak::SmallestId,
            pad: false,
            pagerank: PageRankParams::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::star;

    #[test]
    fn names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert_eq!("CI3".parse::<Method>().unwrap(), Method::CollectiveInfluence(3));
        assert!("ci0".parse::<Method>().is_err());
        assert!("closeness".parse::<Method>().is_err());
    }

    #[test]
    fn dispatch() {
        let g = star(5);
        let opts = MethodOptions::default();
        assert_eq!(Method::VoteRank.select(&g, 1, &opts).unwrap().nodes, vec![0]);
        assert_eq!(Method::Degree.select(&g, 1, &opts).unwrap().nodes, vec![0]);
        assert!(Method::Degree.select(&g, 0, &opts).unwrap().is_empty());
        assert!(Method::Degree.select(&g, 7, &opts).is_err());
        let directed = Graph::from_edges(2, true, [(0, 1)]).unwrap();
        assert!(matches!(Method::KShell.select(&directed, 1, &opts), Err(Error::Unsupported { .. })));
        assert!(Method::VoteRank.ranking(&g, &opts).is_none());
    }
}
