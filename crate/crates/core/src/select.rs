//! Spreader election by iterative voting (VoteRank).
//!
//! Every node carries a voting score and a voting ability. A node's score is
//! the sum of the abilities of its voters: its neighbors on undirected
//! graphs, its out-neighbors on directed graphs (nodes vote for the nodes
//! they receive information from). Each turn the highest-scoring node is
//! elected, its ability drops to zero, and each of its voters loses `f` of
//! ability (never below zero). Only scores within two hops of the winner
//! change, so the election maintains scores incrementally in an addressable
//! max-heap.
//!
//! Abilities and scores are held in fixed point (see [`Votes`]) so that
//! incremental updates and from-scratch sums agree bit for bit and ties are
//! real ties.

use std::fmt;
use std::ops::{Add, AddAssign, Sub, SubAssign};

use crate::graph::Graph;
use crate::heap::IndexedMaxHeap;
use crate::{Error, Result};

/// Fractional bits of [`Votes`].
pub const VOTE_FRACTION_BITS: u32 = 32;
const VOTE_ONE: f64 = (1u64 << VOTE_FRACTION_BITS) as f64;

/// A non-negative quantity of votes in signed 32.32 fixed point.
///
/// Sums of `Votes` are exact and independent of summation order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Votes(i64);

impl Votes {
    pub const ZERO: Votes = Votes(0);
    pub const ONE: Votes = Votes(1 << VOTE_FRACTION_BITS);

    /// Rounds to the nearest representable value.
    pub fn from_f64(x: f64) -> Votes {
        Votes((x * VOTE_ONE).round() as i64)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / VOTE_ONE
    }

    pub fn from_raw(raw: i64) -> Votes {
        Votes(raw)
    }

    pub fn raw(self) -> i64 {
        self.0
    }

    pub fn saturating_sub_floor(self, rhs: Votes) -> Votes {
        Votes((self.0 - rhs.0).max(0))
    }
}

impl Add for Votes {
    type Output = Votes;
    fn add(self, rhs: Votes) -> Votes {
        Votes(self.0 + rhs.0)
    }
}

impl AddAssign for Votes {
    fn add_assign(&mut self, rhs: Votes) {
        self.0 += rhs.0;
    }
}

impl Sub for Votes {
    type Output = Votes;
    fn sub(self, rhs: Votes) -> Votes {
        Votes(self.0 - rhs.0)
    }
}

impl SubAssign for Votes {
    fn sub_assign(&mut self, rhs: Votes) {
        self.0 -= rhs.0;
    }
}

impl std::iter::Sum for Votes {
    fn sum<I: Iterator<Item = Votes>>(iter: I) -> Votes {
        iter.fold(Votes::ZERO, Add::add)
    }
}

impl fmt::Display for Votes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

/// How much ability a voter loses when the node it voted for is elected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Decrement {
    /// `f_i = k_i^alpha / <k>` (out-degrees on directed graphs); `1/<k>` when `alpha = 0`.
    DegreeScaled,
    /// The same `f` for every node, clamped to `[0, 1]`.
    Constant(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    SmallestId,
    LargestId,
}

impl TieBreak {
    #[inline]
    fn rank(self, id: usize) -> u64 {
        match self {
            TieBreak::SmallestId => u64::MAX - id as u64,
            TieBreak::LargestId => id as u64,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VoteRankParams {
    /// Number of spreaders to elect.
    pub r: usize,
    /// Exponent of the initial voting ability `k_i^alpha`, in `[0, 1]`.
    pub alpha: f64,
    pub decrement: Decrement,
    /// Never elect a node adjacent to an already elected one.
    pub non_adjacent: bool,
    /// When no candidate with a positive score remains, fill the remaining
    /// slots with the smallest-id eligible nodes instead of stopping.
    pub pad: bool,
    pub tie_break: TieBreak,
}

impl VoteRankParams {
    pub fn new(r: usize) -> Self {
        VoteRankParams {
            r,
            alpha: 0.0,
            decrement: Decrement::DegreeScaled,
            non_adjacent: false,
            pad: false,
            tie_break: TieBreak::SmallestId,
        }
    }

    pub fn alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn decrement(mut self, decrement: Decrement) -> Self {
        self.decrement = decrement;
        self
    }

    pub fn non_adjacent(mut self, on: bool) -> Self {
        self.non_adjacent = on;
        self
    }

    pub fn pad(mut self, on: bool) -> Self {
        self.pad = on;
        self
    }

    pub fn tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    fn describe(&self) -> String {
        let f = match self.decrement {
            Decrement::DegreeScaled if self.alpha == 0.0 => "1/<k>".to_string(),
            Decrement::DegreeScaled => "k^alpha/<k>".to_string(),
            Decrement::Constant(f) => f.to_string(),
        };
        format!("r={} alpha={} f={}", self.r, self.alpha, f)
    }
}

/// Ordered spreaders as produced by any selection method.
#[derive(Debug, Clone, PartialEq)]
pub struct SpreaderSet {
    /// Node ids in election order.
    pub nodes: Vec<usize>,
    /// Score of each node when it was picked.
    pub scores: Vec<f64>,
    pub method: String,
    pub params: String,
    /// Set when fewer than the requested number of spreaders could be picked.
    pub exhausted: bool,
}

impl SpreaderSet {
    pub fn new(method: impl Into<String>, params: impl Into<String>) -> Self {
        SpreaderSet {
            nodes: Vec::new(),
            scores: Vec::new(),
            method: method.into(),
            params: params.into(),
            exhausted: false,
        }
    }

    pub fn push(&mut self, node: usize, score: f64) {
        self.nodes.push(node);
        self.scores.push(score);
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Initial voting abilities `k_i^alpha`, with `0^0 = 1`.
pub fn initial_abilities(g: &Graph, alpha: f64) -> Vec<Votes> {
    (0..g.node_count())
        .map(|u| {
            if alpha == 0.0 {
                Votes::ONE
            } else {
                Votes::from_f64((g.degree(u) as f64).powf(alpha))
            }
        })
        .collect()
}

/// Per-node ability decrements for the given parameters.
pub fn decrements(g: &Graph, params: &VoteRankParams) -> Vec<Votes> {
    let n = g.node_count();
    match params.decrement {
        Decrement::Constant(f) => {
            let clamped = f.clamp(0.0, 1.0);
            if clamped != f {
                log::warn!("decrement factor {f} clamped to {clamped}");
            }
            vec![Votes::from_f64(clamped); n]
        }
        Decrement::DegreeScaled => {
            let mean = if n == 0 { 0.0 } else { (0..n).map(|u| g.degree(u)).sum::<usize>() as f64 / n as f64 };
            let mut base = 1.0 / mean;
            if !(base <= 1.0) {
                log::warn!("decrement factor 1/<k> with <k> = {mean} clamped to 1");
                base = 1.0;
            }
            (0..n)
                .map(|u| {
                    let weight = if params.alpha == 0.0 { 1.0 } else { (g.degree(u) as f64).powf(params.alpha) };
                    Votes::from_f64(weight * base)
                })
                .collect()
        }
    }
}

type Priority = (Votes, u64);

/// Scores, abilities and election state of one VoteRank run.
#[derive(Debug, Clone)]
pub struct VoteState {
    ability: Vec<Votes>,
    score: Vec<Votes>,
    decrement: Vec<Votes>,
    elected: Vec<bool>,
    /// Keys may lag behind `score`; a stored key never undercuts the live one.
    candidates: IndexedMaxHeap<Priority>,
    tie_break: TieBreak,
}

impl VoteState {
    /// Runs the initial vote: each node's score is the sum of its voters' abilities.
    pub fn new(g: &Graph, ability: Vec<Votes>, decrement: Vec<Votes>, tie_break: TieBreak) -> Self {
        let n = g.node_count();
        assert_eq!(ability.len(), n);
        assert_eq!(decrement.len(), n);
        let score: Vec<Votes> = (0..n)
            .map(|u| g.out_neighbors(u).iter().map(|&v| ability[v]).sum())
            .collect();
        let keys = score.iter().enumerate().map(|(u, &s)| (s, tie_break.rank(u))).collect();
        VoteState {
            ability,
            score,
            decrement,
            elected: vec![false; n],
            candidates: IndexedMaxHeap::from_keys(keys),
            tie_break,
        }
    }

    pub fn score(&self, u: usize) -> Votes {
        if self.elected[u] {
            Votes::ZERO
        } else {
            self.score[u]
        }
    }

    pub fn scores(&self) -> Vec<Votes> {
        (0..self.score.len()).map(|u| self.score(u)).collect()
    }

    pub fn ability(&self, u: usize) -> Votes {
        self.ability[u]
    }

    pub fn abilities(&self) -> &[Votes] {
        &self.ability
    }

    pub fn is_elected(&self, u: usize) -> bool {
        self.elected[u]
    }

    /// Highest-scoring node still eligible, with its score.
    pub fn best_candidate(&mut self) -> Option<(usize, Votes)> {
        // scores only fall, so a top whose key is current beats every other live key
        loop {
            let (u, key) = self.candidates.peek()?;
            let live = (self.score[u], self.tie_break.rank(u));
            if key == live {
                return Some((u, live.0));
            }
            self.candidates.update(u, live);
        }
    }

    /// Withdraws `u` from candidacy without changing its vote.
    pub fn exclude(&mut self, u: usize) {
        self.candidates.remove(u);
    }

    pub fn is_candidate(&self, u: usize) -> bool {
        self.candidates.contains(u)
    }

    /// Elects `winner`: zeroes its ability and score, weakens its voters by
    /// their decrement, and refreshes the scores of every node those
    /// abilities feed, i.e. the two-hop neighborhood of the winner.
    pub fn update_after_election(&mut self, g: &Graph, winner: usize) -> Result<()> {
        g.check_node(winner)?;
        if self.elected[winner] {
            return Err(Error::AlreadyElected(winner));
        }
        self.elected[winner] = true;
        self.score[winner] = Votes::ZERO;
        self.candidates.remove(winner);

        let lost = std::mem::replace(&mut self.ability[winner], Votes::ZERO);
        if lost > Votes::ZERO {
            self.withdraw(g, winner, lost);
        }
        for &voter in g.out_neighbors(winner) {
            let before = self.ability[voter];
            let after = before.saturating_sub_floor(self.decrement[voter]);
            if after < before {
                self.ability[voter] = after;
                self.withdraw(g, voter, before - after);
            }
        }
        Ok(())
    }

    /// Removes `amount` from the score of every node `voter` votes for.
    fn withdraw(&mut self, g: &Graph, voter: usize, amount: Votes) {
        // elected entries drift below zero; the accessors report them as zero
        for &u in g.in_neighbors(voter) {
            self.score[u] -= amount;
        }
    }
}

/// Elects up to `params.r` spreaders.
pub fn voterank(g: &Graph, params: &VoteRankParams) -> Result<SpreaderSet> {
    let n = g.node_count();
    if params.r > n {
        return Err(Error::InvalidArgument(format!("r = {} exceeds node count {n}", params.r)));
    }
    if !(0.0..=1.0).contains(&params.alpha) {
        return Err(Error::InvalidArgument(format!("alpha = {} outside [0, 1]", params.alpha)));
    }
    let method = if params.non_adjacent { "voterank-non" } else { "voterank" };
    let mut set = SpreaderSet::new(method, params.describe());
    if params.r == 0 {
        return Ok(set);
    }
    let mut state = VoteState::new(
        g,
        initial_abilities(g, params.alpha),
        decrements(g, params),
        params.tie_break,
    );
    while set.len() < params.r {
        match state.best_candidate() {
            Some((winner, score)) if score > Votes::ZERO => {
                set.push(winner, score.to_f64());
                state.update_after_election(g, winner)?;
                if params.non_adjacent {
                    exclude_neighborhood(g, &mut state, winner);
                }
            }
            _ => {
                set.exhausted = true;
                break;
            }
        }
    }
    if set.exhausted {
        if params.pad {
            pad_with_smallest_ids(g, &mut state, &mut set, params);
        }
        if set.len() < params.r {
            log::warn!(
                "{method}: only {} of {} spreaders have a positive score",
                set.len(),
                params.r
            );
        }
    }
    Ok(set)
}

/// VoteRank where no two spreaders may be directly linked.
pub fn voterank_non_adjacent(g: &Graph, params: &VoteRankParams) -> Result<SpreaderSet> {
    voterank(g, &params.clone().non_adjacent(true))
}

fn exclude_neighborhood(g: &Graph, state: &mut VoteState, u: usize) {
    for &v in g.out_neighbors(u) {
        state.exclude(v);
    }
    for &v in g.in_neighbors(u) {
        state.exclude(v);
    }
}

fn pad_with_smallest_ids(g: &Graph, state: &mut VoteState, set: &mut SpreaderSet, params: &VoteRankParams) {
    for u in 0..g.node_count() {
        if set.len() == params.r {
            break;
        }
        if state.is_candidate(u) {
            set.push(u, 0.0);
            state.exclude(u);
            if params.non_adjacent {
                exclude_neighborhood(g, state, u);
            }
        }
    }
    set.exhausted = set.len() < params.r;
}
