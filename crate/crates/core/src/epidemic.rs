//! Discrete-time spreading processes and their Monte Carlo driver.
//!
//! All three processes are synchronous: infection attempts in a step are
//! resolved against the state at the start of that step, and recovery coins
//! are then flipped for the nodes that were infected at the start of the
//! step. Spreading follows out-links on directed graphs.
//!
//! Each replica draws from its own ChaCha8 stream selected by
//! `(master seed, replica index)`, so results do not depend on how replicas
//! are scheduled.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{degree_moments, Graph};
use crate::metrics::infected_scale;
use crate::par;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// SIR where an infected node contacts one random neighbor per step.
    SirLimited,
    /// SIR where an infected node contacts every neighbor per step.
    SirFull,
    /// Limited-contact SI, no recovery.
    Si,
}

impl Model {
    pub fn has_recovery(self) -> bool {
        !matches!(self, Model::Si)
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::SirLimited => "sir-limited",
            Model::SirFull => "sir-full",
            Model::Si => "si",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "sir-limited" | "sir" => Ok(Model::SirLimited),
            "sir-full" => Ok(Model::SirFull),
            "si" => Ok(Model::Si),
            other => Err(Error::InvalidArgument(format!("unknown model {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimParams {
    pub model: Model,
    /// Infection probability per contact.
    pub mu: f64,
    /// Recovery probability per step; unused by SI.
    pub beta: f64,
    pub seeds: Vec<usize>,
    pub rng_seed: u64,
    /// Defaults to `10 * n`.
    pub max_steps: Option<usize>,
}

impl SimParams {
    pub fn new(model: Model, mu: f64, beta: f64, seeds: Vec<usize>) -> Self {
        SimParams {
            model,
            mu,
            beta,
            seeds,
            rng_seed: 0,
            max_steps: None,
        }
    }

    /// Parameters from an infected rate `lambda = mu / beta`; `mu` is capped at 1.
    pub fn from_rate(model: Model, lambda: f64, beta: f64, seeds: Vec<usize>) -> Self {
        let mut mu = lambda * beta;
        if mu > 1.0 {
            log::warn!("mu = lambda * beta = {mu} clamped to 1");
            mu = 1.0;
        }
        SimParams::new(model, mu, beta, seeds)
    }

    pub fn rng_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    pub fn max_steps(mut self, steps: usize) -> Self {
        self.max_steps = Some(steps);
        self
    }

    /// `mu / beta`, when `beta > 0`.
    pub fn lambda(&self) -> Option<f64> {
        (self.beta > 0.0).then(|| self.mu / self.beta)
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(Error::InvalidArgument("seed set is empty".into()));
        }
        for &s in &self.seeds {
            g.check_node(s)?;
        }
        if !(0.0..=1.0).contains(&self.mu) {
            return Err(Error::InvalidArgument(format!("mu = {} outside [0, 1]", self.mu)));
        }
        if self.model.has_recovery() && !(self.beta > 0.0 && self.beta <= 1.0) {
            return Err(Error::InvalidArgument(format!("beta = {} outside (0, 1]", self.beta)));
        }
        Ok(())
    }
}

/// Compartment counts of one replica, one entry per step starting at `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimTrace {
    pub model: Model,
    pub susceptible: Vec<usize>,
    pub infected: Vec<usize>,
    pub recovered: Vec<usize>,
    pub rng_seed: u64,
    pub replica: u64,
}

impl SimTrace {
    /// Final step index.
    pub fn t_c(&self) -> usize {
        self.infected.len() - 1
    }

    pub fn steps(&self) -> usize {
        self.infected.len()
    }

    pub fn final_infected(&self) -> usize {
        *self.infected.last().unwrap_or(&0)
    }

    pub fn final_recovered(&self) -> usize {
        *self.recovered.last().unwrap_or(&0)
    }

    fn push(&mut self, s: usize, i: usize, r: usize) {
        self.susceptible.push(s);
        self.infected.push(i);
        self.recovered.push(r);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Susceptible,
    Infected,
    Recovered,
}

/// The RNG stream of replica `replica` under `master_seed`.
pub fn replica_rng(master_seed: u64, replica: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(replica);
    rng
}

fn simulate(g: &Graph, params: &SimParams, replica: u64) -> SimTrace {
    let n = g.node_count();
    let mut rng = replica_rng(params.rng_seed, replica);
    let max_steps = params.max_steps.unwrap_or(10 * n);
    let mut status = vec![Status::Susceptible; n];
    let mut infected: Vec<usize> = params.seeds.clone();
    infected.sort_unstable();
    infected.dedup();
    for &u in &infected {
        status[u] = Status::Infected;
    }
    let (mut n_i, mut n_r) = (infected.len(), 0usize);
    let mut trace = SimTrace {
        model: params.model,
        susceptible: Vec::new(),
        infected: Vec::new(),
        recovered: Vec::new(),
        rng_seed: params.rng_seed,
        replica,
    };
    trace.push(n - n_i, n_i, 0);

    // SI keeps only infected nodes that still have a susceptible out-neighbor
    let mut open_targets: Vec<usize> = Vec::new();
    if params.model == Model::Si {
        open_targets = (0..n)
            .map(|u| g.out_neighbors(u).iter().filter(|&&v| status[v] == Status::Susceptible).count())
            .collect();
        infected.retain(|&u| open_targets[u] > 0);
    }

    let mut newly = Vec::new();
    let mut still = Vec::with_capacity(infected.len());
    let mut t = 0;
    while t < max_steps && !infected.is_empty() {
        newly.clear();
        match params.model {
            Model::SirLimited | Model::Si => {
                for &u in &infected {
                    let out = g.out_neighbors(u);
                    if out.is_empty() {
                        continue;
                    }
                    let v = out[rng.random_range(0..out.len())];
                    let hit = rng.random::<f64>() < params.mu;
                    if hit && status[v] == Status::Susceptible {
                        status[v] = Status::Infected;
                        newly.push(v);
                    }
                }
            }
            Model::SirFull => {
                for &u in &infected {
                    for &v in g.out_neighbors(u) {
                        if status[v] == Status::Susceptible && rng.random::<f64>() < params.mu {
                            status[v] = Status::Infected;
                            newly.push(v);
                        }
                    }
                }
            }
        }

        let added = newly.len();
        still.clear();
        if params.model.has_recovery() {
            for &u in &infected {
                if rng.random::<f64>() < params.beta {
                    status[u] = Status::Recovered;
                    n_r += 1;
                    n_i -= 1;
                } else {
                    still.push(u);
                }
            }
        } else {
            for &v in &newly {
                for &w in g.in_neighbors(v) {
                    open_targets[w] -= 1;
                }
            }
            still.extend(infected.iter().copied().filter(|&u| open_targets[u] > 0));
            newly.retain(|&v| open_targets[v] > 0);
        }
        n_i += added;
        still.extend_from_slice(&newly);
        std::mem::swap(&mut infected, &mut still);
        t += 1;
        trace.push(n - n_i - n_r, n_i, n_r);
    }
    trace
}

fn run_model(g: &Graph, params: &SimParams, model: Model) -> Result<SimTrace> {
    let params = SimParams { model, ..params.clone() };
    params.validate(g)?;
    Ok(simulate(g, &params, 0))
}

/// One limited-contact SIR replica (stream 0 of `params.rng_seed`).
pub fn run_sir_limited(g: &Graph, params: &SimParams) -> Result<SimTrace> {
    run_model(g, params, Model::SirLimited)
}

pub fn run_sir_full(g: &Graph, params: &SimParams) -> Result<SimTrace> {
    run_model(g, params, Model::SirFull)
}

pub fn run_si(g: &Graph, params: &SimParams) -> Result<SimTrace> {
    run_model(g, params, Model::Si)
}

/// One replica of `params.model`.
pub fn run(g: &Graph, params: &SimParams) -> Result<SimTrace> {
    run_model(g, params, params.model)
}

/// Degree-based mean-field SIR threshold `<k> / (<k^2> - <k>)`, on
/// out-degrees for directed graphs.
pub fn epidemic_threshold(g: &Graph) -> Result<f64> {
    let (first, second) = degree_moments(g);
    if second <= first {
        return Err(Error::UndefinedThreshold { first, second });
    }
    Ok(first / (second - first))
}

/// Independent replicas `0..replicas`, returned in replica order.
pub fn run_replicas(g: &Graph, params: &SimParams, replicas: usize) -> Result<Vec<SimTrace>> {
    params.validate(g)?;
    if replicas == 0 {
        return Err(Error::InvalidArgument("replicas must be at least 1".into()));
    }
    Ok(par::map_indices(replicas, |i| simulate(g, params, i as u64)))
}

/// Replica statistics of `F(t)` per step and of the final affected scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub model: Model,
    pub replicas: usize,
    pub mean_f: Vec<f64>,
    /// Sample standard deviation (zero for a single replica).
    pub std_f: Vec<f64>,
    /// Final affected scale of each replica.
    pub final_scale: Vec<f64>,
    pub final_mean: f64,
    pub final_std: f64,
    /// SIR replicas stopped by the step cap with nodes still infected.
    pub unterminated: usize,
}

impl Aggregate {
    /// Standard error of the mean final affected scale.
    pub fn final_standard_error(&self) -> f64 {
        self.final_std / (self.replicas as f64).sqrt()
    }
}

fn mean_std(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let count = values.clone().count() as f64;
    let mean = values.clone().sum::<f64>() / count;
    if count < 2.0 {
        return (mean, 0.0);
    }
    let var = values.map(|x| (x - mean) * (x - mean)).sum::<f64>() / (count - 1.0);
    (mean, var.sqrt())
}

/// Aligns traces by holding each at its terminal state and reduces them in
/// replica order.
pub fn aggregate(traces: &[SimTrace], n: usize) -> Aggregate {
    assert!(!traces.is_empty(), "aggregate of zero traces");
    let curves: Vec<Vec<f64>> = traces.iter().map(|t| infected_scale(t, n)).collect();
    let len = curves.iter().map(Vec::len).max().unwrap_or(0);
    let mut mean_f = Vec::with_capacity(len);
    let mut std_f = Vec::with_capacity(len);
    for step in 0..len {
        let at = curves.iter().map(move |c| c[step.min(c.len() - 1)]);
        let (m, s) = mean_std(at);
        mean_f.push(m);
        std_f.push(s);
    }
    let model = traces[0].model;
    let final_scale: Vec<f64> = traces
        .iter()
        .map(|t| {
            let count = if model.has_recovery() { t.final_recovered() } else { t.final_infected() };
            count as f64 / n as f64
        })
        .collect();
    let unterminated = if model.has_recovery() {
        traces.iter().filter(|t| t.final_infected() > 0).count()
    } else {
        0
    };
    if unterminated > 0 {
        log::warn!("{unterminated} replicas hit the step cap before the epidemic died out");
    }
    let (final_mean, final_std) = mean_std(final_scale.iter().copied());
    Aggregate {
        model,
        replicas: traces.len(),
        mean_f,
        std_f,
        final_scale,
        final_mean,
        final_std,
        unterminated,
    }
}

pub fn monte_carlo(g: &Graph, params: &SimParams, replicas: usize) -> Result<Aggregate> {
    let traces = run_replicas(g, params, replicas)?;
    Ok(aggregate(&traces, g.node_count()))
}
