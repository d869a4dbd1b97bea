//! Evaluation metrics: infected scale `F(t)`, final affected scale `F(t_c)`
//! and the mean shortest-path distance `L_s` between spreaders.

use crate::epidemic::SimTrace;
use crate::graph::Graph;
use crate::par;
use crate::{Error, Result};

/// `F(t) = (n_I(t) + n_R(t)) / n` for every recorded step.
pub fn infected_scale(trace: &SimTrace, n: usize) -> Vec<f64> {
    let n = n as f64;
    trace
        .infected
        .iter()
        .zip(&trace.recovered)
        .map(|(&i, &r)| (i + r) as f64 / n)
        .collect()
}

/// `F(t_c) = n_R(t_c) / n`. SIR traces must have died out. SI traces never
/// recover, so their final scale is the infected share at the last step.
pub fn final_affected_scale(trace: &SimTrace, n: usize) -> Result<f64> {
    if !trace.model.has_recovery() {
        return Ok(trace.final_infected() as f64 / n as f64);
    }
    match trace.final_infected() {
        0 => Ok(trace.final_recovered() as f64 / n as f64),
        remaining => Err(Error::NotTerminated(remaining)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreaderDistance {
    /// Mean hop distance over ordered reachable pairs; `None` if no pair is reachable.
    pub mean: Option<f64>,
    pub reachable_pairs: usize,
    pub unreachable_pairs: usize,
}

/// `L_s`: mean shortest-path length over ordered pairs of distinct
/// spreaders. Unreachable pairs are left out of the mean and counted.
pub fn average_spreader_distance(g: &Graph, spreaders: &[usize]) -> Result<SpreaderDistance> {
    if spreaders.len() < 2 {
        return Err(Error::InvalidArgument("L_s needs at least two spreaders".into()));
    }
    for &s in spreaders {
        g.check_node(s)?;
    }
    let rows = par::map_indices(spreaders.len(), |i| {
        let dist = g.distances_from(spreaders[i]).expect("checked above");
        let (mut total, mut reached, mut missed) = (0usize, 0usize, 0usize);
        for (j, &t) in spreaders.iter().enumerate() {
            if i == j {
                continue;
            }
            match dist[t] {
                Some(d) => {
                    total += d;
                    reached += 1;
                }
                None => missed += 1,
            }
        }
        (total, reached, missed)
    });
    let (total, reachable_pairs, unreachable_pairs) = rows
        .into_iter()
        .fold((0, 0, 0), |acc, x| (acc.0 + x.0, acc.1 + x.1, acc.2 + x.2));
    Ok(SpreaderDistance {
        mean: (reachable_pairs > 0).then(|| total as f64 / reachable_pairs as f64),
        reachable_pairs,
        unreachable_pairs,
    })
}

/// One row of an evaluation table.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    pub method: String,
    pub p: f64,
    pub lambda: f64,
    pub f_of_t: Vec<f64>,
    pub f_tc_mean: f64,
    pub f_tc_std: f64,
    pub l_s: Option<f64>,
    pub unreachable_pairs: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epidemic::Model;
    use crate::generators::path;

    fn trace(model: Model, infected: Vec<usize>, recovered: Vec<usize>, n: usize) -> SimTrace {
        let susceptible = infected.iter().zip(&recovered).map(|(i, r)| n - i - r).collect();
        SimTrace {
            model,
            susceptible,
            infected,
            recovered,
            rng_seed: 0,
            replica: 0,
        }
    }

    #[test]
    fn infected_scale_formula() {
        let t = trace(Model::SirLimited, vec![2, 3, 0], vec![0, 2, 5], 10);
        assert_eq!(infected_scale(&t, 10), vec![0.2, 0.5, 0.5]);
        let t = trace(Model::SirLimited, vec![0, 0], vec![0, 0], 10);
        assert_eq!(infected_scale(&t, 10), vec![0.0, 0.0]);
    }

    #[test]
    fn final_scale_requires_termination() {
        let done = trace(Model::SirLimited, vec![2, 0], vec![0, 3], 10);
        assert_eq!(final_affected_scale(&done, 10).unwrap(), 0.3);
        let running = trace(Model::SirFull, vec![2, 1], vec![0, 3], 10);
        assert!(matches!(final_affected_scale(&running, 10), Err(Error::NotTerminated(1))));
        let si = trace(Model::Si, vec![2, 4], vec![0, 0], 10);
        assert_eq!(final_affected_scale(&si, 10).unwrap(), 0.4);
    }

    #[test]
    fn spreader_distance_examples() {
        let g = path(3);
        let adjacent = average_spreader_distance(&g, &[0, 1]).unwrap();
        assert_eq!(adjacent.mean, Some(1.0));
        assert_eq!(average_spreader_distance(&g, &[0, 2]).unwrap().mean, Some(2.0));
        assert!(average_spreader_distance(&g, &[1]).is_err());

        let chain = Graph::from_edges(3, true, [(0, 1), (1, 2)]).unwrap();
        let d = average_spreader_distance(&chain, &[0, 2]).unwrap();
        assert_eq!((d.mean, d.reachable_pairs, d.unreachable_pairs), (Some(2.0), 1, 1));
        let none = Graph::from_edges(2, true, []).unwrap();
        assert_eq!(average_spreader_distance(&none, &[0, 1]).unwrap().mean, None);
    }
}
