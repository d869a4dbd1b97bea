//! WebAssembly bindings for the static demo page in `www/`.
//!
//! The page builds a small synthetic graph, picks spreaders with any
//! selection method and plots the mean infected-scale curve they produce.

use wasm_bindgen::prelude::*;

use voterank::epidemic::{monte_carlo, SimParams};
use voterank::graph::degree_moments;
use voterank::metrics::average_spreader_distance;
use voterank::{generators, Decrement, Graph, Method, MethodOptions, Model};

pub mod layout;

/// Largest graph the page accepts; the layout is quadratic in `n`.
pub const MAX_NODES: usize = 2000;

#[wasm_bindgen]
pub struct Demo {
    graph: Graph,
    positions: Vec<f64>,
    spreaders: Vec<usize>,
}

#[wasm_bindgen]
impl Demo {
    /// `kind` is `"ba"` (`param` = links per new node) or `"er"` (`param` = mean degree).
    #[wasm_bindgen(constructor)]
    pub fn new(kind: &str, n: usize, param: f64, seed: u64) -> Result<Demo, String> {
        if !(2..=MAX_NODES).contains(&n) {
            return Err(format!("n must lie in 2..={MAX_NODES}"));
        }
        let graph = match kind {
            "ba" => {
                let attach = param.round() as usize;
                if attach < 1 || attach >= n {
                    return Err("links per node must lie in 1..n".into());
                }
                generators::barabasi_albert(n, attach, seed)
            }
            "er" => {
                if !(param > 0.0) {
                    return Err("mean degree must be positive".into());
                }
                generators::erdos_renyi(n, (param / (n - 1) as f64).min(1.0), false, seed)
            }
            other => return Err(format!("unknown graph kind {other:?}")),
        };
        let iterations = if n > 800 { 60 } else { 150 };
        let positions = layout::fruchterman_reingold(&graph, iterations, seed);
        Ok(Demo { graph, positions, spreaders: Vec::new() })
    }

    #[wasm_bindgen(getter, js_name = nodeCount)]
    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    #[wasm_bindgen(getter, js_name = edgeCount)]
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    #[wasm_bindgen(getter, js_name = meanDegree)]
    pub fn mean_degree(&self) -> f64 {
        degree_moments(&self.graph).0
    }

    /// Endpoint pairs, flattened.
    pub fn edges(&self) -> Vec<u32> {
        (0..self.graph.node_count())
            .flat_map(|u| self.graph.out_neighbors(u).iter().filter(move |&&v| u < v).flat_map(move |&v| [u as u32, v as u32]))
            .collect()
    }

    /// Node coordinates in the unit square, flattened `x, y` pairs.
    pub fn positions(&self) -> Vec<f64> {
        self.positions.clone()
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.graph.node_count()).map(|u| self.graph.degree(u) as u32).collect()
    }

    /// Picks `r` spreaders and keeps them for `simulate`. A negative `f`
    /// selects the degree-scaled decrement.
    pub fn select(&mut self, method: &str, r: usize, f: f64, alpha: f64) -> Result<Vec<u32>, String> {
        let method: Method = method.parse().map_err(|e: voterank::Error| e.to_string())?;
        let opts = MethodOptions {
            alpha,
            decrement: if f < 0.0 { Decrement::DegreeScaled } else { Decrement::Constant(f) },
            ..MethodOptions::default()
        };
        let set = method.select(&self.graph, r, &opts).map_err(|e| e.to_string())?;
        self.spreaders = set.nodes;
        Ok(self.spreaders.iter().map(|&u| u as u32).collect())
    }

    /// `L_s` of the current spreaders; NaN when undefined.
    #[wasm_bindgen(js_name = spreaderDistance)]
    pub fn spreader_distance(&self) -> f64 {
        average_spreader_distance(&self.graph, &self.spreaders)
            .ok()
            .and_then(|d| d.mean)
            .unwrap_or(f64::NAN)
    }

    /// Mean `F(t)` over `replicas` runs seeded by the current spreaders,
    /// with recovery rate `1/<k>` and infection rate `lambda/<k>`.
    pub fn simulate(&self, model: &str, lambda: f64, replicas: usize, seed: u64) -> Result<Vec<f64>, String> {
        let model: Model = model.parse().map_err(|e: voterank::Error| e.to_string())?;
        if replicas == 0 {
            return Err("replicas must be positive".into());
        }
        let beta = 1.0 / degree_moments(&self.graph).0;
        let mut params = SimParams::from_rate(model, lambda, beta, self.spreaders.clone()).rng_seed(seed);
        if model == Model::Si {
            params = params.max_steps(50);
        }
        let agg = monte_carlo(&self.graph, &params, replicas).map_err(|e| e.to_string())?;
        Ok(agg.mean_f)
    }
}
