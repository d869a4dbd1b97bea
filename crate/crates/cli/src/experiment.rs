//! Parameter sweeps described by a TOML experiment file.
//!
//! ```toml
//! dataset = "../data/CA-CondMat.txt"
//! directed = false
//! model = "sir-limited"
//! methods = ["voterank", "degree", "kshell"]
//! sweep = "p"
//! values = [0.0005, 0.001, 0.002, 0.003]
//! lambda = 1.5
//! replicas = 100
//! seed = 1
//! out = "../results/non_adjacent.csv"
//! ```
//!
//! Relative paths are resolved against the directory of the experiment file.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::Deserialize;
use voterank::epidemic::{epidemic_threshold, monte_carlo, Model, SimParams};
use voterank::graph::degree_moments;
use voterank::metrics::average_spreader_distance;
use voterank::{spreaders_for_fraction, Decrement, Graph, Method, MethodOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepVar {
    P,
    Lambda,
    F,
    Alpha,
    R,
}

impl fmt::Display for SweepVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepVar::P => "p",
            SweepVar::Lambda => "lambda",
            SweepVar::F => "f",
            SweepVar::Alpha => "alpha",
            SweepVar::R => "r",
        })
    }
}

/// A number, or the keyword `"default"`.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Setting {
    Value(f64),
    Keyword(Keyword),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Keyword {
    Default,
}

impl Setting {
    fn value(self) -> Option<f64> {
        match self {
            Setting::Value(v) => Some(v),
            Setting::Keyword(Keyword::Default) => None,
        }
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Setting::Value(v) => write!(f, "{v}"),
            Setting::Keyword(Keyword::Default) => f.write_str("default"),
        }
    }
}

fn default_model() -> String {
    "sir-limited".into()
}
fn default_lambda() -> f64 {
    1.5
}
fn default_p() -> f64 {
    0.002
}
fn default_replicas() -> usize {
    100
}
fn default_setting() -> Setting {
    Setting::Keyword(Keyword::Default)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub dataset: PathBuf,
    #[serde(default)]
    pub directed: bool,
    #[serde(default = "default_model")]
    pub model: String,
    pub methods: Vec<String>,
    pub sweep: SweepVar,
    pub values: Vec<Setting>,
    #[serde(default = "default_lambda")]
    pub lambda: f64,
    /// Read `lambda` (and lambda sweep values) as multiples of the epidemic threshold.
    #[serde(default)]
    pub lambda_relative: bool,
    #[serde(default = "default_p")]
    pub p: f64,
    /// Recovery probability; `"default"` is `1/<k>` (out-degree when directed).
    #[serde(default = "default_setting")]
    pub beta: Setting,
    /// Decrement; `"default"` is the degree-scaled `k^alpha/<k>`.
    #[serde(default = "default_setting")]
    pub f: Setting,
    #[serde(default)]
    pub alpha: f64,
    #[serde(default = "default_replicas")]
    pub replicas: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub max_steps: Option<usize>,
    /// Also report the mean distance between spreaders.
    #[serde(default)]
    pub compute_ls: bool,
    pub out: Option<PathBuf>,
    /// Per-step mean and std of `F(t)` for every cell, in long format.
    pub curves: Option<PathBuf>,
}

impl ExperimentSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: ExperimentSpec = toml::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    /// Loads a spec and resolves its relative paths against the file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut spec = Self::parse(&text).with_context(|| format!("in {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        if spec.dataset.is_relative() {
            spec.dataset = base.join(&spec.dataset);
        }
        for out in [&mut spec.out, &mut spec.curves].into_iter().flatten() {
            if out.is_relative() {
                *out = base.join(&*out);
            }
        }
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        self.model.parse::<Model>()?;
        if self.methods.is_empty() {
            bail!("no methods listed");
        }
        for m in &self.methods {
            m.parse::<Method>()?;
        }
        if self.values.is_empty() {
            bail!("no sweep values listed");
        }
        if self.replicas == 0 {
            bail!("replicas must be at least 1");
        }
        if !(self.p > 0.0 && self.p <= 1.0) {
            bail!("p = {} outside (0, 1]", self.p);
        }
        for v in &self.values {
            match (self.sweep, v.value()) {
                (SweepVar::F, _) => {}
                (_, None) => bail!("\"default\" is only meaningful in an f sweep"),
                (SweepVar::P, Some(p)) if !(p > 0.0 && p <= 1.0) => bail!("p = {p} outside (0, 1]"),
                (SweepVar::R, Some(r)) if r < 1.0 || r.fract() != 0.0 => bail!("r = {r} is not a positive integer"),
                _ => {}
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.methods.len() * self.values.len()
    }
}

/// One evaluated (method, sweep value) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub method: String,
    pub value: Setting,
    pub p: f64,
    pub r: usize,
    pub lambda: f64,
    pub f: Setting,
    pub alpha: f64,
    pub outcome: Result<CellResult, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub f_tc_mean: f64,
    pub f_tc_std: f64,
    pub l_s: Option<f64>,
    pub unreachable_pairs: Option<usize>,
    pub mean_f: Vec<f64>,
    pub std_f: Vec<f64>,
}

pub const COLUMNS: [&str; 13] = [
    "method",
    "p",
    "lambda",
    "F_tc_mean",
    "F_tc_std",
    "L_s",
    "unreachable_pairs",
    "sweep",
    "value",
    "r",
    "f",
    "alpha",
    "error",
];

/// Evaluates every cell, methods outermost, in file order.
pub fn run(spec: &ExperimentSpec, g: &Graph) -> Result<Vec<Cell>> {
    let model: Model = spec.model.parse()?;
    let n = g.node_count();
    let mean_degree = degree_moments(g).0;
    let beta = spec.beta.value().unwrap_or(1.0 / mean_degree);
    let threshold = if spec.lambda_relative { Some(epidemic_threshold(g)?) } else { None };
    let scale_lambda = |l: f64| threshold.map_or(l, |c| l * c);

    let plan: Vec<(String, Setting)> = spec
        .methods
        .iter()
        .flat_map(|m| spec.values.iter().map(move |&v| (m.clone(), v)))
        .collect();
    let cells = plan
        .into_par_iter()
        .map(|(method_name, value)| {
            let (mut p, mut r) = (spec.p, spreaders_for_fraction(spec.p, n));
            let (mut lambda, mut f, mut alpha) = (scale_lambda(spec.lambda), spec.f, spec.alpha);
            match (spec.sweep, value.value()) {
                (SweepVar::P, Some(v)) => {
                    p = v;
                    r = spreaders_for_fraction(v, n);
                }
                (SweepVar::R, Some(v)) => {
                    r = v as usize;
                    p = r as f64 / n as f64;
                }
                (SweepVar::Lambda, Some(v)) => lambda = scale_lambda(v),
                (SweepVar::Alpha, Some(v)) => alpha = v,
                (SweepVar::F, _) => f = value,
                (_, None) => unreachable!("validated"),
            }
            log::info!("{method_name} {}={value}: r = {r} of n = {n}", spec.sweep);
            let outcome = evaluate(spec, g, model, &method_name, r, lambda, beta, f, alpha).map_err(|e| format!("{e:#}"));
            if let Err(e) = &outcome {
                log::warn!("cell {method_name} {}={value} failed: {e}", spec.sweep);
            }
            Cell { method: method_name, value, p, r, lambda, f, alpha, outcome }
        })
        .collect();
    Ok(cells)
}

#[allow(clippy::too_many_arguments)]
fn evaluate(
    spec: &ExperimentSpec,
    g: &Graph,
    model: Model,
    method_name: &str,
    r: usize,
    lambda: f64,
    beta: f64,
    f: Setting,
    alpha: f64,
) -> Result<CellResult> {
    let method: Method = method_name.parse()?;
    let opts = MethodOptions {
        alpha,
        decrement: f.value().map_or(Decrement::DegreeScaled, Decrement::Constant),
        ..Default::default()
    };
    let seeds = method.select(g, r, &opts)?;
    if seeds.is_empty() {
        bail!("{method_name} selected no spreaders");
    }
    let (l_s, unreachable_pairs) = if spec.compute_ls && seeds.len() >= 2 {
        let d = average_spreader_distance(g, &seeds.nodes)?;
        (d.mean, Some(d.unreachable_pairs))
    } else {
        (None, None)
    };
    let mut params = SimParams::from_rate(model, lambda, beta, seeds.nodes).rng_seed(spec.seed);
    params.max_steps = spec.max_steps;
    let agg = monte_carlo(g, &params, spec.replicas)?;
    if agg.unterminated > 0 {
        bail!("{} of {} replicas hit the step cap", agg.unterminated, agg.replicas);
    }
    Ok(CellResult {
        f_tc_mean: agg.final_mean,
        f_tc_std: agg.final_std,
        l_s,
        unreachable_pairs,
        mean_f: agg.mean_f,
        std_f: agg.std_f,
    })
}

pub fn write_cells<W: Write>(spec: &ExperimentSpec, cells: &[Cell], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    let opt = |x: Option<f64>| x.map_or_else(String::new, |v| v.to_string());
    for c in cells {
        let (mean, std, l_s, unreachable, error) = match &c.outcome {
            Ok(res) => (
                res.f_tc_mean.to_string(),
                res.f_tc_std.to_string(),
                opt(res.l_s),
                res.unreachable_pairs.map_or_else(String::new, |u| u.to_string()),
                String::new(),
            ),
            Err(e) => (String::new(), String::new(), String::new(), String::new(), e.clone()),
        };
        w.write_record([
            c.method.clone(),
            c.p.to_string(),
            c.lambda.to_string(),
            mean,
            std,
            l_s,
            unreachable,
            spec.sweep.to_string(),
            c.value.to_string(),
            c.r.to_string(),
            c.f.to_string(),
            c.alpha.to_string(),
            error,
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Columns `method,sweep,value,t,mean_F,std_F`; failed cells contribute no rows.
pub fn write_curves<W: Write>(spec: &ExperimentSpec, cells: &[Cell], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["method", "sweep", "value", "t", "mean_F", "std_F"])?;
    for c in cells {
        let Ok(res) = &c.outcome else { continue };
        for (t, (m, s)) in res.mean_f.iter().zip(&res.std_f).enumerate() {
            w.write_record([
                c.method.clone(),
                spec.sweep.to_string(),
                c.value.to_string(),
                t.to_string(),
                m.to_string(),
                s.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
